// Filtered cell complexes over GF(2) and persistence by boundary reduction.
#pragma once

#include <cstdint>
#include <vector>

#include "hbmorph/diagram.hpp"

namespace hbm {

using cell_index = std::uint32_t;

struct filtered_cell {
    double value = 0.0;
    std::int8_t dim = 0;
    std::vector<cell_index> boundary; // indices of facets, each < this cell's index
};

// Cells in filtration order: values monotone for the stated direction, faces
// before cofaces, boundary-of-boundary empty over GF(2).
struct filtered_complex {
    std::vector<filtered_cell> cells;
    filtration_direction direction = filtration_direction::sublevel;
    value_units units = value_units::mm;
};

// Throws malformed_complex_error if any structural invariant fails.
void validate_complex(const filtered_complex& fc);

struct reduce_result {
    std::vector<persistence_diagram> diagrams; // index = homology dimension
    std::vector<essential_class> essentials;   // death = unbounded, reported apart

    const persistence_diagram& diagram(int dim) const { return diagrams.at(static_cast<std::size_t>(dim)); }
};

// Standard persistence pairing over GF(2) with the clearing optimization.
// Superlevel complexes are reduced as sublevel filtrations of the negated
// values; reported pairs carry the original values. Zero-persistence pairs
// are discarded.
reduce_result reduce(const filtered_complex& fc);

} // namespace hbm
