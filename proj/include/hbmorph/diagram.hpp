// Persistence diagrams and their elementwise summaries.
#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hbmorph/errors.hpp"

namespace hbm {

enum class filtration_direction : std::uint8_t { sublevel, superlevel };
enum class value_units : std::uint8_t { mm, mm2 };

std::string to_string(filtration_direction d);
std::string to_string(value_units u);

struct persistence_pair {
    double birth = 0.0;
    double death = 0.0;
    double persistence() const { return std::abs(death - birth); }
    friend bool operator==(const persistence_pair&, const persistence_pair&) = default;
};

// Finite pairs of a single homology dimension. Zero-persistence pairs are
// dropped at construction time by reduce(); essential classes live elsewhere.
struct persistence_diagram {
    std::vector<persistence_pair> pairs;
    int dim = 0;
    filtration_direction direction = filtration_direction::sublevel;
    value_units units = value_units::mm;

    bool same_metadata(const persistence_diagram& other) const {
        return dim == other.dim && direction == other.direction && units == other.units;
    }
};

struct essential_class {
    int dim = 0;
    double birth = 0.0;
};

// Keep pairs with persistence strictly greater than tau.
persistence_diagram filter_by_persistence(const persistence_diagram& d, double tau);

struct diagram_stats_result {
    std::int64_t count = 0;
    // Undefined (and flagged false) when the diagram is empty.
    bool defined = false;
    double mean_persistence = 0.0;
    double max_persistence = 0.0;
};
diagram_stats_result diagram_stats(const persistence_diagram& d);

// Diagram CSV: "dim,birth,death,units,direction", one pair per row.
void write_diagram_csv(std::ostream& out, const persistence_diagram& d, bool header = true);
persistence_diagram read_diagram_csv(std::istream& in);

} // namespace hbm
