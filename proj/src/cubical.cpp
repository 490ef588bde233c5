#include "hbmorph/cubical.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hbm {

filtered_complex build_superlevel_complex(const scalar_field2d& field) {
    const int w = field.width, h = field.height;
    const int cw = 2 * w + 1, ch = 2 * h + 1;
    const std::size_t n_cells = static_cast<std::size_t>(cw) * ch;

    auto cid = [cw](int cx, int cy) { return static_cast<std::size_t>(cy) * cw + cx; };

    // Value of a cell = max over incident pixels; pixel (px,py) <-> cell (2px+1, 2py+1).
    std::vector<double> value(n_cells, 0.0);
    std::vector<std::int8_t> dim(n_cells, 0);
    for (int cy = 0; cy < ch; ++cy)
        for (int cx = 0; cx < cw; ++cx) {
            const bool ox = cx & 1, oy = cy & 1;
            dim[cid(cx, cy)] = static_cast<std::int8_t>(ox + oy);
            const int px_lo = ox ? (cx - 1) / 2 : cx / 2 - 1;
            const int px_hi = ox ? px_lo : cx / 2;
            const int py_lo = oy ? (cy - 1) / 2 : cy / 2 - 1;
            const int py_hi = oy ? py_lo : cy / 2;
            double m = 0.0;
            for (int py = py_lo; py <= py_hi; ++py)
                for (int px = px_lo; px <= px_hi; ++px)
                    if (px >= 0 && px < w && py >= 0 && py < h) m = std::max(m, field.at(px, py));
            value[cid(cx, cy)] = m;
        }

    std::vector<std::uint32_t> order(n_cells);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (value[a] != value[b]) return value[a] > value[b];
        if (dim[a] != dim[b]) return dim[a] < dim[b];
        return a < b;
    });
    std::vector<cell_index> position(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) position[order[i]] = static_cast<cell_index>(i);

    filtered_complex fc;
    fc.direction = filtration_direction::superlevel;
    fc.units = value_units::mm;
    fc.cells.resize(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) {
        const std::uint32_t id = order[i];
        const int cx = static_cast<int>(id % static_cast<std::uint32_t>(cw));
        const int cy = static_cast<int>(id / static_cast<std::uint32_t>(cw));
        filtered_cell& cell = fc.cells[i];
        cell.value = value[id];
        cell.dim = dim[id];
        const bool ox = cx & 1, oy = cy & 1;
        if (ox && oy) {
            cell.boundary = {position[cid(cx - 1, cy)], position[cid(cx + 1, cy)],
                             position[cid(cx, cy - 1)], position[cid(cx, cy + 1)]};
        } else if (ox) {
            cell.boundary = {position[cid(cx - 1, cy)], position[cid(cx + 1, cy)]};
        } else if (oy) {
            cell.boundary = {position[cid(cx, cy - 1)], position[cid(cx, cy + 1)]};
        }
    }
    return fc;
}

persistence_diagram superlevel_h1(const scalar_field2d& field) {
    const filtered_complex fc = build_superlevel_complex(field);
    reduce_result res = reduce(fc);
    if (res.diagrams.size() < 2) {
        persistence_diagram empty;
        empty.dim = 1;
        empty.direction = filtration_direction::superlevel;
        empty.units = value_units::mm;
        return empty;
    }
    for (const auto& e : res.essentials) assert(e.dim != 1);
    return std::move(res.diagrams[1]);
}

} // namespace hbm
