// Exact 2D Euclidean distance transform on binary slices.
#pragma once

#include <cstdint>
#include <vector>

#include "hbmorph/slices.hpp"

namespace hbm {

// Distances in mm per pixel; exactly 0 on background pixels.
struct scalar_field2d {
    int width = 0;
    int height = 0;
    double spacing_mm = 1.0;
    std::vector<double> values;

    double at(int u, int v) const { return values[static_cast<std::size_t>(v) * width + u]; }
    double& at(int u, int v) { return values[static_cast<std::size_t>(v) * width + u]; }
    double max_value() const;
};

// Exact distance from each tissue pixel center to the nearest background pixel
// center, by the two-pass separable lower-envelope algorithm on squared integer
// distances. The slice is treated as padded with one background ring, so tissue
// touching the border has distance = spacing.
scalar_field2d edt2d(const slice2d& slice);

} // namespace hbm
