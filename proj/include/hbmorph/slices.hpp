// 2D slice extraction along the three anatomical axes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbmorph/mask.hpp"

namespace hbm {

enum class anatomical_axis : std::uint8_t { sagittal = 0, coronal = 1, axial = 2 };

std::string to_string(anatomical_axis a);
anatomical_axis axis_from_string(const std::string& s);

struct slice2d {
    int width = 0;
    int height = 0;
    double spacing_mm = 1.0;
    anatomical_axis axis = anatomical_axis::sagittal;
    int index = 0; // position along the axis, counted from the bounding box start
    std::vector<std::uint8_t> bits;

    bool get(int u, int v) const { return bits[static_cast<std::size_t>(v) * width + u] != 0; }
    std::int64_t pixel_count() const;
};

// One slice per index across the mask's bounding box along the axis, ascending.
// Slice domains are the bounding-box extents of the two remaining axes.
// Throws validation_error on an empty mask.
std::vector<slice2d> extract_slices(const voxel_mask& mask, anatomical_axis axis);

} // namespace hbm
