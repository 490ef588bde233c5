#include "hbmorph/slices.hpp"

namespace hbm {

std::string to_string(anatomical_axis a) {
    switch (a) {
    case anatomical_axis::sagittal: return "sagittal";
    case anatomical_axis::coronal: return "coronal";
    default: return "axial";
    }
}

anatomical_axis axis_from_string(const std::string& s) {
    if (s == "sagittal") return anatomical_axis::sagittal;
    if (s == "coronal") return anatomical_axis::coronal;
    if (s == "axial") return anatomical_axis::axial;
    throw validation_error("unknown axis: " + s);
}

std::int64_t slice2d::pixel_count() const {
    std::int64_t n = 0;
    for (auto b : bits) n += b != 0;
    return n;
}

std::vector<slice2d> extract_slices(const voxel_mask& mask, anatomical_axis axis) {
    const bounding_box box = mask.bounds(); // throws on empty mask

    // Slice plane axes (u, v) for each anatomical axis, in x-fastest order:
    // sagittal (x): u=y, v=z; coronal (y): u=x, v=z; axial (z): u=x, v=y.
    const int a = static_cast<int>(axis);
    const int lo[3] = {box.lo.x, box.lo.y, box.lo.z};
    const int hi[3] = {box.hi.x, box.hi.y, box.hi.z};
    const int ua = a == 0 ? 1 : 0;
    const int va = a == 2 ? 1 : 2;

    const int n_slices = hi[a] - lo[a] + 1;
    const int width = hi[ua] - lo[ua] + 1;
    const int height = hi[va] - lo[va] + 1;

    std::vector<slice2d> out;
    out.reserve(static_cast<std::size_t>(n_slices));
    for (int s = 0; s < n_slices; ++s) {
        slice2d sl;
        sl.width = width;
        sl.height = height;
        sl.spacing_mm = mask.spacing().x;
        sl.axis = axis;
        sl.index = s;
        sl.bits.assign(static_cast<std::size_t>(width) * height, 0);
        for (int v = 0; v < height; ++v)
            for (int u = 0; u < width; ++u) {
                int c[3];
                c[a] = lo[a] + s;
                c[ua] = lo[ua] + u;
                c[va] = lo[va] + v;
                if (mask.get(c[0], c[1], c[2]))
                    sl.bits[static_cast<std::size_t>(v) * width + u] = 1;
            }
        out.push_back(std::move(sl));
    }
    return out;
}

} // namespace hbm
