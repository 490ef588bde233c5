#include "hbmorph/mask.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace hbm {

voxel_mask::voxel_mask(int nx, int ny, int nz, vec3 spacing, vec3 origin)
    : nx_(nx), ny_(ny), nz_(nz), spacing_(spacing), origin_(origin) {
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw validation_error("voxel_mask: dimensions must be positive");
    if (!(spacing.x > 0.0) || !(spacing.y > 0.0) || !(spacing.z > 0.0))
        throw validation_error("voxel_mask: spacing must be strictly positive");
    words_.assign(static_cast<std::size_t>((size() + 63) >> 6), 0);
}

std::int64_t voxel_mask::popcount() const {
    std::int64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

bounding_box voxel_mask::bounds() const {
    bounding_box b{{nx_, ny_, nz_}, {-1, -1, -1}};
    for (int z = 0; z < nz_; ++z)
        for (int y = 0; y < ny_; ++y)
            for (int x = 0; x < nx_; ++x)
                if (get(x, y, z)) {
                    b.lo.x = std::min(b.lo.x, x);
                    b.lo.y = std::min(b.lo.y, y);
                    b.lo.z = std::min(b.lo.z, z);
                    b.hi.x = std::max(b.hi.x, x);
                    b.hi.y = std::max(b.hi.y, y);
                    b.hi.z = std::max(b.hi.z, z);
                }
    if (b.hi.x < 0) throw validation_error("bounds: mask is empty");
    return b;
}

bool voxel_mask::same_geometry(const voxel_mask& other) const {
    return nx_ == other.nx_ && ny_ == other.ny_ && nz_ == other.nz_ &&
           spacing_.x == other.spacing_.x && spacing_.y == other.spacing_.y &&
           spacing_.z == other.spacing_.z && origin_.x == other.origin_.x &&
           origin_.y == other.origin_.y && origin_.z == other.origin_.z;
}

bool operator==(const voxel_mask& a, const voxel_mask& b) {
    return a.same_geometry(b) && a.words_ == b.words_;
}

label_map parse_label_map(const std::string& text) {
    label_map map;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw validation_error("label map entry missing '=': " + item);
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (key == "csf")
            map.csf = value;
        else if (key == "gm")
            map.gm = value;
        else if (key == "wm")
            map.wm = value;
        else
            throw validation_error("unknown tissue class in label map: " + key);
    }
    return map;
}

voxel_mask label_volume::to_mask(int label_value) const {
    voxel_mask m(nx, ny, nz, spacing, origin);
    const std::int64_t n = m.size();
    for (std::int64_t i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] == label_value) m.set_linear(i, true);
    return m;
}

isotropy_report validate_isotropic(const voxel_mask& mask, double target_mm, double tol_mm) {
    isotropy_report r;
    r.target = target_mm;
    r.tol = tol_mm;
    r.spacing = {mask.spacing().x, mask.spacing().y, mask.spacing().z};
    r.pass = true;
    for (int a = 0; a < 3; ++a) {
        r.axis_ok[static_cast<std::size_t>(a)] =
            std::abs(r.spacing[static_cast<std::size_t>(a)] - target_mm) <= tol_mm;
        r.pass = r.pass && r.axis_ok[static_cast<std::size_t>(a)];
    }
    return r;
}

voxel_mask union_masks(const voxel_mask& a, const voxel_mask& b) {
    if (!a.same_geometry(b)) throw validation_error("union_masks: geometry mismatch");
    voxel_mask out = a;
    auto& w = out.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= wb[i];
    return out;
}

csf_complement_result csf_complement(const voxel_mask& csf) {
    if (csf.popcount() == 0) throw validation_error("csf_complement: CSF mask is empty");
    const bounding_box box = csf.bounds();
    voxel_mask out(csf.nx(), csf.ny(), csf.nz(), csf.spacing(), csf.origin());
    for (int z = box.lo.z; z <= box.hi.z; ++z)
        for (int y = box.lo.y; y <= box.hi.y; ++y)
            for (int x = box.lo.x; x <= box.hi.x; ++x)
                if (!csf.get(x, y, z)) out.set(x, y, z, true);
    return {std::move(out), box};
}

double csf_fraction(const voxel_mask& gm, const voxel_mask& wm, const voxel_mask& csf) {
    if (!gm.same_geometry(wm) || !gm.same_geometry(csf))
        throw validation_error("csf_fraction: geometry mismatch");
    const double c = static_cast<double>(csf.popcount());
    const double g = static_cast<double>(gm.popcount());
    const double w = static_cast<double>(wm.popcount());
    const double total = c + g + w;
    if (total == 0.0) throw validation_error("csf_fraction: all masks empty, ratio undefined");
    return c / total;
}

} // namespace hbm
