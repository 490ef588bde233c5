// Binary voxel masks, label volumes and the mask-level operations both
// pipelines consume.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hbmorph/errors.hpp"

namespace hbm {

struct vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

struct index3 {
    int x = 0, y = 0, z = 0;
    friend bool operator==(const index3&, const index3&) = default;
};

// Inclusive voxel-index box.
struct bounding_box {
    index3 lo;
    index3 hi;
    std::int64_t volume() const {
        return static_cast<std::int64_t>(hi.x - lo.x + 1) * (hi.y - lo.y + 1) * (hi.z - lo.z + 1);
    }
    bool contains(const index3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }
    friend bool operator==(const bounding_box&, const bounding_box&) = default;
};

// 3D binary grid with mm spacing, bit-packed in x-fastest order.
// Immutable by convention after construction; safe to share across threads.
class voxel_mask {
public:
    voxel_mask() = default;
    voxel_mask(int nx, int ny, int nz, vec3 spacing = {1, 1, 1}, vec3 origin = {0, 0, 0});

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    std::int64_t size() const { return static_cast<std::int64_t>(nx_) * ny_ * nz_; }
    const vec3& spacing() const { return spacing_; }
    const vec3& origin() const { return origin_; }

    std::int64_t linear_index(int x, int y, int z) const {
        return static_cast<std::int64_t>(z) * ny_ * nx_ + static_cast<std::int64_t>(y) * nx_ + x;
    }
    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && x < nx_ && y >= 0 && y < ny_ && z >= 0 && z < nz_;
    }

    bool get(int x, int y, int z) const {
        const std::int64_t i = linear_index(x, y, z);
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }
    void set(int x, int y, int z, bool value) {
        const std::int64_t i = linear_index(x, y, z);
        const std::uint64_t bit = 1ULL << (i & 63);
        if (value)
            words_[static_cast<std::size_t>(i >> 6)] |= bit;
        else
            words_[static_cast<std::size_t>(i >> 6)] &= ~bit;
    }
    bool get_linear(std::int64_t i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }
    void set_linear(std::int64_t i, bool value) {
        const std::uint64_t bit = 1ULL << (i & 63);
        if (value)
            words_[static_cast<std::size_t>(i >> 6)] |= bit;
        else
            words_[static_cast<std::size_t>(i >> 6)] &= ~bit;
    }

    std::int64_t popcount() const;
    bool empty() const { return popcount() == 0; }

    // Center of voxel (x,y,z) in mm, origin included.
    vec3 voxel_center(int x, int y, int z) const {
        return {origin_.x + (x + 0.5) * spacing_.x, origin_.y + (y + 0.5) * spacing_.y,
                origin_.z + (z + 0.5) * spacing_.z};
    }

    // Tight box of set voxels; throws validation_error when empty.
    bounding_box bounds() const;

    bool same_geometry(const voxel_mask& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    friend bool operator==(const voxel_mask& a, const voxel_mask& b);

private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    vec3 spacing_{1, 1, 1};
    vec3 origin_{0, 0, 0};
    std::vector<std::uint64_t> words_;
};

// Integer label volume plus the tissue-class association used by loaders.
enum class tissue_class { csf, gm, wm };

struct label_map {
    int csf = 1;
    int gm = 2;
    int wm = 3;
    int value_for(tissue_class c) const {
        switch (c) {
        case tissue_class::csf: return csf;
        case tissue_class::gm: return gm;
        default: return wm;
        }
    }
};

// Parse "csf=1,gm=2,wm=3"-style overrides.
label_map parse_label_map(const std::string& text);

struct label_volume {
    int nx = 0, ny = 0, nz = 0;
    vec3 spacing{1, 1, 1};
    vec3 origin{0, 0, 0};
    std::vector<std::int32_t> labels;

    voxel_mask to_mask(int label_value) const;
};

struct isotropy_report {
    bool pass = false;
    double target = 0.0;
    double tol = 0.0;
    std::array<double, 3> spacing{};
    std::array<bool, 3> axis_ok{};
};

// Pass iff |s - target| <= tol on every axis. Report-only; never throws.
isotropy_report validate_isotropic(const voxel_mask& mask, double target_mm, double tol_mm);

// Bitwise OR; throws validation_error on geometry mismatch.
voxel_mask union_masks(const voxel_mask& a, const voxel_mask& b);

// Complement of the CSF mask within its tight bounding box.
// Result mask has full-volume geometry with bits set only inside the box.
struct csf_complement_result {
    voxel_mask complement;
    bounding_box box;
};
csf_complement_result csf_complement(const voxel_mask& csf);

// CSF / (CSF + GM + WM) by voxel counts. Throws validation_error when all empty.
double csf_fraction(const voxel_mask& gm, const voxel_mask& wm, const voxel_mask& csf);

} // namespace hbm
