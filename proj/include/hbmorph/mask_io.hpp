// Volume loading: NIfTI-1 (.nii / .nii.gz, read-only subset) and the
// portable bit-packed raw format (magic "HBMK", read/write).
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hbmorph/mask.hpp"

namespace hbm {

struct load_options {
    label_map labels;
    // Reject volumes whose decoded payload would exceed this many bytes.
    std::uint64_t memory_cap_bytes = 2ULL << 30;
};

// Load a labeled volume; supports NIfTI-1 datatypes uint8/int16/int32/float32.
// No s/q-form reorientation is applied: volumes must already be axis-aligned.
label_volume load_label_volume(const std::string& path, const load_options& opts = {});

// Binarize one tissue class out of a label volume on disk.
voxel_mask load_mask(const std::string& path, tissue_class cls, const load_options& opts = {});

// Treat any nonzero voxel as foreground ("raw binary" flag in the CLI).
voxel_mask load_mask_binary(const std::string& path, const load_options& opts = {});

// Portable raw mask format, little-endian:
//   magic "HBMK", u32 nx ny nz, f64 sx sy sz ox oy oz, then bit-packed data
//   in x-fastest voxel order, LSB-first within each byte.
void save_mask(const std::string& path, const voxel_mask& mask);

// True if the file starts with the HBMK magic.
bool is_raw_mask_file(const std::string& path);

} // namespace hbm
