#include "hbmorph/mask_io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

namespace hbm {
namespace {

// The 348-byte NIfTI-1 header, packed layout per the standard.
#pragma pack(push, 1)
struct nifti1_header {
    std::int32_t sizeof_hdr;
    char data_type[10];
    char db_name[18];
    std::int32_t extents;
    std::int16_t session_error;
    char regular;
    char dim_info;
    std::int16_t dim[8];
    float intent_p1, intent_p2, intent_p3;
    std::int16_t intent_code;
    std::int16_t datatype;
    std::int16_t bitpix;
    std::int16_t slice_start;
    float pixdim[8];
    float vox_offset;
    float scl_slope, scl_inter;
    std::int16_t slice_end;
    char slice_code;
    char xyzt_units;
    float cal_max, cal_min;
    float slice_duration, toffset;
    std::int32_t glmax, glmin;
    char descrip[80];
    char aux_file[24];
    std::int16_t qform_code, sform_code;
    float quatern_b, quatern_c, quatern_d;
    float qoffset_x, qoffset_y, qoffset_z;
    float srow_x[4], srow_y[4], srow_z[4];
    char intent_name[16];
    char magic[4];
};
#pragma pack(pop)
static_assert(sizeof(nifti1_header) == 348, "nifti1_header must be 348 bytes");

constexpr std::int16_t kDtUint8 = 2;
constexpr std::int16_t kDtInt16 = 4;
constexpr std::int16_t kDtInt32 = 8;
constexpr std::int16_t kDtFloat32 = 16;

template <typename T>
T byteswap_value(T v) {
    char* p = reinterpret_cast<char*>(&v);
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(p[i], p[sizeof(T) - 1 - i]);
    return v;
}

void swap_header(nifti1_header& h) {
    h.sizeof_hdr = byteswap_value(h.sizeof_hdr);
    for (auto& d : h.dim) d = byteswap_value(d);
    h.datatype = byteswap_value(h.datatype);
    h.bitpix = byteswap_value(h.bitpix);
    for (auto& p : h.pixdim) p = byteswap_value(p);
    h.vox_offset = byteswap_value(h.vox_offset);
    h.scl_slope = byteswap_value(h.scl_slope);
    h.scl_inter = byteswap_value(h.scl_inter);
    h.qform_code = byteswap_value(h.qform_code);
    h.sform_code = byteswap_value(h.sform_code);
    h.qoffset_x = byteswap_value(h.qoffset_x);
    h.qoffset_y = byteswap_value(h.qoffset_y);
    h.qoffset_z = byteswap_value(h.qoffset_z);
    for (auto& v : h.srow_x) v = byteswap_value(v);
    for (auto& v : h.srow_y) v = byteswap_value(v);
    for (auto& v : h.srow_z) v = byteswap_value(v);
}

struct gz_file {
    gzFile f = nullptr;
    explicit gz_file(const std::string& path) : f(gzopen(path.c_str(), "rb")) {
        if (!f) throw format_error("cannot open file: " + path);
    }
    ~gz_file() {
        if (f) gzclose(f);
    }
    gz_file(const gz_file&) = delete;
    gz_file& operator=(const gz_file&) = delete;

    void read_exact(void* dst, std::size_t bytes, const std::string& path) {
        std::size_t done = 0;
        auto* out = static_cast<char*>(dst);
        while (done < bytes) {
            const unsigned chunk =
                static_cast<unsigned>(std::min<std::size_t>(bytes - done, 1u << 30));
            const int got = gzread(f, out + done, chunk);
            if (got <= 0) throw format_error("truncated file: " + path);
            done += static_cast<std::size_t>(got);
        }
    }
    void skip(std::size_t bytes, const std::string& path) {
        std::vector<char> sink(std::min<std::size_t>(bytes, 1 << 16));
        std::size_t left = bytes;
        while (left > 0) {
            const std::size_t chunk = std::min(left, sink.size());
            read_exact(sink.data(), chunk, path);
            left -= chunk;
        }
    }
};

label_volume load_nifti(const std::string& path, const load_options& opts) {
    gz_file file(path);
    nifti1_header hdr{};
    file.read_exact(&hdr, sizeof(hdr), path);

    bool swapped = false;
    if (hdr.sizeof_hdr != 348) {
        swap_header(hdr);
        swapped = true;
        if (hdr.sizeof_hdr != 348)
            throw format_error("not a NIfTI-1 file (bad sizeof_hdr): " + path);
    }
    const bool magic_ok = std::memcmp(hdr.magic, "n+1", 3) == 0 ||
                          std::memcmp(hdr.magic, "ni1", 3) == 0;
    if (!magic_ok) throw format_error("not a NIfTI-1 file (bad magic): " + path);
    if (std::memcmp(hdr.magic, "ni1", 3) == 0)
        throw format_error("detached .hdr/.img NIfTI pairs are not supported: " + path);

    if (hdr.dim[0] < 3 || hdr.dim[0] > 7)
        throw format_error("expected a 3D volume, got dim[0]=" + std::to_string(hdr.dim[0]));
    for (int d = 4; d <= hdr.dim[0]; ++d)
        if (hdr.dim[d] > 1)
            throw format_error("volume has a nontrivial dimension beyond 3D: " + path);

    const int nx = hdr.dim[1], ny = hdr.dim[2], nz = hdr.dim[3];
    if (nx <= 0 || ny <= 0 || nz <= 0) throw format_error("non-positive dimensions: " + path);

    int bytes_per = 0;
    switch (hdr.datatype) {
    case kDtUint8: bytes_per = 1; break;
    case kDtInt16: bytes_per = 2; break;
    case kDtInt32: bytes_per = 4; break;
    case kDtFloat32: bytes_per = 4; break;
    default:
        throw format_error("unsupported NIfTI datatype " + std::to_string(hdr.datatype) +
                           " (supported: uint8, int16, int32, float32)");
    }

    const std::uint64_t nvox =
        static_cast<std::uint64_t>(nx) * static_cast<std::uint64_t>(ny) *
        static_cast<std::uint64_t>(nz);
    if (nvox * static_cast<std::uint64_t>(bytes_per) > opts.memory_cap_bytes)
        throw resource_error("volume exceeds memory cap: " + path);

    label_volume vol;
    vol.nx = nx;
    vol.ny = ny;
    vol.nz = nz;
    vol.spacing = {hdr.pixdim[1], hdr.pixdim[2], hdr.pixdim[3]};
    if (!(vol.spacing.x > 0.0f) || !(vol.spacing.y > 0.0f) || !(vol.spacing.z > 0.0f))
        throw validation_error("non-positive voxel spacing in header: " + path);
    if (hdr.qform_code > 0 || hdr.sform_code > 0)
        vol.origin = {hdr.qoffset_x, hdr.qoffset_y, hdr.qoffset_z};

    const std::int64_t offset = static_cast<std::int64_t>(hdr.vox_offset);
    if (offset < static_cast<std::int64_t>(sizeof(hdr)))
        throw format_error("bad vox_offset: " + path);
    file.skip(static_cast<std::size_t>(offset) - sizeof(hdr), path);

    std::vector<char> buf(static_cast<std::size_t>(nvox) * static_cast<std::size_t>(bytes_per));
    file.read_exact(buf.data(), buf.size(), path);

    vol.labels.resize(static_cast<std::size_t>(nvox));
    for (std::uint64_t i = 0; i < nvox; ++i) {
        std::int64_t v = 0;
        switch (hdr.datatype) {
        case kDtUint8: v = static_cast<unsigned char>(buf[i]); break;
        case kDtInt16: {
            std::int16_t s;
            std::memcpy(&s, buf.data() + i * 2, 2);
            if (swapped) s = byteswap_value(s);
            v = s;
            break;
        }
        case kDtInt32: {
            std::int32_t s;
            std::memcpy(&s, buf.data() + i * 4, 4);
            if (swapped) s = byteswap_value(s);
            v = s;
            break;
        }
        case kDtFloat32: {
            float f;
            std::memcpy(&f, buf.data() + i * 4, 4);
            if (swapped) f = byteswap_value(f);
            if (!std::isfinite(f)) throw format_error("non-finite voxel value: " + path);
            v = std::llround(static_cast<double>(f));
            break;
        }
        }
        vol.labels[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v);
    }
    return vol;
}

constexpr char kRawMagic[4] = {'H', 'B', 'M', 'K'};

label_volume load_raw(const std::string& path, const load_options& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open file: " + path);
    char magic[4];
    std::uint32_t dims[3];
    double geo[6];
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    in.read(reinterpret_cast<char*>(geo), sizeof(geo));
    if (!in || std::memcmp(magic, kRawMagic, 4) != 0)
        throw format_error("not an HBMK raw mask: " + path);
    const std::uint64_t nvox =
        static_cast<std::uint64_t>(dims[0]) * dims[1] * dims[2];
    if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0)
        throw format_error("zero dimension in raw mask: " + path);
    if ((nvox + 7) / 8 > opts.memory_cap_bytes)
        throw resource_error("raw mask exceeds memory cap: " + path);
    if (!(geo[0] > 0.0) || !(geo[1] > 0.0) || !(geo[2] > 0.0))
        throw validation_error("non-positive spacing in raw mask: " + path);

    label_volume vol;
    vol.nx = static_cast<int>(dims[0]);
    vol.ny = static_cast<int>(dims[1]);
    vol.nz = static_cast<int>(dims[2]);
    vol.spacing = {geo[0], geo[1], geo[2]};
    vol.origin = {geo[3], geo[4], geo[5]};
    std::vector<char> packed((nvox + 7) / 8);
    in.read(packed.data(), static_cast<std::streamsize>(packed.size()));
    if (!in) throw format_error("truncated raw mask: " + path);
    vol.labels.resize(static_cast<std::size_t>(nvox));
    for (std::uint64_t i = 0; i < nvox; ++i)
        vol.labels[static_cast<std::size_t>(i)] =
            (static_cast<unsigned char>(packed[static_cast<std::size_t>(i >> 3)]) >> (i & 7)) & 1;
    return vol;
}

} // namespace

bool is_raw_mask_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    char magic[4] = {};
    in.read(magic, 4);
    return in && std::memcmp(magic, kRawMagic, 4) == 0;
}

label_volume load_label_volume(const std::string& path, const load_options& opts) {
    if (is_raw_mask_file(path)) return load_raw(path, opts);
    return load_nifti(path, opts);
}

voxel_mask load_mask(const std::string& path, tissue_class cls, const load_options& opts) {
    const label_volume vol = load_label_volume(path, opts);
    return vol.to_mask(opts.labels.value_for(cls));
}

voxel_mask load_mask_binary(const std::string& path, const load_options& opts) {
    const label_volume vol = load_label_volume(path, opts);
    voxel_mask m(vol.nx, vol.ny, vol.nz, vol.spacing, vol.origin);
    const std::int64_t n = m.size();
    for (std::int64_t i = 0; i < n; ++i)
        if (vol.labels[static_cast<std::size_t>(i)] != 0) m.set_linear(i, true);
    return m;
}

void save_mask(const std::string& path, const voxel_mask& mask) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot open for writing: " + path);
    const std::uint32_t dims[3] = {static_cast<std::uint32_t>(mask.nx()),
                                   static_cast<std::uint32_t>(mask.ny()),
                                   static_cast<std::uint32_t>(mask.nz())};
    const double geo[6] = {mask.spacing().x, mask.spacing().y, mask.spacing().z,
                           mask.origin().x,  mask.origin().y,  mask.origin().z};
    out.write(kRawMagic, 4);
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    out.write(reinterpret_cast<const char*>(geo), sizeof(geo));
    const std::int64_t n = mask.size();
    std::vector<char> packed(static_cast<std::size_t>((n + 7) / 8), 0);
    for (std::int64_t i = 0; i < n; ++i)
        if (mask.get_linear(i))
            packed[static_cast<std::size_t>(i >> 3)] |= static_cast<char>(1 << (i & 7));
    out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
    if (!out) throw format_error("write failed: " + path);
}

} // namespace hbm
