#include "hbmorph/edt.hpp"

#include <cmath>

namespace hbm {

double scalar_field2d::max_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

namespace {

// Exact 1D lower envelope of parabolas (x - x')^2 + f(x') over integer x,
// with breakpoints kept as exact fractions. f values are squared integers.
void envelope_pass(const std::vector<std::int64_t>& f, std::vector<std::int64_t>& d) {
    const int n = static_cast<int>(f.size());
    std::vector<int> v(static_cast<std::size_t>(n));
    std::vector<std::int64_t> z_num(static_cast<std::size_t>(n) + 1);
    std::vector<std::int64_t> z_den(static_cast<std::size_t>(n) + 1);

    int k = 0;
    v[0] = 0;
    for (int q = 1; q < n; ++q) {
        std::int64_t num, den;
        for (;;) {
            const int p = v[static_cast<std::size_t>(k)];
            num = (f[static_cast<std::size_t>(q)] + static_cast<std::int64_t>(q) * q) -
                  (f[static_cast<std::size_t>(p)] + static_cast<std::int64_t>(p) * p);
            den = 2 * static_cast<std::int64_t>(q - p);
            // pop while the new parabola dominates from the previous breakpoint on
            if (k > 0 && num * z_den[static_cast<std::size_t>(k)] <=
                             z_num[static_cast<std::size_t>(k)] * den)
                --k;
            else
                break;
        }
        ++k;
        v[static_cast<std::size_t>(k)] = q;
        z_num[static_cast<std::size_t>(k)] = num;
        z_den[static_cast<std::size_t>(k)] = den;
    }

    d.assign(static_cast<std::size_t>(n), 0);
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (j < k && z_num[static_cast<std::size_t>(j + 1)] <
                            static_cast<std::int64_t>(q) * z_den[static_cast<std::size_t>(j + 1)])
            ++j;
        const int p = v[static_cast<std::size_t>(j)];
        d[static_cast<std::size_t>(q)] =
            static_cast<std::int64_t>(q - p) * (q - p) + f[static_cast<std::size_t>(p)];
    }
}

} // namespace

scalar_field2d edt2d(const slice2d& slice) {
    const int w = slice.width, h = slice.height;
    const int pw = w + 2, ph = h + 2; // one background ring around the slice

    // Column pass: distance in pixels to the nearest background in the column.
    std::vector<std::int64_t> g(static_cast<std::size_t>(pw) * ph, 0);
    auto gid = [pw](int x, int y) { return static_cast<std::size_t>(y) * pw + x; };
    auto is_tissue = [&](int x, int y) {
        return x >= 1 && x <= w && y >= 1 && y <= h && slice.get(x - 1, y - 1);
    };
    const std::int64_t inf = ph + 1;
    for (int x = 0; x < pw; ++x) {
        std::int64_t run = 0;
        for (int y = 0; y < ph; ++y) {
            run = is_tissue(x, y) ? std::min(run + 1, inf) : 0;
            g[gid(x, y)] = run;
        }
        run = 0;
        for (int y = ph - 1; y >= 0; --y) {
            run = is_tissue(x, y) ? std::min(run + 1, inf) : 0;
            g[gid(x, y)] = std::min(g[gid(x, y)], run);
        }
    }

    // Row pass over squared column distances.
    scalar_field2d field;
    field.width = w;
    field.height = h;
    field.spacing_mm = slice.spacing_mm;
    field.values.assign(static_cast<std::size_t>(w) * h, 0.0);

    std::vector<std::int64_t> f(static_cast<std::size_t>(pw)), d;
    for (int y = 1; y <= h; ++y) {
        for (int x = 0; x < pw; ++x) {
            const std::int64_t gv = g[gid(x, y)];
            f[static_cast<std::size_t>(x)] = gv * gv;
        }
        envelope_pass(f, d);
        for (int x = 1; x <= w; ++x) {
            const std::int64_t d2 = d[static_cast<std::size_t>(x)];
            if (d2 > 0)
                field.at(x - 1, y - 1) =
                    slice.spacing_mm * std::sqrt(static_cast<double>(d2));
        }
    }
    return field;
}

} // namespace hbm
