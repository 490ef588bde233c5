#include "hbmorph/landscape.hpp"

#include <algorithm>
#include <vector>

namespace hbm {

namespace {
struct tent {
    double lo, hi;
    double eval(double t) const { return std::max(0.0, std::min(t - lo, hi - t)); }
};

std::vector<tent> tents_of(const persistence_diagram& d) {
    std::vector<tent> ts;
    ts.reserve(d.pairs.size());
    for (const auto& p : d.pairs)
        ts.push_back({std::min(p.birth, p.death), std::max(p.birth, p.death)});
    return ts;
}
} // namespace

double landscape_eval(const persistence_diagram& d, int k, double t) {
    if (k < 1) throw validation_error("landscape_eval: level must be >= 1");
    if (static_cast<std::size_t>(k) > d.pairs.size()) return 0.0;
    std::vector<double> vals;
    vals.reserve(d.pairs.size());
    for (const auto& p : d.pairs) {
        const tent tt{std::min(p.birth, p.death), std::max(p.birth, p.death)};
        vals.push_back(tt.eval(t));
    }
    std::nth_element(vals.begin(), vals.begin() + (k - 1), vals.end(), std::greater<>());
    return std::max(0.0, vals[static_cast<std::size_t>(k - 1)]);
}

double landscape_l1(const persistence_diagram& d) {
    double sum = 0.0;
    for (const auto& p : d.pairs) {
        const double pers = p.persistence();
        sum += pers * pers / 4.0;
    }
    return sum;
}

double landscape_l1_levels(const persistence_diagram& d, int max_level) {
    if (max_level < 1) throw validation_error("landscape_l1_levels: level must be >= 1");
    const auto ts = tents_of(d);
    if (ts.empty()) return 0.0;

    // Breakpoints: tent corners plus crossings of opposite-slope edges. Between
    // consecutive breakpoints every lambda_k is linear, so trapezoid is exact.
    std::vector<double> bp;
    bp.reserve(ts.size() * 3);
    for (const auto& t : ts) {
        bp.push_back(t.lo);
        bp.push_back((t.lo + t.hi) / 2.0);
        bp.push_back(t.hi);
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (i == j) continue;
            const double c = (ts[i].lo + ts[j].hi) / 2.0; // up-edge of i meets down-edge of j
            if (c > ts[i].lo && c < (ts[i].lo + ts[i].hi) / 2.0 && c > (ts[j].lo + ts[j].hi) / 2.0 &&
                c < ts[j].hi)
                bp.push_back(c);
        }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    const int levels = std::min<int>(max_level, static_cast<int>(ts.size()));
    auto sum_levels = [&](double t) {
        std::vector<double> vals;
        vals.reserve(ts.size());
        for (const auto& tt : ts) vals.push_back(tt.eval(t));
        std::sort(vals.begin(), vals.end(), std::greater<>());
        double s = 0.0;
        for (int k = 0; k < levels; ++k) s += vals[static_cast<std::size_t>(k)];
        return s;
    };

    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = bp[i], b = bp[i + 1];
        integral += (sum_levels(a) + sum_levels(b)) / 2.0 * (b - a);
    }
    return integral;
}

} // namespace hbm
