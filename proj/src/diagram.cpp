#include "hbmorph/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace hbm {

std::string to_string(filtration_direction d) {
    return d == filtration_direction::sublevel ? "sublevel" : "superlevel";
}

std::string to_string(value_units u) { return u == value_units::mm ? "mm" : "mm2"; }

persistence_diagram filter_by_persistence(const persistence_diagram& d, double tau) {
    if (!(tau >= 0.0)) throw validation_error("filter_by_persistence: tau must be >= 0");
    persistence_diagram out;
    out.dim = d.dim;
    out.direction = d.direction;
    out.units = d.units;
    for (const auto& p : d.pairs)
        if (p.persistence() > tau) out.pairs.push_back(p);
    return out;
}

diagram_stats_result diagram_stats(const persistence_diagram& d) {
    diagram_stats_result r;
    r.count = static_cast<std::int64_t>(d.pairs.size());
    if (d.pairs.empty()) return r;
    r.defined = true;
    double sum = 0.0;
    double mx = 0.0;
    for (const auto& p : d.pairs) {
        const double pers = p.persistence();
        sum += pers;
        mx = std::max(mx, pers);
    }
    r.mean_persistence = sum / static_cast<double>(r.count);
    r.max_persistence = mx;
    return r;
}

namespace {
std::string format_value(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}
} // namespace

void write_diagram_csv(std::ostream& out, const persistence_diagram& d, bool header) {
    if (header) out << "dim,birth,death,units,direction\n";
    for (const auto& p : d.pairs)
        out << d.dim << ',' << format_value(p.birth) << ',' << format_value(p.death) << ','
            << to_string(d.units) << ',' << to_string(d.direction) << '\n';
}

persistence_diagram read_diagram_csv(std::istream& in) {
    persistence_diagram d;
    std::string line;
    bool first = true;
    bool meta_set = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("dim,", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::stringstream ss(line);
        std::string dim_s, birth_s, death_s, units_s, dir_s;
        if (!std::getline(ss, dim_s, ',') || !std::getline(ss, birth_s, ',') ||
            !std::getline(ss, death_s, ',') || !std::getline(ss, units_s, ',') ||
            !std::getline(ss, dir_s, ','))
            throw format_error("malformed diagram CSV row: " + line);
        persistence_pair p{std::stod(birth_s), std::stod(death_s)};
        const int dim = std::stoi(dim_s);
        const value_units units = units_s == "mm" ? value_units::mm : value_units::mm2;
        const filtration_direction dir = dir_s == "sublevel" ? filtration_direction::sublevel
                                                             : filtration_direction::superlevel;
        if (!meta_set) {
            d.dim = dim;
            d.units = units;
            d.direction = dir;
            meta_set = true;
        } else if (dim != d.dim || units != d.units || dir != d.direction) {
            throw format_error("mixed metadata in diagram CSV");
        }
        d.pairs.push_back(p);
    }
    return d;
}

} // namespace hbm
