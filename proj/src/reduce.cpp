#include "hbmorph/complex.hpp"

#include <algorithm>
#include <string>

namespace hbm {

void validate_complex(const filtered_complex& fc) {
    const auto& cells = fc.cells;
    const std::size_t n = cells.size();
    const bool super = fc.direction == filtration_direction::superlevel;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& c = cells[j];
        if (c.dim < 0 || c.dim > 3)
            throw malformed_complex_error("cell dimension out of range at " + std::to_string(j));
        if (c.dim == 0 && !c.boundary.empty())
            throw malformed_complex_error("vertex with nonempty boundary at " + std::to_string(j));
        if (c.dim > 0 && c.boundary.empty())
            throw malformed_complex_error("positive-dimensional cell without boundary at " +
                                          std::to_string(j));
        if (j > 0) {
            const double prev = cells[j - 1].value;
            const bool ok = super ? (c.value <= prev) : (c.value >= prev);
            if (!ok)
                throw malformed_complex_error("filtration values not monotone at " +
                                              std::to_string(j));
        }
        for (cell_index b : c.boundary) {
            if (b >= j)
                throw malformed_complex_error("boundary index does not precede cell at " +
                                              std::to_string(j));
            if (cells[b].dim != c.dim - 1)
                throw malformed_complex_error("boundary dimension mismatch at " +
                                              std::to_string(j));
        }
    }
    // boundary-of-boundary vanishes over GF(2)
    std::vector<cell_index> scratch;
    for (std::size_t j = 0; j < n; ++j) {
        if (cells[j].dim < 2) continue;
        scratch.clear();
        for (cell_index b : cells[j].boundary)
            scratch.insert(scratch.end(), cells[b].boundary.begin(), cells[b].boundary.end());
        std::sort(scratch.begin(), scratch.end());
        for (std::size_t k = 0; k < scratch.size(); k += 2)
            if (k + 1 >= scratch.size() || scratch[k] != scratch[k + 1])
                throw malformed_complex_error("boundary of boundary nonzero at cell " +
                                              std::to_string(j));
    }
}

namespace {

// XOR of two sorted index lists.
void symmetric_difference(std::vector<cell_index>& a, const std::vector<cell_index>& b,
                          std::vector<cell_index>& tmp) {
    tmp.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            tmp.push_back(a[i++]);
        else if (b[j] < a[i])
            tmp.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    tmp.insert(tmp.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    tmp.insert(tmp.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    a.swap(tmp);
}

} // namespace

reduce_result reduce(const filtered_complex& fc) {
    validate_complex(fc);
    const auto& cells = fc.cells;
    const std::size_t n = cells.size();

    int maxdim = 0;
    for (const auto& c : cells) maxdim = std::max(maxdim, static_cast<int>(c.dim));

    std::vector<std::uint8_t> positive(n, 0), killed(n, 0), cleared(n, 0);
    std::vector<std::int64_t> low_of(n, -1);
    std::vector<std::vector<cell_index>> cols(n);
    std::vector<cell_index> col, tmp;

    struct raw_pair {
        cell_index birth_cell;
        cell_index death_cell;
    };
    std::vector<std::vector<raw_pair>> pairs_by_dim(static_cast<std::size_t>(maxdim) + 1);

    // Reduce top dimension first so pairings clear known-positive columns below.
    for (int d = maxdim; d >= 1; --d) {
        std::fill(low_of.begin(), low_of.end(), -1);
        for (std::size_t j = 0; j < n; ++j) {
            if (cells[j].dim != d) continue;
            if (cleared[j]) {
                positive[j] = 1;
                continue;
            }
            col.assign(cells[j].boundary.begin(), cells[j].boundary.end());
            std::sort(col.begin(), col.end());
            while (!col.empty()) {
                const std::int64_t k = low_of[col.back()];
                if (k < 0) break;
                symmetric_difference(col, cols[static_cast<std::size_t>(k)], tmp);
            }
            if (col.empty()) {
                positive[j] = 1;
            } else {
                const cell_index low = col.back();
                low_of[low] = static_cast<std::int64_t>(j);
                cols[j] = col;
                killed[low] = 1;
                cleared[low] = 1;
                pairs_by_dim[static_cast<std::size_t>(d - 1)].push_back(
                    {low, static_cast<cell_index>(j)});
            }
        }
        // release columns of this dimension
        for (std::size_t j = 0; j < n; ++j)
            if (cells[j].dim == d) std::vector<cell_index>().swap(cols[j]);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (cells[j].dim == 0) positive[j] = 1;

    reduce_result out;
    out.diagrams.resize(static_cast<std::size_t>(maxdim) + 1);
    for (int q = 0; q <= maxdim; ++q) {
        auto& dg = out.diagrams[static_cast<std::size_t>(q)];
        dg.dim = q;
        dg.direction = fc.direction;
        dg.units = fc.units;
        for (const auto& rp : pairs_by_dim[static_cast<std::size_t>(q)]) {
            const double b = cells[rp.birth_cell].value;
            const double dv = cells[rp.death_cell].value;
            if (b == dv) continue; // zero persistence
            dg.pairs.push_back({b, dv});
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (positive[j] && !killed[j])
            out.essentials.push_back({static_cast<int>(cells[j].dim), cells[j].value});
    return out;
}

} // namespace hbm
