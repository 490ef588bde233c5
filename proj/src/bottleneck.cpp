#include "hbmorph/bottleneck.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace hbm {
namespace {

double linf(const persistence_pair& a, const persistence_pair& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const persistence_pair& p) { return p.persistence() / 2.0; }

// Hopcroft-Karp maximum matching on an explicit adjacency list.
class bipartite_matcher {
public:
    bipartite_matcher(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), match_left_(n_left, kFree), match_right_(n_right, kFree) {}

    void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

    std::size_t max_matching() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == kFree && dfs(u)) ++matched;
        }
        return matched;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    static constexpr std::size_t kInf = static_cast<std::size_t>(-2);

    bool bfs() {
        std::queue<std::size_t> q;
        dist_.assign(adj_.size(), kInf);
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                q.push(u);
            }
        bool found = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_, match_right_;
    std::vector<std::size_t> dist_;
};

// Left side: points of d1 then diagonal stand-ins for d2's points.
// Right side: points of d2 then diagonal stand-ins for d1's points.
bool feasible(const std::vector<persistence_pair>& p1, const std::vector<persistence_pair>& p2,
              double r) {
    const std::size_t n1 = p1.size(), n2 = p2.size();
    bipartite_matcher m(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j)
            if (linf(p1[i], p2[j]) <= r) m.add_edge(i, j);
        if (diagonal_cost(p1[i]) <= r) m.add_edge(i, n2 + i);
    }
    for (std::size_t j = 0; j < n2; ++j) {
        if (diagonal_cost(p2[j]) <= r) m.add_edge(n1 + j, j);
        for (std::size_t i = 0; i < n1; ++i) m.add_edge(n1 + j, n2 + i);
    }
    return m.max_matching() == n1 + n2;
}

} // namespace

double bottleneck(const persistence_diagram& d1, const persistence_diagram& d2) {
    if (!d1.same_metadata(d2))
        throw validation_error("bottleneck: diagrams differ in dim, direction or units");
    const auto& p1 = d1.pairs;
    const auto& p2 = d2.pairs;
    if (p1.empty() && p2.empty()) return 0.0;

    std::vector<double> candidates;
    candidates.reserve(p1.size() * p2.size() + p1.size() + p2.size() + 1);
    candidates.push_back(0.0);
    for (const auto& a : p1) candidates.push_back(diagonal_cost(a));
    for (const auto& b : p2) candidates.push_back(diagonal_cost(b));
    for (const auto& a : p1)
        for (const auto& b : p2) candidates.push_back(linf(a, b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Smallest candidate radius admitting a perfect matching.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(p1, p2, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

} // namespace hbm
