#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichroma/graph.hpp"

namespace equichroma {

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kBruteForceVertexBudget = 13;

namespace detail {

// Plain enumeration of color assignments in vertex-index order. The only
// symmetry breaking is first-use color ordering (an assignment may open color
// c only after colors 1..c-1 appear); branches die on an immediate adjacency
// conflict, everything else is checked at the leaves. Deliberately shares no
// machinery with EquitableSearch so the two can cross-check each other.
class ExhaustiveEnumeration {
public:
    ExhaustiveEnumeration(const Graph& g, int k)
        : g_(g), n_(g.vertex_count()), k_(k), color_(static_cast<std::size_t>(n_), 0),
          counts_(static_cast<std::size_t>(k + 1), 0) {
        lower_neighbors_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbors(v))
                if (u < v) lower_neighbors_[static_cast<std::size_t>(v)].push_back(u);
    }

    bool any_equitable() { return enumerate(0, 0); }

private:
    bool leaf_is_equitable() const {
        long long lo = counts_[1], hi = counts_[1];
        for (int c = 1; c <= k_; ++c) {
            lo = std::min(lo, counts_[static_cast<std::size_t>(c)]);
            hi = std::max(hi, counts_[static_cast<std::size_t>(c)]);
        }
        return lo >= 1 && hi - lo <= 1;
    }

    bool enumerate(int v, int max_used) {
        if (v == n_) return max_used == k_ && leaf_is_equitable();
        const int limit = std::min(max_used + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            bool conflict = false;
            for (int u : lower_neighbors_[static_cast<std::size_t>(v)])
                if (color_[static_cast<std::size_t>(u)] == c) {
                    conflict = true;
                    break;
                }
            if (conflict) continue;
            color_[static_cast<std::size_t>(v)] = c;
            ++counts_[static_cast<std::size_t>(c)];
            if (enumerate(v + 1, std::max(max_used, c))) return true;
            --counts_[static_cast<std::size_t>(c)];
            color_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int n_, k_;
    std::vector<int> color_;
    std::vector<long long> counts_;
    std::vector<std::vector<int>> lower_neighbors_;
};

} // namespace detail

// Independent oracle for the equitable chromatic number of small graphs.
inline int brute_force_chi_e(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("brute_force_chi_e: empty graph");
    if (n > kBruteForceVertexBudget)
        throw BudgetError("brute_force_chi_e: " + std::to_string(n) + " vertices exceeds the " +
                          std::to_string(kBruteForceVertexBudget) + "-vertex enumeration budget");
    for (int k = 1; k <= n; ++k) {
        detail::ExhaustiveEnumeration search(g, k);
        if (search.any_equitable()) return k;
    }
    throw std::logic_error("brute_force_chi_e: k = n must be feasible"); // unreachable
}

} // namespace equichroma
