#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichroma/coloring.hpp"
#include "equichroma/graph.hpp"

namespace equichroma {

class SolverTimeout : public std::runtime_error {
public:
    explicit SolverTimeout(const std::string& what) : std::runtime_error(what) {}
};

// EQUICHROMA_TIMEOUT_MS overrides the per-search budget (default 10 s).
inline std::int64_t default_solver_timeout_ms() {
    if (const char* env = std::getenv("EQUICHROMA_TIMEOUT_MS")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000;
}

struct SolveOptions {
    std::int64_t timeout_ms = default_solver_timeout_ms();
};

namespace detail {

// Backtracking search for a proper coloring whose class sizes realize the
// forced equitable multiset {q+1 x r, q x (k-r)} with N = kq + r.
//
// Determinism and pruning:
//  - vertices are processed in descending degree order (ties by index);
//  - colors are tried in ascending order and a new color index may be opened
//    only if it equals (max used index) + 1, which removes color symmetry;
//  - no class may exceed q+1, and at most r classes may reach q+1;
//  - a class whose remaining demand exceeds the number of still-assignable
//    vertices fails immediately (this is what kills hub-dominated graphs at
//    infeasible k in constant time).
class EquitableSearch {
public:
    EquitableSearch(const Graph& g, int k, std::int64_t timeout_ms)
        : g_(g),
          n_(g.vertex_count()),
          k_(k),
          q_(n_ / k),
          r_(n_ % k),
          color_(static_cast<std::size_t>(n_), 0),
          conflicts_(static_cast<std::size_t>(n_),
                     std::vector<int>(static_cast<std::size_t>(k + 1), 0)),
          class_size_(static_cast<std::size_t>(k + 1), 0),
          available_(static_cast<std::size_t>(k + 1), n_),
          unassigned_(n_),
          deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms)) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&g](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    std::optional<std::vector<int>> run() {
        if (std::chrono::steady_clock::now() > deadline_)
            throw SolverTimeout("equitable coloring search exceeded its time budget");
        if (dfs(0)) return color_;
        return std::nullopt;
    }

private:
    bool capacity_ok(int c) const {
        const int s = class_size_[static_cast<std::size_t>(c)];
        if (s < q_) return true;
        return s == q_ && large_count_ < r_;
    }

    bool demand_unmet() const {
        // Some class cannot reach its minimum size q anymore.
        for (int c = 1; c <= k_; ++c) {
            const int deficit = q_ - class_size_[static_cast<std::size_t>(c)];
            if (deficit > 0 && available_[static_cast<std::size_t>(c)] < deficit) return true;
        }
        return false;
    }

    void place(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        --unassigned_;
        if (++class_size_[static_cast<std::size_t>(c)] == q_ + 1) ++large_count_;
        for (int c2 = 1; c2 <= k_; ++c2)
            if (conflicts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c2)] == 0)
                --available_[static_cast<std::size_t>(c2)];
        for (int u : g_.neighbors(v)) {
            if (color_[static_cast<std::size_t>(u)] != 0) continue;
            if (conflicts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]++ == 0)
                --available_[static_cast<std::size_t>(c)];
        }
    }

    void unplace(int v, int c) {
        for (int u : g_.neighbors(v)) {
            if (color_[static_cast<std::size_t>(u)] != 0) continue;
            if (--conflicts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                ++available_[static_cast<std::size_t>(c)];
        }
        for (int c2 = 1; c2 <= k_; ++c2)
            if (conflicts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c2)] == 0)
                ++available_[static_cast<std::size_t>(c2)];
        if (class_size_[static_cast<std::size_t>(c)]-- == q_ + 1) --large_count_;
        ++unassigned_;
        color_[static_cast<std::size_t>(v)] = 0;
    }

    bool dfs(int pos) {
        if (pos == n_) return true;
        if ((++nodes_ & 0x3FFF) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw SolverTimeout("equitable coloring search exceeded its time budget");

        const int v = order_[static_cast<std::size_t>(pos)];
        const int limit = std::min(max_used_ + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            if (conflicts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] != 0) continue;
            if (!capacity_ok(c)) continue;
            place(v, c);
            const int saved_max = max_used_;
            max_used_ = std::max(max_used_, c);
            if (!demand_unmet() && dfs(pos + 1)) return true;
            max_used_ = saved_max;
            unplace(v, c);
        }
        return false;
    }

    const Graph& g_;
    int n_, k_, q_, r_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<std::vector<int>> conflicts_; // [v][c]: assigned neighbors of v colored c
    std::vector<int> class_size_;
    std::vector<int> available_; // [c]: unassigned vertices with no conflict on c
    int large_count_ = 0;
    int max_used_ = 0;
    int unassigned_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

// Equitable k-coloring of g, or nullopt when none exists. The class sizes of
// any returned coloring are forced to {q+1 x r, q x (k-r)}. Deterministic.
inline std::optional<Coloring> find_equitable_coloring(const Graph& g, int k,
                                                       const SolveOptions& options = {}) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("find_equitable_coloring: empty graph");
    if (k < 1) throw std::invalid_argument("find_equitable_coloring: k must be positive");
    if (k > n)
        throw std::invalid_argument("find_equitable_coloring: k exceeds vertex count (some class "
                                    "would be empty)");
    detail::EquitableSearch search(g, k, options.timeout_ms);
    auto assignment = search.run();
    if (!assignment) return std::nullopt;
    return Coloring{k, std::move(*assignment)};
}

// Greedy clique around the highest-degree vertex; the result is a genuine
// clique, so its size lower-bounds the (equitable) chromatic number.
inline int greedy_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> clique;
    for (int v : by_degree) {
        bool joins = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                joins = false;
                break;
            }
        if (joins) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

// Smallest k admitting an equitable k-coloring, by ascending scan with exact
// feasibility tests. Equitable colorability is not monotone in k, but the
// minimum over an ascending scan is the definition itself.
inline int equitable_chromatic_number(const Graph& g, const SolveOptions& options = {}) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("equitable_chromatic_number: empty graph");
    for (int k = std::max(1, greedy_clique_size(g)); k <= n; ++k)
        if (find_equitable_coloring(g, k, options)) return k;
    throw std::logic_error("equitable_chromatic_number: k = n must be feasible"); // unreachable
}

} // namespace equichroma
