#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equichroma {

// Simple undirected graph. Edges are normalized to (min,max) pairs and kept
// sorted and unique, so two equal graphs always serialize identically.
// Labels are display metadata only: they never enter equality or algorithms.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> labels = {})
        : n_(n), labels_(std::move(labels)) {
        if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            throw std::invalid_argument("Graph: label count must match vertex count");
        edges_.reserve(edge_list.size());
        for (auto [a, b] : edge_list) {
            if (a == b) throw std::invalid_argument("Graph: self-loop rejected");
            if (a < 0 || b < 0 || a >= n_ || b >= n_)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("Graph: duplicate edge rejected");
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (auto [a, b] : edges_) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    int max_degree() const {
        if (n_ == 0) throw std::invalid_argument("max_degree: empty graph");
        int best = 0;
        for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
        return best;
    }

    bool is_connected() const {
        if (n_ == 0) throw std::invalid_argument("is_connected: empty graph");
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++visited;
                    stack.push_back(u);
                }
            }
        }
        return visited == n_;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

inline bool is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return n >= 1 && 2LL * g.edge_count() == n * (n - 1);
}

inline bool is_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0 || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return g.is_connected();
}

} // namespace equichroma
