#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equichroma/coloring.hpp"
#include "equichroma/graph.hpp"

namespace equichroma {

// The wheel-related families. Every family is parameterized by the rim/cycle
// length n >= 3 and generated with a fixed vertex layout:
//   rim v1..vn at indices 0..n-1, hub (when present) at index n,
//   outer/pendant u1..un at indices n+1..2n.
enum class FamilyKind {
    cycle,
    wheel,
    double_wheel,
    helm,
    closed_helm,
    flower,
    sunflower,
    closed_sunflower,
    blossom,
};

inline constexpr FamilyKind kAllFamilies[] = {
    FamilyKind::cycle,         FamilyKind::wheel,     FamilyKind::double_wheel,
    FamilyKind::helm,          FamilyKind::closed_helm, FamilyKind::flower,
    FamilyKind::sunflower,     FamilyKind::closed_sunflower, FamilyKind::blossom,
};

inline std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::wheel: return "wheel";
        case FamilyKind::double_wheel: return "double_wheel";
        case FamilyKind::helm: return "helm";
        case FamilyKind::closed_helm: return "closed_helm";
        case FamilyKind::flower: return "flower";
        case FamilyKind::sunflower: return "sunflower";
        case FamilyKind::closed_sunflower: return "closed_sunflower";
        case FamilyKind::blossom: return "blossom";
    }
    throw std::logic_error("unknown family kind");
}

inline FamilyKind family_from_string(const std::string& name) {
    for (FamilyKind kind : kAllFamilies)
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("unknown family: " + name);
}

struct FamilyId {
    FamilyKind kind;
    int n; // rim/cycle parameter, >= 3
};

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(FamilyKind kind, int n, const std::string& detail)
        : std::runtime_error("constructive coloring failed for " + to_string(kind) + " n=" +
                             std::to_string(n) + ": " + detail),
          kind_(kind), n_(n) {}
    FamilyKind kind() const { return kind_; }
    int n() const { return n_; }

private:
    FamilyKind kind_;
    int n_;
};

namespace detail {

inline void require_n(const FamilyId& id) {
    if (id.n < 3)
        throw std::invalid_argument("family " + to_string(id.kind) + ": n must be >= 3, got " +
                                    std::to_string(id.n));
}

// Label sets for the fixed layout.
inline std::vector<std::string> rim_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

inline std::vector<std::string> rim_hub_outer_labels(int n, bool hub, bool outer) {
    std::vector<std::string> labels = rim_labels(n);
    if (hub) labels.emplace_back("hub");
    if (outer)
        for (int i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
    return labels;
}

} // namespace detail

inline Graph generate(const FamilyId& id) {
    detail::require_n(id);
    const int n = id.n;
    const int hub = n;                       // hub index
    auto outer = [n](int i) { return n + 1 + i; }; // u_{i+1} index, i in [0, n)

    std::vector<std::pair<int, int>> edges;
    auto rim_cycle = [&] {
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    };
    auto spokes = [&] {
        for (int i = 0; i < n; ++i) edges.emplace_back(i, hub);
    };
    auto outer_cycle = [&] {
        for (int i = 0; i < n; ++i) edges.emplace_back(outer(i), outer((i + 1) % n));
    };
    auto pendants = [&] { // v_i -- u_i
        for (int i = 0; i < n; ++i) edges.emplace_back(i, outer(i));
    };
    auto outer_to_hub = [&] {
        for (int i = 0; i < n; ++i) edges.emplace_back(hub, outer(i));
    };
    auto triangles = [&] { // u_i -- v_i and u_i -- v_{i+1}
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, outer(i));
            edges.emplace_back((i + 1) % n, outer(i));
        }
    };

    switch (id.kind) {
        case FamilyKind::cycle:
            rim_cycle();
            return Graph(n, std::move(edges), detail::rim_labels(n));
        case FamilyKind::wheel:
            rim_cycle();
            spokes();
            return Graph(n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, false));
        case FamilyKind::double_wheel:
            rim_cycle();
            spokes();
            outer_cycle();
            outer_to_hub();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::helm:
            rim_cycle();
            spokes();
            pendants();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::closed_helm:
            rim_cycle();
            spokes();
            pendants();
            outer_cycle();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::flower:
            rim_cycle();
            spokes();
            pendants();
            outer_to_hub();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::sunflower:
            rim_cycle();
            spokes();
            triangles();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::closed_sunflower:
            rim_cycle();
            spokes();
            triangles();
            outer_cycle();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
        case FamilyKind::blossom:
            rim_cycle();
            spokes();
            triangles();
            outer_cycle();
            outer_to_hub();
            return Graph(2 * n + 1, std::move(edges), detail::rim_hub_outer_labels(n, true, true));
    }
    throw std::logic_error("unknown family kind");
}

// Color count of the minimum equitable coloring each family is documented to
// admit (the count the closed-form statistics are stated at).
inline int equitable_color_count(const FamilyId& id) {
    detail::require_n(id);
    const int n = id.n;
    switch (id.kind) {
        case FamilyKind::cycle: return n % 2 == 0 ? 2 : 3;
        case FamilyKind::wheel: return n % 2 == 0 ? n / 2 + 1 : (n - 1) / 2 + 2;
        case FamilyKind::double_wheel:
        case FamilyKind::flower:
        case FamilyKind::blossom: return n + 1;
        case FamilyKind::helm:
        case FamilyKind::closed_helm:
        case FamilyKind::sunflower:
        case FamilyKind::closed_sunflower: return 4;
    }
    throw std::logic_error("unknown family kind");
}

namespace detail {

// Odd cycle: (1,2,3) repeated, with the remainder absorbed so the wrap-around
// stays proper and the class sizes stay within one of each other.
inline std::vector<int> odd_cycle_pattern(int n) {
    std::vector<int> colors;
    const int t = n / 3;
    for (int i = 0; i < 3 * t; ++i) colors.push_back(i % 3 + 1);
    if (n % 3 == 1) colors.push_back(2);
    if (n % 3 == 2) {
        colors.push_back(1);
        colors.push_back(2);
    }
    return colors;
}

} // namespace detail

// Equitable coloring following the documented per-family pattern, using
// exactly equitable_color_count(id) colors. Every returned coloring is
// re-checked for properness and equitability; a pattern that cannot be
// realized raises ConstructionError instead of returning something invalid.
inline Coloring constructive_coloring(const FamilyId& id) {
    detail::require_n(id);
    const int n = id.n;
    const int k = equitable_color_count(id);
    const bool even = n % 2 == 0;

    Coloring c;
    c.k = k;
    auto& a = c.assignment;

    switch (id.kind) {
        case FamilyKind::cycle: {
            if (even)
                for (int i = 0; i < n; ++i) a.push_back(i % 2 + 1);
            else
                a = detail::odd_cycle_pattern(n);
            break;
        }
        case FamilyKind::wheel: {
            if (even) {
                const int half = n / 2;
                for (int i = 0; i < n; ++i) a.push_back(i % half + 1);
                a.push_back(half + 1); // hub
            } else {
                const int pairs = (n - 1) / 2;
                if (pairs < 2)
                    throw ConstructionError(id.kind, n,
                                            "W3 is the complete graph K4 and admits no equitable "
                                            "3-coloring; its equitable chromatic number is 4");
                for (int i = 0; i < n - 1; ++i) a.push_back(i % pairs + 1);
                a.push_back(pairs + 1); // last rim vertex
                a.push_back(pairs + 2); // hub
            }
            break;
        }
        case FamilyKind::double_wheel: {
            // The two cycles are disjoint, so v_i and u_i can share a class.
            for (int i = 0; i < n; ++i) a.push_back(i + 1);
            a.push_back(n + 1); // hub
            for (int i = 0; i < n; ++i) a.push_back(i + 1);
            break;
        }
        case FamilyKind::helm:
        case FamilyKind::closed_helm: {
            // Rim alternates c3/c4, hub c1, pendants alternate c1/c2; odd n
            // closes both cycles with c2 on the rim and c3 outside.
            for (int i = 0; i < (even ? n : n - 1); ++i) a.push_back(i % 2 == 0 ? 3 : 4);
            if (!even) a.push_back(2);
            a.push_back(1); // hub
            for (int i = 0; i < (even ? n : n - 1); ++i) a.push_back(i % 2 == 0 ? 1 : 2);
            if (!even) a.push_back(3);
            break;
        }
        case FamilyKind::flower: {
            // u_i is adjacent only to v_i and the hub, so shift by one.
            for (int i = 0; i < n; ++i) a.push_back(i + 1);
            a.push_back(n + 1); // hub
            for (int i = 0; i < n; ++i) a.push_back((i + 1) % n + 1);
            break;
        }
        case FamilyKind::sunflower:
        case FamilyKind::closed_sunflower: {
            // Rim alternates c2/c3 under hub c1; u_i sits in a triangle with
            // v_i and v_{i+1}, so the outer ring alternates c4/c1 with a
            // two-vertex fixup where the odd rim closes on c4.
            for (int i = 0; i < (even ? n : n - 1); ++i) a.push_back(i % 2 == 0 ? 2 : 3);
            if (!even) a.push_back(4);
            a.push_back(1); // hub
            if (even) {
                for (int i = 0; i < n; ++i) a.push_back(i % 2 == 0 ? 1 : 4);
            } else {
                for (int i = 0; i < n - 2; ++i) a.push_back(i % 2 == 0 ? 4 : 1);
                a.push_back(2);
                a.push_back(1);
            }
            break;
        }
        case FamilyKind::blossom: {
            // u_i sees v_i, v_{i+1}, both outer neighbours and the hub;
            // shifting the rim colors by two clears all five.
            for (int i = 0; i < n; ++i) a.push_back(i + 1);
            a.push_back(n + 1); // hub
            for (int i = 0; i < n; ++i) a.push_back((i + 2) % n + 1);
            break;
        }
    }

    const Graph g = generate(id);
    if (static_cast<int>(a.size()) != g.vertex_count())
        throw ConstructionError(id.kind, n, "pattern produced wrong vertex count");
    try {
        if (!is_proper(g, c)) throw ConstructionError(id.kind, n, "pattern is not proper");
        if (!is_equitable(c)) throw ConstructionError(id.kind, n, "pattern is not equitable");
    } catch (const std::invalid_argument& e) {
        throw ConstructionError(id.kind, n, e.what());
    }
    return c;
}

} // namespace equichroma
