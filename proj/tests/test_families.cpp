#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "equichroma/families.hpp"
#include "equichroma/graph_io.hpp"
#include "equichroma/stats.hpp"

using namespace equichroma;

namespace {

struct Counts {
    int vertices;
    int edges;
};

Counts expected_counts(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::cycle: return {n, n};
        case FamilyKind::wheel: return {n + 1, 2 * n};
        case FamilyKind::double_wheel: return {2 * n + 1, 4 * n};
        case FamilyKind::helm: return {2 * n + 1, 3 * n};
        case FamilyKind::closed_helm: return {2 * n + 1, 4 * n};
        case FamilyKind::flower: return {2 * n + 1, 4 * n};
        case FamilyKind::sunflower: return {2 * n + 1, 4 * n};
        case FamilyKind::closed_sunflower: return {2 * n + 1, 5 * n};
        case FamilyKind::blossom: return {2 * n + 1, 6 * n};
    }
    return {0, 0};
}

// The forced equitable size profile for N vertices in k classes.
std::vector<long long> forced_sizes(long long n_vertices, long long k) {
    std::vector<long long> sizes;
    const long long q = n_vertices / k, r = n_vertices % k;
    for (long long i = 0; i < r; ++i) sizes.push_back(q + 1);
    for (long long i = r; i < k; ++i) sizes.push_back(q);
    return sizes;
}

} // namespace

TEST_CASE("vertex and edge counts match the construction for all n in [3,50]") {
    for (FamilyKind kind : kAllFamilies) {
        for (int n = 3; n <= 50; ++n) {
            const Graph g = generate({kind, n});
            const Counts want = expected_counts(kind, n);
            CHECK(g.vertex_count() == want.vertices);
            CHECK(g.edge_count() == want.edges);
        }
    }
}

TEST_CASE("count examples") {
    CHECK(generate({FamilyKind::wheel, 8}).vertex_count() == 9);
    CHECK(generate({FamilyKind::wheel, 8}).edge_count() == 16);
    CHECK(generate({FamilyKind::helm, 9}).vertex_count() == 19);
    CHECK(generate({FamilyKind::helm, 9}).edge_count() == 27);
    CHECK(generate({FamilyKind::blossom, 9}).vertex_count() == 19);
    CHECK(generate({FamilyKind::blossom, 9}).edge_count() == 54);
}

TEST_CASE("generation is deterministic") {
    for (FamilyKind kind : kAllFamilies) {
        const std::string a = to_json(generate({kind, 11}));
        const std::string b = to_json(generate({kind, 11}));
        CHECK(a == b);
    }
}

TEST_CASE("n below 3 is rejected") {
    CHECK_THROWS_AS(generate({FamilyKind::cycle, 2}), std::invalid_argument);
    CHECK_THROWS_AS(constructive_coloring({FamilyKind::wheel, 2}), std::invalid_argument);
    CHECK_THROWS_AS(equitable_color_count({FamilyKind::helm, 1}), std::invalid_argument);
}

TEST_CASE("sunflower outer vertices close triangles over rim edges") {
    const int n = 6;
    const Graph g = generate({FamilyKind::sunflower, n});
    for (int i = 0; i < n; ++i) {
        const int u = n + 1 + i;
        CHECK(g.adjacent(u, i));
        CHECK(g.adjacent(u, (i + 1) % n));
        CHECK(g.degree(u) == 2);
    }
}

TEST_CASE("constructive colorings are proper, equitable and use the documented color count") {
    for (FamilyKind kind : kAllFamilies) {
        for (int n = 3; n <= 50; ++n) {
            const FamilyId id{kind, n};
            if (kind == FamilyKind::wheel && n == 3) {
                // W3 = K4: the documented 3-coloring cannot exist.
                CHECK_THROWS_AS(constructive_coloring(id), ConstructionError);
                continue;
            }
            const Graph g = generate(id);
            const Coloring c = constructive_coloring(id);
            CHECK(c.k == equitable_color_count(id));
            CHECK(is_proper(g, c));
            CHECK(is_equitable(c));
            CHECK(distribution_of(c).sizes == forced_sizes(g.vertex_count(), c.k));
        }
    }
}

TEST_CASE("helm class sizes follow the documented split per parity") {
    for (int n = 3; n <= 50; ++n) {
        const Coloring c = constructive_coloring({FamilyKind::helm, n});
        const auto sizes = distribution_of(c).sizes;
        if (n % 2 == 0) {
            CHECK(sizes == std::vector<long long>{(n + 2) / 2, n / 2, n / 2, n / 2});
        } else {
            CHECK(sizes ==
                  std::vector<long long>{(n + 1) / 2, (n + 1) / 2, (n + 1) / 2, (n - 1) / 2});
        }
    }
}

TEST_CASE("even wheel pattern: rim repeats four colors twice, hub gets its own") {
    const Coloring c = constructive_coloring({FamilyKind::wheel, 8});
    CHECK(c.k == 5);
    CHECK(c.assignment == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4, 5});
    CHECK(distribution_of(c).sizes == std::vector<long long>{2, 2, 2, 2, 1});
}

TEST_CASE("double wheel pattern: ten classes, hub alone in the last") {
    const Coloring c = constructive_coloring({FamilyKind::double_wheel, 9});
    CHECK(c.k == 10);
    CHECK(c.assignment[9] == 10); // hub
    const auto sizes = distribution_of(c).sizes;
    CHECK(sizes.size() == 10);
    CHECK(std::count(sizes.begin(), sizes.end(), 2) == 9);
    CHECK(sizes.back() == 1);
}

TEST_CASE("odd helm keeps the hub in the first class") {
    const Coloring c = constructive_coloring({FamilyKind::helm, 9});
    CHECK(c.k == 4);
    CHECK(c.assignment[9] == 1); // hub
    CHECK(distribution_of(c).sizes == std::vector<long long>{5, 5, 5, 4});
}

TEST_CASE("hub families give the hub a singleton class") {
    for (FamilyKind kind :
         {FamilyKind::double_wheel, FamilyKind::flower, FamilyKind::blossom}) {
        for (int n : {3, 8, 13}) {
            const Coloring c = constructive_coloring({kind, n});
            const int hub_color = c.assignment[static_cast<std::size_t>(n)];
            CHECK(hub_color == n + 1);
            CHECK(std::count(c.assignment.begin(), c.assignment.end(), hub_color) == 1);
        }
    }
}
