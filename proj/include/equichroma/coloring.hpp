#pragma once

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "equichroma/graph.hpp"

namespace equichroma {

// Vertex coloring with colors 1..k. A valid coloring uses every color at
// least once; emptiness and range are checked at use sites.
struct Coloring {
    int k = 0;
    std::vector<int> assignment; // assignment[v] in [1, k]

    bool operator==(const Coloring&) const = default;
};

// Class sizes indexed by color-1 (unsorted).
inline std::vector<long long> class_sizes(const Coloring& c) {
    if (c.k < 1) throw std::invalid_argument("coloring: color count must be positive");
    std::vector<long long> sizes(static_cast<std::size_t>(c.k), 0);
    for (int color : c.assignment) {
        if (color < 1 || color > c.k)
            throw std::invalid_argument("coloring: color out of range [1, k]");
        ++sizes[static_cast<std::size_t>(color - 1)];
    }
    return sizes;
}

inline void validate_coloring(const Coloring& c) {
    for (long long s : class_sizes(c))
        if (s == 0) throw std::invalid_argument("coloring: empty color class");
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("is_proper: assignment length does not match vertex count");
    validate_coloring(c);
    for (auto [a, b] : g.edges())
        if (c.assignment[static_cast<std::size_t>(a)] == c.assignment[static_cast<std::size_t>(b)])
            return false;
    return true;
}

inline bool is_equitable(const Coloring& c) {
    const auto sizes = class_sizes(c);
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*lo == 0) return false; // an unused color is never acceptable
    return *hi - *lo <= 1;
}

// Coloring file schema: {"family": <str|null>, "n": <int|null>, "k": <int>,
// "assignment": [<1-based ints>]}.
inline std::string coloring_to_json(const Coloring& c,
                                    const std::optional<std::string>& family = std::nullopt,
                                    const std::optional<int>& n = std::nullopt) {
    nlohmann::ordered_json j;
    if (family) j["family"] = *family; else j["family"] = nullptr;
    if (n) j["n"] = *n; else j["n"] = nullptr;
    j["k"] = c.k;
    j["assignment"] = c.assignment;
    return j.dump(2) + "\n";
}

struct ParsedColoring {
    Coloring coloring;
    std::optional<std::string> family;
    std::optional<int> n;
};

inline ParsedColoring coloring_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("coloring JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("assignment"))
        throw std::invalid_argument("coloring JSON: expected object with \"k\" and \"assignment\"");
    ParsedColoring out;
    out.coloring.k = j.at("k").get<int>();
    out.coloring.assignment = j.at("assignment").get<std::vector<int>>();
    if (j.contains("family") && !j.at("family").is_null())
        out.family = j.at("family").get<std::string>();
    if (j.contains("n") && !j.at("n").is_null()) out.n = j.at("n").get<int>();
    validate_coloring(out.coloring);
    return out;
}

} // namespace equichroma
