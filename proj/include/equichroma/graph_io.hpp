#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equichroma/graph.hpp"

namespace equichroma {

// DIMACS .col text: "p edge n m" header, then one "e u v" line per edge with
// 1-based endpoints in ascending lexicographic order.
inline std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [a, b] : g.edges()) out << "e " << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

// Canonical JSON schema: {"n": <int>, "edges": [[a,b], ...], "labels": [...]},
// edges 0-based with a<b, lexicographically sorted. "labels" is omitted for
// unlabeled graphs. Output is stable byte-for-byte for equal graphs.
inline std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j.dump(2) + "\n";
}

// Undirected DOT drawing, best effort (layout is the viewer's problem).
inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (!g.labels().empty()) out << " [label=\"" << g.labels()[static_cast<std::size_t>(v)] << "\"]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

inline Graph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON: expected object with \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(n, std::move(edges), std::move(labels));
}

inline Graph graph_from_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            int m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw std::invalid_argument("DIMACS: malformed problem line");
        } else if (tag == "e") {
            int a = 0, b = 0;
            if (!(ls >> a >> b)) throw std::invalid_argument("DIMACS: malformed edge line");
            edges.emplace_back(a - 1, b - 1);
        }
    }
    if (n < 0) throw std::invalid_argument("DIMACS: missing problem line");
    return Graph(n, std::move(edges));
}

} // namespace equichroma
