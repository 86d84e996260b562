#pragma once

#include <json.hpp>

#include "wiener/enumerate.hpp"
#include "wiener/graph.hpp"
#include "wiener/transforms.hpp"

namespace wiener {

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

inline nlohmann::json report_to_json(const TransformReport& r) {
    return {{"before", graph_to_json(r.before)},
            {"after", graph_to_json(r.after)},
            {"delta_wiener", r.delta_wiener},
            {"matching_before", r.matching_before},
            {"matching_after", r.matching_after}};
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells) {
        nlohmann::json cell = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) cell["detail"] = c.detail;
        cells.push_back(std::move(cell));
    }
    return {{"suite", r.suite}, {"passed", r.passed}, {"cells", cells}};
}

}  // namespace wiener
