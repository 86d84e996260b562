#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wiener/enumerate.hpp"
#include "wiener/graph.hpp"

using namespace wiener;

namespace {

Graph path_graph(int q) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(q, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("path Wiener index is the tetrahedral number") {
    for (long long q = 1; q <= 50; ++q) {
        long long expected = (q + 1) * q * (q - 1) / 6;  // C(q+1, 3)
        CHECK(wiener_index(path_graph(static_cast<int>(q))) == expected);
    }
}

TEST_CASE("cycle Wiener index matches the closed form") {
    for (long long n = 3; n <= 30; ++n) {
        Graph g = cycle(static_cast<int>(n));
        long long expected = n * ((n * n) / 4) / 2;
        CHECK(wiener_index(g) == expected);
        long long viaMatrix = 0;
        auto dist = all_pairs_distances(g);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) viaMatrix += dist[u][v];
        CHECK(viaMatrix == expected);
    }
}

TEST_CASE("distances and connectivity basics") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(g));
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, -1, -1});
    CHECK_THROWS_AS(wiener_index(g), disconnected_error);
    CHECK_THROWS_AS(all_pairs_distances(g), disconnected_error);

    Graph p = path_graph(5);
    CHECK(bfs_distances(p, 2) == std::vector<int>{2, 1, 0, 1, 2});
}

TEST_CASE("from_edges validates and normalizes") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);   // loop
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);   // out of range
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}}).edge_count() == 1);  // dup collapsed
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("unicyclic_info finds the cycle and attachments") {
    // triangle with a path 3-4 hanging off vertex 0
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
    auto info = unicyclic_info(g);
    REQUIRE(info.has_value());
    CHECK(info->cycle.size() == 3);
    int pos = -1;
    for (int i = 0; i < 3; ++i)
        if (info->cycle[i] == 0) pos = i;
    REQUIRE(pos >= 0);
    CHECK(info->attachment[pos] == std::vector<int>{3, 4});

    CHECK_FALSE(unicyclic_info(path_graph(4)).has_value());
}

TEST_CASE("edge deletion strictly increases the Wiener index") {
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : unicyclic_graphs(n)) {
            for (auto [u, v] : g.edges()) {
                auto edges = g.edges();
                std::erase(edges, std::make_pair(u, v));
                Graph h = Graph::from_edges(n, edges);
                if (!is_connected(h)) continue;
                CHECK(wiener_index(h) > wiener_index(g));
            }
        }
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(12345);
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0);
        for (const Graph& g : unicyclic_graphs(n)) {
            CanonicalForm base = canonical_form(g);
            for (int trial = 0; trial < 100; ++trial) {
                std::shuffle(relabel.begin(), relabel.end(), rng);
                CHECK(canonical_form(permute(g, relabel)) == base);
            }
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    for (int n : {6, 7}) {
        auto graphs = unicyclic_graphs(n);
        std::vector<std::string> keys;
        for (const Graph& g : graphs) keys.push_back(canonical_form(g).bytes);
        std::sort(keys.begin(), keys.end());
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
    CHECK_THROWS_AS(canonical_form(path_graph(20)), std::invalid_argument);  // over cap
}

TEST_CASE("canonical_graph realizes its own canonical form") {
    for (const Graph& g : unicyclic_graphs(7)) {
        Graph c = canonical_graph(g);
        CHECK(canonical_form(c).bytes == canonical_form(g).bytes);
        CHECK(to_graph6(c) == canonical_form(g).bytes);
    }
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(cycle(3)) == "Bw");
    CHECK(to_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(from_graph6("Bw") == cycle(3));
    CHECK(from_graph6("@").n == 1);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);         // truncated
    CHECK_THROWS_AS(from_graph6("\x01\x01"), std::invalid_argument);  // bad bytes
}

TEST_CASE("graph6 round trip on enumerated graphs") {
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : unicyclic_graphs(n)) CHECK(from_graph6(to_graph6(g)) == g);
}
