#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "wiener/enumerate.hpp"
#include "wiener/matching.hpp"
#include "wiener/transforms.hpp"

using namespace wiener;

TEST_CASE("unicyclic counts match the known sequence") {
    const std::map<int, std::size_t> expected{{3, 1},   {4, 2},   {5, 5},    {6, 13},
                                              {7, 33},  {8, 89},  {9, 240},  {10, 657},
                                              {11, 1806}, {12, 5026}};
    for (auto [n, count] : expected) CHECK(unicyclic_graphs(n).size() == count);
    CHECK_THROWS_AS(unicyclic_graphs(2), std::invalid_argument);
    CHECK_THROWS_AS(unicyclic_graphs(13), std::invalid_argument);
}

TEST_CASE("tree counts match the known sequence") {
    const std::map<int, std::size_t> expected{{1, 1}, {2, 1}, {3, 1},  {4, 2},  {5, 3},
                                              {6, 6}, {7, 11}, {8, 23}, {9, 47}, {10, 106}};
    for (auto [n, count] : expected) CHECK(trees(n, 10).size() == count);
    CHECK_THROWS_AS(trees(10), std::invalid_argument);  // above the default cap
    CHECK_THROWS_AS(trees(11, 10), std::invalid_argument);
}

TEST_CASE("connected-graph counts match the known sequence") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("every enumerated graph has the promised shape, exactly once") {
    for (int n = 3; n <= 9; ++n) {
        std::set<std::string> keys;
        for (const Graph& g : unicyclic_graphs(n)) {
            CHECK(g.n == n);
            CHECK(g.edge_count() == n);
            CHECK(unicyclic_info(g).has_value());
            CHECK(keys.insert(canonical_form(g).bytes).second);
        }
    }
    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> keys;
        for (const Graph& t : trees(n, 10)) {
            CHECK(t.edge_count() == n - 1);
            CHECK(is_connected(t));
            CHECK(keys.insert(canonical_form(t).bytes).second);
        }
    }
}

TEST_CASE("unicyclic enumeration cross-checked by labeled-subgraph filtering") {
    for (int n = 5; n <= 8; ++n) {
        std::vector<std::pair<int, int>> allEdges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) allEdges.emplace_back(u, v);
        // every n-subset of edges that forms a connected graph is unicyclic
        std::set<std::string> labeledKeys;
        std::vector<int> pick(n);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == n) {
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < n; ++i) edges.push_back(allEdges[pick[i]]);
                Graph g = Graph::from_edges(n, edges);
                if (is_connected(g)) labeledKeys.insert(canonical_form(g).bytes);
                return;
            }
            for (int i = start; i < static_cast<int>(allEdges.size()); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);

        std::set<std::string> assembledKeys;
        for (const Graph& g : unicyclic_graphs(n))
            assembledKeys.insert(canonical_form(g).bytes);
        CHECK(labeledKeys == assembledKeys);
    }
}

TEST_CASE("tree enumeration cross-checked by leaf-growth generation") {
    std::vector<std::set<std::string>> grown(10);
    grown[1] = {canonical_form(Graph::from_edges(1, {})).bytes};
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int n = 2; n <= 9; ++n) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level) {
            auto edges = t.edges();
            for (int v = 0; v < t.n; ++v) {
                auto grownEdges = edges;
                grownEdges.emplace_back(v, t.n);
                Graph bigger = Graph::from_edges(t.n + 1, grownEdges);
                next.try_emplace(canonical_form(bigger).bytes, bigger);
            }
        }
        level.clear();
        for (auto& [key, g] : next) {
            grown[n].insert(key);
            level.push_back(std::move(g));
        }
        std::set<std::string> viaPrufer;
        for (const Graph& t : trees(n, 10)) viaPrufer.insert(canonical_form(t).bytes);
        CHECK(viaPrufer == grown[n]);
    }
}

TEST_CASE("parallel scan kernel agrees with the serial reference") {
    for (int n : {8, 10}) {
        auto graphs = unicyclic_graphs(n);
        auto serial = scan_stats_serial(graphs);
        for (int jobs : {1, 2, 4, 8}) {
            auto parallel = scan_stats_parallel(graphs, jobs);
            REQUIRE(parallel.size() == serial.size());
            for (std::size_t i = 0; i < serial.size(); ++i) {
                CHECK(parallel[i].wiener == serial[i].wiener);
                CHECK(parallel[i].matching == serial[i].matching);
            }
        }
    }
}

TEST_CASE("extremal table is deterministic across job counts and matches spot rows") {
    auto baseline = extremal_table(8, 1);
    for (int jobs : {2, 4}) {
        auto other = extremal_table(8, jobs);
        REQUIRE(other.size() == baseline.size());
        for (std::size_t i = 0; i < baseline.size(); ++i) {
            CHECK(other[i].m == baseline[i].m);
            CHECK(other[i].w_max == baseline[i].w_max);
            CHECK(other[i].extremal == baseline[i].extremal);
        }
    }

    auto six = extremal_table(6);
    REQUIRE(six.size() == 2);
    CHECK(six[0].m == 2);
    CHECK(six[0].w_max == 28);
    CHECK(six[0].extremal.size() == 2);
    CHECK(six[1].m == 3);
    CHECK(six[1].w_max == 31);
    CHECK(six[1].extremal.size() == 1);

    auto four = extremal_table(4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].m == 2);
    CHECK(four[0].w_max == 8);
    // C4 and the triangle with a pendant vertex
    std::vector<CanonicalForm> expected{
        canonical_form(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
        canonical_form(Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}))};
    std::sort(expected.begin(), expected.end());
    CHECK(four[0].extremal == expected);
}

TEST_CASE("verification drivers pass at reduced scale") {
    CHECK(verify_main_theorem(8).passed);
    CHECK(verify_monotonicity(8).passed);
    CHECK(verify_minima(8, 8).passed);
    CHECK(verify_dankelmann(6).passed);
}

TEST_CASE("graph6 round trip holds on seeded random unicyclic graphs") {
    std::mt19937 rng(0);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 4 + static_cast<int>(rng() % 20);
        Graph g = random_unicyclic(n, 3, n, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}
