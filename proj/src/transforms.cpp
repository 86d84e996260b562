#include "wiener/transforms.hpp"

#include <algorithm>
#include <numeric>

#include "wiener/matching.hpp"

namespace wiener {

namespace {

TransformReport make_report(const Graph& before, const Graph& after) {
    TransformReport r;
    r.before = before;
    r.after = after;
    r.delta_wiener = wiener_index(after) - wiener_index(before);
    r.matching_before = matching_number(before).size;
    r.matching_after = matching_number(after).size;
    return r;
}

Graph replace_edge(const Graph& g, std::pair<int, int> remove, std::pair<int, int> add) {
    auto edges = g.edges();
    auto rm = std::minmax(remove.first, remove.second);
    std::erase(edges, std::pair<int, int>(rm.first, rm.second));
    edges.push_back(add);
    return Graph::from_edges(g.n, edges);
}

}  // namespace

TransformReport spr(const Graph& g, int d, int branch, int v) {
    if (d < 0 || d >= g.n || v < 0 || v >= g.n || !g.has_edge(d, branch))
        throw std::invalid_argument("spr: branch must be a neighbor of d");
    if (v == d) return make_report(g, g);

    // Component of `branch` in g - d.
    std::vector<char> inComp(g.n, 0);
    std::vector<int> stack{branch};
    inComp[branch] = 1;
    int compEdges = 0, compSize = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++compSize;
        for (int w : g.adj[u]) {
            if (w == d) continue;
            if (inComp[w]) {
                ++compEdges;  // counted twice overall
                continue;
            }
            inComp[w] = 1;
            stack.push_back(w);
            ++compEdges;
        }
    }
    if (inComp[v]) throw std::invalid_argument("spr: regraft target lies inside pruned subtree");
    int edgesToD = 0;
    for (int u : g.adj[d])
        if (inComp[u]) ++edgesToD;
    if (edgesToD != 1 || compEdges != 2 * (compSize - 1))
        throw std::invalid_argument("spr: pruned branch is not a subtree hanging off d");
    if (auto info = unicyclic_info(g)) {
        for (int r : info->cycle)
            if (inComp[r]) throw std::invalid_argument("spr: pruned branch contains the cycle");
    }
    return make_report(g, replace_edge(g, {d, branch}, {v, branch}));
}

TransformReport cycle_swap(const Graph& g, CycleSwapVariant variant) {
    auto info = unicyclic_info(g);
    if (!info) throw std::invalid_argument("cycle_swap: input is not unicyclic");
    int k = static_cast<int>(info->cycle.size());
    if (k < 5) throw std::invalid_argument("cycle_swap: cycle length must be at least 5");

    // Reorient the cycle (rotation and reflection) so that a maximum attached
    // tree lands at position 3, i.e. index 2 of the reordered list.
    auto treeSize = [&](int idx) { return 1 + static_cast<int>(info->attachment[idx].size()); };
    int bestStart = 0, bestDir = 1, bestSize = -1;
    for (int dir : {1, -1}) {
        for (int start = 0; start < k; ++start) {
            int idx = ((start + 2 * dir) % k + k) % k;
            if (treeSize(idx) > bestSize) {
                bestSize = treeSize(idx);
                bestStart = start;
                bestDir = dir;
            }
        }
    }
    std::vector<int> r(k);  // r[i] = cycle vertex at 1-based position i+1
    for (int i = 0; i < k; ++i) r[i] = info->cycle[((bestStart + bestDir * i) % k + k) % k];

    int target = variant == CycleSwapVariant::G1 ? r[k - 1] : r[k - 2];
    return make_report(g, replace_edge(g, {r[1], r[2]}, {r[1], target}));
}

TransformReport path_regraft(const Graph& g, int i1, int i2) {
    auto info = unicyclic_info(g);
    if (!info) throw std::invalid_argument("path_regraft: input is not unicyclic");
    int k = static_cast<int>(info->cycle.size());
    if (i1 < 0 || i1 >= k || i2 < 0 || i2 >= k || i1 == i2)
        throw std::invalid_argument("path_regraft: invalid cycle indices");

    // Each attached tree must be a path; collect it root-outward.
    std::vector<std::vector<int>> legs(k);
    std::vector<char> onCycle(g.n, 0);
    for (int c : info->cycle) onCycle[c] = 1;
    for (int i = 0; i < k; ++i) {
        if (info->attachment[i].empty()) continue;
        std::vector<char> inAtt(g.n, 0);
        for (int u : info->attachment[i]) inAtt[u] = 1;
        int prev = info->cycle[i], cur = -1;
        for (int u : g.adj[prev])
            if (inAtt[u]) {
                if (cur >= 0)
                    throw std::invalid_argument("path_regraft: attached tree is not a path");
                cur = u;
            }
        while (cur >= 0) {
            legs[i].push_back(cur);
            int next = -1;
            for (int u : g.adj[cur]) {
                if (u == prev || onCycle[u]) continue;
                if (next >= 0)
                    throw std::invalid_argument("path_regraft: attached tree is not a path");
                next = u;
            }
            prev = cur;
            cur = next;
        }
        if (legs[i].size() != info->attachment[i].size())
            throw std::invalid_argument("path_regraft: attached tree is not a path");
    }
    if (legs[i1].empty() || legs[i2].empty())
        throw std::invalid_argument("path_regraft: both selected legs must be nonempty");

    // Weighting condition over the remaining nonempty legs; swap the indices
    // when the other orientation dominates, keep the lower index on ties.
    auto dist = all_pairs_distances(g);
    long long w1 = 0, w2 = 0;
    for (int t = 0; t < k; ++t) {
        if (t == i1 || t == i2 || legs[t].empty()) continue;
        w1 += static_cast<long long>(dist[info->cycle[i1]][info->cycle[t]]) * legs[t].size();
        w2 += static_cast<long long>(dist[info->cycle[i2]][info->cycle[t]]) * legs[t].size();
    }
    if (w1 < w2 || (w1 == w2 && i2 < i1)) std::swap(i1, i2);

    int leaf = legs[i1].back();
    int first = legs[i2].front();
    return make_report(g, replace_edge(g, {info->cycle[i2], first}, {leaf, first}));
}

Graph random_unicyclic(int n, int kMin, int kMax, std::mt19937& rng) {
    kMax = std::min(kMax, n);
    if (kMin < 3 || kMin > kMax)
        throw std::invalid_argument("random_unicyclic: invalid cycle-length range");
    int k = std::uniform_int_distribution<int>(kMin, kMax)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    for (int v = k; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph::from_edges(n, edges);
}

Graph random_path_legged_unicyclic(int n, int kMin, int kMax, int minLegs, std::mt19937& rng) {
    kMax = std::min(kMax, n - minLegs);
    if (kMin < 3 || kMin > kMax)
        throw std::invalid_argument("random_path_legged_unicyclic: invalid cycle-length range");
    int k = std::uniform_int_distribution<int>(kMin, kMax)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    std::vector<int> tip(k);  // current far end of each leg
    std::iota(tip.begin(), tip.end(), 0);
    std::vector<int> legOrder(k);
    std::iota(legOrder.begin(), legOrder.end(), 0);
    std::shuffle(legOrder.begin(), legOrder.end(), rng);
    for (int v = k; v < n; ++v) {
        // First minLegs extra vertices seed distinct legs.
        int leg = v - k < minLegs ? legOrder[v - k]
                                  : std::uniform_int_distribution<int>(0, k - 1)(rng);
        edges.emplace_back(tip[leg], v);
        tip[leg] = v;
    }
    return Graph::from_edges(n, edges);
}

}  // namespace wiener
