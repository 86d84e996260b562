#include "wiener/matching.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace wiener {

MatchingCertificate matching_number_tree(const Graph& g) {
    if (g.edge_count() != g.n - 1 || !is_connected(g))
        throw std::invalid_argument("matching_number_tree: input is not a tree");

    MatchingCertificate cert;
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    std::queue<int> leaves;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = static_cast<int>(g.adj[v].size());
        if (deg[v] <= 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        if (removed[v]) continue;
        removed[v] = 1;
        int partner = -1;
        for (int u : g.adj[v])
            if (!removed[u]) {
                partner = u;
                break;
            }
        if (partner < 0) continue;  // became isolated, drop unmatched
        removed[partner] = 1;
        cert.edges.emplace_back(std::min(v, partner), std::max(v, partner));
        for (int w : g.adj[partner])
            if (!removed[w] && --deg[w] <= 1) leaves.push(w);
    }
    cert.size = static_cast<int>(cert.edges.size());
    return cert;
}

MatchingCertificate matching_number_unicyclic(const Graph& g) {
    auto info = unicyclic_info(g);
    if (!info) throw std::invalid_argument("matching_number_unicyclic: input is not unicyclic");

    MatchingCertificate bestCert;
    int k = static_cast<int>(info->cycle.size());
    auto allEdges = g.edges();
    for (int i = 0; i < k; ++i) {
        int u = info->cycle[i];
        int v = info->cycle[(i + 1) % k];
        auto cut = std::minmax(u, v);
        std::vector<std::pair<int, int>> treeEdges;
        for (auto e : allEdges)
            if (e != std::pair<int, int>(cut.first, cut.second)) treeEdges.push_back(e);
        auto cert = matching_number_tree(Graph::from_edges(g.n, treeEdges));
        if (cert.size > bestCert.size || bestCert.edges.empty()) bestCert = cert;
    }
    return bestCert;
}

namespace {

void bruteforce_rec(const std::vector<std::pair<int, int>>& edges, std::size_t i,
                    std::uint32_t usedVertices, std::vector<std::pair<int, int>>& cur,
                    MatchingCertificate& best) {
    if (cur.size() > best.edges.size()) {
        best.edges = cur;
        best.size = static_cast<int>(cur.size());
    }
    if (i == edges.size()) return;
    if (cur.size() + (edges.size() - i) <= best.edges.size()) return;
    auto [u, v] = edges[i];
    std::uint32_t mask = (1u << u) | (1u << v);
    if ((usedVertices & mask) == 0) {
        cur.push_back(edges[i]);
        bruteforce_rec(edges, i + 1, usedVertices | mask, cur, best);
        cur.pop_back();
    }
    bruteforce_rec(edges, i + 1, usedVertices, cur, best);
}

}  // namespace

MatchingCertificate matching_number_bruteforce(const Graph& g) {
    auto edges = g.edges();
    if (edges.size() > 24)
        throw std::invalid_argument("matching_number_bruteforce: edge budget 24 exceeded");
    MatchingCertificate best;
    std::vector<std::pair<int, int>> cur;
    bruteforce_rec(edges, 0, 0, cur, best);
    return best;
}

MatchingCertificate matching_number(const Graph& g) {
    int e = g.edge_count();
    if (is_connected(g)) {
        if (e == g.n - 1) return matching_number_tree(g);
        if (e == g.n) return matching_number_unicyclic(g);
    }
    return matching_number_bruteforce(g);
}

bool verify_certificate(const Graph& g, const MatchingCertificate& cert) {
    if (static_cast<int>(cert.edges.size()) != cert.size) return false;
    std::set<int> used;
    for (auto [u, v] : cert.edges) {
        if (!g.has_edge(u, v)) return false;
        if (!used.insert(u).second) return false;
        if (!used.insert(v).second) return false;
    }
    return true;
}

}  // namespace wiener
