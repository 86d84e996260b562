#include "wiener/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>

namespace wiener {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("from_edges: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("from_edges: endpoint out of range 0.." +
                                        std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("from_edges: self-loop rejected");
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& row : adj) total += static_cast<int>(row.size());
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph permute(const Graph& g, const std::vector<int>& relabel) {
    if (static_cast<int>(relabel.size()) != g.n)
        throw std::invalid_argument("permute: relabel size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
    return Graph::from_edges(g.n, edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n, -1);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d(g.n);
    for (int s = 0; s < g.n; ++s) {
        d[s] = bfs_distances(g, s);
        for (int v : d[s])
            if (v < 0) throw disconnected_error("all_pairs_distances: graph is disconnected");
    }
    return d;
}

long long wiener_index(const Graph& g) {
    long long total = 0;
    for (int s = 0; s < g.n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] < 0) throw disconnected_error("wiener_index: graph is disconnected");
            total += dist[v];
        }
    }
    return total / 2;
}

std::optional<CycleInfo> unicyclic_info(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("unicyclic_info: graph is disconnected");
    if (g.edge_count() != g.n) return std::nullopt;

    // Peel degree-1 vertices; what survives is the cycle.
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    std::queue<int> leaves;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = static_cast<int>(g.adj[v].size());
        if (deg[v] == 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        removed[v] = 1;
        for (int u : g.adj[v])
            if (!removed[u] && --deg[u] == 1) leaves.push(u);
    }

    CycleInfo info;
    int start = -1;
    for (int v = 0; v < g.n; ++v)
        if (!removed[v] && start < 0) start = v;
    // Walk the cycle in order.
    int prev = -1, cur = start;
    do {
        info.cycle.push_back(cur);
        int next = -1;
        for (int u : g.adj[cur])
            if (!removed[u] && u != prev) {
                next = u;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);

    // Attachment sets: tree vertices reachable from each root without
    // passing through another cycle vertex.
    std::vector<char> onCycle(g.n, 0);
    for (int v : info.cycle) onCycle[v] = 1;
    info.attachment.resize(info.cycle.size());
    for (std::size_t i = 0; i < info.cycle.size(); ++i) {
        std::vector<int> stack{info.cycle[i]};
        std::vector<char> seen(g.n, 0);
        seen[info.cycle[i]] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (onCycle[w] || seen[w]) continue;
                seen[w] = 1;
                info.attachment[i].push_back(w);
                stack.push_back(w);
            }
        }
        std::sort(info.attachment[i].begin(), info.attachment[i].end());
    }
    return info;
}

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("to_graph6: n > 62 unsupported (short form only)");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int bits = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(bits + 63));
                bits = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((bits << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("from_graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("from_graph6: byte out of printable graph6 range");
    if (s[0] == 126) throw std::invalid_argument("from_graph6: long form (n > 62) unsupported");
    int n = s[0] - 63;
    int need = (n * (n - 1) / 2 + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + need)
        throw std::invalid_argument("from_graph6: length mismatch for n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    int idx = 1, bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                bits = s[idx++] - 63;
                nbits = 6;
            }
            if (bits & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (bits & ((1 << nbits) - 1)) != 0)
        throw std::invalid_argument("from_graph6: nonzero trailing padding bits");
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Equitable refinement of an ordered partition. Cells are kept in a canonical
// order: the initial order comes from sorted vertex invariants and splits are
// ordered by neighbour-count signature.
std::vector<std::vector<int>> refine_partition(const Graph& g,
                                               std::vector<std::vector<int>> cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
            if (cells[ci].size() <= 1) continue;
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v : cells[ci]) {
                std::vector<int> sig(cells.size(), 0);
                for (int u : g.adj[v]) {
                    for (std::size_t cj = 0; cj < cells.size(); ++cj) {
                        if (std::binary_search(cells[cj].begin(), cells[cj].end(), u)) {
                            ++sig[cj];
                            break;
                        }
                    }
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            if (keyed.front().first != keyed.back().first) {
                std::vector<std::vector<int>> split;
                for (std::size_t t = 0; t < keyed.size(); ++t) {
                    if (t == 0 || keyed[t].first != keyed[t - 1].first) split.push_back({});
                    split.back().push_back(keyed[t].second);
                }
                for (auto& cell : split) std::sort(cell.begin(), cell.end());
                cells.erase(cells.begin() + ci);
                cells.insert(cells.begin() + ci, split.begin(), split.end());
                changed = true;
            }
        }
    }
    return cells;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint32_t> adjMask;
    std::vector<int> twinClass;     // twinClass[v]: representative of v's twin class
    std::vector<int> cellOfPos;     // which cell supplies the vertex at each position
    std::vector<std::vector<int>> cells;

    std::vector<int> assigned;      // original vertex at each position, partial
    std::vector<char> used;
    std::vector<std::uint8_t> best;  // column-major upper-triangle bits, minimal so far
    std::vector<int> bestPerm;       // bestPerm[pos] = original vertex

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run() {
        int n = g.n;
        adjMask.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.adj[v]) adjMask[v] |= (1u << u);

        // Twin classes: swapping two twins is an automorphism, so only one
        // member of a class needs to be branched on at any search node.
        twinClass.resize(n);
        for (int v = 0; v < n; ++v) twinClass[v] = v;
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                std::uint32_t mu = adjMask[u] & ~(1u << v);
                std::uint32_t mv = adjMask[v] & ~(1u << u);
                if (mu == mv && twinClass[v] == v) twinClass[v] = twinClass[u];
            }
        }

        // Initial cells keyed by (degree, sorted distance profile).
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int v = 0; v < n; ++v) {
            auto dist = bfs_distances(g, v);
            for (int& d : dist)
                if (d < 0) d = n;  // disconnected sentinel
            std::sort(dist.begin(), dist.end());
            std::vector<int> key{static_cast<int>(g.adj[v].size())};
            key.insert(key.end(), dist.begin(), dist.end());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t t = 0; t < keyed.size(); ++t) {
            if (t == 0 || keyed[t].first != keyed[t - 1].first) cells.push_back({});
            cells.back().push_back(keyed[t].second);
        }
        for (auto& cell : cells) std::sort(cell.begin(), cell.end());
        cells = refine_partition(g, cells);

        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (std::size_t t = 0; t < cells[ci].size(); ++t)
                cellOfPos.push_back(static_cast<int>(ci));

        used.assign(n, 0);
        assigned.assign(n, -1);
        best.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 1);
        search(0, 0);
    }

    // Invariant: the bits produced along the current path equal best[0..mark).
    // A strictly smaller bit overwrites best there and resets the tail to the
    // permissive all-ones upper bound; any leaf therefore realises best exactly.
    void search(int pos, std::size_t mark) {
        int n = g.n;
        if (pos == n) {
            bestPerm = assigned;
            return;
        }
        std::vector<char> triedClass(n, 0);
        for (int v : cells[cellOfPos[pos]]) {
            if (used[v]) continue;
            if (triedClass[twinClass[v]]) continue;
            triedClass[twinClass[v]] = 1;

            bool prune = false;
            for (int i = 0; i < pos; ++i) {
                std::uint8_t bit = (adjMask[v] >> assigned[i]) & 1u;
                std::size_t idx = mark + static_cast<std::size_t>(i);
                if (bit > best[idx]) {
                    prune = true;
                    break;
                }
                if (bit < best[idx]) {
                    best[idx] = bit;
                    std::fill(best.begin() + idx + 1, best.end(), 1);
                }
            }
            if (!prune) {
                used[v] = 1;
                assigned[pos] = v;
                search(pos + 1, mark + static_cast<std::size_t>(pos));
                assigned[pos] = -1;
                used[v] = 0;
            }
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g, int cap) {
    if (g.n > cap)
        throw std::invalid_argument("canonical_form: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(cap));
    if (g.n == 0) return g;
    CanonSearch search(g);
    search.run();
    std::vector<int> relabel(g.n);
    for (int pos = 0; pos < g.n; ++pos) relabel[search.bestPerm[pos]] = pos;
    return permute(g, relabel);
}

CanonicalForm canonical_form(const Graph& g, int cap) {
    return CanonicalForm{to_graph6(canonical_graph(g, cap))};
}

}  // namespace wiener
