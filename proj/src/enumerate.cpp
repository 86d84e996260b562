#include "wiener/enumerate.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wiener/families.hpp"
#include "wiener/formulas.hpp"
#include "wiener/matching.hpp"

namespace wiener {

namespace {

// ---------------------------------------------------------------------------
// Rooted trees up to isomorphism, used for the cycle + forest assembly.
// A tree of size s is a non-increasing list of (size, index) child references.

using ChildRef = std::pair<int, int>;

struct RootedTreePool {
    // bySize[s] = all rooted trees with s vertices
    std::vector<std::vector<std::vector<ChildRef>>> bySize;

    explicit RootedTreePool(int maxSize) {
        bySize.resize(maxSize + 1);
        if (maxSize >= 1) bySize[1].push_back({});
        for (int s = 2; s <= maxSize; ++s) {
            std::vector<ChildRef> current;
            gather(s - 1, {s - 1, std::numeric_limits<int>::max()}, current, bySize[s]);
        }
    }

    void gather(int remaining, ChildRef maxRef, std::vector<ChildRef>& current,
                std::vector<std::vector<ChildRef>>& out) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        int szHi = std::min(remaining, maxRef.first);
        for (int sz = szHi; sz >= 1; --sz) {
            int idxHi = static_cast<int>(bySize[sz].size()) - 1;
            if (sz == maxRef.first) idxHi = std::min(idxHi, maxRef.second);
            for (int idx = idxHi; idx >= 0; --idx) {
                current.push_back({sz, idx});
                gather(remaining - sz, {sz, idx}, current, out);
                current.pop_back();
            }
        }
    }

    void emit_edges(std::vector<std::pair<int, int>>& edges, int root, ChildRef ref,
                    int& next) const {
        for (ChildRef child : bySize[ref.first][ref.second]) {
            int v = next++;
            edges.emplace_back(root, v);
            emit_edges(edges, v, child, next);
        }
    }
};

// Allocation-free decode + AHU for the hot Prüfer loop (n <= 10).
struct SmallTree {
    int n = 0;
    int deg[10] = {};
    int adj[10][9] = {};

    void add_edge(int u, int v) {
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
    }
};

void prufer_decode(const std::vector<int>& seq, int n, SmallTree& t) {
    t.n = n;
    std::fill(t.deg, t.deg + n, 0);
    int want[10];
    std::fill(want, want + n, 1);
    for (int s : seq) ++want[s];
    int ptr = 0;
    while (want[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        t.add_edge(leaf, s);
        if (--want[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (want[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.add_edge(leaf, n - 1);
}

// Interned AHU: each distinct rooted subtree gets a small integer id; a
// node's key packs its sorted child ids, so the hot loop never builds strings.
struct AhuInterner {
    struct KeyHash {
        std::size_t operator()(unsigned __int128 k) const {
            return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k) ^
                                             (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL));
        }
    };
    std::unordered_map<unsigned __int128, int, KeyHash> ids;

    int intern_children(const int* kids, int count) {
        unsigned __int128 key = 1;
        for (int i = 0; i < count; ++i)
            key = (key << 10) | static_cast<unsigned>(kids[i] + 1);
        auto [it, fresh] = ids.try_emplace(key, static_cast<int>(ids.size()));
        return it->second;
    }
};

int ahu_id(const SmallTree& t, int v, int parent, AhuInterner& interner) {
    int kids[9];
    int count = 0;
    for (int i = 0; i < t.deg[v]; ++i) {
        int u = t.adj[v][i];
        if (u != parent) kids[count++] = ahu_id(t, u, v, interner);
    }
    std::sort(kids, kids + count);
    return interner.intern_children(kids, count);
}

std::pair<int, int> ahu_tree_key(const SmallTree& t, AhuInterner& interner) {
    int n = t.n;
    int deg[10];
    std::copy(t.deg, t.deg + n, deg);
    char removed[10] = {};
    int frontier[10], fCount = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) frontier[fCount++] = v;
    int alive = n;
    while (alive > 2) {
        int next[10], nCount = 0;
        for (int i = 0; i < fCount; ++i) {
            int v = frontier[i];
            removed[v] = 1;
            --alive;
            for (int j = 0; j < t.deg[v]; ++j) {
                int u = t.adj[v][j];
                if (!removed[u] && --deg[u] == 1) next[nCount++] = u;
            }
        }
        std::copy(next, next + nCount, frontier);
        fCount = nCount;
    }
    int centers[2], cCount = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers[cCount++] = v;
    if (cCount == 1) return {-1, ahu_id(t, centers[0], -1, interner)};
    int a = ahu_id(t, centers[0], centers[1], interner);
    int b = ahu_id(t, centers[1], centers[0], interner);
    if (a > b) std::swap(a, b);
    return {a, b};
}

std::map<std::pair<int, int>, Graph> prufer_shard(int n, int firstSymbol) {
    std::map<std::pair<int, int>, Graph> out;
    AhuInterner interner;
    int len = n - 2;
    std::vector<int> seq(len, 0);
    seq[0] = firstSymbol;
    SmallTree t;
    while (true) {
        prufer_decode(seq, n, t);
        auto key = ahu_tree_key(t, interner);
        if (!out.contains(key)) {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n; ++v)
                for (int i = 0; i < t.deg[v]; ++i)
                    if (v < t.adj[v][i]) edges.emplace_back(v, t.adj[v][i]);
            out.emplace(key, Graph::from_edges(n, edges));
        }
        int pos = len - 1;
        while (pos >= 1 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 1) break;
        ++seq[pos];
    }
    return out;
}

}  // namespace

std::vector<Graph> unicyclic_graphs(int n) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("unicyclic_graphs: n must be in 3..12");
    RootedTreePool pool(n - 2);
    std::map<std::string, Graph> seen;
    for (int k = 3; k <= n; ++k) {
        // compositions of n - k over the k cycle positions, realised as
        // rooted trees of size part + 1
        std::vector<ChildRef> slots(k);
        std::vector<int> parts(k, 0);
        auto assemble = [&]() {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
            int next = k;
            for (int i = 0; i < k; ++i) pool.emit_edges(edges, i, slots[i], next);
            Graph g = canonical_graph(Graph::from_edges(n, edges));
            seen.try_emplace(to_graph6(g), g);
        };
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == k) {
                if (remaining == 0) assemble();
                return;
            }
            for (int part = 0; part <= remaining; ++part) {
                int treeSize = part + 1;
                for (int idx = 0; idx < static_cast<int>(pool.bySize[treeSize].size()); ++idx) {
                    slots[pos] = {treeSize, idx};
                    self(self, pos + 1, remaining - part);
                }
            }
        };
        rec(rec, 0, n - k);
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> trees(int n, int cap, int jobs) {
    cap = std::min(cap, 10);
    if (n < 1 || n > cap)
        throw std::invalid_argument("trees: n must be in 1.." + std::to_string(cap));
    if (n == 1) return {Graph::from_edges(1, {})};
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};

    std::vector<std::map<std::pair<int, int>, Graph>> shards(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
    for (int first = 0; first < n; ++first) shards[first] = prufer_shard(n, first);

    // interner ids are shard-local, so the cross-shard merge keys on the
    // canonical form of each exemplar
    std::map<std::string, Graph> merged;
    for (auto& shard : shards)
        for (auto& [key, g] : shard) merged.try_emplace(canonical_form(g).bytes, g);
    std::vector<Graph> out;
    out.reserve(merged.size());
    for (auto& [code, g] : merged) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("connected_graphs: n must be in 1..7");
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int q = 2; q <= n; ++q) {
        std::map<std::string, Graph> seen;
        for (const Graph& g : level) {
            auto baseEdges = g.edges();
            for (unsigned mask = 1; mask < (1u << (q - 1)); ++mask) {
                auto edges = baseEdges;
                for (int v = 0; v < q - 1; ++v)
                    if (mask & (1u << v)) edges.emplace_back(v, q - 1);
                Graph h = canonical_graph(Graph::from_edges(q, edges));
                seen.try_emplace(to_graph6(h), h);
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

std::vector<GraphStats> scan_stats_serial(const std::vector<Graph>& graphs) {
    std::vector<GraphStats> stats(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        stats[i] = {wiener_index(graphs[i]), matching_number(graphs[i]).size};
    return stats;
}

std::vector<GraphStats> scan_stats_parallel(const std::vector<Graph>& graphs, int jobs) {
    std::vector<GraphStats> stats(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
    for (std::size_t i = 0; i < graphs.size(); ++i)
        stats[i] = {wiener_index(graphs[i]), matching_number(graphs[i]).size};
    return stats;
}

std::vector<ExtremalRecord> extremal_table(int n, int jobs) {
    auto graphs = unicyclic_graphs(n);
    auto stats = jobs > 1 ? scan_stats_parallel(graphs, jobs) : scan_stats_serial(graphs);

    std::map<int, ExtremalRecord> byClass;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto& rec = byClass[stats[i].matching];
        rec.n = n;
        rec.m = stats[i].matching;
        ++rec.count_searched;
        if (rec.extremal.empty() || stats[i].wiener > rec.w_max) {
            rec.w_max = stats[i].wiener;
            rec.extremal = {canonical_form(graphs[i])};
        } else if (stats[i].wiener == rec.w_max) {
            rec.extremal.push_back(canonical_form(graphs[i]));
        }
    }
    std::vector<ExtremalRecord> out;
    for (auto& [m, rec] : byClass) {
        std::sort(rec.extremal.begin(), rec.extremal.end());
        out.push_back(std::move(rec));
    }
    return out;
}

void VerifyReport::add(std::string name, bool ok, std::string detail) {
    if (!ok) passed = false;
    cells.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

std::vector<CanonicalForm> canonical_set(const std::vector<Graph>& graphs) {
    std::vector<CanonicalForm> out;
    for (const Graph& g : graphs) out.push_back(canonical_form(g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string join_forms(const std::vector<CanonicalForm>& forms) {
    std::string out;
    for (const auto& f : forms) {
        if (!out.empty()) out += ";";
        out += f.bytes;
    }
    return out;
}

// Per-class minima/maxima with the sets of graphs achieving them.
struct ClassExtremes {
    long long min = 0, max = 0;
    std::vector<CanonicalForm> argmin, argmax;
    long long count = 0;
};

std::map<int, ClassExtremes> class_extremes(const std::vector<Graph>& graphs,
                                            const std::vector<GraphStats>& stats) {
    std::map<int, ClassExtremes> byClass;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto [it, fresh] = byClass.try_emplace(stats[i].matching);
        auto& ce = it->second;
        long long w = stats[i].wiener;
        ++ce.count;
        if (fresh || w < ce.min) {
            ce.min = w;
            ce.argmin = {canonical_form(graphs[i])};
        } else if (w == ce.min) {
            ce.argmin.push_back(canonical_form(graphs[i]));
        }
        if (fresh || w > ce.max) {
            ce.max = w;
            ce.argmax = {canonical_form(graphs[i])};
        } else if (w == ce.max) {
            ce.argmax.push_back(canonical_form(graphs[i]));
        }
    }
    for (auto& [m, ce] : byClass) {
        std::sort(ce.argmin.begin(), ce.argmin.end());
        std::sort(ce.argmax.begin(), ce.argmax.end());
    }
    return byClass;
}

Graph join_graph(int n, int m) {
    // K_m + (n-m)K_1
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
        for (int v = m; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph c5_with_pendants_same_vertex(int pendants) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int p = 0; p < pendants; ++p) edges.emplace_back(0, 5 + p);
    return Graph::from_edges(5 + pendants, edges);
}

Graph c5_with_pendants_consecutive(int pendants) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int p = 0; p < pendants; ++p) edges.emplace_back(p, 5 + p);
    return Graph::from_edges(5 + pendants, edges);
}

bool contains(const std::vector<CanonicalForm>& set, const CanonicalForm& f) {
    return std::binary_search(set.begin(), set.end(), f);
}

}  // namespace

VerifyReport verify_main_theorem(int n_max, int jobs) {
    if (n_max > 12) throw std::invalid_argument("verify_main_theorem: n_max must be <= 12");
    VerifyReport report{"main"};
    for (int n = 4; n <= n_max; ++n) {
        auto table = extremal_table(n, jobs);
        std::vector<int> classes;
        for (const auto& rec : table)
            if (rec.m >= 2) classes.push_back(rec.m);
        std::vector<int> expectedClasses;
        for (int m = 2; m <= n / 2; ++m) expectedClasses.push_back(m);
        report.add("n=" + std::to_string(n) + " class coverage", classes == expectedClasses);

        for (const auto& rec : table) {
            if (rec.m < 2) continue;
            std::string cell = "n=" + std::to_string(n) + ",m=" + std::to_string(rec.m);
            long long bound = bound_max_unicyclic(n, rec.m);
            report.add(cell + " w_max", rec.w_max == bound,
                       rec.w_max == bound ? ""
                                          : "expected " + std::to_string(bound) + ", found " +
                                                std::to_string(rec.w_max));
            auto predicted = canonical_set(extremal_set_predicted(n, rec.m));
            report.add(cell + " extremal set", predicted == rec.extremal,
                       predicted == rec.extremal
                           ? ""
                           : "expected {" + join_forms(predicted) + "}, found {" +
                                 join_forms(rec.extremal) + "}");
        }
    }
    return report;
}

VerifyReport verify_monotonicity(int n_max, int jobs) {
    if (n_max > 12) throw std::invalid_argument("verify_monotonicity: n_max must be <= 12");
    VerifyReport report{"mono"};
    for (int n = 3; n <= n_max; ++n) {
        auto table = extremal_table(n, jobs);
        bool ok = true;
        std::string detail;
        for (std::size_t i = 1; i < table.size(); ++i) {
            if (table[i - 1].w_max >= table[i].w_max) {
                ok = false;
                detail = "w_max(" + std::to_string(n) + "," + std::to_string(table[i - 1].m) +
                         ")=" + std::to_string(table[i - 1].w_max) + " !< w_max(" +
                         std::to_string(n) + "," + std::to_string(table[i].m) +
                         ")=" + std::to_string(table[i].w_max);
                break;
            }
        }
        report.add("n=" + std::to_string(n) + " strict increase in m", ok, detail);
    }
    return report;
}

VerifyReport verify_minima(int tree_n_max, int uni_n_max, int jobs) {
    if (tree_n_max > 10) throw std::invalid_argument("verify_minima: tree n_max must be <= 10");
    if (uni_n_max > 12) throw std::invalid_argument("verify_minima: unicyclic n_max must be <= 12");
    VerifyReport report{"minima"};

    for (int n = 4; n <= tree_n_max; ++n) {
        auto graphs = trees(n, 10, jobs);
        auto byClass = class_extremes(graphs, jobs > 1 ? scan_stats_parallel(graphs, jobs)
                                                       : scan_stats_serial(graphs));
        for (const auto& [m, ce] : byClass) {
            if (m < 2) continue;
            std::string cell = "tree n=" + std::to_string(n) + ",m=" + std::to_string(m);
            long long bound = bound_duzhou_tree_min(n, m);
            report.add(cell + " min", ce.min == bound,
                       ce.min == bound ? ""
                                       : "expected " + std::to_string(bound) + ", found " +
                                             std::to_string(ce.min));
            auto builtForm = canonical_form(build_duzhou_min_tree({n, m, DuZhouKind::TreeMin}));
            report.add(cell + " unique minimizer",
                       ce.argmin == std::vector<CanonicalForm>{builtForm});
        }
    }

    for (int n = 4; n <= uni_n_max; ++n) {
        auto graphs = unicyclic_graphs(n);
        auto byClass = class_extremes(graphs, jobs > 1 ? scan_stats_parallel(graphs, jobs)
                                                       : scan_stats_serial(graphs));
        for (const auto& [m, ce] : byClass) {
            if (m < 2) continue;
            std::string cell = "unicyclic n=" + std::to_string(n) + ",m=" + std::to_string(m);
            long long bound = bound_duzhou_unicyclic_min(n, m);
            report.add(cell + " min", ce.min == bound,
                       ce.min == bound ? ""
                                       : "expected " + std::to_string(bound) + ", found " +
                                             std::to_string(ce.min));
            auto built = build_duzhou_min_unicyclic({n, m, DuZhouKind::UnicyclicMin});
            report.add(cell + " built minimizer attains",
                       contains(ce.argmin, canonical_form(built)));
            if (n == 6 && m == 3)
                report.add(cell + " unique minimizer (C5 + pendant)",
                           ce.argmin == std::vector<CanonicalForm>{canonical_form(built)});
            if (n == 4 && m == 2)
                report.add(cell + " C4 among minimizers",
                           contains(ce.argmin, canonical_form(cycle_graph(4))));
            if (n == 5 && m == 2)
                report.add(cell + " C5 among minimizers",
                           contains(ce.argmin, canonical_form(cycle_graph(5))));
            if (n == 7 && m == 3)
                report.add(cell + " C5 + 2 pendants among minimizers",
                           contains(ce.argmin,
                                    canonical_form(c5_with_pendants_same_vertex(2))));
            if (n == 8 && m == 4)
                report.add(cell + " C5 + 3 consecutive pendants among minimizers",
                           contains(ce.argmin,
                                    canonical_form(c5_with_pendants_consecutive(3))));
        }
    }
    return report;
}

VerifyReport verify_dankelmann(int n_max, int jobs) {
    if (n_max > 7) throw std::invalid_argument("verify_dankelmann: n_max must be <= 7");
    VerifyReport report{"dankelmann"};
    for (int n = 2; n <= n_max; ++n) {
        auto graphs = connected_graphs(n);
        auto byClass = class_extremes(graphs, jobs > 1 ? scan_stats_parallel(graphs, jobs)
                                                       : scan_stats_serial(graphs));
        for (const auto& [m, ce] : byClass) {
            std::string cell = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
            long long lo = bound_dankelmann_min(n, m);
            long long hi = bound_dankelmann_max(n, m);
            report.add(cell + " min", ce.min == lo,
                       ce.min == lo ? ""
                                    : "expected " + std::to_string(lo) + ", found " +
                                          std::to_string(ce.min));
            Graph minimizer = m == n / 2 ? complete_graph(n) : join_graph(n, m);
            report.add(cell + " unique minimizer",
                       ce.argmin == std::vector<CanonicalForm>{canonical_form(minimizer)});
            report.add(cell + " max", ce.max == hi,
                       ce.max == hi ? ""
                                    : "expected " + std::to_string(hi) + ", found " +
                                          std::to_string(ce.max));
            auto anm = canonical_form(build_anm({n, m}));
            report.add(cell + " unique maximizer A(n,m)",
                       ce.argmax == std::vector<CanonicalForm>{anm});
        }
    }
    return report;
}

}  // namespace wiener
