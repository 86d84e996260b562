#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiener {

/// Thrown when an operation that requires a connected graph receives a
/// disconnected one. Distances are never encoded as "infinite".
class disconnected_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertex labels 0..n-1.
/// Adjacency lists are kept sorted; all operations below are pure functions,
/// so graphs can be shared freely across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // adj[v] sorted ascending

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // each pair u < v, sorted

    bool operator==(const Graph&) const = default;
};

/// Relabel: vertex v becomes relabel[v]. relabel must be a permutation of 0..n-1.
Graph permute(const Graph& g, const std::vector<int>& relabel);

bool is_connected(const Graph& g);

/// BFS distances from a single source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Symmetric hop-count matrix, zero diagonal. Throws disconnected_error.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Sum of distances over unordered vertex pairs. Throws disconnected_error.
long long wiener_index(const Graph& g);

/// The single cycle of a unicyclic graph plus, for each cycle vertex, the
/// tree vertices whose path to the cycle enters at it.
struct CycleInfo {
    std::vector<int> cycle;                    // cycle vertices in cyclic order
    std::vector<std::vector<int>> attachment;  // attachment[i] sorted, for cycle[i]
};

/// Returns the cycle structure iff g is unicyclic (|E| == n); empty otherwise.
/// Requires g connected.
std::optional<CycleInfo> unicyclic_info(const Graph& g);

/// Label-invariant byte string; equal bytes iff isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kCanonicalCap = 14;

/// Canonical form via invariant partition refinement followed by a
/// backtracking search for the lexicographically minimal adjacency bitstring.
CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalCap);

/// The canonically relabelled copy of g realising canonical_form(g).
Graph canonical_graph(const Graph& g, int cap = kCanonicalCap);

/// graph6 interchange, short form only (n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view bytes);

}  // namespace wiener
