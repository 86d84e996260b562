#pragma once

#include "wiener/graph.hpp"

namespace wiener {

/// An explicit maximum matching: pairwise vertex-disjoint edges of the graph.
struct MatchingCertificate {
    std::vector<std::pair<int, int>> edges;
    int size = 0;
};

/// Maximum matching of a tree by repeated leaf-matching. Throws on non-trees.
MatchingCertificate matching_number_tree(const Graph& g);

/// Maximum matching of a connected unicyclic graph: a maximum matching omits
/// at least one cycle edge, so take the max over deleting each cycle edge.
/// Throws on non-unicyclic input.
MatchingCertificate matching_number_unicyclic(const Graph& g);

/// Exhaustive branch-in/branch-out search; requires |E| <= 24.
MatchingCertificate matching_number_bruteforce(const Graph& g);

/// Dispatch: tree / unicyclic fast paths, brute force otherwise.
MatchingCertificate matching_number(const Graph& g);

/// True iff the certificate's edges exist in g, are disjoint and match size.
bool verify_certificate(const Graph& g, const MatchingCertificate& cert);

}  // namespace wiener
