#pragma once

#include <random>

#include "wiener/graph.hpp"

namespace wiener {

struct TransformReport {
    Graph before;
    Graph after;
    long long delta_wiener = 0;
    int matching_before = 0;
    int matching_after = 0;
};

/// Prune the subtree hanging off d through `branch` and regraft it at v.
/// The pruned component must be a tree not containing the cycle, and v must
/// lie outside it. v == d is the identity.
TransformReport spr(const Graph& g, int d, int branch, int v);

enum class CycleSwapVariant { G1, G2 };

/// Cycle-shortening rewrite for unicyclic graphs with cycle length k >= 5.
/// The cycle is first reoriented so a maximum attached tree sits at position 3
/// (1-based r_1..r_k); then the edge r_2 r_3 is deleted and r_2 r_k (G1) or
/// r_2 r_{k-1} (G2) is added.
TransformReport cycle_swap(const Graph& g, CycleSwapVariant variant);

/// For a unicyclic graph whose attached trees are all paths: re-attach the
/// path at cycle index i2 to the far leaf of the path at i1. The indices are
/// swapped internally when the weighting condition prefers the other
/// orientation (ties keep the lower index).
TransformReport path_regraft(const Graph& g, int i1, int i2);

/// Random connected unicyclic graph: cycle length uniform in
/// [kMin, min(kMax, n)], remaining vertices attached to uniformly random
/// existing vertices.
Graph random_unicyclic(int n, int kMin, int kMax, std::mt19937& rng);

/// Random unicyclic graph whose attached trees are all paths, with at least
/// minLegs nonempty legs (requires n >= cycle length + minLegs).
Graph random_path_legged_unicyclic(int n, int kMin, int kMax, int minLegs, std::mt19937& rng);

}  // namespace wiener
