#pragma once

#include <string>

#include "wiener/graph.hpp"

namespace wiener {

/// One row of a verification table: the exact maximum Wiener index over the
/// (n, m) class together with all graphs achieving it.
struct ExtremalRecord {
    int n = 0;
    int m = 0;
    long long w_max = 0;
    std::vector<CanonicalForm> extremal;  // sorted, all achieving w_max
    long long count_searched = 0;         // graphs in the (n, m) class
};

/// Every connected graph with |V| = |E| = n, exactly once up to isomorphism,
/// assembled as cycle + rooted-forest attachments with canonical dedup.
/// Requires 3 <= n <= 12. Output ordered by canonical bytes.
std::vector<Graph> unicyclic_graphs(int n);

/// All free trees up to isomorphism, from labelled trees via Prüfer sequences
/// with canonical dedup. Requires 1 <= n <= cap (cap at most 10).
std::vector<Graph> trees(int n, int cap = 9, int jobs = 1);

/// All connected graphs up to isomorphism; requires 1 <= n <= 7.
std::vector<Graph> connected_graphs(int n);

/// Per-graph (Wiener index, matching number) scan. The parallel kernel is the
/// production path; the serial one is the reference it is tested against.
struct GraphStats {
    long long wiener = 0;
    int matching = 0;
};
std::vector<GraphStats> scan_stats_serial(const std::vector<Graph>& graphs);
std::vector<GraphStats> scan_stats_parallel(const std::vector<Graph>& graphs, int jobs);

/// Exact extremal table for one order, one record per feasible m.
std::vector<ExtremalRecord> extremal_table(int n, int jobs = 1);

/// Verification drivers. Each cell names one checked fact; a failed cell
/// carries expected/found details.
struct VerifyCell {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    bool passed = true;
    std::vector<VerifyCell> cells;

    void add(std::string name, bool ok, std::string detail = "");
};

/// Sharp-maximum theorem: brute-force maxima and extremal sets against the
/// closed-form bound and characterization, 4 <= n <= n_max. n_max <= 12.
VerifyReport verify_main_theorem(int n_max, int jobs = 1);

/// Strict growth of the class maximum in m for fixed n. n_max <= 12.
VerifyReport verify_monotonicity(int n_max, int jobs = 1);

/// Tree and unicyclic minima against the closed-form bounds, including the
/// (6,3) exception and the named equality families.
VerifyReport verify_minima(int tree_n_max, int uni_n_max, int jobs = 1);

/// Extremes over all connected graphs per matching class, n <= 7.
VerifyReport verify_dankelmann(int n_max, int jobs = 1);

}  // namespace wiener
