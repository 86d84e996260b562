#pragma once

#include "wiener/graph.hpp"

namespace wiener {

/// Triangle with three broom trees: from each cycle vertex a path of the
/// given length whose far end carries pendant leaves.
struct G3Params {
    int a = 0, b = 0, c = 0;  // leaf counts
    int j = 0, k = 0, l = 0;  // path lengths
};

/// Four-cycle with four broom trees in cyclic order A(j,a), B(k,b), C(l,c),
/// D(h,d); opposite pairs are (A,C) and (B,D).
struct G4Params {
    int a = 0, b = 0, c = 0, d = 0;  // leaf counts
    int h = 0, j = 0, k = 0, l = 0;  // path lengths
};

struct AnmParams {
    int n = 0;
    int m = 0;
};

enum class DuZhouKind { TreeMin, UnicyclicMin };

struct DuZhouParams {
    int n = 0;
    int m = 0;
    DuZhouKind kind = DuZhouKind::TreeMin;
};

/// Reduced forms used throughout the extremal characterization.
G3Params g3_reduced(int a, int j);           // G3 with b = c = k = l = 0
G4Params g4_reduced(int a, int c, int j);    // G4 with b = d = h = k = l = 0

Graph build_g3(const G3Params& p);
Graph build_g4(const G4Params& p);

/// Path on 2m-1 vertices with pendant leaves split between its two ends:
/// n even gives (n-2m+2)/2 and (n-2m)/2, n odd gives (n-2m+1)/2 at each end.
Graph build_anm(const AnmParams& p);

/// Minimum-Wiener tree: star of order n-m+1 with an extra vertex attached to
/// each of m-1 leaves.
Graph build_duzhou_min_tree(const DuZhouParams& p);

/// Minimum-Wiener unicyclic graph: star of order n-m with a triangle at its
/// center and an extra vertex attached to each of m-2 leaves; the special
/// case (6,3) is C5 with a pendant vertex.
Graph build_duzhou_min_unicyclic(const DuZhouParams& p);

/// (order, matching number) bookkeeping. Reduced forms use the closed
/// expressions n = a+j+3, m = 2+floor(j/2) (G3) and n = a+c+j+4,
/// m = 2+floor((j+1)/2) (G4) where they are valid; outside that range the
/// matching is computed from the built graph.
std::pair<int, int> params_to_nm(const G3Params& p);
std::pair<int, int> params_to_nm(const G4Params& p);

}  // namespace wiener
