#pragma once

#include "wiener/families.hpp"
#include "wiener/graph.hpp"
#include "wiener/rational.hpp"

namespace wiener {

/// Closed-form Wiener index of build_g3(p).
long long wiener_g3_closed(const G3Params& p);

/// Closed-form Wiener index of build_g4(p).
long long wiener_g4_closed(const G4Params& p);

/// W(G') - W(G) where G' concentrates the three G3 path lengths into one
/// (j' = j+k+l, k' = l' = 0, leaf counts unchanged). Requires a = max(a,b,c).
long long delta_g3_collapse(const G3Params& p);

/// W(G') - W(G) where G' has leaf counts ((s+eps)/2, 0, (s-eps)/2, 0) with
/// s = a+b+c+d, eps = s mod 2, and a single path of length h+j+k+l.
/// Always >= 0.
long long delta_g4_collapse(const G4Params& p);

/// Sharp maximum of the Wiener index over unicyclic graphs with n vertices
/// and matching number m (three-case polynomial). Requires 2 <= m <= n/2.
long long bound_max_unicyclic(int n, int m);

/// The characterized maximizers for (n, m): one graph except for the pairs
/// at (4,2) and (6,2).
std::vector<Graph> extremal_set_predicted(int n, int m);

/// Extremes over all connected graphs with matching number m.
long long bound_dankelmann_min(int n, int m);
long long bound_dankelmann_max(int n, int m);

/// Minima over trees / unicyclic graphs with matching number m; the
/// unicyclic bound returns 26 for the (6,3) exception.
long long bound_duzhou_tree_min(int n, int m);
long long bound_duzhou_unicyclic_min(int n, int m);

/// W(G4_{t,t,2m-4}) - W(G4_{t+1,t,2m-5}) with t = n/2 - m, for even n:
/// equals (n-2m)(n+2m-4)/4. Requires n even and m >= 3 so both exist.
long long compare_g4_parity(int n, int m);

/// W(best G4) - W(best G3) for the given (n, m); sign decides which family
/// wins. Requires both comparands to exist.
long long compare_g4_vs_g3(int n, int m);

}  // namespace wiener
