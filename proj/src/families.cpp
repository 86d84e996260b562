#include "wiener/families.hpp"

#include "wiener/matching.hpp"

namespace wiener {

namespace {

void check_nonneg(std::initializer_list<int> values, const char* what) {
    for (int v : values)
        if (v < 0) throw std::invalid_argument(std::string(what) + ": negative parameter");
}

// Path of pathLen edges out of root, then `leaves` pendants at the tip.
// Labels are taken consecutively from `next`.
void attach_broom(std::vector<std::pair<int, int>>& edges, int root, int pathLen, int leaves,
                  int& next) {
    int tip = root;
    for (int i = 0; i < pathLen; ++i) {
        edges.emplace_back(tip, next);
        tip = next++;
    }
    for (int i = 0; i < leaves; ++i) edges.emplace_back(tip, next++);
}

}  // namespace

G3Params g3_reduced(int a, int j) { return G3Params{a, 0, 0, j, 0, 0}; }

G4Params g4_reduced(int a, int c, int j) { return G4Params{a, 0, c, 0, 0, j, 0, 0}; }

Graph build_g3(const G3Params& p) {
    check_nonneg({p.a, p.b, p.c, p.j, p.k, p.l}, "build_g3");
    int n = 3 + p.j + p.a + p.k + p.b + p.l + p.c;
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    int next = 3;
    attach_broom(edges, 0, p.j, p.a, next);
    attach_broom(edges, 1, p.k, p.b, next);
    attach_broom(edges, 2, p.l, p.c, next);
    return Graph::from_edges(n, edges);
}

Graph build_g4(const G4Params& p) {
    check_nonneg({p.a, p.b, p.c, p.d, p.h, p.j, p.k, p.l}, "build_g4");
    int n = 4 + p.j + p.a + p.k + p.b + p.l + p.c + p.h + p.d;
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    int next = 4;
    attach_broom(edges, 0, p.j, p.a, next);
    attach_broom(edges, 1, p.k, p.b, next);
    attach_broom(edges, 2, p.l, p.c, next);
    attach_broom(edges, 3, p.h, p.d, next);
    return Graph::from_edges(n, edges);
}

Graph build_anm(const AnmParams& p) {
    if (p.m < 1 || p.n < 2 * p.m)
        throw std::invalid_argument("build_anm: need 1 <= m <= n/2");
    int pathLen = 2 * p.m - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < pathLen; ++i) edges.emplace_back(i, i + 1);
    int spare = p.n - pathLen;
    int left, right;
    if (p.n % 2 == 0) {
        left = (p.n - 2 * p.m + 2) / 2;
        right = (p.n - 2 * p.m) / 2;
    } else {
        left = right = (p.n - 2 * p.m + 1) / 2;
    }
    if (left + right != spare) throw std::invalid_argument("build_anm: parameter bookkeeping");
    int next = pathLen;
    for (int i = 0; i < left; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < right; ++i) edges.emplace_back(pathLen - 1, next++);
    return Graph::from_edges(p.n, edges);
}

Graph build_duzhou_min_tree(const DuZhouParams& p) {
    if (p.m < 2 || p.n < 2 * p.m)
        throw std::invalid_argument("build_duzhou_min_tree: need 2 <= m <= n/2");
    // center 0, star leaves 1..n-m, extra vertices attached to leaves 1..m-1
    std::vector<std::pair<int, int>> edges;
    int leaves = p.n - p.m;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    int next = leaves + 1;
    for (int i = 1; i <= p.m - 1; ++i) edges.emplace_back(i, next++);
    return Graph::from_edges(p.n, edges);
}

Graph build_duzhou_min_unicyclic(const DuZhouParams& p) {
    if (p.m < 2 || p.n < 2 * p.m)
        throw std::invalid_argument("build_duzhou_min_unicyclic: need 2 <= m <= n/2");
    if (p.n == 6 && p.m == 3) {
        // C5 with a pendant vertex
        return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    }
    // center 0, star leaves 1..n-m-1, triangle vertices n-m, n-m+1,
    // extra vertices attached to leaves 1..m-2
    std::vector<std::pair<int, int>> edges;
    int leaves = p.n - p.m - 1;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    int t1 = leaves + 1, t2 = leaves + 2;
    edges.emplace_back(0, t1);
    edges.emplace_back(0, t2);
    edges.emplace_back(t1, t2);
    int next = leaves + 3;
    for (int i = 1; i <= p.m - 2; ++i) edges.emplace_back(i, next++);
    return Graph::from_edges(p.n, edges);
}

std::pair<int, int> params_to_nm(const G3Params& p) {
    int n = 3 + p.j + p.a + p.k + p.b + p.l + p.c;
    bool reduced = p.b == 0 && p.c == 0 && p.k == 0 && p.l == 0;
    if (reduced && p.a >= 1 && n >= 4) return {n, 2 + p.j / 2};
    return {n, matching_number_unicyclic(build_g3(p)).size};
}

std::pair<int, int> params_to_nm(const G4Params& p) {
    int n = 4 + p.j + p.a + p.k + p.b + p.l + p.c + p.h + p.d;
    bool reduced = p.b == 0 && p.d == 0 && p.h == 0 && p.k == 0 && p.l == 0;
    if (reduced && p.a >= 1 && n >= 5) return {n, 2 + (p.j + 1) / 2};
    return {n, matching_number_unicyclic(build_g4(p)).size};
}

}  // namespace wiener
