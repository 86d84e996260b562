// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/formulas.hpp"
#include "wiener/graph.hpp"
#include "wiener/matching.hpp"
#include "wiener/transforms.hpp"

using namespace wiener;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s - criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

int jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::string failed_cells(const VerifyReport& r) {
    std::string out;
    for (const auto& c : r.cells)
        if (!c.passed) out += c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "; ";
    return out;
}

void criterion1() {
    auto r = verify_main_theorem(11, jobs());
    report(1, "exhaustive maxima and extremal sets match the closed forms, n <= 11",
           r.passed, failed_cells(r));
}

void criterion2() {
    struct Spot {
        int n, m;
        long long w;
    };
    const Spot spots[] = {{4, 2, 8}, {6, 2, 28}, {6, 3, 31}, {9, 3, 98}, {10, 3, 129}};
    bool ok = true;
    std::string detail;
    for (auto [n, m, w] : spots) {
        bool cell = bound_max_unicyclic(n, m) == w;
        for (const Graph& g : extremal_set_predicted(n, m))
            cell = cell && wiener_index(g) == w;
        bool found = false;
        for (const auto& rec : extremal_table(n, jobs()))
            if (rec.m == m) {
                found = true;
                cell = cell && rec.w_max == w;
            }
        cell = cell && found;
        if (!cell) {
            ok = false;
            detail += "(" + std::to_string(n) + "," + std::to_string(m) + ") ";
        }
    }
    report(2, "spot maxima via bound, construction, and exhaustive search", ok, detail);
}

void criterion3() {
    auto r = verify_monotonicity(11, jobs());
    report(3, "class maximum strictly increases in the matching number", r.passed,
           failed_cells(r));
}

void criterion4() {
    auto r = verify_minima(9, 11, jobs());
    report(4, "tree and unicyclic minima with all equality families", r.passed,
           failed_cells(r));
}

void criterion5() {
    auto r = verify_dankelmann(7, jobs());
    bool identity = true;
    for (int n = 2; n <= 20 && identity; ++n)
        for (int m = 1; 2 * m <= n; ++m)
            identity = identity && wiener_index(build_anm({n, m})) == bound_dankelmann_max(n, m);
    report(5, "connected-graph extremes at n <= 7 plus maximizer identity to n = 20",
           r.passed && identity, failed_cells(r) + (identity ? "" : "identity check failed"));
}

void criterion6() {
    long long g3Cases = 0, g4Cases = 0;
    bool ok = true;
    for (int a = 0; a <= 3 && ok; ++a)
        for (int b = 0; b <= 3 && ok; ++b)
            for (int c = 0; c <= 3 && ok; ++c)
                for (int j = 0; j <= 3 && ok; ++j)
                    for (int k = 0; k <= 3 && ok; ++k)
                        for (int l = 0; l <= 3 && ok; ++l) {
                            G3Params p{a, b, c, j, k, l};
                            ok = wiener_g3_closed(p) == wiener_index(build_g3(p));
                            ++g3Cases;
                        }
    for (int a = 0; a <= 3 && ok; ++a)
        for (int b = 0; b <= 3 && ok; ++b)
            for (int c = 0; c <= 3 && ok; ++c)
                for (int d = 0; d <= 3 && ok; ++d)
                    for (int h = 0; h <= 3 && ok; ++h)
                        for (int j = 0; j <= 3 && ok; ++j)
                            for (int k = 0; k <= 3 && ok; ++k)
                                for (int l = 0; l <= 3 && ok; ++l) {
                                    G4Params p{a, b, c, d, h, j, k, l};
                                    ok = wiener_g4_closed(p) == wiener_index(build_g4(p));
                                    ++g4Cases;
                                }
    report(6, "closed forms equal direct computation on the full grids", ok,
           std::to_string(g3Cases) + " three-cycle + " + std::to_string(g4Cases) +
               " four-cycle cases");
}

void criterion7() {
    bool ok = true;
    for (int a = 0; a <= 3 && ok; ++a)
        for (int b = 0; b <= a && ok; ++b)
            for (int c = 0; c <= a && ok; ++c)
                for (int j = 0; j <= 3 && ok; ++j)
                    for (int k = 0; k <= 3 && ok; ++k)
                        for (int l = 0; l <= 3 && ok; ++l) {
                            G3Params p{a, b, c, j, k, l};
                            G3Params collapsed{a, b, c, j + k + l, 0, 0};
                            long long delta = delta_g3_collapse(p);
                            ok = delta == wiener_g3_closed(collapsed) - wiener_g3_closed(p);
                            if ((j == 0) + (k == 0) + (l == 0) <= 1) ok = ok && delta > 0;
                        }
    for (int a = 0; a <= 3 && ok; ++a)
        for (int b = 0; b <= 3 && ok; ++b)
            for (int c = 0; c <= 3 && ok; ++c)
                for (int d = 0; d <= 3 && ok; ++d)
                    for (int h = 0; h <= 3 && ok; ++h)
                        for (int j = 0; j <= 3 && ok; ++j)
                            for (int k = 0; k <= 3 && ok; ++k)
                                for (int l = 0; l <= 3 && ok; ++l) {
                                    G4Params p{a, b, c, d, h, j, k, l};
                                    int s = a + b + c + d, eps = s % 2;
                                    G4Params q{(s + eps) / 2, 0, (s - eps) / 2, 0,
                                               0, h + j + k + l, 0, 0};
                                    long long delta = delta_g4_collapse(p);
                                    ok = delta >= 0 &&
                                         delta == wiener_g4_closed(q) - wiener_g4_closed(p);
                                }
    report(7, "collapse deltas equal closed-form differences with the claimed signs", ok);
}

void criterion8() {
    std::mt19937 rng(0);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = random_unicyclic(n, 5, 8, rng);
        auto g1 = cycle_swap(g, CycleSwapVariant::G1);
        auto g2 = cycle_swap(g, CycleSwapVariant::G2);
        long long w = wiener_index(g);
        ok = w < wiener_index(g2.after) && wiener_index(g2.after) < wiener_index(g1.after) &&
             std::min(g1.matching_after, g2.matching_after) <= g1.matching_before;
    }
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int n = 7 + static_cast<int>(rng() % 6);
        Graph g = random_path_legged_unicyclic(n, 3, n - 2, 2, rng);
        auto info = unicyclic_info(g);
        std::vector<int> legged;
        for (int i = 0; i < static_cast<int>(info->cycle.size()); ++i)
            if (!info->attachment[i].empty()) legged.push_back(i);
        auto rep = path_regraft(g, legged[0], legged[1]);
        ok = rep.delta_wiener > 0 && rep.matching_after <= rep.matching_before + 1;
    }
    report(8, "transform inequalities hold on both seeded 500-instance corpora", ok);
}

void criterion9() {
    bool ok = true;
    for (int n = 2; n <= 9 && ok; ++n)
        for (const Graph& t : trees(n, 10, jobs()))
            ok = ok && matching_number_tree(t).size == matching_number_bruteforce(t).size;
    for (int n = 3; n <= 9 && ok; ++n)
        for (const Graph& g : unicyclic_graphs(n))
            ok = ok && matching_number_unicyclic(g).size == matching_number_bruteforce(g).size;
    report(9, "specialized matching equals brute force on all trees and unicyclic, n <= 9", ok);
}

void criterion10() {
    bool ok = true;
    for (int n = 3; n <= 9 && ok; ++n)
        for (const Graph& g : unicyclic_graphs(n)) ok = ok && from_graph6(to_graph6(g)) == g;
    for (int n = 1; n <= 9 && ok; ++n)
        for (const Graph& t : trees(n, 10, jobs())) ok = ok && from_graph6(to_graph6(t)) == t;
    std::mt19937 rng(0);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 4 + static_cast<int>(rng() % 20);
        Graph g = random_unicyclic(n, 3, n, rng);
        ok = from_graph6(to_graph6(g)) == g;
    }
    report(10, "graph6 round trip on all enumerated and 1000 random graphs", ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
