#include "wiener/formulas.hpp"

namespace wiener {

namespace {

void check_nm_domain(int n, int m, int mMin, const char* what) {
    if (m < mMin || n < 2 * m)
        throw std::invalid_argument(std::string(what) + ": need " + std::to_string(mMin) +
                                    " <= m <= n/2, got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
}

}  // namespace

long long wiener_g3_closed(const G3Params& p) {
    Int a = p.a, b = p.b, c = p.c, j = p.j, k = p.k, l = p.l;
    Int w = 0;
    // pairs along the three root-to-tip paths through the triangle
    w += binom(k + l + 3, 3) + binom(j + k + 3, 3) + binom(l + j + 3, 3);
    w -= binom(k + 2, 3) + binom(l + 2, 3) + binom(j + 2, 3);
    // leaf-leaf pairs within each star
    w += 2 * (binom(a, 2) + binom(b, 2) + binom(c, 2));
    // leaf-leaf pairs across stars
    w += a * c * (l + j + 3) + a * b * (k + j + 3) + b * c * (k + l + 3);
    // leaf-to-path pairs within each broom's own path
    w += (a + b + c) * (binom(j + 2, 2) + binom(k + 2, 2) + binom(l + 2, 2));
    // leaf-to-path pairs across brooms
    w += a * (k + l + 2) * (j + 1) + b * (k + 1) * (l + j + 2) + c * (l + 1) * (k + j + 2);
    return Rational(w).to_integer();
}

long long wiener_g4_closed(const G4Params& p) {
    Int a = p.a, b = p.b, c = p.c, d = p.d, h = p.h, j = p.j, k = p.k, l = p.l;
    Rational w = 0;
    // pairs within each attached path
    w += Rational(binom(h + 2, 3) + binom(j + 2, 3) + binom(k + 2, 3) + binom(l + 2, 3));
    // path-path pairs: adjacent brooms go through one cycle edge, opposite
    // brooms through two
    w += Rational((k + 1) * (j + 1) * (k + j + 2), 2);
    w += Rational((k + 1) * (l + 1) * (k + l + 2), 2);
    w += Rational((k + 1) * (h + 1) * (k + h + 4), 2);
    w += Rational((l + 1) * (j + 1) * (l + j + 4), 2);
    w += Rational((h + 1) * (j + 1) * (h + j + 2), 2);
    w += Rational((h + 1) * (l + 1) * (l + h + 2), 2);
    // leaf-leaf pairs across brooms
    w += Rational(a * b * (k + j + 3) + b * c * (k + l + 3) + c * d * (l + h + 3) +
                  a * d * (h + j + 3));
    w += Rational(a * c * (j + l + 4) + b * d * (k + h + 4));
    // leaf-leaf pairs within each star
    w += Rational(2 * (binom(a, 2) + binom(b, 2) + binom(c, 2) + binom(d, 2)));
    // leaf-to-own-path pairs
    w += Rational((a + b + c + d) *
                  (binom(h + 2, 2) + binom(j + 2, 2) + binom(k + 2, 2) + binom(l + 2, 2)));
    // leaf-to-other-path pairs
    w += Rational(a * (j + 1) * (k + h + 2) + b * (k + 1) * (l + j + 2) +
                  c * (l + 1) * (k + h + 2) + d * (h + 1) * (l + j + 2));
    w += Rational(a * (j + 2) * (l + 1) + b * (k + 2) * (h + 1) + c * (l + 2) * (j + 1) +
                  d * (h + 2) * (k + 1));
    return w.to_integer();
}

long long delta_g3_collapse(const G3Params& p) {
    if (p.a < p.b || p.a < p.c)
        throw std::invalid_argument("delta_g3_collapse: requires a = max(a,b,c)");
    Int a = p.a, b = p.b, c = p.c, j = p.j, k = p.k, l = p.l;
    Int w = j * k * l + j * k + j * l + k * l + k * (a - b) * c + l * (a - c) * b;
    w += a * k * l + b * j * l + c * j * k + k * (a - b) + l * (a - c);
    return Rational(w).to_integer();
}

long long delta_g4_collapse(const G4Params& p) {
    Int a = p.a, b = p.b, c = p.c, d = p.d, h = p.h, j = p.j, k = p.k, l = p.l;
    Int eps = (a + b + c + d) % 2;
    Rational w = 0;
    w += Rational(h * j * k + h * j * l + h * k * l + j * k * l);
    w += Rational(2 * h * j + h * k + 2 * h * l + 2 * j * k + j * l + 2 * k * l);
    w += Rational(a * h * k + a * h * l + a * k * l + b * h * j + b * h * l + b * j * l +
                  c * h * j + c * h * k + c * j * k + d * j * k + d * j * l + d * k * l);
    w += Rational(a * h + a * k + b * j + b * l + c * h + c * k + d * j + d * l);
    auto sq = [](const Int& x) { return x * x; };
    w += Rational((sq(d - a - b - c - 1) - sq(eps - 1)) * h, 4);
    w += Rational((sq(a - b - c - d - 1) - sq(eps - 1)) * j, 4);
    w += Rational((sq(b - a - c - d - 1) - sq(eps - 1)) * k, 4);
    w += Rational((sq(c - a - b - d - 1) - sq(eps - 1)) * l, 4);
    w += Rational(sq(a - c) + sq(b - d) - sq(eps), 2);
    return w.to_integer();
}

long long bound_max_unicyclic(int n, int m) {
    check_nm_domain(n, m, 2, "bound_max_unicyclic");
    Rational N = n, M = m;
    Rational w;
    if (n <= 2 * m + 2) {
        w = Rational(2) - Rational(8, 3) * M * M * M + 2 * M * M + Rational(5, 3) * M +
            2 * M * M * N - 3 * M * N - 2 * N + N * N;
    } else if (n % 2 == 1) {
        w = Rational(9, 2) - N - Rational(2, 3) * M * M * M + Rational(1, 2) * N * N -
            2 * N * M + 2 * M * M + Rational(1, 2) * M * N * N - Rational(11, 6) * M;
    } else {
        w = Rational(6) - N - Rational(2, 3) * M * M * M + Rational(1, 2) * N * N - 2 * N * M +
            2 * M * M + Rational(1, 2) * M * N * N - Rational(7, 3) * M;
    }
    return w.to_integer();
}

std::vector<Graph> extremal_set_predicted(int n, int m) {
    check_nm_domain(n, m, 2, "extremal_set_predicted");
    if (n == 4 && m == 2) return {build_g4(g4_reduced(0, 0, 0)), build_g3(g3_reduced(0, 1))};
    if (n == 6 && m == 2) return {build_g4(g4_reduced(1, 1, 0)), build_g3(g3_reduced(2, 1))};
    if (n <= 2 * m + 2) return {build_g3(g3_reduced(n - 2 * m, 2 * m - 3))};
    if (n % 2 == 1) return {build_g4(g4_reduced((n + 1) / 2 - m, (n - 1) / 2 - m, 2 * m - 4))};
    return {build_g4(g4_reduced(n / 2 - m, n / 2 - m, 2 * m - 4))};
}

long long bound_dankelmann_min(int n, int m) {
    check_nm_domain(n, m, 1, "bound_dankelmann_min");
    if (m == n / 2) return Rational(binom(n, 2)).to_integer();
    // Constant term C(m+1,2): matches W(K_m + (n-m)K_1) = C(n,2) + C(n-m,2),
    // the graph the equality case names.
    return Rational(2 * binom(n, 2) - Int(m) * n + binom(m + 1, 2)).to_integer();
}

long long bound_dankelmann_max(int n, int m) {
    check_nm_domain(n, m, 1, "bound_dankelmann_max");
    Int s = n - 2 * m;
    Int w = binom(2 * m, 3) + binom(2 * m, 2) * (s + 1);
    if (n % 2 == 0) {
        w += 2 * m * ((s + 2) / 2) * (s / 2);
        return Rational(w * 2 + s * s, 2).to_integer();
    }
    Int half = (s + 1) / 2;
    w += 2 * m * half * half + 4 * binom(half, 2);
    return Rational(w).to_integer();
}

long long bound_duzhou_tree_min(int n, int m) {
    check_nm_domain(n, m, 2, "bound_duzhou_tree_min");
    Int N = n, M = m;
    return Rational(N * N + (M - 3) * N - 3 * M + 4).to_integer();
}

long long bound_duzhou_unicyclic_min(int n, int m) {
    check_nm_domain(n, m, 2, "bound_duzhou_unicyclic_min");
    if (n == 6 && m == 3) return 26;
    Int N = n, M = m;
    return Rational(N * N + (M - 4) * N - 3 * M + 6).to_integer();
}

long long compare_g4_parity(int n, int m) {
    check_nm_domain(n, m, 2, "compare_g4_parity");
    if (n % 2 != 0) throw std::invalid_argument("compare_g4_parity: n must be even");
    if (2 * m - 5 < 0 || n / 2 - m < 0)
        throw std::invalid_argument("compare_g4_parity: comparand does not exist");
    Int N = n, M = m;
    return Rational((N - 2 * M) * (N + 2 * M - 4), 4).to_integer();
}

long long compare_g4_vs_g3(int n, int m) {
    check_nm_domain(n, m, 2, "compare_g4_vs_g3");
    Rational K = n - 2 * m, M = m;
    if (n % 2 == 1) {
        if ((n - 1) / 2 - m < 0 || 2 * m - 4 < 0)
            throw std::invalid_argument("compare_g4_vs_g3: comparand does not exist");
        return (Rational(1) + Rational(1, 2) * (K - 3) * (K + 1) * (M - 1)).to_integer();
    }
    if (n / 2 - m < 0 || 2 * m - 4 < 0)
        throw std::invalid_argument("compare_g4_vs_g3: comparand does not exist");
    return (Rational(2) + Rational(1, 2) * (K * K - 2 * K - 4) * (M - 1)).to_integer();
}

}  // namespace wiener
