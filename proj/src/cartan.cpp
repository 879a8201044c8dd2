#include "qh/cartan.hpp"

#include <algorithm>

namespace qh {

LieType lie_type_from_string(const std::string& s) {
    if (s == "A") return LieType::A;
    if (s == "B") return LieType::B;
    if (s == "C") return LieType::C;
    if (s == "D") return LieType::D;
    if (s == "E6") return LieType::E6;
    if (s == "E7") return LieType::E7;
    if (s == "E8") return LieType::E8;
    if (s == "F4") return LieType::F4;
    if (s == "G2") return LieType::G2;
    throw Error("unknown Lie type: " + s);
}

std::string to_string(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
        case LieType::E8: return "E8";
        case LieType::F4: return "F4";
        case LieType::G2: return "G2";
    }
    return "?";
}

namespace {

std::vector<std::vector<long long>> cartan_matrix(LieType t, int m) {
    auto bad = [&](const char* why) {
        throw Error("make_datum: invalid rank " + std::to_string(m) + " for type " +
                    to_string(t) + " (" + why + ")");
    };
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    auto chain_edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (t) {
        case LieType::A:
            if (m < 1) bad("need m >= 1");
            for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
            break;
        case LieType::B:
            // chain with the long root at node m: a_{m-1,m} = -2, a_{m,m-1} = -1
            if (m < 2) bad("need m >= 2");
            for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
            a[m - 2][m - 1] = -2;
            a[m - 1][m - 2] = -1;
            break;
        case LieType::C:
            // chain with the short root at node m: a_{m-1,m} = -1, a_{m,m-1} = -2
            if (m < 2) bad("need m >= 2");
            for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
            a[m - 2][m - 1] = -1;
            a[m - 1][m - 2] = -2;
            break;
        case LieType::D:
            if (m < 3) bad("need m >= 3");
            for (int i = 0; i + 1 < m - 1; ++i) chain_edge(i, i + 1);
            chain_edge(m - 3, m - 1);
            break;
        case LieType::E6:
        case LieType::E7:
        case LieType::E8: {
            int want = t == LieType::E6 ? 6 : t == LieType::E7 ? 7 : 8;
            if (m != want) bad("fixed rank");
            // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-6(-7(-8))
            chain_edge(0, 2);
            chain_edge(2, 3);
            chain_edge(3, 4);
            chain_edge(4, 5);
            chain_edge(1, 3);
            if (m >= 7) chain_edge(5, 6);
            if (m >= 8) chain_edge(6, 7);
            break;
        }
        case LieType::F4:
            if (m != 4) bad("fixed rank");
            chain_edge(0, 1);
            chain_edge(2, 3);
            a[1][2] = -1;  // nodes 1,2 long; 3,4 short
            a[2][1] = -2;
            break;
        case LieType::G2:
            if (m != 2) bad("fixed rank");
            a[0][1] = -3;  // node 1 short, node 2 long
            a[1][0] = -1;
            break;
    }
    return a;
}

// Minimal positive d with d_i a_ij = d_j a_ji, entries expected in {1,2,3}.
std::vector<long long> symmetrizers(const std::vector<std::vector<long long>>& a) {
    int m = static_cast<int>(a.size());
    std::vector<long long> d(m, 0);
    // propagate ratios along the Dynkin graph, then clear denominators
    std::vector<std::pair<long long, long long>> ratio(m, {0, 1});  // d_i = num/den * scale
    for (int start = 0; start < m; ++start) {
        if (ratio[start].first != 0) continue;
        ratio[start] = {1, 1};
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < m; ++j) {
                if (i == j || a[i][j] == 0 || ratio[j].first != 0) continue;
                // d_j = d_i * a_ij / a_ji
                long long num = ratio[i].first * a[i][j];
                long long den = ratio[i].second * a[j][i];
                if (num < 0) num = -num;
                if (den < 0) den = -den;
                long long g = gcd_ll(num, den);
                ratio[j] = {num / g, den / g};
                stack.push_back(j);
            }
        }
    }
    long long lcm_den = 1;
    for (auto& r : ratio) lcm_den = lcm_den / gcd_ll(lcm_den, r.second) * r.second;
    long long g_all = 0;
    for (auto& r : ratio) g_all = gcd_ll(g_all, r.first * (lcm_den / r.second));
    for (int i = 0; i < m; ++i) d[i] = ratio[i].first * (lcm_den / ratio[i].second) / g_all;
    for (int i = 0; i < m; ++i)
        if (d[i] < 1 || d[i] > 3) throw Error("symmetrizers out of {1,2,3}");
    return d;
}

}  // namespace

CartanDatum make_datum(LieType type, int m, long long n) {
    if (n < 2) throw Error("make_datum: n must be >= 2");
    CartanDatum dat;
    dat.lie_type = type;
    dat.m = m;
    dat.n = n;
    dat.N = n * n;
    dat.a = cartan_matrix(type, m);
    dat.d = symmetrizers(dat.a);
    dat.c.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) dat.c[i][j] = dat.d[i] * dat.a[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (dat.c[i][j] != dat.c[j][i]) throw Error("make_datum: c not symmetric");
    dat.l.resize(m);
    for (int i = 0; i < m; ++i) dat.l[i] = mult_order(dat.c[i][i], dat.N);
    return dat;
}

long long nilpotency_order(const CartanDatum& datum, int i) {
    if (i < 1 || i > datum.m) throw Error("nilpotency_order: index out of range");
    return datum.l[i - 1];
}

CycNum gauss_factorial(const CartanDatum& datum, long long Nn, long long d) {
    const CycField& F = datum.field();
    CycNum denom = datum.q_pow(d) - datum.q_pow(-d);
    if (denom.is_zero())
        throw Error("gauss_factorial: q^d - q^-d vanishes (d=" + std::to_string(d) + ")");
    CycNum denom_inv = denom.inverse();
    CycNum acc = CycNum::one(F);
    for (long long h = 1; h <= Nn; ++h) {
        CycNum num = datum.q_pow(d * h) - datum.q_pow(-d * h);
        acc = acc * num * denom_inv;
    }
    return acc;
}

CycNum gauss_binomial(const CartanDatum& datum, long long M, long long Nn, long long d) {
    CycNum fM = gauss_factorial(datum, M, d);
    CycNum fN = gauss_factorial(datum, Nn, d);
    if (fM.is_zero()) throw Error("gauss_binomial: [M]! vanishes (M=" + std::to_string(M) + ")");
    if (fN.is_zero()) throw Error("gauss_binomial: [Nn]! vanishes (Nn=" + std::to_string(Nn) + ")");
    return gauss_factorial(datum, M + Nn, d) * fM.inverse() * fN.inverse();
}

}  // namespace qh
