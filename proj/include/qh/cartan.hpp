#pragma once

#include <string>
#include <vector>

#include "qh/scalars.hpp"

namespace qh {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

LieType lie_type_from_string(const std::string& s);
std::string to_string(LieType t);

/// Cartan datum for a finite type at grid order n: Cartan matrix a,
/// symmetrizers d with c_ij = d_i a_ij symmetric, q of order N = n^2,
/// qq = q^n, and nilpotency orders l_i = ord(q^{c_ii}).
///
/// Node numbering is Bourbaki.  For the two non-simply-laced chain
/// families the orientation is fixed so that type B has the long root at
/// node m and type C the short one; this is the orientation under which
/// the one-dimensional-module tables of the genuineness suite extend.
struct CartanDatum {
    LieType lie_type;
    int m = 0;                            // rank
    long long n = 0;                      // grid order
    long long N = 0;                      // n^2, order of q
    std::vector<std::vector<long long>> a;  // Cartan matrix
    std::vector<long long> d;             // symmetrizers, in {1,2,3}
    std::vector<std::vector<long long>> c;  // c_ij = d_i a_ij
    std::vector<long long> l;             // l_i = ord(q^{c_ii}) in Z_N

    const CycField& field() const { return CycField::of_order(N); }
    CycNum q_pow(long long e) const { return CycNum::zeta_pow(field(), e); }
    /// qq-exponent e as a q-power: q^(n*e).
    CycNum qq_pow(long long e) const { return CycNum::zeta_pow(field(), n * e); }
};

/// Builds the datum; rejects invalid (type, rank) pairs and n < 2.
CartanDatum make_datum(LieType type, int m, long long n);

long long nilpotency_order(const CartanDatum& datum, int i);  // 1-based i

/// Gauss factorial [Nn]_d^! = prod_{h=1..Nn} (q^{dh}-q^{-dh})/(q^d-q^{-d}).
/// Division by zero in the field is reported with the offending factor.
CycNum gauss_factorial(const CartanDatum& datum, long long Nn, long long d);

/// [M+Nn choose Nn]_d = [M+Nn]!/([M]![Nn]!).
CycNum gauss_binomial(const CartanDatum& datum, long long M, long long Nn, long long d);

}  // namespace qh
