#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qh/error.hpp"

namespace qh {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Canonical representative of y mod n, in [0, n).  n >= 1.
long long remainder_mod(long long y, long long n);

/// Largest integer <= a/b.  b >= 1.
long long floor_div(long long a, long long b);

/// floor((i+j')/n) == floor((i+j)/n) - floor(j/n) with j' = j mod n,
/// evaluated on both sides independently.  i, j >= 0.
bool floor_identity_check(long long i, long long j, long long n);

/// The cyclotomic field Q(zeta_N) in the power basis modulo Phi_N.
/// Instances are immutable and interned per order; CycNum values keep a
/// plain pointer into the registry, which never evicts.
class CycField {
  public:
    static const CycField& of_order(long long N);

    long long order() const { return order_; }
    int degree() const { return degree_; }  // phi(N)

    /// Coefficients of x^k mod Phi_N for any k (reduced mod N first).
    const std::vector<BigInt>& zeta_power(long long k) const;

    /// Coefficients of Phi_N, ascending, monic.
    const std::vector<BigInt>& cyclotomic_poly() const { return phi_; }

  private:
    explicit CycField(long long N);
    long long order_;
    int degree_;
    std::vector<BigInt> phi_;
    std::vector<std::vector<BigInt>> pow_;  // x^k mod Phi_N, k in [0, max(N, 2*degree-1))
};

/// Exact element of Q(zeta_N): vector of rationals in the power basis,
/// always reduced (degree < phi(N), rationals canonical).
class CycNum {
  public:
    CycNum() : field_(nullptr) {}
    explicit CycNum(const CycField& f) : field_(&f), c_(f.degree()) {}

    static CycNum zero(const CycField& f) { return CycNum(f); }
    static CycNum one(const CycField& f) { return from_rational(f, 1); }
    static CycNum from_rational(const CycField& f, const BigRat& r);
    /// zeta_N^k
    static CycNum zeta_pow(const CycField& f, long long k);

    const CycField& field() const;
    bool attached() const { return field_ != nullptr; }
    const std::vector<BigRat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// If the value lies in Q, returns true and sets out.
    bool rational_part(BigRat& out) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const BigRat& r);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator*(CycNum a, const BigRat& r) { return a *= r; }

    /// Multiplicative inverse; rejects zero.
    CycNum inverse() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// "(a0, a1, ..., a_{d-1})" in the zeta_N power basis.
    std::string to_string() const;

  private:
    void check_same(const CycNum& o) const;
    const CycField* field_;
    std::vector<BigRat> c_;
};

inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_inv(const CycNum& a) { return a.inverse(); }
inline bool cyc_eq(const CycNum& a, const CycNum& b) { return a == b; }

/// Exponent of q = zeta_N, i.e. an element of Z_N written additively.
/// The fast path for every diagonal formula; converts to CycNum only at
/// comparison boundaries.
struct QExp {
    long long e = 0;
    long long order = 1;

    QExp() = default;
    QExp(long long exp, long long N) : e(remainder_mod(exp, N)), order(N) {}

    QExp operator+(const QExp& o) const {
        if (order != o.order) throw Error("QExp: mixed orders");
        return QExp(e + o.e, order);
    }
    QExp operator-() const { return QExp(-e, order); }
    QExp scaled(long long k) const;  // k*e mod N, k may be negative
    bool operator==(const QExp& o) const { return order == o.order && e == o.e; }

    CycNum embed() const { return CycNum::zeta_pow(CycField::of_order(order), e); }

    /// qq-exponent to q-exponent: e -> n*e mod n^2 (qq = q^n).
    static QExp from_qq(long long e_qq, long long n) { return QExp(n * e_qq, n * n); }
};

long long gcd_ll(long long a, long long b);
/// Multiplicative order of zeta_N^k.
long long mult_order(long long k, long long N);

}  // namespace qh
