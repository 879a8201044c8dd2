#include "qh/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qh {

long long remainder_mod(long long y, long long n) {
    if (n < 1) throw Error("remainder_mod: modulus must be >= 1");
    long long r = y % n;
    return r < 0 ? r + n : r;
}

long long floor_div(long long a, long long b) {
    if (b < 1) throw Error("floor_div: divisor must be >= 1");
    long long q = a / b, r = a % b;
    return (r < 0) ? q - 1 : q;
}

bool floor_identity_check(long long i, long long j, long long n) {
    if (i < 0 || j < 0) throw Error("floor_identity_check: needs naturals");
    long long lhs = floor_div(i + remainder_mod(j, n), n);
    long long rhs = floor_div(i + j, n) - floor_div(j, n);
    return lhs == rhs;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

long long mult_order(long long k, long long N) {
    return N / gcd_ll(remainder_mod(k, N), N);  // gcd(0, N) = N, so ord(1) = 1
}

// ---- polynomial helpers over Z and Q (ascending coefficients) ----

namespace {

void trim(std::vector<BigInt>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of f by monic g over Z.
std::vector<BigInt> div_exact_monic(std::vector<BigInt> f, const std::vector<BigInt>& g) {
    trim(f);
    std::vector<BigInt> q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, BigInt(0));
    while (f.size() >= g.size() && !f.empty()) {
        size_t shift = f.size() - g.size();
        BigInt c = f.back();
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        trim(f);
    }
    if (!f.empty()) throw Error("cyclotomic division not exact");
    return q;
}

std::vector<BigInt> cyclotomic(long long N, std::map<long long, std::vector<BigInt>>& memo) {
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    // x^N - 1 divided by Phi_d over proper divisors d of N
    std::vector<BigInt> f(N + 1, BigInt(0));
    f[0] = -1;
    f[N] = 1;
    for (long long d = 1; d < N; ++d)
        if (N % d == 0) f = div_exact_monic(std::move(f), cyclotomic(d, memo));
    memo[N] = f;
    return f;
}

}  // namespace

CycField::CycField(long long N) : order_(N) {
    if (N < 1) throw Error("CycField: order must be >= 1");
    std::map<long long, std::vector<BigInt>> memo;
    phi_ = cyclotomic(N, memo);
    degree_ = static_cast<int>(phi_.size()) - 1;
    long long upper = std::max<long long>(N, 2 * degree_ - 1);
    pow_.resize(upper);
    for (long long k = 0; k < upper; ++k) {
        if (k < degree_) {
            std::vector<BigInt> v(degree_, BigInt(0));
            v[k] = 1;
            pow_[k] = std::move(v);
        } else {
            // x * pow_[k-1] reduced modulo monic Phi_N
            std::vector<BigInt> v(degree_ + 1, BigInt(0));
            for (int i = 0; i < degree_; ++i) v[i + 1] = pow_[k - 1][i];
            BigInt lead = v[degree_];
            if (lead != 0)
                for (int i = 0; i <= degree_; ++i) v[i] -= lead * phi_[i];
            v.resize(degree_);
            pow_[k] = std::move(v);
        }
    }
}

const CycField& CycField::of_order(long long N) {
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<CycField>>* registry =
        new std::map<long long, std::unique_ptr<CycField>>();
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = (*registry)[N];
    if (!slot) slot.reset(new CycField(N));
    return *slot;
}

const std::vector<BigInt>& CycField::zeta_power(long long k) const {
    return pow_[remainder_mod(k, order_)];
}

// ---- CycNum ----

const CycField& CycNum::field() const {
    if (!field_) throw Error("CycNum: unattached value");
    return *field_;
}

void CycNum::check_same(const CycNum& o) const {
    if (!field_ || !o.field_) throw Error("CycNum: unattached value");
    if (field_ != o.field_) throw Error("CycNum: mixed field orders");
}

CycNum CycNum::from_rational(const CycField& f, const BigRat& r) {
    CycNum x(f);
    x.c_[0] = r;
    return x;
}

CycNum CycNum::zeta_pow(const CycField& f, long long k) {
    CycNum x(f);
    const auto& p = f.zeta_power(k);
    for (size_t i = 0; i < p.size(); ++i) x.c_[i] = BigRat(p[i]);
    return x;
}

bool CycNum::is_zero() const {
    for (const auto& a : c_)
        if (a != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::rational_part(BigRat& out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    out = c_.empty() ? BigRat(0) : c_[0];
    return true;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const BigRat& r) {
    if (!field_) throw Error("CycNum: unattached value");
    for (auto& a : c_) a *= r;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    check_same(o);
    int d = field_->degree();
    std::vector<BigRat> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<BigRat> red(d);
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        if (k < d) {
            red[k] += prod[k];
        } else {
            const auto& xk = field_->zeta_power(k);  // k < 2d-1 <= table size
            for (int i = 0; i < d; ++i)
                if (xk[i] != 0) red[i] += prod[k] * BigRat(xk[i]);
        }
    }
    c_ = std::move(red);
    return *this;
}

namespace {

// Rational polynomial helpers for the extended Euclidean inverse.
using QPoly = std::vector<BigRat>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qtrim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        BigRat c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    return {q, a};
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw Error("CycNum: inversion of zero");
    const CycField& f = field();
    // extended Euclid: u*self + v*Phi = gcd = const (Phi_N irreducible over Q)
    QPoly r0 = c_;
    qtrim(r0);
    QPoly r1;
    for (const auto& a : f.cyclotomic_poly()) r1.push_back(BigRat(a));
    QPoly s0 = {BigRat(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (nonzero constant), s0 * self === r0  (mod Phi)
    if (r0.size() != 1) throw Error("CycNum: inverse failed (gcd not constant)");
    BigRat inv_c = BigRat(1) / r0[0];
    CycNum out(f);
    auto [q, rem] = qdivmod(qmul(s0, {inv_c}), [&] {
        QPoly p;
        for (const auto& a : f.cyclotomic_poly()) p.push_back(BigRat(a));
        return p;
    }());
    (void)q;
    for (size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i];
    return out;
}

bool CycNum::operator==(const CycNum& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << ")";
    return os.str();
}

QExp QExp::scaled(long long k) const { return QExp(e * k, order); }

}  // namespace qh
