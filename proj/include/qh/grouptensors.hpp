#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qh/cartan.hpp"

namespace qh {

/// Index tuple for an arity-k tensor over (Z_M)^m, laid out leg-major:
/// tuple[leg*m + i], entries canonical in [0, M).
using Tuple = std::vector<long long>;

struct Grid {
    int m = 1;
    long long M = 1;
    bool operator==(const Grid& o) const { return m == o.m && M == o.M; }
};

/// Diagonal tensor sum_t zeta_N^{expo(t)} 1_{t_1} x ... x 1_{t_k}, stored
/// as the exponent function alone.  Never materialized densely.
class DiagTensor {
  public:
    using Expo = std::function<long long(const Tuple&)>;

    DiagTensor(Grid grid, int arity, long long root_order, Expo f, std::string tag = "")
        : grid_(grid), arity_(arity), N_(root_order), f_(std::move(f)), tag_(std::move(tag)) {}

    static DiagTensor unit(Grid grid, int arity, long long root_order) {
        return DiagTensor(grid, arity, root_order, [](const Tuple&) { return 0LL; }, "1");
    }

    const Grid& grid() const { return grid_; }
    int arity() const { return arity_; }
    long long root_order() const { return N_; }
    const std::string& tag() const { return tag_; }

    /// Exponent at the tuple, reduced into [0, N).
    long long eval(const Tuple& t) const { return remainder_mod(f_(t), N_); }

    DiagTensor inverse() const;
    DiagTensor operator*(const DiagTensor& o) const;  // idempotent product: summed exponents
    /// Embed into a larger arity with unit legs elsewhere; legs[i] = where
    /// my leg i lands.
    DiagTensor placed(int new_arity, std::vector<int> legs) const;
    /// Apply the group-part coproduct 1_a -> sum_{b+c=a} 1_b x 1_c at a leg.
    DiagTensor delta_at(int leg) const;
    /// Apply the group-part antipode S(1_a) = 1_{-a} at a leg.
    DiagTensor antipode_at(int leg) const;
    DiagTensor permuted(std::vector<int> perm) const;  // leg i of result = leg perm[i] of input
    /// Test helper: add 1 to the exponent at exactly one tuple.
    DiagTensor bumped_at(Tuple where) const;

  private:
    Grid grid_;
    int arity_;
    long long N_;
    Expo f_;
    std::string tag_;
};

/// Runs fn over all tuples of the given arity; fn returns false to abort.
bool for_each_tuple(const Grid& grid, int arity, const std::function<bool(const Tuple&)>& fn);

/// First tuple where the two exponents differ, scanning the whole grid.
std::optional<Tuple> first_difference(const DiagTensor& a, const DiagTensor& b);
/// Same on `count` seeded samples plus every tuple with entries in `edges`.
std::optional<Tuple> sampled_difference(const DiagTensor& a, const DiagTensor& b,
                                        std::mt19937_64& rng, long long count,
                                        const std::vector<long long>& edges);

struct PentagonResult {
    bool ok = true;
    Tuple witness;  // (a,b,c,d) on failure
};
/// (id x id x Delta)(phi)(Delta x id x id)(phi) = (1 x phi)(id x Delta x id)(phi)(phi x 1),
/// reduced to exponent identities and checked exhaustively.
PentagonResult pentagon_check(const DiagTensor& phi);
/// (id x eps x id)(phi) = 1 x 1 with eps(1_a) = delta_{a,0}.
PentagonResult counit_check(const DiagTensor& phi);

/// Closed-form exponent evaluators bound to a datum.  All exponents are
/// powers of q = zeta_{n^2}; qq-power formulas carry the factor n.
/// Index arguments are canonical representatives.
class DiagForms {
  public:
    explicit DiagForms(const CartanDatum& datum) : d_(datum) {}
    const CartanDatum& datum() const { return d_; }

    /// J on the (Z_{n^2})^m grid: -sum c_ij A_i (B_j - B_j mod n).
    long long J(const Tuple& AB) const;
    /// phi(a,b,c) = -n sum c_ij a_i floor((b_j+c_j)/n), on (Z_n)^m.
    long long phi(const Tuple& abc) const;
    long long alpha(const Tuple& a) const;
    /// b_i: -sum_j c_ij a_j (plain q power).
    long long b_elem(int i, const Tuple& a) const;
    /// q-exponent of the H_i eigenvalue on 1_a: n sum_j c_ji a_j.
    long long H_eigen(int i, const Tuple& a) const;
    long long gamma(const Tuple& bc) const;
    long long f2(const Tuple& ef) const;
    long long chi4(const Tuple& abcd) const;
    /// omega in the antipode-indexed basis 1_a x 1_b x 1_c x S(1_d) x S(1_e).
    long long omega_S(const Tuple& abcde) const;
    /// omega in the plain idempotent basis (last two legs substituted).
    long long omega_plain(const Tuple& t) const;

  private:
    CartanDatum d_;
};

// ---- builders ----

DiagTensor build_J(const CartanDatum& datum);
DiagTensor closed_phi(const CartanDatum& datum);
DiagTensor build_alpha(const CartanDatum& datum);
DiagTensor build_b(const CartanDatum& datum, int i);  // 1-based
/// H_i = prod_j h_j^{c_ji} as a group-exponent vector mod n.
std::vector<long long> build_H(const CartanDatum& datum, int i);

/// d(J) = (1 x J)((id x Delta)J)((Delta x id)J^{-1})(J x 1)^{-1} on the
/// (Z_{n^2})^m grid, verified to descend to (Z_n)^m and returned there.
/// Throws ConsistencyError when any lift changes the value.
DiagTensor differential_dJ(const CartanDatum& datum, const DiagTensor& J,
                           std::mt19937_64& rng, long long joint_samples_per_residue = 8);

DiagTensor closed_gamma(const CartanDatum& datum);
DiagTensor closed_f(const CartanDatum& datum);
DiagTensor closed_chi4(const CartanDatum& datum);
DiagTensor closed_omega_plain(const CartanDatum& datum);

/// The same four elements recomputed from their definitions using only
/// the group-part coproduct, antipode and the reassociator calculus.
DiagTensor def_gamma(const CartanDatum& datum);
DiagTensor def_f(const CartanDatum& datum);
DiagTensor def_chi4(const CartanDatum& datum);
DiagTensor def_omega_plain(const CartanDatum& datum);

/// alpha_J * beta_J from the twist, computed on the parent grid and
/// descended; equals closed alpha.
DiagTensor alpha_from_twist(const CartanDatum& datum, std::mt19937_64& rng);

}  // namespace qh
