#ifndef OKA_INVARIANTS_HPP
#define OKA_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "oka/hamiltonian.hpp"
#include "oka/report.hpp"

namespace oka {

/// Input fails the required (skew-)invariance; the witness is the nonzero
/// defect expression.
struct invariance_error : std::runtime_error {
  invariance_error(const std::string& msg, RationalFunction witness)
      : std::runtime_error(msg + ": " + witness.to_string()),
        witness(std::move(witness)) {}
  RationalFunction witness;
};

/// Coefficient lists of the decomposition over the particular invariants:
/// the even side is sum f_m(xi) E^m, the odd side Delta * sum g_n(xi) E^n.
/// M = -1 resp. N = -1 encode a trivial even resp. odd part; otherwise the
/// top coefficient is nonzero.
struct InvariantDecomposition {
  std::vector<Polynomial> even_coeffs;  // f_0..f_M, polynomials in (xi, t)
  std::vector<Polynomial> odd_coeffs;   // g_0..g_N

  int M() const { return static_cast<int>(even_coeffs.size()) - 1; }
  int N() const { return static_cast<int>(odd_coeffs.size()) - 1; }
};

namespace invariants {

/// E(z,xi) = z (xi^3 z - 2 t xi^2 - 8), invariant under tau.
Polynomial particular_E();
/// Delta(z,xi) = xi^3 z - t xi^2 - 4, skew-invariant under tau.
Polynomial particular_Delta();

/// tau: (z, xi) |-> (8 xi^-3 + 2 t xi^-1 - z, xi).
RationalFunction apply_tau(const RationalFunction& f);

/// The involution pulled back on (z,w)-expressions,
/// (z,w) |-> (-z + 2t w^-2 + 8 w^-6, -w).
RationalFunction apply_sigma_zw(const RationalFunction& f);

/// Even/odd split of K(z,w,t) with respect to w: K = Kplus + Kminus with
/// Kplus(z,-w) = Kplus and Kminus(z,-w) = -Kminus.
struct EvenOddSplit {
  Polynomial plus;
  Polynomial minus;
};
EvenOddSplit even_odd_split(const Polynomial& K);

/// Rewrites an even polynomial Kplus(z,w) as F(z, xi) with xi = w^2, and an
/// odd one as w G(z, w^2).
Polynomial even_part_to_F(const Polynomial& Kplus);
Polynomial odd_part_to_G(const Polynomial& Kminus);

/// Constructive decomposition of a tau-invariant F(z,xi,t): returns
/// f_0..f_M with F = sum f_m E^m exactly. Throws invariance_error when
/// F∘tau != F and std::logic_error when an exact-divisibility contract is
/// violated. The reassembly identity is asserted on every call.
std::vector<Polynomial> decompose_even(const Polynomial& F);

/// Constructive decomposition of a skew tau-invariant G(z,xi,t): returns
/// g_0..g_N with G = Delta * sum g_n E^n exactly.
std::vector<Polynomial> decompose_odd(const Polynomial& G);

/// Exact identities tying E and Delta to the original chart via the pole
/// uniformization, plus the auxiliary E-Delta relation.
VerificationReport verify_ED_identities();

/// Evaluates the decomposition in the original chart per the push-down
/// formulas, with f_m, g_n evaluated at xi = 1/x; exact.
RationalFunction push_to_xy(const InvariantDecomposition& decomp);

enum class ConstancyKind { Constant, NotSigmaInvariant, HasPolesInX };

struct ConstancyVerdict {
  ConstancyKind kind;
  RationalFunction witness;  // defect or the offending Laurent terms
};

/// Full pipeline: sigma-invariance check, even/odd split, decomposition,
/// push to (x,y), detection of negative x-powers. "Constant" means constant
/// in the phase variables (an arbitrary polynomial in t is allowed).
ConstancyVerdict constancy_certificate(const Polynomial& K);

/// Splits a rational function whose denominator is a power of x into its
/// x-polynomial part and its principal (negative x-power) part.
struct LaurentSplitX {
  RationalFunction polynomial_part;
  RationalFunction principal_part;
};
LaurentSplitX split_laurent_in_x(const RationalFunction& f);

/// Bounded-degree ansatz scan for the uniqueness statement: all K with
/// deg_z, deg_w, deg_t within the bounds satisfying
///   (i)  K∘sigma - K = 2/w, and
///   (ii) K + 1/w, rewritten through the pole uniformization, free of
///        negative powers of x,
/// solved as an exact linear system. Coefficients are polynomials in t of
/// bounded degree (the scan's stand-in for arbitrary functions of t).
struct UniquenessScan {
  bool feasible = false;
  int rank = 0;
  int unknowns = 0;
  Polynomial particular;                  // assembled K
  std::vector<Polynomial> homogeneous_basis;
  /// Count of homogeneous basis elements that involve z or w.
  int phase_relevant_dimension() const;
};

UniquenessScan uniqueness_scan(int deg_z, int deg_w, int deg_t);

/// The invariant problem K∘sigma - K = 0 alone (no entirety constraint):
/// its solution space is the span of the invariants within the bounds,
/// cross-checked against the constructive enumeration.
UniquenessScan invariant_scan(int deg_z, int deg_w, int deg_t);

}  // namespace invariants

}  // namespace oka

#endif
