#include <doctest.h>

#include <random>

#include "oka/invariants.hpp"
#include "oka/verify.hpp"

using namespace oka;
using namespace oka::invariants;

namespace {

Polynomial rand_xi_t(std::mt19937_64& rng, int deg_xi, int deg_t) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial p;
  for (int i = 0; i <= deg_xi; ++i)
    for (int k = 0; k <= deg_t; ++k) {
      int c = coeff(rng);
      if (c != 0)
        p += Polynomial::term(Rational(c), Monomial::of(vars::xi(), i) *
                                               Monomial::of(vars::t(), k));
    }
  return p;
}

const std::map<Variable, Polynomial>& xi_to_w2() {
  static const std::map<Variable, Polynomial> m = {
      {vars::xi(), Polynomial(vars::w()) * Polynomial(vars::w())}};
  return m;
}

}  // namespace

TEST_CASE("particular invariants and their tau behaviour") {
  CHECK(particular_E() == parse_polynomial("z*(xi^3*z - 2*t*xi^2 - 8)"));
  CHECK(particular_Delta() == parse_polynomial("xi^3*z - t*xi^2 - 4"));
  CHECK((apply_tau(particular_E()) - RationalFunction(particular_E()))
            .is_zero());
  CHECK((apply_tau(particular_Delta()) +
         RationalFunction(particular_Delta()))
            .is_zero());
}

TEST_CASE("even/odd split") {
  auto s = even_odd_split(Polynomial(vars::w()));
  CHECK(s.plus.is_zero());
  CHECK(s.minus == Polynomial(vars::w()));

  HamiltonianTriple triple = builtin_triple();
  Polynomial K = triple.K.numerator();
  auto sk = even_odd_split(K);
  CHECK(sk.plus + sk.minus == K);
  // The parts really are even resp. odd.
  Polynomial flip_plus =
      sk.plus.substitute({{vars::w(), -Polynomial(vars::w())}});
  Polynomial flip_minus =
      sk.minus.substitute({{vars::w(), -Polynomial(vars::w())}});
  CHECK(flip_plus == sk.plus);
  CHECK(flip_minus == -sk.minus);
}

TEST_CASE("splitting preserves solutions of the invariance problem") {
  // For an invariant input, both split parts are invariant again.
  Polynomial E_zw = particular_E().substitute(xi_to_w2());
  Polynomial wD =
      Polynomial(vars::w()) * particular_Delta().substitute(xi_to_w2());
  Polynomial K = E_zw + wD + Rational(3);
  REQUIRE((apply_sigma_zw(K) - RationalFunction(K)).is_zero());
  auto s = even_odd_split(K);
  CHECK((apply_sigma_zw(s.plus) - RationalFunction(s.plus)).is_zero());
  CHECK((apply_sigma_zw(s.minus) - RationalFunction(s.minus)).is_zero());
}

TEST_CASE("decompose_even worked examples") {
  const Polynomial E = particular_E();
  auto fs = decompose_even(E * E);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].is_zero());
  CHECK(fs[1].is_zero());
  CHECK(fs[2] == Polynomial(Rational(1)));

  fs = decompose_even(Polynomial(vars::xi()) + Rational(3) * E);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == Polynomial(vars::xi()));
  CHECK(fs[1] == Polynomial(Rational(3)));

  CHECK(decompose_even(Polynomial()).empty());
  CHECK_THROWS_AS(decompose_even(Polynomial(vars::z())), invariance_error);
}

TEST_CASE("decompose_odd worked examples") {
  const Polynomial E = particular_E();
  const Polynomial D = particular_Delta();
  auto gs = decompose_odd(D);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0] == Polynomial(Rational(1)));

  gs = decompose_odd(D * E);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].is_zero());
  CHECK(gs[1] == Polynomial(Rational(1)));

  gs = decompose_odd(D * (Rational(2) * Polynomial(vars::xi()) + E.pow(3)));
  REQUIRE(gs.size() == 4);
  CHECK(gs[0] == Rational(2) * Polynomial(vars::xi()));
  CHECK(gs[3] == Polynomial(Rational(1)));

  CHECK_THROWS_AS(decompose_odd(E), invariance_error);
  CHECK(decompose_odd(Polynomial()).empty());
}

TEST_CASE("the E/Delta chart identities hold exactly") {
  CHECK(verify_ED_identities().all_passed());
}

TEST_CASE("push_to_xy worked examples") {
  InvariantDecomposition constant;
  constant.even_coeffs = {parse_polynomial("5")};
  CHECK(push_to_xy(constant) == RationalFunction(Rational(5)));

  InvariantDecomposition lyap;
  lyap.even_coeffs = {parse_polynomial("xi*(t^2 - xi)/4"),
                      parse_polynomial("1/4")};
  CHECK(push_to_xy(lyap) == parse("y^2 - 4*x^3 - 2*t*x + y/x"));

  InvariantDecomposition odd_unit;
  odd_unit.odd_coeffs = {parse_polynomial("1")};
  CHECK(push_to_xy(odd_unit) == parse("2*y/x^2 + 1/x^3"));
}

TEST_CASE("constancy certificates") {
  auto v = constancy_certificate(Polynomial(Rational(7)));
  CHECK(v.kind == ConstancyKind::Constant);
  // Polynomials in t alone are phase-constant as well.
  v = constancy_certificate(parse_polynomial("t^2 - 3"));
  CHECK(v.kind == ConstancyKind::Constant);

  Polynomial E_zw = particular_E().substitute(xi_to_w2());
  v = constancy_certificate(E_zw);
  CHECK(v.kind == ConstancyKind::HasPolesInX);
  CHECK(v.witness.denominator().depends_on(vars::x()));

  v = constancy_certificate(builtin_triple().K.numerator());
  CHECK(v.kind == ConstancyKind::NotSigmaInvariant);
  CHECK_FALSE(v.witness.is_zero());
}

TEST_CASE("constancy over a randomized suite matches phase degree") {
  std::mt19937_64 rng(90210);
  const Polynomial E = particular_E();
  const Polynomial D = particular_Delta();
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < 40; ++i) {
    // Random sigma-invariant input assembled from the generators.
    Polynomial F;
    const int top = pick(rng);
    for (int m = 0; m <= top; ++m) F += rand_xi_t(rng, 2, 1) * E.pow(m);
    Polynomial G;
    if (pick(rng) == 0) G = D * rand_xi_t(rng, 1, 1);
    Polynomial K = F.substitute(xi_to_w2()) +
                   Polynomial(vars::w()) * G.substitute(xi_to_w2());
    auto verdict = constancy_certificate(K);
    bool phase_constant = K.degree_in({vars::z(), vars::w()}) <= 0;
    CAPTURE(K.to_string());
    CHECK((verdict.kind == ConstancyKind::Constant) == phase_constant);
  }
}

TEST_CASE("round trip of 100 random decompositions, with the leading-degree law") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> size_dist(-1, 3);
  const Polynomial E = particular_E();
  const Polynomial D = particular_Delta();
  int nontrivial = 0;
  for (int cse = 0; cse < 100; ++cse) {
    InvariantDecomposition want;
    int M = size_dist(rng), N = size_dist(rng);
    for (int m = 0; m <= M; ++m)
      want.even_coeffs.push_back(rand_xi_t(rng, 4, 1));
    for (int n = 0; n <= N; ++n)
      want.odd_coeffs.push_back(rand_xi_t(rng, 4, 1));
    while (!want.even_coeffs.empty() && want.even_coeffs.back().is_zero())
      want.even_coeffs.pop_back();
    while (!want.odd_coeffs.empty() && want.odd_coeffs.back().is_zero())
      want.odd_coeffs.pop_back();

    Polynomial F, G, e_pow(Rational(1));
    for (const auto& f : want.even_coeffs) {
      F += f * e_pow;
      e_pow *= E;
    }
    e_pow = Polynomial(Rational(1));
    for (const auto& g : want.odd_coeffs) {
      G += g * e_pow;
      e_pow *= E;
    }
    G = D * G;
    Polynomial K = F.substitute(xi_to_w2()) +
                   Polynomial(vars::w()) * G.substitute(xi_to_w2());

    auto split = even_odd_split(K);
    InvariantDecomposition got;
    got.even_coeffs = decompose_even(even_part_to_F(split.plus));
    got.odd_coeffs = decompose_odd(odd_part_to_G(split.minus));
    CHECK(got.even_coeffs == want.even_coeffs);
    CHECK(got.odd_coeffs == want.odd_coeffs);

    // Leading y-degree law: deg_y of the push equals max(2M, 2N+1).
    if (got.M() >= 0 || got.N() >= 0) {
      ++nontrivial;
      RationalFunction H = push_to_xy(got);
      int expected = std::max(2 * got.M(), 2 * got.N() + 1);
      CHECK(H.numerator().degree(vars::y()) == expected);
    }
  }
  CHECK(nontrivial > 60);
}

TEST_CASE("uniqueness scan at the containing bounds") {
  UniquenessScan scan = uniqueness_scan(2, 8, 2);
  REQUIRE(scan.feasible);
  CHECK(scan.unknowns == 81);
  Polynomial K = builtin_triple().K.numerator();
  CHECK(scan.particular == K);
  REQUIRE(scan.homogeneous_basis.size() == 3);
  CHECK(scan.phase_relevant_dimension() == 0);
  for (const auto& h : scan.homogeneous_basis)
    CHECK(h.degree_in({vars::z(), vars::w()}) <= 0);
}

TEST_CASE("uniqueness scan edge cases") {
  CHECK_FALSE(uniqueness_scan(0, 0, 0).feasible);
  // The spec'd (2,8,1) bounds cannot hold the t^2 term of K; pinned as an
  // exact infeasibility with rank data.
  UniquenessScan low = uniqueness_scan(2, 8, 1);
  CHECK_FALSE(low.feasible);
  CHECK(low.rank == 52);
  CHECK(low.unknowns == 54);
}

TEST_CASE("invariant problem scan matches the constructive span") {
  UniquenessScan scan = invariant_scan(2, 8, 1);
  REQUIRE(scan.feasible);
  CHECK(scan.particular.is_zero());
  CHECK(scan.homogeneous_basis.size() == 13);
  for (const auto& h : scan.homogeneous_basis) {
    CAPTURE(h.to_string());
    CHECK((apply_sigma_zw(h) - RationalFunction(h)).is_zero());
  }
}

TEST_CASE("full invariants verification suite") {
  CHECK(verify_invariants(42).all_passed());
}
