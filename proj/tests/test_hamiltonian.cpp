#include <doctest.h>

#include <random>

#include "oka/hamiltonian.hpp"
#include "oka/invariants.hpp"

using namespace oka;

TEST_CASE("builtin triple components") {
  HamiltonianTriple triple = builtin_triple();
  CHECK(triple.H == parse("1/2*y^2 - 2*x^3 - t*x"));
  CHECK(triple.K ==
        parse("1/8*w^6*z^2 - 1/4*(4 + t*w^4 + w^5)*z + 1/8*w^2*(t+w)^2"));
  CHECK(triple.L ==
        parse("1/8*v^6*u^2 + 1/4*(4 + t*v^4 - v^5)*u + 1/8*v^2*(t-v)^2"));
  CHECK(triple.H.is_polynomial());
  CHECK(triple.K.is_polynomial());
  CHECK(triple.L.is_polynomial());
}

TEST_CASE("gluing and involution-shift residuals hold exactly") {
  HamiltonianTriple triple = builtin_triple();
  CHECK(gluing_residuals(triple).all_passed());
  CHECK(sigma_shift_residuals(triple).all_passed());
}

TEST_CASE("the zero triple fails the gluing residuals") {
  HamiltonianTriple zero{RationalFunction(0), RationalFunction(0),
                         RationalFunction(0)};
  VerificationReport rep = gluing_residuals(zero);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.first_failure()->witness == "(-1)/(w)");
}

TEST_CASE("a constant K fails the involution shift") {
  HamiltonianTriple c = builtin_triple();
  c.K = RationalFunction(Rational(3));
  VerificationReport rep = sigma_shift_residuals(c);
  CHECK_FALSE(rep.checks[0].passed);
  CHECK(rep.checks[0].witness == "(-2)/(w)");
}

TEST_CASE("mutation testing: any single-coefficient perturbation of K fails") {
  HamiltonianTriple triple = builtin_triple();
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> bump(1, 5);
  const auto& terms = triple.K.numerator().terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Polynomial mutated;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Rational c = terms[i].coeff;
      if (i == k) c += Rational(bump(rng), 7);
      mutated += Polynomial::term(c, terms[i].mono);
    }
    HamiltonianTriple m = triple;
    m.K = RationalFunction(mutated);
    bool glue_fail = !gluing_residuals(m).all_passed();
    bool shift_fail = !sigma_shift_residuals(m).all_passed();
    CAPTURE(k);
    CHECK(glue_fail);
    CHECK(shift_fail);
  }
}

TEST_CASE("chart vector fields") {
  HamiltonianTriple triple = builtin_triple();
  ChartVectorField xy = vector_field(ChartId::XY, triple);
  CHECK(xy.dq_dt == parse("y"));
  CHECK(xy.dp_dt == parse("6*x^2 + t"));

  ChartVectorField zw = vector_field(ChartId::ZW, triple);
  CHECK(zw.dq_dt.is_polynomial());
  CHECK(zw.dp_dt.is_polynomial());
  // Transversal crossing: dw/dt = 1 exactly on {w = 0}, dz/dt finite.
  CHECK(zw.dp_dt.substitute({{vars::w(), RationalFunction(0)}}) ==
        RationalFunction(1));
  CHECK(zw.dq_dt.substitute({{vars::w(), RationalFunction(0)}})
            .is_polynomial());

  // The UV field is the sigma-pushforward of the ZW field: substituting
  // (z, w) = (-u, -v) into the ZW field and negating both components.
  ChartVectorField uv = vector_field(ChartId::UV, triple);
  std::map<Variable, RationalFunction> mirror = {
      {vars::z(), -RationalFunction(vars::u())},
      {vars::w(), -RationalFunction(vars::v())}};
  CHECK(uv.dq_dt == -zw.dq_dt.substitute(mirror));
  CHECK(uv.dp_dt == -zw.dp_dt.substitute(mirror));
}

TEST_CASE("total-derivative identity along the flow") {
  // dK/dt via Hamilton's equations collapses to the partial t-derivative:
  // (dK/dz)(dz/dt) + (dK/dw)(dw/dt) cancels exactly.
  HamiltonianTriple triple = builtin_triple();
  ChartVectorField zw = vector_field(ChartId::ZW, triple);
  RationalFunction convective =
      triple.K.derivative(vars::z()) * zw.dq_dt +
      triple.K.derivative(vars::w()) * zw.dp_dt;
  CHECK(convective.is_zero());
  ChartVectorField xy = vector_field(ChartId::XY, triple);
  CHECK((triple.H.derivative(vars::x()) * xy.dq_dt +
         triple.H.derivative(vars::y()) * xy.dp_dt)
            .is_zero());
}

TEST_CASE("Lyapunov function") {
  RationalFunction U = lyapunov_U();
  CHECK(U == parse("y^2 - 4*x^3 - 2*t*x + y/x"));
  HamiltonianTriple triple = builtin_triple();
  CHECK(U - parse("y/x") == RationalFunction(2) * triple.H);
  InvariantDecomposition inst;
  inst.even_coeffs = {parse_polynomial("xi*(t^2 - xi)/4"),
                      parse_polynomial("1/4")};
  CHECK(invariants::push_to_xy(inst) == U);
}
