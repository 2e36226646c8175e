#include "oka/hamiltonian.hpp"

namespace oka {

HamiltonianTriple builtin_triple() {
  return HamiltonianTriple{
      parse("1/2*y^2 - 2*x^3 - t*x"),
      parse("1/8*w^6*z^2 - 1/4*(4 + t*w^4 + w^5)*z + 1/8*w^2*(t+w)^2"),
      parse("1/8*v^6*u^2 + 1/4*(4 + t*v^4 - v^5)*u + 1/8*v^2*(t-v)^2")};
}

VerificationReport gluing_residuals(const HamiltonianTriple& triple) {
  VerificationReport rep;
  auto residual_check = [&rep](const std::string& id,
                               const RationalFunction& lhs,
                               const RationalFunction& rhs) {
    RationalFunction d = lhs - rhs;
    rep.add(id, d.is_zero(), d.to_string());
  };

  // H in pole-chart coordinates, minus the chart Hamiltonian.
  RationalMap zw_to_xy = transition(ChartId::ZW, ChartId::XY);
  RationalMap uv_to_xy = transition(ChartId::UV, ChartId::XY);
  residual_check("gluing.H_minus_K_is_1_over_w",
                 zw_to_xy.pull_back(triple.H) - triple.K, parse("1/w"));
  residual_check("gluing.H_minus_L_is_minus_1_over_v",
                 uv_to_xy.pull_back(triple.H) - triple.L, parse("-1/v"));
  // K on the overlap, written in (u,v) through the inverse shift gluing.
  RationalMap uv_to_zw = transition(ChartId::UV, ChartId::ZW);
  residual_check("gluing.K_minus_L_is_minus_2_over_v",
                 uv_to_zw.pull_back(triple.K) - triple.L, parse("-2/v"));
  return rep;
}

VerificationReport sigma_shift_residuals(const HamiltonianTriple& triple) {
  VerificationReport rep;
  RationalFunction rk =
      sigma(ChartId::ZW).pull_back(triple.K) - triple.K - parse("2/w");
  rep.add("sigma_shift.K_shift_is_2_over_w", rk.is_zero(), rk.to_string());
  RationalFunction rl =
      sigma(ChartId::UV).pull_back(triple.L) - triple.L - parse("-2/v");
  rep.add("sigma_shift.L_shift_is_minus_2_over_v", rl.is_zero(),
          rl.to_string());
  return rep;
}

ChartVectorField vector_field(ChartId chart, const HamiltonianTriple& triple) {
  auto cv = chart_vars(chart);
  const RationalFunction* h = nullptr;
  switch (chart) {
    case ChartId::XY: h = &triple.H; break;
    case ChartId::ZW: h = &triple.K; break;
    case ChartId::UV: h = &triple.L; break;
  }
  return ChartVectorField{chart, h->derivative(cv[1]), -h->derivative(cv[0])};
}

RationalFunction lyapunov_U() {
  return parse("y^2 - 4*x^3 - 2*t*x + y/x");
}

}  // namespace oka
