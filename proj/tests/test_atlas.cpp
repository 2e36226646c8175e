#include <doctest.h>

#include <cmath>
#include <random>

#include "oka/atlas.hpp"

using namespace oka;

TEST_CASE("registered transitions match the published formulas") {
  RationalMap m = transition(ChartId::ZW, ChartId::UV);
  CHECK(m.components[0] == parse("z - 2*t/w^2 - 8/w^6"));
  CHECK(m.components[1] == parse("w"));
  RationalMap p = transition(ChartId::ZW, ChartId::XY);
  CHECK(p.components[0] == parse("1/w^2"));
  CHECK(p.components[1] == parse("-2/w^3 - t*w/2 - w^2/2 + z*w^3/2"));
  RationalMap q = transition(ChartId::UV, ChartId::XY);
  CHECK(q.components[0] == parse("1/v^2"));
  CHECK(q.components[1] == parse("2/v^3 + t*v/2 - v^2/2 + u*v^3/2"));
}

TEST_CASE("involution restrictions and rejection on XY") {
  RationalMap s = sigma(ChartId::ZW);
  CHECK(s.components[0] == parse("-z + 2*t/w^2 + 8/w^6"));
  CHECK(s.components[1] == parse("-w"));
  RationalMap su = sigma(ChartId::UV);
  CHECK(su.components[0] == parse("-u - 2*t/v^2 - 8/v^6"));
  CHECK(su.components[1] == parse("-v"));
  CHECK(s.compose(s).is_identity());
  CHECK_THROWS_AS(sigma(ChartId::XY), std::invalid_argument);
}

TEST_CASE("involution and coherence reports pass") {
  CHECK(check_involution().all_passed());
  CHECK(check_transition_coherence().all_passed());
  CHECK(check_inverse_compositions().all_passed());
}

TEST_CASE("all registered maps have Jacobian determinant one") {
  for (auto [from, to] : {std::pair{ChartId::ZW, ChartId::UV},
                          {ChartId::UV, ChartId::ZW},
                          {ChartId::ZW, ChartId::XY},
                          {ChartId::UV, ChartId::XY}}) {
    CAPTURE(to_string(from) + "->" + to_string(to));
    CHECK(check_symplectic(transition(from, to)).all_passed());
  }
  CHECK(check_symplectic(sigma(ChartId::ZW)).all_passed());
  CHECK(check_symplectic(sigma(ChartId::UV)).all_passed());
  CHECK(check_symplectic(sigma_cross()).all_passed());
  CHECK(check_symplectic(identity_map(ChartId::XY)).all_passed());
}

TEST_CASE("a sheared map is reported as non-symplectic") {
  RationalMap bad = identity_map(ChartId::ZW);
  bad.components[0] = parse("2*z");
  VerificationReport rep = check_symplectic(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.first_failure()->witness == "2");
}

TEST_CASE("composition respects chart typing") {
  CHECK_THROWS_AS(
      transition(ChartId::ZW, ChartId::UV)
          .compose(transition(ChartId::ZW, ChartId::XY)),
      std::invalid_argument);
}

TEST_CASE("numeric round trip through the branch-resolved inverse") {
  // For random points with |w| in [0.1, 10]: up to XY and back through the
  // branch the caller chose, recovering (x, y) to 1e-12 relative.
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logw(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_int_distribution<int> signd(0, 1);
  RationalMap to_xy = transition(ChartId::ZW, ChartId::XY);
  RationalMap back = transition(ChartId::XY, ChartId::ZW);
  for (int i = 0; i < 100; ++i) {
    double w = std::exp(logw(rng)) * (signd(rng) ? 1 : -1);
    double z = coord(rng), t = coord(rng);
    std::map<Variable, std::complex<double>> pt = {
        {vars::z(), z}, {vars::w(), w}, {vars::t(), t}};
    double x = to_xy.components[0].evaluate(pt).real();
    double y = to_xy.components[1].evaluate(pt).real();
    // Branch sign from the caller: keep the sheet the point came from.
    double w_back = (w > 0 ? 1.0 : -1.0) / std::sqrt(x);
    std::map<Variable, std::complex<double>> pt_back = {
        {vars::y(), y}, {vars::w(), w_back}, {vars::t(), t}};
    double z_back = back.components[0].evaluate(pt_back).real();
    double x_back = 1.0 / (w_back * w_back);
    std::map<Variable, std::complex<double>> pt2 = {
        {vars::z(), z_back}, {vars::w(), w_back}, {vars::t(), t}};
    double y_back = to_xy.components[1].evaluate(pt2).real();
    CHECK(std::abs(x_back - x) <= 1e-12 * std::max(1.0, std::abs(x)));
    CHECK(std::abs(y_back - y) <= 1e-12 * std::max(1.0, std::abs(y)));
    CHECK(std::abs(z_back - z) <= 1e-9 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("verification reports serialize to the JSON schema") {
  VerificationReport rep = check_involution();
  std::string json = rep.to_json();
  CHECK(json.find("\"check_id\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
}
