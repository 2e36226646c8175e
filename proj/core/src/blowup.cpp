#include "oka/blowup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oka/parser.hpp"

namespace oka {

namespace {

Variable gen_a() { return vars::a(); }
Variable gen_b() { return vars::b(); }

RationalFunction RF(const char* s) { return parse(s); }

std::map<Variable, RationalFunction> bind_ab(const RationalFunction& fa,
                                             const RationalFunction& fb) {
  return {{gen_a(), fa}, {gen_b(), fb}};
}

/// The monomial in (a, b) clearing the denominators of both components.
Monomial clearing_monomial(const std::array<RationalFunction, 2>& f) {
  int ea = 0, eb = 0;
  for (const auto& c : f) {
    const Polynomial& den = c.denominator();
    int ma = den.degree(gen_a());
    int mb = den.degree(gen_b());
    for (const auto& term : den.terms()) {
      ma = std::min(ma, term.mono.exponent(gen_a()));
      mb = std::min(mb, term.mono.exponent(gen_b()));
    }
    ea = std::max(ea, ma);
    eb = std::max(eb, mb);
  }
  return Monomial::of(gen_a(), ea) * Monomial::of(gen_b(), eb);
}

std::string point_string(const RationalFunction& c1,
                         const RationalFunction& c2) {
  return "(" + c1.to_string() + ", " + c2.to_string() + ")";
}

/// Exact square root of a polynomial, if one exists; used for quadratic
/// root discovery over Q(t).
std::optional<Polynomial> poly_sqrt(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  if (p.is_constant()) {
    Rational c = p.constant_value();
    if (c < 0) return std::nullopt;
    mpz_class num_root, den_root;
    if (!mpz_root(num_root.get_mpz_t(), c.get_num().get_mpz_t(), 2))
      return std::nullopt;
    if (!mpz_root(den_root.get_mpz_t(), c.get_den().get_mpz_t(), 2))
      return std::nullopt;
    return Polynomial(Rational(num_root, den_root));
  }
  Variable v = p.variables().back();
  int d = p.degree(v);
  if (d % 2 != 0) return std::nullopt;
  auto cs = p.coefficients_in(v);
  auto lead_root = poly_sqrt(cs[d]);
  if (!lead_root) return std::nullopt;
  Polynomial s =
      *lead_root * Polynomial::term(Rational(1), Monomial::of(v, d / 2));
  Polynomial rem = p - s * s;
  for (int k = d / 2 - 1; k >= 0 && !rem.is_zero(); --k) {
    Polynomial target = rem.coefficient_of(v, k + d / 2);
    auto sk = exact_divide(target, Rational(2) * *lead_root);
    if (!sk) return std::nullopt;
    Polynomial inc = *sk * Polynomial::term(Rational(1), Monomial::of(v, k));
    rem = rem - (Rational(2) * s + inc) * inc;
    s += inc;
  }
  if (!(s * s == p)) return std::nullopt;
  return s;
}

}  // namespace

std::string to_string(CurveOrigin o) {
  switch (o) {
    case CurveOrigin::HirzebruchSection: return "hirzebruch-section";
    case CurveOrigin::Fiber: return "fiber";
    case CurveOrigin::Exceptional: return "exceptional";
    case CurveOrigin::Ramification: return "ramification";
    case CurveOrigin::Resolution: return "resolution";
  }
  return "?";
}

std::vector<int> CurveGraph::degrees() const {
  std::vector<int> deg(ids.size(), 0);
  for (auto [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Bookkeeping

int Construction::add_chart(ChartRecord rec) {
  charts_.push_back(std::move(rec));
  return static_cast<int>(charts_.size()) - 1;
}

int Construction::add_curve(CurveRecord rec) {
  curves_.push_back(std::move(rec));
  return static_cast<int>(curves_.size()) - 1;
}

int Construction::chart_index(const std::string& name) const {
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (charts_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown chart: " + name);
}

const ChartRecord& Construction::chart(const std::string& name) const {
  return charts_[chart_index(name)];
}

int Construction::curve_index(const std::string& id) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown curve: " + id);
}

void Construction::add_incidence(int c1, int c2, int mult) {
  curves_[c1].incidences[curves_[c2].id] += mult;
  curves_[c2].incidences[curves_[c1].id] += mult;
}

void Construction::remove_incidence(int c1, int c2, int mult) {
  auto drop = [mult](CurveRecord& a, const CurveRecord& b) {
    auto it = a.incidences.find(b.id);
    if (it == a.incidences.end() || it->second < mult)
      throw std::logic_error("incidence underflow between " + a.id + " and " +
                             b.id);
    it->second -= mult;
    if (it->second == 0) a.incidences.erase(it);
  };
  drop(curves_[c1], curves_[c2]);
  drop(curves_[c2], curves_[c1]);
}

void Construction::snapshot_curves(LogEvent& ev) const {
  for (const auto& c : curves_)
    if (c.alive) ev.curve_state.emplace_back(c.id, c.self_intersection);
}

// ---------------------------------------------------------------------------
// Symbolic helpers

std::array<RationalFunction, 2> Construction::compose_maps(
    const std::array<RationalFunction, 2>& outer,
    const std::array<RationalFunction, 2>& inner) {
  auto bind = bind_ab(inner[0], inner[1]);
  return {outer[0].substitute(bind), outer[1].substitute(bind)};
}

std::array<RationalFunction, 2> Construction::map_to_ancestor(
    int from, int ancestor) const {
  std::array<RationalFunction, 2> acc = {RationalFunction(gen_a()),
                                         RationalFunction(gen_b())};
  int node = from;
  while (node != ancestor) {
    if (node < 0) throw std::logic_error("ancestor not on parent chain");
    acc = compose_maps(charts_[node].to_parent, acc);
    node = charts_[node].parent;
  }
  return acc;
}

std::array<RationalFunction, 2> Construction::map_to_root(
    const std::string& name) const {
  int node = chart_index(name);
  int root = node;
  while (charts_[root].parent >= 0) root = charts_[root].parent;
  return map_to_ancestor(node, root);
}

std::array<RationalFunction, 2> Construction::invert_fibered(
    const std::array<RationalFunction, 2>& m) {
  const Variable a = gen_a(), b = gen_b();
  if (m[1] != RationalFunction(b))
    throw std::logic_error("invert_fibered: second component must be b");
  RationalFunction f0 = m[0].substitute({{a, RationalFunction(Rational(0))}});
  RationalFunction f1 = m[0].derivative(a);
  if (f1.is_zero() || f1.depends_on(a))
    throw std::logic_error("invert_fibered: map not affine-linear in a");
  return {(RationalFunction(a) - f0) / f1, RationalFunction(b)};
}

std::array<RationalFunction, 2> Construction::pushforward(
    const std::array<RationalFunction, 2>& to_parent,
    const std::array<RationalFunction, 2>& parent_field) {
  const Variable a = gen_a(), b = gen_b(), t = vars::t();
  auto bind = bind_ab(to_parent[0], to_parent[1]);
  RationalFunction v0 =
      parent_field[0].substitute(bind) - to_parent[0].derivative(t);
  RationalFunction v1 =
      parent_field[1].substitute(bind) - to_parent[1].derivative(t);
  RationalFunction j00 = to_parent[0].derivative(a);
  RationalFunction j01 = to_parent[0].derivative(b);
  RationalFunction j10 = to_parent[1].derivative(a);
  RationalFunction j11 = to_parent[1].derivative(b);
  RationalFunction det = j00 * j11 - j01 * j10;
  if (det.is_zero())
    throw std::runtime_error("pushforward: degenerate chart map");
  return {(j11 * v0 - j01 * v1) / det, (j00 * v1 - j10 * v0) / det};
}

// ---------------------------------------------------------------------------
// Verification helpers

void Construction::verify_map_equals(
    const std::string& check_id, const std::array<RationalFunction, 2>& got,
    const std::array<RationalFunction, 2>& expected) {
  RationalFunction d0 = got[0] - expected[0];
  RationalFunction d1 = got[1] - expected[1];
  bool ok = d0.is_zero() && d1.is_zero();
  report_.add(check_id, ok,
              ok ? "" : "(" + d0.to_string() + ", " + d1.to_string() + ")");
}

void Construction::verify_leaf_tangency(const std::string& check_id,
                                        int chart, char axis,
                                        bool expect_leaf) {
  // In cleared Pfaffian form the projective direction is (A, B, D) for
  // D da - A dt = 0, D db - B dt = 0. The axis is a vertical leaf iff the
  // dt-component and the transverse component vanish along it while the
  // tangent component does not.
  const ChartRecord& ch = charts_[chart];
  Polynomial g = poly_gcd(ch.field[0].denominator(),
                          ch.field[1].denominator());
  Polynomial den_lcm = *exact_divide(
      ch.field[0].denominator() * ch.field[1].denominator(), g);
  RationalFunction D{den_lcm};
  RationalFunction A = ch.field[0] * D;
  RationalFunction B = ch.field[1] * D;
  if (!A.is_polynomial() || !B.is_polynomial())
    throw std::logic_error("leaf tangency: clearing failed");

  Variable axis_var = axis == 'a' ? gen_a() : gen_b();
  auto restrict0 = [axis_var](const RationalFunction& f) {
    return f.substitute({{axis_var, RationalFunction(Rational(0))}});
  };
  RationalFunction tangent = axis == 'a' ? B : A;
  RationalFunction transverse = axis == 'a' ? A : B;
  bool vertical = restrict0(transverse).is_zero() &&
                  restrict0(D).is_zero() && !restrict0(tangent).is_zero();
  bool ok = vertical == expect_leaf;
  report_.add(check_id, ok,
              ok ? ""
                 : "direction on axis: (" + restrict0(A).to_string() + ", " +
                       restrict0(B).to_string() + ", dt " +
                       restrict0(D).to_string() + ")");
}

void Construction::verify_singular_point(int step, int chart,
                                         const RationalFunction& c1,
                                         const RationalFunction& c2) {
  const ChartRecord& ch = charts_[chart];
  SingularPointCheck check;
  check.step = step;
  check.chart = ch.name;
  check.location = point_string(c1, c2);

  Monomial m = clearing_monomial(ch.field);
  RationalFunction clear{Polynomial::term(Rational(1), m)};
  std::array<RationalFunction, 2> cleared = {ch.field[0] * clear,
                                             ch.field[1] * clear};
  check.cleared_field_vanishes = true;
  for (const auto& h : cleared) {
    try {
      RationalFunction val = h.substitute(bind_ab(c1, c2));
      if (!val.is_zero()) {
        check.cleared_field_vanishes = false;
        check.witness = val.to_string();
      }
    } catch (const pole_collapse_error& e) {
      check.cleared_field_vanishes = false;
      check.witness = e.what();
    }
  }

  // Discovery: solve for the cleared field's zeros on the distinguished
  // curve through the stated point. The curve is the newest exceptional
  // axis when one exists, otherwise the axis the point lies on.
  auto axis_score = [this](int curve) {
    if (curve < 0) return -1;
    if (curves_[curve].origin == CurveOrigin::Exceptional ||
        curves_[curve].origin == CurveOrigin::Ramification)
      return curve;
    return -1;
  };
  Variable restricted = gen_b();  // the coordinate set to zero
  int sa = axis_score(ch.axis_a_curve), sb = axis_score(ch.axis_b_curve);
  if (sa < 0 && sb < 0) {
    restricted = (c1.is_zero() && ch.axis_a_curve >= 0) ? gen_a() : gen_b();
  } else {
    restricted = sa > sb ? gen_a() : gen_b();
  }
  const Variable along = restricted == gen_a() ? gen_b() : gen_a();
  const RationalFunction stated = restricted == gen_a() ? c2 : c1;

  Polynomial g;
  bool discovery_valid = true;
  for (const auto& h : cleared) {
    RationalFunction r =
        h.substitute({{restricted, RationalFunction(Rational(0))}});
    if (r.is_zero()) continue;
    if (r.denominator().depends_on(along)) {
      discovery_valid = false;
      break;
    }
    g = poly_gcd(g, r.numerator());
  }
  check.stated_point_discovered = false;
  if (discovery_valid && !g.is_zero()) {
    std::vector<RationalFunction> roots;
    int k = 0;
    while (g.degree(along) > 0 &&
           g.substitute({{along, Polynomial()}}).is_zero()) {
      g = *exact_divide(g, Polynomial(along));
      ++k;
    }
    if (k > 0) roots.emplace_back(Rational(0));
    auto cs = g.coefficients_in(along);
    int d = static_cast<int>(cs.size()) - 1;
    if (d == 1) {
      roots.push_back(RationalFunction(-cs[0]) / RationalFunction(cs[1]));
    } else if (d == 2) {
      Polynomial disc = cs[1] * cs[1] - Rational(4) * cs[2] * cs[0];
      if (auto s = poly_sqrt(disc)) {
        RationalFunction twoa{Rational(2) * cs[2]};
        roots.push_back(
            (RationalFunction(-cs[1]) + RationalFunction(*s)) / twoa);
        roots.push_back(
            (RationalFunction(-cs[1]) - RationalFunction(*s)) / twoa);
      }
    }
    for (const auto& root : roots) {
      check.discovered_points.push_back(root.to_string());
      if (root == stated) check.stated_point_discovered = true;
    }
  }
  singular_checks_.push_back(std::move(check));
}

VerificationReport Construction::singular_point_report() const {
  VerificationReport rep;
  for (const auto& c : singular_checks_) {
    rep.add("singular_point." + std::to_string(c.step) + "." + c.chart +
                c.location,
            c.cleared_field_vanishes && c.stated_point_discovered,
            c.cleared_field_vanishes
                ? "stated point not among discovered roots"
                : c.witness);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Blowup

Construction::BlowupResult Construction::blowup_at(
    int node, const RationalFunction& center, const std::string& q_name,
    const std::string& cap_name, int exceptional_curve) {
  if (center.depends_on(gen_a()) || center.depends_on(gen_b()))
    throw std::invalid_argument(
        "blowup center must be (c(t), 0) on the axis {b = 0}");
  ChartRecord& base = charts_[node];

  // Curves through (center, 0): the axis {b = 0} always contains the
  // center, the axis {a = 0} only when the center is the origin.
  std::vector<int> through;
  if (base.axis_b_curve >= 0) through.push_back(base.axis_b_curve);
  if (center.is_zero() && base.axis_a_curve >= 0)
    through.push_back(base.axis_a_curve);

  for (int c : through) curves_[c].self_intersection -= 1;
  if (through.size() == 2) remove_incidence(through[0], through[1], 1);
  for (int c : through) add_incidence(exceptional_curve, c, 1);

  // Recipe charts: x - c = q p, y = p and x - c = Q, y = Q P.
  ChartRecord qc;
  qc.name = q_name;
  qc.parent = node;
  qc.to_parent = {
      center + RationalFunction(gen_a()) * RationalFunction(gen_b()),
      RationalFunction(gen_b())};
  qc.field = pushforward(qc.to_parent, base.field);
  qc.axis_b_curve = exceptional_curve;
  qc.axis_a_curve = center.is_zero() ? base.axis_a_curve : -1;

  ChartRecord cc;
  cc.name = cap_name;
  cc.parent = node;
  cc.to_parent = {center + RationalFunction(gen_a()),
                  RationalFunction(gen_a()) * RationalFunction(gen_b())};
  cc.field = pushforward(cc.to_parent, base.field);
  cc.axis_a_curve = exceptional_curve;
  cc.axis_b_curve = base.axis_b_curve;

  BlowupResult res{};
  res.q_chart = add_chart(std::move(qc));
  res.cap_chart = add_chart(std::move(cc));
  return res;
}

// ---------------------------------------------------------------------------
// The replay

void Construction::run() {
  charts_.clear();
  curves_.clear();
  events_.clear();
  report_ = VerificationReport();
  singular_checks_.clear();

  const Variable a = gen_a(), b = gen_b();
  const RationalFunction zero{Rational(0)};
  const std::array<RationalFunction, 2> point_reflection = {
      -RationalFunction(a), -RationalFunction(b)};

  // -- Step 1: the Hirzebruch surface of degree 2, four charts glued by
  //    q1 q2 = 1, p1 = -q2^2 p2; q3 = q1, p1 p3 = 1; q4 = q2, p2 p4 = 1,
  //    with (q3, p3) the original (x, y) chart.
  int section_plus =
      add_curve({"section_plus", 2, CurveOrigin::HirzebruchSection, false,
                 false, true, {}});
  int section_minus =
      add_curve({"section_minus", -2, CurveOrigin::HirzebruchSection, true,
                 false, true, {}});
  int fiber_inf =
      add_curve({"fiber_inf", 0, CurveOrigin::Fiber, true, false, true, {}});
  add_incidence(section_minus, fiber_inf, 1);
  add_incidence(section_plus, fiber_inf, 1);

  ChartRecord root;
  root.name = "q3p3";
  root.parent = -1;
  root.to_parent = {RationalFunction(a), RationalFunction(b)};
  root.field = {RationalFunction(b), parse("6*a^2 + t")};
  root.axis_b_curve = section_plus;  // {p3 = 0} = {y = 0}
  int q3p3 = add_chart(std::move(root));

  ChartRecord c1p1;
  c1p1.name = "q1p1";
  c1p1.parent = q3p3;
  c1p1.to_parent = {RationalFunction(a), RF("1/b")};  // q3 = q1, p3 = 1/p1
  c1p1.field = pushforward(c1p1.to_parent, charts_[q3p3].field);
  c1p1.axis_b_curve = section_minus;
  int q1p1 = add_chart(std::move(c1p1));

  ChartRecord c2p2;
  c2p2.name = "q2p2";
  c2p2.parent = q1p1;
  c2p2.to_parent = {RF("1/a"), RF("-a^2*b")};  // q1 = 1/q2, p1 = -q2^2 p2
  c2p2.field = pushforward(c2p2.to_parent, charts_[q1p1].field);
  c2p2.axis_a_curve = fiber_inf;
  c2p2.axis_b_curve = section_minus;
  int q2p2 = add_chart(std::move(c2p2));

  ChartRecord c4p4;
  c4p4.name = "q4p4";
  c4p4.parent = q2p2;
  c4p4.to_parent = {RationalFunction(a), RF("1/b")};  // q2 = q4, p2 = 1/p4
  c4p4.field = pushforward(c4p4.to_parent, charts_[q2p2].field);
  c4p4.axis_a_curve = fiber_inf;
  c4p4.axis_b_curve = section_plus;
  int q4p4 = add_chart(std::move(c4p4));

  {
    LogEvent ev;
    ev.kind = "gluing";
    ev.step = 1;
    ev.description =
        "Hirzebruch surface of degree 2: charts q1p1..q4p4 glued by q1q2=1, "
        "p1=-q2^2*p2, q3=q1, p1p3=1, q4=q2, p2p4=1; vertical leaves "
        "section_minus and fiber_inf; accessible singular point at "
        "(q4,p4)=(0,0)";
    ev.charts_after = {"q3p3", "q1p1", "q2p2", "q4p4"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }

  verify_leaf_tangency("leaf.step1.section_minus_in_q1p1", q1p1, 'b', true);
  verify_leaf_tangency("leaf.step1.section_minus_in_q2p2", q2p2, 'b', true);
  verify_leaf_tangency("leaf.step1.fiber_inf_in_q4p4", q4p4, 'a', true);
  verify_leaf_tangency("leaf.step1.fiber_inf_in_q2p2", q2p2, 'a', true);
  verify_leaf_tangency("leaf.step1.section_plus_not_leaf", q4p4, 'b', false);
  verify_singular_point(0, q4p4, zero, zero);

  // -- Step 2: blowup at a^(0) = (q4, p4) = (0, 0).
  int E1 =
      add_curve({"E1", -1, CurveOrigin::Exceptional, true, false, true, {}});
  BlowupResult s2 = blowup_at(q4p4, zero, "qp1", "QP1", E1);
  {
    LogEvent ev;
    ev.kind = "blowup";
    ev.step = 2;
    ev.description =
        "blowup at (q4,p4)=(0,0); exceptional curve E1; vertical leaves E1 "
        "and the proper image of fiber_inf; singular point at (0,0) of qp1";
    ev.charts_before = {"q4p4"};
    ev.charts_after = {"qp1", "QP1"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }
  verify_leaf_tangency("leaf.step2.E1_in_qp1", s2.q_chart, 'b', true);
  verify_leaf_tangency("leaf.step2.E1_in_QP1", s2.cap_chart, 'a', true);
  verify_leaf_tangency("leaf.step2.fiber_in_qp1", s2.q_chart, 'a', true);
  verify_leaf_tangency("leaf.step2.section_plus_not_leaf_in_QP1",
                       s2.cap_chart, 'b', false);
  verify_singular_point(1, s2.q_chart, zero, zero);

  // -- Step 3: blowup at a^(1) = (0, 0) of qp1.
  int E2 =
      add_curve({"E2", -1, CurveOrigin::Exceptional, true, false, true, {}});
  BlowupResult s3 = blowup_at(s2.q_chart, zero, "qp2", "QP2", E2);
  {
    LogEvent ev;
    ev.kind = "blowup";
    ev.step = 3;
    ev.description =
        "blowup at (0,0) of qp1; exceptional curve E2; vertical leaves E2 "
        "and the proper images of fiber_inf and E1; E1 is now the "
        "(-2)-curve to be covered; singular point at (0,4) of QP2";
    ev.charts_before = {"qp1"};
    ev.charts_after = {"qp2", "QP2"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }
  report_.add("ledger.step3.E1_is_minus_2_curve",
              curves_[E1].self_intersection == -2,
              std::to_string(curves_[E1].self_intersection));
  report_.add("ledger.step3.fiber_is_minus_2",
              curves_[fiber_inf].self_intersection == -2,
              std::to_string(curves_[fiber_inf].self_intersection));
  verify_leaf_tangency("leaf.step3.E2_in_qp2", s3.q_chart, 'b', true);
  verify_leaf_tangency("leaf.step3.E2_in_QP2", s3.cap_chart, 'a', true);
  verify_leaf_tangency("leaf.step3.fiber_in_qp2", s3.q_chart, 'a', true);
  verify_leaf_tangency("leaf.step3.E1_in_QP2", s3.cap_chart, 'b', true);
  verify_singular_point(2, s3.cap_chart, zero, RationalFunction(Rational(4)));

  // -- Step 4: branched double cover of U = QP1 ∪ QP2 ramifying along D
  //    over the (-2)-curve E1: Q1 = s^2, P1 = r; Q2 = S, P2 = R^2.
  if (curves_[E1].self_intersection != -2)
    throw std::logic_error("double cover: branch curve is not a (-2)-curve");
  int D_curve =
      add_curve({"D", -1, CurveOrigin::Ramification, true, false, true, {}});
  // The branch curve is excised by the surgery; D replaces it upstairs,
  // inheriting its incidences inside U.
  curves_[D_curve].incidences = curves_[E1].incidences;
  for (const auto& [other, mult] : curves_[D_curve].incidences) {
    int oi = curve_index(other);
    curves_[oi].incidences.erase("E1");
    curves_[oi].incidences["D"] = mult;
  }
  curves_[E1].incidences.clear();
  curves_[E1].alive = false;
  // Pullback doubles the self-intersection of the non-branch curves
  // meeting the covered neighborhood (E2 and the section through it).
  curves_[E2].self_intersection *= 2;
  curves_[section_plus].self_intersection *= 2;

  ChartRecord rs;
  rs.name = "rs";
  rs.parent = s2.cap_chart;  // over QP1
  rs.to_parent = {RF("b^2"), RationalFunction(a)};  // Q1 = s^2, P1 = r
  rs.field = pushforward(rs.to_parent, charts_[s2.cap_chart].field);
  rs.axis_a_curve = section_plus;  // {r = 0}
  rs.axis_b_curve = D_curve;       // {s = 0}
  int rs_chart = add_chart(std::move(rs));

  ChartRecord RS;
  RS.name = "RS";
  RS.parent = s3.cap_chart;  // over QP2
  RS.to_parent = {RationalFunction(b), RF("a^2")};  // Q2 = S, P2 = R^2
  RS.field = pushforward(RS.to_parent, charts_[s3.cap_chart].field);
  RS.axis_a_curve = D_curve;  // {R = 0}
  RS.axis_b_curve = E2;       // {S = 0}
  int RS_chart = add_chart(std::move(RS));

  // Deck involution: (r,s) -> (r,-s), (R,S) -> (-R,S).
  const std::array<RationalFunction, 2> deck_rs = {RationalFunction(a),
                                                   -RationalFunction(b)};
  const std::array<RationalFunction, 2> deck_RS = {-RationalFunction(a),
                                                   RationalFunction(b)};
  {
    LogEvent ev;
    ev.kind = "double_cover";
    ev.step = 4;
    ev.description =
        "branched double cover of U = QP1 ∪ QP2 ramifying along the "
        "(-1)-curve D over E1; deck involution (r,s)->(r,-s), "
        "(R,S)->(-R,S); the singular point lifts to (R,S)=(2,0) ⊕ (-2,0)";
    ev.charts_before = {"QP1", "QP2"};
    ev.charts_after = {"rs", "RS"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }
  report_.add("ledger.step4.D_is_minus_1",
              curves_[D_curve].self_intersection == -1,
              std::to_string(curves_[D_curve].self_intersection));
  verify_map_equals("cover.projection_deck_invariant_rs",
                    compose_maps(charts_[rs_chart].to_parent, deck_rs),
                    charts_[rs_chart].to_parent);
  verify_map_equals("cover.projection_deck_invariant_RS",
                    compose_maps(charts_[RS_chart].to_parent, deck_RS),
                    charts_[RS_chart].to_parent);
  verify_map_equals("cover.deck_rs_involution",
                    compose_maps(deck_rs, deck_rs),
                    {RationalFunction(a), RationalFunction(b)});
  verify_map_equals("cover.deck_RS_involution",
                    compose_maps(deck_RS, deck_RS),
                    {RationalFunction(a), RationalFunction(b)});
  {
    // The lifted pair sits over the singular point (Q2,P2) = (0,4).
    auto up = charts_[RS_chart].to_parent;
    auto lift_image = [&](int r0) {
      auto bind = bind_ab(RationalFunction(Rational(r0)), zero);
      return std::array<RationalFunction, 2>{up[0].substitute(bind),
                                             up[1].substitute(bind)};
    };
    verify_map_equals("cover.lift_plus_over_a2", lift_image(2),
                      {zero, RationalFunction(Rational(4))});
    verify_map_equals("cover.lift_minus_over_a2", lift_image(-2),
                      {zero, RationalFunction(Rational(4))});
  }
  verify_leaf_tangency("leaf.step4.D_in_rs", rs_chart, 'b', true);
  verify_leaf_tangency("leaf.step4.D_in_RS", RS_chart, 'a', true);
  verify_leaf_tangency("leaf.step4.E2_upstairs_in_RS", RS_chart, 'b', true);
  verify_leaf_tangency("leaf.step4.section_plus_upstairs_not_leaf", rs_chart,
                       'a', false);
  verify_singular_point(2, RS_chart, RationalFunction(Rational(2)), zero);
  verify_singular_point(2, RS_chart, RationalFunction(Rational(-2)), zero);

  // -- Step 5: blowdown of D to the sigma-fixed smooth point p.
  if (curves_[D_curve].self_intersection != -1)
    throw std::logic_error("blowdown: contracted curve is not a (-1)-curve");
  ChartRecord w_chart;
  w_chart.name = "r2s2";
  w_chart.parent = rs_chart;
  w_chart.to_parent = {RF("a/b"), RationalFunction(b)};  // r = r2/s2, s = s2
  w_chart.field = pushforward(w_chart.to_parent, charts_[rs_chart].field);
  w_chart.axis_a_curve = section_plus;
  w_chart.axis_b_curve = E2;
  int r2s2 = add_chart(std::move(w_chart));

  {
    // +1 per transverse intersection with D; curves through distinct
    // points of D meet at p afterwards.
    std::vector<std::pair<int, int>> touched;
    for (const auto& [other, mult] : curves_[D_curve].incidences)
      touched.emplace_back(curve_index(other), mult);
    for (auto [idx, mult] : touched)
      curves_[idx].self_intersection += mult * mult;
    for (std::size_t i = 0; i < touched.size(); ++i)
      for (std::size_t j = i + 1; j < touched.size(); ++j)
        add_incidence(touched[i].first, touched[j].first,
                      touched[i].second * touched[j].second);
    for (auto [idx, mult] : touched) curves_[idx].incidences.erase("D");
    curves_[D_curve].incidences.clear();
    curves_[D_curve].alive = false;
  }
  {
    LogEvent ev;
    ev.kind = "blowdown";
    ev.step = 5;
    ev.description =
        "blowdown of the (-1)-curve D to the smooth sigma-fixed point "
        "p=(r2,s2)=(0,0); the leaf {S=0} descends to {s2=0}; singular pair "
        "at (2,0) ⊕ (-2,0)";
    ev.charts_before = {"rs", "RS"};
    ev.charts_after = {"r2s2"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }
  {
    // Induced involution on W via both blowdown routes: (a,b) -> (-a,-b).
    const std::array<RationalFunction, 2> psi = {
        RationalFunction(a) * RationalFunction(b), RationalFunction(b)};
    verify_map_equals(
        "blowdown.induced_involution_via_rs",
        compose_maps(psi, compose_maps(deck_rs, invert_fibered(psi))),
        point_reflection);
    const std::array<RationalFunction, 2> psi2 = {
        RationalFunction(a), RationalFunction(a) * RationalFunction(b)};
    const std::array<RationalFunction, 2> psi2_inv = {
        RationalFunction(a), RationalFunction(b) / RationalFunction(a)};
    verify_map_equals(
        "blowdown.induced_involution_via_RS",
        compose_maps(psi2, compose_maps(deck_RS, psi2_inv)),
        point_reflection);
  }
  verify_leaf_tangency("leaf.step5.E2_descends_to_s2_axis", r2s2, 'b', true);
  verify_singular_point(2, r2s2, RationalFunction(Rational(2)), zero);
  verify_singular_point(2, r2s2, RationalFunction(Rational(-2)), zero);

  // -- Steps 6..11: the pair of sigma-equivariant six-time blowups,
  //    replayed on both horns; each exceptional pair is one record.
  struct HornStep {
    int step;
    const char* plus_center;
    const char* minus_center;
    const char* plus_q;
    const char* plus_cap;
    const char* minus_q;
    const char* minus_cap;
    const char* curve;
    bool leaf;
  };
  const HornStep horn_steps[] = {
      {6, "2", "-2", "z3w3", "Z3W3", "u3v3", "U3V3", "X6", true},
      {7, "0", "0", "z4w4", "Z4W4", "u4v4", "U4V4", "X7", true},
      {8, "0", "0", "z5w5", "Z5W5", "u5v5", "U5V5", "X8", true},
      {9, "0", "0", "z6w6", "Z6W6", "u6v6", "U6V6", "X9", true},
      {10, "t/2", "-t/2", "z7w7", "Z7W7", "u7v7", "U7V7", "X10", true},
      {11, "1/2", "1/2", "z8w8", "Z8W8", "u8v8", "U8V8", "X11", false},
  };

  int plus_node = r2s2, minus_node = r2s2;
  for (const auto& hs : horn_steps) {
    int X = add_curve({hs.curve, -1, CurveOrigin::Exceptional, hs.leaf, true,
                       true, {}});
    // The ledger rules run on the plus horn; the minus horn repeats them by
    // sigma-equivariance, so only a sigma-invariant (unpaired) curve hit on
    // both horns receives a second decrement.
    int before_axis_b = charts_[plus_node].axis_b_curve;
    BlowupResult bp = blowup_at(plus_node, parse(hs.plus_center), hs.plus_q,
                                hs.plus_cap, X);
    if (before_axis_b >= 0 && !curves_[before_axis_b].paired)
      curves_[before_axis_b].self_intersection -= 1;

    // Minus-horn charts.
    const RationalFunction mc_center = parse(hs.minus_center);
    int m_axis_a = charts_[minus_node].axis_a_curve;
    int m_axis_b = charts_[minus_node].axis_b_curve;
    ChartRecord mq;
    mq.name = hs.minus_q;
    mq.parent = minus_node;
    mq.to_parent = {
        mc_center + RationalFunction(a) * RationalFunction(b),
        RationalFunction(b)};
    mq.field = pushforward(mq.to_parent, charts_[minus_node].field);
    mq.axis_b_curve = X;
    mq.axis_a_curve = mc_center.is_zero() ? m_axis_a : -1;
    int mq_idx = add_chart(std::move(mq));
    ChartRecord mc;
    mc.name = hs.minus_cap;
    mc.parent = minus_node;
    mc.to_parent = {mc_center + RationalFunction(a),
                    RationalFunction(a) * RationalFunction(b)};
    mc.field = pushforward(mc.to_parent, charts_[minus_node].field);
    mc.axis_a_curve = X;
    mc.axis_b_curve = m_axis_b;
    add_chart(std::move(mc));

    {
      LogEvent ev;
      ev.kind = "blowup";
      ev.step = hs.step;
      ev.description = std::string("paired blowup at (") + hs.plus_center +
                       ", 0) ⊕ (" + hs.minus_center +
                       ", 0); exceptional pair " + hs.curve +
                       (hs.leaf ? ""
                                : " (not a vertical leaf; no singular "
                                  "point on it)");
      ev.charts_before = {charts_[plus_node].name, charts_[minus_node].name};
      ev.charts_after = {hs.plus_q, hs.plus_cap, hs.minus_q, hs.minus_cap};
      snapshot_curves(ev);
      events_.push_back(std::move(ev));
    }

    const std::string step_tag = "leaf.step" + std::to_string(hs.step);
    verify_leaf_tangency(step_tag + "." + hs.curve + "_in_" + hs.plus_q,
                         bp.q_chart, 'b', hs.leaf);
    verify_leaf_tangency(step_tag + "." + hs.curve + "_in_" + hs.minus_q,
                         mq_idx, 'b', hs.leaf);
    if (charts_[bp.cap_chart].axis_b_curve >= 0)
      verify_leaf_tangency(step_tag + ".proper_image_in_" + hs.plus_cap,
                           bp.cap_chart, 'b', true);

    plus_node = bp.q_chart;
    minus_node = mq_idx;
  }

  report_.add("ledger.horns.X6_to_X10_are_minus_2",
              curves_[curve_index("X6")].self_intersection == -2 &&
                  curves_[curve_index("X7")].self_intersection == -2 &&
                  curves_[curve_index("X8")].self_intersection == -2 &&
                  curves_[curve_index("X9")].self_intersection == -2 &&
                  curves_[curve_index("X10")].self_intersection == -2,
              "");
  report_.add("ledger.horns.X11_is_minus_1",
              curves_[curve_index("X11")].self_intersection == -1,
              std::to_string(curves_[curve_index("X11")].self_intersection));

  // Stated singular points along the horns (superscript index as step id).
  verify_singular_point(3, chart_index("z3w3"), zero, zero);
  verify_singular_point(3, chart_index("u3v3"), zero, zero);
  verify_singular_point(4, chart_index("z4w4"), zero, zero);
  verify_singular_point(4, chart_index("u4v4"), zero, zero);
  verify_singular_point(5, chart_index("z5w5"), zero, zero);
  verify_singular_point(5, chart_index("u5v5"), zero, zero);
  verify_singular_point(6, chart_index("z6w6"), RF("t/2"), zero);
  verify_singular_point(6, chart_index("u6v6"), RF("-t/2"), zero);
  verify_singular_point(7, chart_index("z7w7"), RF("1/2"), zero);
  verify_singular_point(7, chart_index("u7v7"), RF("1/2"), zero);

  // Step 11's exceptional pair carries no singular point: with the
  // Pfaffian direction (A, B, D), no common zero lies on either axis view.
  {
    auto no_singular_on_axis = [this](const std::string& chart_name,
                                      char axis) {
      const ChartRecord& ch = chart(chart_name);
      Polynomial g0 = poly_gcd(ch.field[0].denominator(),
                               ch.field[1].denominator());
      Polynomial den_lcm = *exact_divide(
          ch.field[0].denominator() * ch.field[1].denominator(), g0);
      RationalFunction Dp{den_lcm};
      std::array<RationalFunction, 3> dir = {ch.field[0] * Dp,
                                             ch.field[1] * Dp, Dp};
      Variable axis_var = axis == 'a' ? gen_a() : gen_b();
      Variable along = axis == 'a' ? gen_b() : gen_a();
      Polynomial g;
      for (const auto& f : dir) {
        RationalFunction r =
            f.substitute({{axis_var, RationalFunction(Rational(0))}});
        if (r.is_zero()) continue;
        g = poly_gcd(g, r.numerator());
      }
      return !g.is_zero() && g.degree(along) == 0;
    };
    bool ok = no_singular_on_axis("z8w8", 'b') &&
              no_singular_on_axis("Z8W8", 'a') &&
              no_singular_on_axis("u8v8", 'b') &&
              no_singular_on_axis("U8V8", 'a');
    report_.add("step11.no_singular_point_on_exceptional", ok, "");
  }

  // Intermediate involution formulas along the plus horn, conjugated from
  // the W involution (a,b) -> (-a,-b) through the blowup chains.
  {
    const std::pair<const char*, const char*> expected[] = {
        {"z3w3", "a + 4/b"},
        {"z4w4", "-a - 4/b^2"},
        {"z5w5", "a + 4/b^3"},
        {"z6w6", "-a - 4/b^4"},
        {"z7w7", "a + t/b + 4/b^5"},
        {"z8w8", "-a - t/b^2 - 4/b^6"},
    };
    for (const auto& [name, first] : expected) {
      auto chain = map_to_ancestor(chart_index(name), r2s2);
      auto sigma_k = compose_maps(
          invert_fibered(chain), compose_maps(point_reflection, chain));
      verify_map_equals(std::string("sigma.intermediate.") + name, sigma_k,
                        {parse(first), -RationalFunction(b)});
    }
  }

  // -- Step 12: final rescale z8 = -z/2, w8 = w (and u8 = -u/2, v8 = v),
  //    quotient identifying the horns, gluing, and the minimal resolution
  //    of the A1 point.
  ChartRecord zw;
  zw.name = "zw";
  zw.parent = chart_index("z8w8");
  zw.to_parent = {RF("-a/2"), RationalFunction(b)};
  zw.field = pushforward(zw.to_parent, charts_[chart_index("z8w8")].field);
  zw.axis_b_curve = curve_index("X11");
  int zw_chart = add_chart(std::move(zw));

  ChartRecord uv;
  uv.name = "uv";
  uv.parent = chart_index("u8v8");
  uv.to_parent = {RF("-a/2"), RationalFunction(b)};
  uv.field = pushforward(uv.to_parent, charts_[chart_index("u8v8")].field);
  uv.axis_b_curve = curve_index("X11");
  int uv_chart = add_chart(std::move(uv));

  // Quotient: each identified pair becomes a single curve with the same
  // self-intersection; the invariant curves through the fixed point p gain
  // (s-1)/2; the A1 point is resolved by one (-2)-curve.
  for (auto& c : curves_)
    if (c.alive && c.paired) c.paired = false;
  auto quotient_through_p = [this](int idx) {
    int s = curves_[idx].self_intersection;
    if ((s - 1) % 2 != 0)
      throw std::logic_error("quotient: invariant curve with even "
                             "self-intersection through the fixed point");
    curves_[idx].self_intersection = (s - 1) / 2;
  };
  quotient_through_p(E2);
  quotient_through_p(section_plus);
  int Eres =
      add_curve({"Eres", -2, CurveOrigin::Resolution, true, false, true, {}});
  remove_incidence(E2, section_plus, 1);
  add_incidence(E2, Eres, 1);
  add_incidence(section_plus, Eres, 1);
  {
    LogEvent ev;
    ev.kind = "quotient_and_resolve";
    ev.step = 12;
    ev.description =
        "final charts zw, uv defined by the rescale z8=-z/2, w8=w and "
        "u8=-u/2, v8=v; quotient by sigma identifies the horns (the X6..X11 "
        "pairs become single curves); gluing with the complement of the "
        "excised branch curve; the A1 point at p is resolved by the "
        "(-2)-curve Eres";
    ev.charts_before = {"z8w8", "u8v8"};
    ev.charts_after = {"zw", "uv"};
    snapshot_curves(ev);
    events_.push_back(std::move(ev));
  }

  // -- The Theorem-1 checks: accumulated maps against the atlas formulas.
  auto rename_ab = [](const RationalFunction& f, ChartId chart_id) {
    auto cv = chart_vars(chart_id);
    return f.substitute({{gen_a(), RationalFunction(cv[0])},
                         {gen_b(), RationalFunction(cv[1])}});
  };
  auto as_chart = [&](const std::array<RationalFunction, 2>& m,
                      ChartId chart_id) {
    return std::array<RationalFunction, 2>{rename_ab(m[0], chart_id),
                                           rename_ab(m[1], chart_id)};
  };

  {
    auto acc = map_to_root("zw");
    RationalMap expected = transition(ChartId::ZW, ChartId::XY);
    verify_map_equals("theorem1.accumulated_zw_to_xy_is_pole_map",
                      as_chart(acc, ChartId::ZW),
                      {expected.components[0], expected.components[1]});
  }
  {
    auto acc = map_to_root("uv");
    RationalMap expected = transition(ChartId::UV, ChartId::XY);
    verify_map_equals("theorem1.accumulated_uv_to_xy_is_pole_map",
                      as_chart(acc, ChartId::UV),
                      {expected.components[0], expected.components[1]});
  }
  {
    auto plus_chain = map_to_ancestor(zw_chart, r2s2);
    auto minus_chain = map_to_ancestor(uv_chart, r2s2);
    auto glue = compose_maps(invert_fibered(minus_chain), plus_chain);
    RationalMap expected = transition(ChartId::ZW, ChartId::UV);
    verify_map_equals("theorem1.accumulated_gluing_zw_to_uv",
                      as_chart(glue, ChartId::ZW),
                      {expected.components[0], expected.components[1]});

    auto sigma_auto_zw = compose_maps(
        invert_fibered(plus_chain),
        compose_maps(point_reflection, plus_chain));
    RationalMap s_zw = sigma(ChartId::ZW);
    verify_map_equals("theorem1.accumulated_sigma_zw",
                      as_chart(sigma_auto_zw, ChartId::ZW),
                      {s_zw.components[0], s_zw.components[1]});

    auto sigma_auto_uv = compose_maps(
        invert_fibered(minus_chain),
        compose_maps(point_reflection, minus_chain));
    RationalMap s_uv = sigma(ChartId::UV);
    verify_map_equals("theorem1.accumulated_sigma_uv",
                      as_chart(sigma_auto_uv, ChartId::UV),
                      {s_uv.components[0], s_uv.components[1]});

    auto sigma_cross_acc = compose_maps(
        invert_fibered(minus_chain),
        compose_maps(point_reflection, plus_chain));
    RationalMap s_cross = sigma_cross();
    verify_map_equals("theorem1.accumulated_sigma_cross",
                      as_chart(sigma_cross_acc, ChartId::ZW),
                      {s_cross.components[0], s_cross.components[1]});
  }
  {
    // Final-chart regularity: the pushforward field is polynomial and is
    // the Hamiltonian field of the built-in triple.
    HamiltonianTriple triple = builtin_triple();
    ChartVectorField zw_field = vector_field(ChartId::ZW, triple);
    const auto& f = charts_[zw_chart].field;
    report_.add("theorem1.zw_field_polynomial",
                f[0].is_polynomial() && f[1].is_polynomial(),
                f[0].to_string() + " ; " + f[1].to_string());
    verify_map_equals("theorem1.zw_field_is_hamiltonian",
                      as_chart(f, ChartId::ZW),
                      {zw_field.dq_dt, zw_field.dp_dt});
    ChartVectorField uv_field = vector_field(ChartId::UV, triple);
    const auto& g = charts_[uv_chart].field;
    report_.add("theorem1.uv_field_polynomial",
                g[0].is_polynomial() && g[1].is_polynomial(),
                g[0].to_string() + " ; " + g[1].to_string());
    verify_map_equals("theorem1.uv_field_is_hamiltonian",
                      as_chart(g, ChartId::UV),
                      {uv_field.dq_dt, uv_field.dp_dt});
    // The UV field is the sigma-pushforward of the ZW field; the cross map
    // is t-independent with Jacobian -I.
    auto cross_push = pushforward(point_reflection, charts_[zw_chart].field);
    verify_map_equals("theorem1.uv_field_is_sigma_pushforward",
                      as_chart(cross_push, ChartId::UV),
                      as_chart(charts_[uv_chart].field, ChartId::UV));
  }
}

// ---------------------------------------------------------------------------

Construction run_construction() {
  Construction c;
  c.run();
  return c;
}

CurveGraph Construction::curve_graph() const {
  CurveGraph g;
  std::map<std::string, int> index;
  for (const auto& c : curves_) {
    if (!c.alive || !c.is_vertical_leaf) continue;
    index[c.id] = static_cast<int>(g.ids.size());
    g.ids.push_back(c.id);
    g.self_intersections.push_back(c.self_intersection);
  }
  for (const auto& c : curves_) {
    if (!c.alive || !c.is_vertical_leaf) continue;
    for (const auto& [other, mult] : c.incidences) {
      auto it = index.find(other);
      if (it == index.end()) continue;
      int i = index[c.id], j = it->second;
      if (i < j && mult > 0) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

VerificationReport check_curve_graph(const Construction& c) {
  VerificationReport rep;
  CurveGraph g = c.curve_graph();
  rep.add("curve_graph.nine_nodes", g.ids.size() == 9,
          std::to_string(g.ids.size()));
  bool all_minus2 = true;
  std::string sints;
  for (int s : g.self_intersections) {
    all_minus2 = all_minus2 && s == -2;
    sints += std::to_string(s) + " ";
  }
  rep.add("curve_graph.all_self_intersection_minus_2", all_minus2, sints);

  // Affine E8 shape: a unique trivalent node with arms of lengths 1, 2, 5.
  std::vector<int> deg = g.degrees();
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  bool degree_profile = sorted == std::vector<int>{1, 1, 1, 2, 2, 2, 2, 2, 3};
  rep.add("curve_graph.degree_profile_matches_affine_E8", degree_profile, "");

  int branch = -1;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == 3) branch = static_cast<int>(i);
  std::vector<int> arm_lengths;
  std::string short_arm;
  if (branch >= 0 && degree_profile) {
    std::vector<std::vector<int>> adj(g.ids.size());
    for (auto [i, j] : g.edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      while (static_cast<int>(adj[cur].size()) == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arm_lengths.push_back(len);
      if (len == 1) short_arm = g.ids[start];
    }
    std::sort(arm_lengths.begin(), arm_lengths.end());
  }
  rep.add("curve_graph.arm_lengths_1_2_5",
          arm_lengths == std::vector<int>{1, 2, 5}, "");
  rep.add("curve_graph.resolution_curve_at_branch_node", short_arm == "Eres",
          short_arm);
  return rep;
}

std::string Construction::log_json() const {
  nlohmann::json out;
  out["events"] = nlohmann::json::array();
  for (const auto& ev : events_) {
    nlohmann::json je;
    je["kind"] = ev.kind;
    je["step"] = ev.step;
    je["description"] = ev.description;
    je["charts_before"] = ev.charts_before;
    je["charts_after"] = ev.charts_after;
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& [id, s] : ev.curve_state)
      curves.push_back({{"id", id}, {"self_intersection", s}});
    je["curves"] = curves;
    out["events"].push_back(je);
  }
  nlohmann::json final_curves = nlohmann::json::array();
  for (const auto& c : curves_) {
    if (!c.alive) continue;
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["self_intersection"] = c.self_intersection;
    jc["origin"] = to_string(c.origin);
    jc["is_vertical_leaf"] = c.is_vertical_leaf;
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& [other, mult] : c.incidences)
      inc.push_back({{"curve", other}, {"multiplicity", mult}});
    jc["incidences"] = inc;
    final_curves.push_back(jc);
  }
  out["final_curves"] = final_curves;
  return out.dump(2);
}

std::string curve_graph_dot(const CurveGraph& g) {
  std::ostringstream os;
  os << "graph vertical_leaves {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.ids.size(); ++i) {
    os << "  \"" << g.ids[i] << "\" [label=\"" << g.ids[i] << "\\n("
       << g.self_intersections[i] << ")\"];\n";
  }
  for (auto [i, j] : g.edges)
    os << "  \"" << g.ids[i] << "\" -- \"" << g.ids[j] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace oka
