#include "oka/integrate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace oka {

namespace {

// ---------------------------------------------------------------------------
// Compiled polynomial evaluation. Terms are kept in the canonical symbolic
// order; the ZW and UV field polynomials then correspond term-by-term with
// opposite signs, which makes the fixed-plus and fixed-minus runs exact
// mirror images in floating point as well.

struct CompiledPoly {
  struct Term {
    double c;
    int e1, e2, et;
  };
  std::vector<Term> terms;

  double eval(double c1, double c2, double t) const {
    double acc = 0.0;
    for (const auto& term : terms) {
      double m = term.c;
      for (int i = 0; i < term.e1; ++i) m *= c1;
      for (int i = 0; i < term.e2; ++i) m *= c2;
      for (int i = 0; i < term.et; ++i) m *= t;
      acc += m;
    }
    return acc;
  }
};

CompiledPoly compile(const RationalFunction& f, Variable v1, Variable v2) {
  if (!f.is_polynomial())
    throw std::logic_error("compile: field component is not polynomial");
  CompiledPoly out;
  for (const auto& term : f.numerator().terms()) {
    out.terms.push_back({to_double(term.coeff), term.mono.exponent(v1),
                         term.mono.exponent(v2),
                         term.mono.exponent(vars::t())});
  }
  return out;
}

struct ChartDynamics {
  CompiledPoly f1, f2;   // Hamilton's equations
  CompiledPoly ham;      // the chart Hamiltonian
  CompiledPoly ham_dt;   // its partial t-derivative
};

ChartDynamics compile_chart(ChartId chart) {
  HamiltonianTriple triple = builtin_triple();
  ChartVectorField field = vector_field(chart, triple);
  auto cv = chart_vars(chart);
  const RationalFunction& h = chart == ChartId::XY   ? triple.H
                              : chart == ChartId::ZW ? triple.K
                                                     : triple.L;
  return ChartDynamics{compile(field.dq_dt, cv[0], cv[1]),
                       compile(field.dp_dt, cv[0], cv[1]),
                       compile(h, cv[0], cv[1]),
                       compile(h.derivative(vars::t()), cv[0], cv[1])};
}

const ChartDynamics& dynamics(ChartId chart) {
  static const ChartDynamics xy = compile_chart(ChartId::XY);
  static const ChartDynamics zw = compile_chart(ChartId::ZW);
  static const ChartDynamics uv = compile_chart(ChartId::UV);
  switch (chart) {
    case ChartId::XY: return xy;
    case ChartId::ZW: return zw;
    case ChartId::UV: return uv;
  }
  throw std::logic_error("bad chart");
}

// ---------------------------------------------------------------------------
// Chart conversions. The ZW and UV forms are written as exact structural
// mirrors of each other so that v = -w, u = -z hold bitwise.

struct ChartState {
  ChartId chart;
  double c1, c2;
  int branch;
};

ChartState xy_to_pole_chart(double x, double y, double t, int sign) {
  double r = 1.0 / std::sqrt(x);
  if (sign < 0) {
    double w = -r;
    double w3 = w * w * w, w4 = w3 * w, w5 = w4 * w, w6 = w5 * w;
    double z = (2.0 * y * w3 + 4.0 + t * w4 + w5) / w6;
    return {ChartId::ZW, z, w, -1};
  }
  double v = r;
  double v3 = v * v * v, v4 = v3 * v, v5 = v4 * v, v6 = v5 * v;
  double u = (2.0 * y * v3 - 4.0 - t * v4 + v5) / v6;
  return {ChartId::UV, u, v, +1};
}

ChartState pole_chart_to_xy(ChartId chart, double c1, double c2, double t) {
  if (chart == ChartId::ZW) {
    double z = c1, w = c2;
    double w2 = w * w, w3 = w2 * w;
    double x = 1.0 / w2;
    double y = -2.0 / w3 - t * w / 2.0 - w2 / 2.0 + z * w3 / 2.0;
    return {ChartId::XY, x, y, 0};
  }
  double u = c1, v = c2;
  double v2 = v * v, v3 = v2 * v;
  double x = 1.0 / v2;
  double y = 2.0 / v3 + t * v / 2.0 - v2 / 2.0 + u * v3 / 2.0;
  return {ChartId::XY, x, y, 0};
}

// Gluing residual of a conversion: |K - (H - 1/w)| resp. |L - (H + 1/v)|.
double conversion_residual(const ChartState& xy, const ChartState& pole,
                           double t) {
  double H = dynamics(ChartId::XY).ham.eval(xy.c1, xy.c2, t);
  double Hp = dynamics(pole.chart).ham.eval(pole.c1, pole.c2, t);
  double shift = pole.chart == ChartId::ZW ? -1.0 / pole.c2 : 1.0 / pole.c2;
  return std::abs(Hp - (H + shift));
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with the classical quartic dense output.

constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33,
                 kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kA71 = 35.0 / 384, kA73 = 500.0 / 1113, kA74 = 125.0 / 192,
                 kA75 = -2187.0 / 6784, kA76 = 11.0 / 84;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

using Vec2 = std::array<double, 2>;

struct Field {
  const CompiledPoly* f1;
  const CompiledPoly* f2;
  Vec2 operator()(double t, const Vec2& s) const {
    return {f1->eval(s[0], s[1], t), f2->eval(s[0], s[1], t)};
  }
};

struct StepResult {
  Vec2 y1;
  Vec2 k1;  // FSAL: field at the step end
  double err;
  std::array<std::array<double, 5>, 2> rcont;
};

StepResult dp5_step(const Field& f, double t, const Vec2& y, const Vec2& k1,
                    double h, double atol, double rtol) {
  auto axpy = [&](std::initializer_list<std::pair<double, const Vec2*>> terms) {
    Vec2 r = y;
    for (auto [c, k] : terms) {
      r[0] += h * c * (*k)[0];
      r[1] += h * c * (*k)[1];
    }
    return r;
  };
  Vec2 k2 = f(t + kC2 * h, axpy({{kA21, &k1}}));
  Vec2 k3 = f(t + kC3 * h, axpy({{kA31, &k1}, {kA32, &k2}}));
  Vec2 k4 = f(t + kC4 * h, axpy({{kA41, &k1}, {kA42, &k2}, {kA43, &k3}}));
  Vec2 k5 = f(t + kC5 * h,
              axpy({{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}}));
  Vec2 k6 = f(t + h, axpy({{kA61, &k1},
                           {kA62, &k2},
                           {kA63, &k3},
                           {kA64, &k4},
                           {kA65, &k5}}));
  Vec2 y1 = axpy(
      {{kA71, &k1}, {kA73, &k3}, {kA74, &k4}, {kA75, &k5}, {kA76, &k6}});
  Vec2 k7 = f(t + h, y1);

  StepResult res;
  res.y1 = y1;
  res.k1 = k7;
  double err2 = 0;
  for (int i = 0; i < 2; ++i) {
    double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                    kE6 * k6[i] + kE7 * k7[i]);
    double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
    err2 += (e / sc) * (e / sc);
  }
  res.err = std::sqrt(err2 / 2.0);
  for (int i = 0; i < 2; ++i) {
    double ydiff = y1[i] - y[i];
    double bspl = h * k1[i] - ydiff;
    res.rcont[i][0] = y[i];
    res.rcont[i][1] = ydiff;
    res.rcont[i][2] = bspl;
    res.rcont[i][3] = ydiff - h * k7[i] - bspl;
    res.rcont[i][4] = h * (kD1 * k1[i] + kD3 * k3[i] + kD4 * k4[i] +
                           kD5 * k5[i] + kD6 * k6[i] + kD7 * k7[i]);
  }
  return res;
}

}  // namespace

std::array<double, 2> DenseStep::eval(double t) const {
  double theta = (t - t0) / h;
  double s1 = 1.0 - theta;
  std::array<double, 2> out;
  for (int i = 0; i < 2; ++i) {
    out[i] = rcont[i][0] +
             theta * (rcont[i][1] +
                      s1 * (rcont[i][2] +
                            theta * (rcont[i][3] + s1 * rcont[i][4])));
  }
  return out;
}

void IntegratorConfig::validate() const {
  if (!(rtol > 0) || !(atol > 0))
    throw std::invalid_argument("rtol and atol must be positive");
  if (!(switch_radius > 1))
    throw std::invalid_argument("switch_radius must exceed 1");
  if (!(max_step > 0))
    throw std::invalid_argument("max_step must be positive");
}

namespace {

class Integrator {
 public:
  Integrator(const IntegratorConfig& cfg, Trajectory& out)
      : cfg_(cfg), out_(out) {}

  void run(double t0, double t1, ChartState s) {
    t_ = t0;
    state_ = s;
    emit_sample();
    double h = initial_step(t1 - t0);
    const double hmin = 1e-14 * std::max(1.0, std::abs(t1 - t0));
    Field f = field();
    Vec2 y = {state_.c1, state_.c2};
    Vec2 k1 = f(t_, y);
    int rejected = 0;
    while (t_ < t1) {
      h = std::min({h, cfg_.max_step, t1 - t_});
      if (h < hmin) throw std::runtime_error("step size underflow");
      StepResult step = dp5_step(f, t_, y, k1, h, cfg_.atol, cfg_.rtol);
      if (!std::isfinite(step.y1[0]) || !std::isfinite(step.y1[1]) ||
          !std::isfinite(step.err)) {
        h *= 0.5;
        ++rejected;
        continue;
      }
      if (step.err > 1.0) {
        h *= std::max(0.2, 0.9 * std::pow(step.err, -0.2));
        ++rejected;
        continue;
      }
      // Accepted. Look for a chart-switch event inside the step.
      DenseStep dense{t_, h, state_.chart, state_.branch, step.rcont};
      double t_event;
      if (locate_event(dense, t_ + h, &t_event)) {
        // Re-take the step up to the event time so the trajectory stays a
        // plain Runge-Kutta sequence.
        double he = t_event - t_;
        if (he > hmin) {
          StepResult cut = dp5_step(f, t_, y, k1, he, cfg_.atol, cfg_.rtol);
          dense = DenseStep{t_, he, state_.chart, state_.branch, cut.rcont};
          y = cut.y1;
          t_ += he;
        } else {
          y = dense.eval(t_event);
          dense.h = std::max(t_event - t_, hmin);
          t_ += std::max(he, 0.0);
          t_ = t_event;
        }
        if (cfg_.dense_output) out_.dense.push_back(dense);
        state_.c1 = y[0];
        state_.c2 = y[1];
        emit_sample();
        switch_chart();
        f = field();
        y = {state_.c1, state_.c2};
        k1 = f(t_, y);
        emit_sample();
        h = std::min(0.1, cfg_.max_step);
        rejected = 0;
        continue;
      }
      if (cfg_.dense_output) out_.dense.push_back(dense);
      t_ += h;
      y = step.y1;
      k1 = step.k1;
      state_.c1 = y[0];
      state_.c2 = y[1];
      emit_sample();
      double fac = 0.9 * std::pow(std::max(step.err, 1e-30), -0.2);
      fac = std::min(rejected > 0 ? 1.0 : 6.0, std::max(0.2, fac));
      h *= fac;
      rejected = 0;
    }
  }

 private:
  Field field() const {
    const ChartDynamics& d = dynamics(state_.chart);
    return Field{&d.f1, &d.f2};
  }

  double initial_step(double span) const {
    return std::min({1e-4, std::abs(span) / 16.0, cfg_.max_step});
  }

  void emit_sample() {
    out_.samples.push_back(
        {t_, state_.chart, state_.c1, state_.c2, state_.branch});
  }

  // Event functions: on XY, x - switch_radius rising through 0; on a pole
  // chart, |w| - sqrt(2/switch_radius) rising through 0.
  double event_value(ChartId chart, const Vec2& s) const {
    if (chart == ChartId::XY) return s[0] - cfg_.switch_radius;
    return std::abs(s[1]) - std::sqrt(2.0 / cfg_.switch_radius);
  }

  bool locate_event(const DenseStep& dense, double t_end, double* t_event) {
    double va = event_value(dense.chart, dense.eval(dense.t0));
    double vb = event_value(dense.chart, dense.eval(t_end));
    if (va >= 0.0) return false;  // already past the threshold at entry
    if (vb < 0.0) return false;
    double lo = dense.t0, hi = t_end;
    for (int i = 0; i < 80 && (hi - lo) > 1e-16 * std::max(1.0, std::abs(hi));
         ++i) {
      double mid = 0.5 * (lo + hi);
      if (event_value(dense.chart, dense.eval(mid)) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    *t_event = hi;
    return true;
  }

  void switch_chart() {
    if (state_.chart == ChartId::XY) {
      int sign;
      switch (cfg_.branch_policy) {
        case BranchPolicy::FixedPlus: sign = +1; break;
        case BranchPolicy::FixedMinus: sign = -1; break;
        default: sign = state_.c2 > 0 ? -1 : +1; break;
      }
      ChartState pole = xy_to_pole_chart(state_.c1, state_.c2, t_, sign);
      out_.switches.push_back({t_, ChartId::XY, pole.chart,
                               conversion_residual(state_, pole, t_)});
      state_ = pole;
    } else {
      ChartState xy = pole_chart_to_xy(state_.chart, state_.c1, state_.c2, t_);
      out_.switches.push_back({t_, state_.chart, ChartId::XY,
                               conversion_residual(xy, state_, t_)});
      state_ = xy;
    }
  }

  const IntegratorConfig& cfg_;
  Trajectory& out_;
  double t_ = 0;
  ChartState state_{ChartId::XY, 0, 0, 0};
};

}  // namespace

Trajectory integrate(double t_start, double t_end, double x0, double y0,
                     const IntegratorConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x0) || !std::isfinite(y0))
    throw std::invalid_argument("initial state must be finite");
  if (!(t_start < t_end))
    throw std::invalid_argument("require t_start < t_end");
  Trajectory traj;
  traj.config = cfg;
  traj.t_start = t_start;
  traj.t_end = t_end;
  Integrator integ(cfg, traj);
  integ.run(t_start, t_end, ChartState{ChartId::XY, x0, y0, 0});
  return traj;
}

// ---------------------------------------------------------------------------
// Pole detection and the Laurent check

namespace {

double dwdt_at(ChartId chart, double c1, double c2, double t) {
  return dynamics(chart).f2.eval(c1, c2, t);
}

}  // namespace

std::vector<PoleRecord> detect_poles(const Trajectory& traj) {
  std::vector<PoleRecord> poles;
  for (const auto& step : traj.dense) {
    if (step.chart == ChartId::XY) continue;
    double ta = step.t0, tb = step.t0 + step.h;
    double wa = step.eval(ta)[1], wb = step.eval(tb)[1];
    if (wa == 0.0) continue;  // counted at the previous step's right end
    if (wa * wb > 0.0) continue;
    // Bisection, then Newton polish on the field.
    double lo = ta, hi = tb;
    for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
      double mid = 0.5 * (lo + hi);
      double wm = step.eval(mid)[1];
      if ((wa < 0 && wm < 0) || (wa > 0 && wm > 0))
        lo = mid;
      else
        hi = mid;
    }
    double t0 = 0.5 * (lo + hi);
    auto s = step.eval(t0);
    for (int i = 0; i < 4; ++i) {
      double deriv = dwdt_at(step.chart, s[0], s[1], t0);
      if (deriv == 0.0) break;
      double dt = s[1] / deriv;
      t0 -= dt;
      t0 = std::min(std::max(t0, ta), tb);
      s = step.eval(t0);
      if (std::abs(s[1]) <= 1e-13) break;
    }
    if (std::abs(s[1]) > 1e-12)
      throw std::runtime_error("pole refinement did not converge");
    PoleRecord rec;
    rec.t0 = t0;
    rec.z_at_pole = s[0];
    rec.dwdt = dwdt_at(step.chart, s[0], s[1], t0);
    rec.crossing_direction = rec.dwdt >= 0 ? +1 : -1;
    rec.chart = step.chart;
    rec.laurent_residual = 0.0;
    poles.push_back(rec);
  }
  for (auto& p : poles) p.laurent_residual = laurent_check(traj, p);
  return poles;
}

double laurent_check(const Trajectory& traj, const PoleRecord& pole,
                     double delta) {
  const double core = delta / 50.0;
  double residual = 0.0;
  int used = 0;
  const int n = 80;
  for (int i = 0; i <= n; ++i) {
    double tau = -delta + 2.0 * delta * i / n;
    if (std::abs(tau) < core) continue;
    double t = pole.t0 + tau;
    // Find a pole-chart dense step containing t.
    for (const auto& step : traj.dense) {
      if (step.chart == ChartId::XY) continue;
      if (t < step.t0 || t > step.t0 + step.h) continue;
      auto s = step.eval(t);
      double x = 1.0 / (s[1] * s[1]);
      residual = std::max(residual, std::abs(x * tau * tau - 1.0));
      ++used;
      break;
    }
  }
  if (used == 0)
    throw std::invalid_argument("laurent_check: no samples in the window");
  return residual;
}

// ---------------------------------------------------------------------------
// Structure monitor

double StructureResiduals::max_hamiltonian() const {
  double m = 0;
  for (double r : hamiltonian) m = std::max(m, r);
  return m;
}

double StructureResiduals::max_switch() const {
  double m = 0;
  for (double r : switch_consistency) m = std::max(m, r);
  return m;
}

StructureResiduals structure_monitor(const Trajectory& traj) {
  StructureResiduals out;
  // 5-point Gauss-Legendre nodes/weights on [0, 1].
  static const double kNode[5] = {0.046910077030668004, 0.23076534494715845,
                                  0.5, 0.76923465505284155,
                                  0.953089922969332};
  static const double kWeight[5] = {0.11846344252809454, 0.23931433524968324,
                                    0.28444444444444444, 0.23931433524968324,
                                    0.11846344252809454};
  for (const auto& step : traj.dense) {
    const ChartDynamics& d = dynamics(step.chart);
    auto s0 = step.eval(step.t0);
    auto s1 = step.eval(step.t0 + step.h);
    double h0 = d.ham.eval(s0[0], s0[1], step.t0);
    double h1 = d.ham.eval(s1[0], s1[1], step.t0 + step.h);
    double integral = 0.0;
    for (int i = 0; i < 5; ++i) {
      double tq = step.t0 + kNode[i] * step.h;
      auto sq = step.eval(tq);
      integral += kWeight[i] * d.ham_dt.eval(sq[0], sq[1], tq);
    }
    integral *= step.h;
    double scale = std::max({1.0, std::abs(h0), std::abs(h1)});
    out.hamiltonian.push_back(std::abs(h1 - h0 - integral) / scale);
  }
  for (const auto& sw : traj.switches)
    out.switch_consistency.push_back(sw.hamiltonian_residual);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t,chart,c1,c2,branch\n";
  for (const auto& s : traj.samples) {
    os << fmt17(s.t) << "," << to_string(s.chart) << "," << fmt17(s.c1)
       << "," << fmt17(s.c2) << "," << s.branch_sign << "\n";
  }
  return os.str();
}

std::string pole_report_json(const std::vector<PoleRecord>& poles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : poles) {
    nlohmann::json jp;
    jp["t0"] = p.t0;
    jp["z_at_pole"] = p.z_at_pole;
    jp["laurent_residual"] = p.laurent_residual;
    jp["dwdt"] = p.dwdt;
    arr.push_back(jp);
  }
  return arr.dump(2);
}

// ---------------------------------------------------------------------------
// Test hooks

Trajectory integrate_plain_hamiltonian(const RationalFunction& H,
                                       double t_start, double t_end,
                                       double x0, double y0,
                                       const IntegratorConfig& cfg) {
  cfg.validate();
  CompiledPoly f1 = compile(H.derivative(vars::y()), vars::x(), vars::y());
  CompiledPoly f2 = compile(-H.derivative(vars::x()), vars::x(), vars::y());
  Field f{&f1, &f2};
  Trajectory traj;
  traj.config = cfg;
  traj.t_start = t_start;
  traj.t_end = t_end;
  double t = t_start;
  Vec2 y = {x0, y0};
  Vec2 k1 = f(t, y);
  traj.samples.push_back({t, ChartId::XY, y[0], y[1], 0});
  double h = std::min({1e-4, (t_end - t_start) / 16.0, cfg.max_step});
  while (t < t_end) {
    h = std::min({h, cfg.max_step, t_end - t});
    if (h < 1e-14) throw std::runtime_error("step size underflow");
    StepResult step = dp5_step(f, t, y, k1, h, cfg.atol, cfg.rtol);
    if (step.err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(step.err, -0.2));
      continue;
    }
    if (cfg.dense_output)
      traj.dense.push_back(DenseStep{t, h, ChartId::XY, 0, step.rcont});
    t += h;
    y = step.y1;
    k1 = step.k1;
    traj.samples.push_back({t, ChartId::XY, y[0], y[1], 0});
    h *= std::min(6.0, std::max(0.2, 0.9 * std::pow(std::max(step.err, 1e-30),
                                                    -0.2)));
  }
  return traj;
}

std::array<double, 2> integrate_fixed_step_xy(double t_start, double t_end,
                                              double x0, double y0,
                                              int steps) {
  const ChartDynamics& d = dynamics(ChartId::XY);
  Field f{&d.f1, &d.f2};
  double h = (t_end - t_start) / steps;
  double t = t_start;
  Vec2 y = {x0, y0};
  Vec2 k1 = f(t, y);
  for (int i = 0; i < steps; ++i) {
    StepResult step = dp5_step(f, t, y, k1, h, 1.0, 1.0);
    y = step.y1;
    k1 = step.k1;
    t += h;
  }
  return y;
}

}  // namespace oka
