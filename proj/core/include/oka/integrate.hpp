#ifndef OKA_INTEGRATE_HPP
#define OKA_INTEGRATE_HPP

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "oka/hamiltonian.hpp"

namespace oka {

/// Branch choice when converting (x, y) to a pole chart. The auxiliary
/// coordinate is s * x^(-1/2); the minus sign lands in the ZW chart, the
/// plus sign in its sigma-image, the UV chart. `Continuous` picks the sign
/// -sign(y), which is the branch whose crossing stays at finite
/// coordinates.
enum class BranchPolicy { Continuous, FixedPlus, FixedMinus };

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double switch_radius = 10.0;  // |x| threshold; hysteresis factor 2
  BranchPolicy branch_policy = BranchPolicy::Continuous;
  double max_step = std::numeric_limits<double>::infinity();
  bool dense_output = true;

  void validate() const;
};

struct Sample {
  double t;
  ChartId chart;
  double c1;
  double c2;
  int branch_sign;  // ±1 on a pole chart, 0 on XY
};

/// Dense-output data of one accepted step (quartic interpolant).
struct DenseStep {
  double t0;
  double h;
  ChartId chart;
  int branch_sign;
  std::array<std::array<double, 5>, 2> rcont;

  std::array<double, 2> eval(double t) const;
};

struct SwitchRecord {
  double t;
  ChartId from;
  ChartId to;
  /// |K - (H - 1/w)| (resp. |L - (H + 1/v)|) across the conversion.
  double hamiltonian_residual;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::vector<DenseStep> dense;
  std::vector<SwitchRecord> switches;
  IntegratorConfig config;
  double t_start = 0;
  double t_end = 0;
};

struct PoleRecord {
  double t0;
  double z_at_pole;
  double laurent_residual;
  double dwdt;
  int crossing_direction;  // sign of dw/dt at the crossing
  ChartId chart;
};

/// Adaptive embedded Runge-Kutta 5(4) on the active chart's Hamiltonian
/// field, switching to a pole chart when |x| exceeds the switch radius and
/// back when the pole chart reports |x| below half of it. Throws
/// std::invalid_argument for a bad configuration or non-finite input and
/// std::runtime_error on step-size underflow / non-finite state.
Trajectory integrate(double t_start, double t_end, double x0, double y0,
                     const IntegratorConfig& cfg);

/// Zeros of the pole-chart coordinate w (resp. v) along the trajectory,
/// refined to |w| <= 1e-12 by bisection plus Newton polish on the dense
/// output; each record carries the Laurent residual of laurent_check.
std::vector<PoleRecord> detect_poles(const Trajectory& traj);

/// Fits x(t) (t-t0)^2 against 1 on both sides of the pole over the window
/// (t0 - delta, t0 + delta), excluding a small core; returns the max
/// deviation. Throws std::invalid_argument when the window has no samples.
double laurent_check(const Trajectory& traj, const PoleRecord& pole,
                     double delta = 0.05);

struct StructureResiduals {
  /// Per accepted step: |H(end) - H(start) - integral of dH/dt| scaled by
  /// max(1, |H|).
  std::vector<double> hamiltonian;
  /// Per chart switch: the conversion residual of the gluing identity.
  std::vector<double> switch_consistency;

  double max_hamiltonian() const;
  double max_switch() const;
};

StructureResiduals structure_monitor(const Trajectory& traj);

/// CSV with header t,chart,c1,c2,branch; floats with 17 significant digits.
std::string trajectory_csv(const Trajectory& traj);

/// JSON array of {t0, z_at_pole, laurent_residual, dwdt}.
std::string pole_report_json(const std::vector<PoleRecord>& poles);

/// Integration of a caller-supplied polynomial Hamiltonian H(x, y, t) on
/// the XY chart alone (no switching); the harmonic-oscillator smoke hook.
Trajectory integrate_plain_hamiltonian(const RationalFunction& H,
                                       double t_start, double t_end,
                                       double x0, double y0,
                                       const IntegratorConfig& cfg);

/// One fixed-step classical pass over [t_start, t_end] on the XY chart
/// (step-doubling convergence studies).
std::array<double, 2> integrate_fixed_step_xy(double t_start, double t_end,
                                              double x0, double y0,
                                              int steps);

}  // namespace oka

#endif
