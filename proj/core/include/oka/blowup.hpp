#ifndef OKA_BLOWUP_HPP
#define OKA_BLOWUP_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oka/hamiltonian.hpp"
#include "oka/report.hpp"

namespace oka {

/// A local chart of the construction. Every chart's symbolic data lives in
/// the generic coordinate pair (a, b); to_parent expresses the parent
/// chart's coordinates as rational functions of (a, b, t). Composing
/// to_parent chains reaches the Hirzebruch root chart. field is the
/// pushforward of the original Hamiltonian vector field.
struct ChartRecord {
  std::string name;
  int parent = -1;
  std::array<RationalFunction, 2> to_parent;
  std::array<RationalFunction, 2> field;
  int axis_a_curve = -1;  // curve whose local equation is a = 0
  int axis_b_curve = -1;  // curve whose local equation is b = 0
};

enum class CurveOrigin {
  HirzebruchSection,
  Fiber,
  Exceptional,
  Ramification,
  Resolution,
};

std::string to_string(CurveOrigin o);

/// Ledger entry for one tracked curve. paired marks a sigma-identified
/// pair of curves recorded as a single object; its self-intersection is the
/// one of each member, which the quotient keeps.
struct CurveRecord {
  std::string id;
  int self_intersection = 0;
  CurveOrigin origin = CurveOrigin::Exceptional;
  bool is_vertical_leaf = false;
  bool paired = false;
  bool alive = true;
  std::map<std::string, int> incidences;
};

struct LogEvent {
  std::string kind;  // gluing | blowup | double_cover | blowdown |
                     // quotient_and_resolve
  int step = 0;      // construction step 1..12
  std::string description;
  std::vector<std::string> charts_before;
  std::vector<std::string> charts_after;
  std::vector<std::pair<std::string, int>> curve_state;  // id, self-int
};

struct SingularPointCheck {
  int step;
  std::string chart;
  std::string location;          // "(c1(t), c2(t))"
  bool cleared_field_vanishes;
  std::string witness;           // nonzero cleared component, when failing
  std::vector<std::string> discovered_points;  // roots on the exceptional line
  bool stated_point_discovered;
};

/// The full intersection graph of the surviving vertical leaves.
struct CurveGraph {
  std::vector<std::string> ids;
  std::vector<int> self_intersections;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

/// Deterministic replay of the twelve construction steps.
class Construction {
 public:
  /// Runs the replay; symbolic verification results are collected in
  /// report() and singular_checks().
  void run();

  const std::vector<ChartRecord>& charts() const { return charts_; }
  const std::vector<CurveRecord>& curves() const { return curves_; }
  const std::vector<LogEvent>& events() const { return events_; }
  const VerificationReport& report() const { return report_; }
  const std::vector<SingularPointCheck>& singular_checks() const {
    return singular_checks_;
  }

  int chart_index(const std::string& name) const;
  const ChartRecord& chart(const std::string& name) const;

  /// Accumulated map from a chart all the way to the root (x, y) chart,
  /// components in (a, b, t).
  std::array<RationalFunction, 2> map_to_root(const std::string& name) const;

  /// Pushes a field through a chart map in one shot (used by the
  /// functoriality checks): given the map's components and the field on
  /// the target, returns the field on the source.
  static std::array<RationalFunction, 2> pushforward(
      const std::array<RationalFunction, 2>& to_parent,
      const std::array<RationalFunction, 2>& parent_field);

  /// Verification of the stated singular point locations per step, as a
  /// report (one check per point).
  VerificationReport singular_point_report() const;

  /// The vertical-leaf intersection graph after the quotient/resolution.
  CurveGraph curve_graph() const;

  /// JSON form of the ordered event log.
  std::string log_json() const;

 private:
  friend struct ConstructionTestAccess;

  int add_chart(ChartRecord rec);
  int add_curve(CurveRecord rec);
  int curve_index(const std::string& id) const;
  void add_incidence(int c1, int c2, int mult);
  void remove_incidence(int c1, int c2, int mult);
  void snapshot_curves(LogEvent& ev) const;

  struct BlowupResult {
    int q_chart;
    int cap_chart;
  };
  /// Blowup of `node` at (center, 0) on the axis {b = 0}; creates the two
  /// recipe charts. The exceptional curve record must be supplied; curves
  /// through the center are derived from the axis views.
  BlowupResult blowup_at(int node, const RationalFunction& center,
                         const std::string& q_name,
                         const std::string& cap_name, int exceptional_curve);

  void verify_leaf_tangency(const std::string& check_id, int chart,
                            char axis, bool expect_leaf);
  void verify_singular_point(int step, int chart, const RationalFunction& c1,
                             const RationalFunction& c2);
  void verify_map_equals(const std::string& check_id,
                         const std::array<RationalFunction, 2>& got,
                         const std::array<RationalFunction, 2>& expected);

  /// Composite of to_parent maps from `from` up to (and excluding) chart
  /// `ancestor`: returns the ancestor coordinates as functions of `from`
  /// coordinates.
  std::array<RationalFunction, 2> map_to_ancestor(int from,
                                                  int ancestor) const;

  /// Inverts a fibered map (f(a,b,t), b) with f affine-linear in a.
  static std::array<RationalFunction, 2> invert_fibered(
      const std::array<RationalFunction, 2>& m);

  static std::array<RationalFunction, 2> compose_maps(
      const std::array<RationalFunction, 2>& outer,
      const std::array<RationalFunction, 2>& inner);

  std::vector<ChartRecord> charts_;
  std::vector<CurveRecord> curves_;
  std::vector<LogEvent> events_;
  VerificationReport report_;
  std::vector<SingularPointCheck> singular_checks_;
};

/// Replays the construction and returns it; throws only on internal
/// contract violations (verification failures are reported, not thrown).
Construction run_construction();

/// Fig-level checks on the final graph: nine nodes, all self-intersection
/// -2, adjacency isomorphic to the affine E8 diagram, with the resolution
/// curve attached to the unique trivalent node.
VerificationReport check_curve_graph(const Construction& c);

/// DOT rendering of the vertical-leaf graph with self-intersection labels.
std::string curve_graph_dot(const CurveGraph& g);

}  // namespace oka

#endif
