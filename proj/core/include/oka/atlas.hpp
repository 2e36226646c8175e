#ifndef OKA_ATLAS_HPP
#define OKA_ATLAS_HPP

#include <array>
#include <string>

#include "oka/parser.hpp"
#include "oka/rational_function.hpp"
#include "oka/report.hpp"

namespace oka {

/// The three charts of the orbifold atlas. XY is the original chart of the
/// Hamiltonian system; ZW and UV are the pole charts, glued to XY along
/// {x != 0} and to each other along {w != 0} = {v != 0}, with the involution
/// identifying the ZW and UV sheets.
enum class ChartId { XY, ZW, UV };

std::string to_string(ChartId c);

/// The coordinate pair of a chart, e.g. (z, w) for ZW.
std::array<Variable, 2> chart_vars(ChartId c);

/// A coordinate change between charts. The two components express the
/// target coordinates as rational functions of the source coordinates and
/// t; the overlap is where domain_constraint does not vanish.
struct RationalMap {
  ChartId source;
  ChartId target;
  std::array<RationalFunction, 2> components;
  Polynomial domain_constraint;

  /// Applies the map to an expression in the target chart's coordinates:
  /// substitutes the target variables by the components.
  RationalFunction pull_back(const RationalFunction& f_target) const;

  /// this ∘ inner (inner first). Requires inner.target == source.
  RationalMap compose(const RationalMap& inner) const;

  bool is_identity() const;

  /// Jacobian determinant with t held constant.
  RationalFunction jacobian_determinant() const;
};

/// Identity map of a chart.
RationalMap identity_map(ChartId c);

/// The registered transition between two distinct charts. ZW->UV and its
/// inverse are the shift gluing; ZW->XY and UV->XY are the pole
/// uniformizations. XY->ZW and XY->UV are the branch-resolved symbolic
/// inverses: their components live in (y, w)- resp. (y, v)-space with the
/// second coordinate treated as the auxiliary satisfying x = 1/w^2 (the
/// branch sign is the caller's choice of sign of w). from == to returns the
/// identity.
RationalMap transition(ChartId from, ChartId to);

/// The involution restricted to a chart (ZW or UV); XY is rejected since
/// the involution does not act on the XY chart.
RationalMap sigma(ChartId chart);

/// The cross restriction ZW -> UV, (z,w) |-> (-z,-w).
RationalMap sigma_cross();

/// sigma∘sigma = id on ZW and UV, and the three restrictions cohere:
/// the cross map equals the UV restriction composed with the ZW->UV
/// transition (and the transition composed with the ZW restriction).
VerificationReport check_involution();

/// Jacobian determinant = 1 for the given map.
VerificationReport check_symplectic(const RationalMap& map);

/// Composing the ZW->UV gluing with the UV pole uniformization reproduces
/// the ZW pole uniformization, either directly or through the sigma twist;
/// exactly one of the two identifications must vanish identically.
VerificationReport check_transition_coherence();

/// All registered transition pairs compose to the identity on their
/// overlaps.
VerificationReport check_inverse_compositions();

}  // namespace oka

#endif
