#ifndef OKA_HAMILTONIAN_HPP
#define OKA_HAMILTONIAN_HPP

#include "oka/atlas.hpp"

namespace oka {

/// One Hamiltonian per chart: H(x,y,t), K(z,w,t), L(u,v,t), glued by
/// H = K + 1/w = L - 1/v and shifted by the involution per
/// K∘sigma = K + 2/w, L∘sigma = L - 2/v.
struct HamiltonianTriple {
  RationalFunction H;
  RationalFunction K;
  RationalFunction L;
};

/// Hamilton's equations on one chart with the pairing (x;y), (z;w), (u;v):
/// d(coordinate)/dt = dH/d(momentum), d(momentum)/dt = -dH/d(coordinate).
struct ChartVectorField {
  ChartId chart;
  RationalFunction dq_dt;
  RationalFunction dp_dt;
};

/// The built-in triple: H = y^2/2 - 2x^3 - tx with its pole-chart partners
///   K = w^6 z^2/8 - (4 + t w^4 + w^5) z/4 + w^2 (t+w)^2/8,
///   L = v^6 u^2/8 + (4 + t v^4 - v^5) u/4 + v^2 (t-v)^2/8.
/// All three are polynomials of their respective variables.
HamiltonianTriple builtin_triple();

/// Exact gluing residuals: H∘(pole map) - K = 1/w, H∘(pole map) - L = -1/v,
/// K∘(shift gluing) - L = -2/v.
VerificationReport gluing_residuals(const HamiltonianTriple& triple);

/// Exact involution shifts: K∘sigma - K = 2/w and L∘sigma - L = -2/v.
VerificationReport sigma_shift_residuals(const HamiltonianTriple& triple);

ChartVectorField vector_field(ChartId chart, const HamiltonianTriple& triple);

/// The Lyapunov function U = 2H + y/x = y^2 - 4x^3 - 2tx + y/x used to
/// control trajectories near the vertical leaves.
RationalFunction lyapunov_U();

}  // namespace oka

#endif
