#ifndef OKA_LINSOLVE_HPP
#define OKA_LINSOLVE_HPP

#include <vector>

#include "oka/polynomial.hpp"

namespace oka {

/// Exact solution of a dense rational linear system A c = rhs.
struct LinearSolution {
  bool feasible = false;
  int rank = 0;
  std::vector<Rational> particular;           // one solution (when feasible)
  std::vector<std::vector<Rational>> nullspace;  // basis of A c = 0
};

LinearSolution solve_exact(std::vector<std::vector<Rational>> a,
                           std::vector<Rational> rhs);

}  // namespace oka

#endif
