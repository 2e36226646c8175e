#include "oka/linsolve.hpp"

#include <stdexcept>

namespace oka {

LinearSolution solve_exact(std::vector<std::vector<Rational>> a,
                           std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  if (rhs.size() != rows) throw std::invalid_argument("rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  // Row-reduce [A | rhs] with exact pivoting.
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }

  LinearSolution sol;
  sol.rank = static_cast<int>(r);
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) {
      sol.feasible = false;
      return sol;
    }
  }
  sol.feasible = true;

  std::vector<bool> is_pivot(cols, false);
  for (int pc : pivot_col_of_row) is_pivot[pc] = true;

  sol.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    sol.particular[pivot_col_of_row[i]] = rhs[i];

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> basis(cols, Rational(0));
    basis[c] = Rational(1);
    for (std::size_t i = 0; i < r; ++i)
      basis[pivot_col_of_row[i]] = -a[i][c];
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace oka
