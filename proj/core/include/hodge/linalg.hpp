#ifndef HODGE_LINALG_HPP
#define HODGE_LINALG_HPP

// Exact Gauss-Jordan elimination over Q with vector-valued right-hand sides.
//
// The engine reduces three kinds of problems to linear algebra:
//   * fitting genus-g free energies to intersection-number series
//     (rational matrix, rational right-hand side, overdetermined);
//   * splitting a Hodge potential into lambda-class generating functions
//     (rational matrix, differential-polynomial right-hand side);
//   * solving for normal-form coefficients order by order in eps.
// All of them need exact consistency detection — an overdetermined system
// being solvable *is* the theorem being checked — so the elimination is done
// over Q with no pivot-magnitude heuristics.  The right-hand side only needs
// a module structure over Q, which both `rat` and `DiffPoly` provide.
//
// Underdetermined systems get the particular solution with every free
// (non-pivot) variable set to zero.  Callers that must pin a gauge rely on
// this being deterministic: columns are eliminated left to right, so the
// choice of free variables depends only on the column order the caller fixed.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

template <class V>
struct LinearSolution {
  bool consistent = false;  // true unless some zero row has a nonzero rhs
  bool unique = false;      // consistent and rank == number of columns
  std::size_t rank = 0;
  std::vector<V> x;                   // particular solution (free variables zero)
  std::vector<std::size_t> pivot_cols;  // columns that carry a pivot, ascending
};

namespace detail {
template <class V>
bool value_is_zero(const V& v) {
  if constexpr (requires { v.is_zero(); })
    return v.is_zero();
  else
    return v == 0;
}
}  // namespace detail

// Solves A x = b by exact row reduction.  `zero` supplies the zero element of
// V, which may carry runtime state (differential polynomials know their ring).
template <class V>
LinearSolution<V> solve_linear(std::vector<std::vector<rat>> A, std::vector<V> b,
                               const V& zero) {
  const std::size_t nrows = A.size();
  if (b.size() != nrows) throw std::invalid_argument("solve_linear: shape mismatch");
  const std::size_t ncols = nrows ? A[0].size() : 0;
  for (const auto& row : A)
    if (row.size() != ncols) throw std::invalid_argument("solve_linear: ragged matrix");

  LinearSolution<V> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && A[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);

    const rat inv = rat(1) / A[row][col];
    for (std::size_t j = col; j < ncols; ++j) A[row][j] *= inv;
    b[row] *= inv;

    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const rat f = A[r][col];
      for (std::size_t j = col; j < ncols; ++j) A[r][j] -= f * A[row][j];
      if (!detail::value_is_zero(b[row])) b[r] -= b[row] * f;
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;

  out.consistent = true;
  for (std::size_t r = out.rank; r < nrows; ++r)
    if (!detail::value_is_zero(b[r])) {
      out.consistent = false;
      break;
    }

  out.x.assign(ncols, zero);
  if (out.consistent)
    for (std::size_t r = 0; r < out.rank; ++r) out.x[out.pivot_cols[r]] = b[r];
  out.unique = out.consistent && out.rank == ncols;
  return out;
}

}  // namespace hodge

#endif  // HODGE_LINALG_HPP
