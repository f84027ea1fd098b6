#pragma once

#include "chernsign/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace chernsign {

/// Outcome of the feasibility problem  A x = b, x >= 0.
/// Exactly one of `solution` (a basic feasible x) and `farkas` (y with
/// y^T A <= 0 and y^T b > 0) is set.
template <ExactScalar Scalar>
struct FeasibilityResult {
  std::optional<Vector<Scalar>> solution;
  std::optional<Vector<Scalar>> farkas;
  int pivots = 0;

  bool feasible() const { return solution.has_value(); }
};

/// Phase-one primal simplex over an exact ordered field, with Bland's rule
/// for both entering and leaving variables. Output depends only on (A, b).
template <ExactScalar Scalar>
FeasibilityResult<Scalar> solve_feasibility(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  const Eigen::Index m = A.rows(), k = A.cols();
  if (b.size() != m) throw std::invalid_argument("solve_feasibility: rhs length mismatch");

  // Columns: k structural, m artificial, 1 rhs. Row m holds reduced costs.
  const Eigen::Index rhs = k + m;
  Matrix<Scalar> T = Matrix<Scalar>::Zero(m + 1, k + m + 1);
  std::vector<int> row_sign(m, 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    row_sign[i] = b[i] < 0 ? -1 : 1;
    const Scalar s(row_sign[i]);
    T.row(i).head(k) = A.row(i) * s;
    T(i, k + i) = 1;
    T(i, rhs) = b[i] * s;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    T.row(m).head(k) -= T.row(i).head(k);
    T(m, rhs) -= T(i, rhs);
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = k + i;

  FeasibilityResult<Scalar> result;
  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + m; ++j)
      if (T(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Scalar best_ratio;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      const Scalar ratio = T(i, rhs) / T(i, enter);
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a positive entry.
    if (leave < 0) throw std::logic_error("solve_feasibility: unbounded phase-one problem");

    const Scalar pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      const Scalar factor = T(i, enter);
      T.row(i) -= T.row(leave) * factor;
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  // Objective row rhs holds -(sum of artificials).
  if (T(m, rhs) == 0) {
    Vector<Scalar> x = Vector<Scalar>::Zero(k);
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[i] < k) x[basis[i]] = T(i, rhs);
    result.solution = std::move(x);
    return result;
  }

  // Simplex multipliers y^T = c_B^T B^{-1}; B^{-1} sits in the artificial block.
  Vector<Scalar> y = Vector<Scalar>::Zero(m);
  for (Eigen::Index r = 0; r < m; ++r)
    if (basis[r] >= k) y += T.row(r).segment(k, m).transpose();
  for (Eigen::Index i = 0; i < m; ++i) y[i] *= Scalar(row_sign[i]);
  result.farkas = std::move(y);
  return result;
}

}  // namespace chernsign
