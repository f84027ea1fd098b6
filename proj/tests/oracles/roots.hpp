#pragma once

// Test-only oracles. Nothing here calls into the library's Newton-identity,
// determinant, or simplex code paths; they work on explicit formal roots or
// by brute force so they can check those paths independently.

#include "chernsign/poly.hpp"

#include <map>
#include <vector>

namespace oracle {

using chernsign::Rational;

/// Polynomial in formal roots x_1..x_r, truncated above total degree `max_degree`.
struct RootPoly {
  int r = 0;
  int max_degree = 0;
  std::map<std::vector<int>, Rational> terms;

  RootPoly(int roots, int max_deg) : r(roots), max_degree(max_deg) {}
  static RootPoly constant(int roots, int max_deg, const Rational& c);
  /// sum_k coeffs[k] x_i^k
  static RootPoly univariate(int roots, int max_deg, int i, const std::vector<Rational>& coeffs);

  void add(const std::vector<int>& e, const Rational& c);
  RootPoly operator+(const RootPoly& o) const;
  RootPoly operator*(const RootPoly& o) const;
  RootPoly operator*(const Rational& s) const;
  RootPoly homogeneous(int degree) const;
  bool is_zero() const { return terms.empty(); }
};

/// e_k(x_1..x_r)
RootPoly elementary(int roots, int max_deg, int k);

/// Rewrites a symmetric polynomial as a polynomial in c_i = e_i(x) by
/// repeatedly cancelling the lexicographically leading term.
chernsign::GradedPoly symmetric_to_chern(const RootPoly& p, int dim);

/// Schur function s_lambda(x_1..x_r) as a sum over semistandard tableaux.
RootPoly schur_by_tableaux(const std::vector<int>& lambda, int roots);

/// Number of partitions of n by the recursion on the largest part.
long long partition_count(int n);

/// B_k with the convention B_1 = +1/2, by the recurrence sum_j C(k+1,j) B_j = k+1.
std::vector<Rational> bernoulli_plus(int count);

/// chi^p in tangent variables via the generating function
/// prod_i (1 + y e^{-x_i}) x_i/(1 - e^{-x_i}), expanded on explicit roots.
std::vector<chernsign::GradedPoly> chi_y_tangent(int n);

/// Truncated (1+h)^a (1+d h)^{-1} coefficient list up to h^order, by long division.
std::vector<Rational> total_class_series(int a, int d, int order);

/// Cone membership of b in cone(columns of A) by Caratheodory: try every
/// column subset, solve exactly, accept a non-negative solution.
bool cone_contains(const chernsign::RationalMatrix& A, const chernsign::RationalVector& b);

}  // namespace oracle
