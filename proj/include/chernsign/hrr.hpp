#pragma once

#include "chernsign/poly.hpp"
#include "chernsign/series.hpp"

#include <vector>

namespace chernsign {

/// chi^p(X) = chi(X, Omega^p) for p = 0..n, every row in one convention.
struct ChiTable {
  int dim = 0;
  BasisConvention convention = BasisConvention::cotangent;
  std::vector<ChernFunctional> rows;
};

/// Coefficients of log(x / (1 - e^{-x})) up to x^order.
RationalSeries todd_log_series(int order);

/// Todd class prod x_i/(1 - e^{-x_i}) to weight n, in tangent variables.
GradedPoly todd_class(int n);

/// ch(Lambda^p T*X) = e_p(e^{-x_1}, ..., e^{-x_n}) to weight n, in tangent variables.
GradedPoly ch_exterior_cotangent(int p, int n);

/// chi(X, Omega^p) as a top-weight functional in cotangent variables.
ChernFunctional chi_p(int n, int p);

/// All rows of chi_p(n, .); verifies Serre duality and the Euler identity
/// before returning (std::logic_error on failure).
ChiTable chi_table(int n);

/// Topological Euler characteristic c_n(TX), written in cotangent variables.
ChernFunctional euler_functional(int n);

/// Clears denominators with the least positive multiplier; returns the
/// integral functional and the multiplier used.
std::pair<ChernFunctional, Integer> clear_denominators(const ChernFunctional& f);

}  // namespace chernsign
