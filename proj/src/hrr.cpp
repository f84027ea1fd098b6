#include "chernsign/hrr.hpp"

#include "chernsign/symchern.hpp"

#include <stdexcept>

namespace chernsign {

RationalSeries todd_log_series(int order) {
  // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!; its reciprocal is x/(1 - e^{-x}).
  RationalSeries f(order);
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    fact *= (k + 1);
    f[k] = Rational(k % 2 == 0 ? 1 : -1) / fact;
  }
  return -f.log();
}

GradedPoly todd_class(int n) {
  if (n < 0) throw std::invalid_argument("todd_class needs n >= 0");
  if (n == 0) return GradedPoly::constant(0, 1);
  const RationalSeries b = todd_log_series(n);
  GradedPoly log_td(n);
  for (int k = 1; k <= n; ++k)
    if (b[k] != 0) log_td += power_sum(k, n) * b[k];
  return exp_nilpotent(log_td);
}

GradedPoly ch_exterior_cotangent(int p, int n) {
  if (p < 0 || p > n) throw std::invalid_argument("ch_exterior_cotangent: p out of range");
  if (p == 0) return GradedPoly::constant(n, 1);

  std::vector<GradedPoly> roots_power(n + 1, GradedPoly(n));  // p_m(x), p_0 = n
  roots_power[0] = GradedPoly::constant(n, n);
  for (int m = 1; m <= n; ++m) roots_power[m] = power_sum(m, n);

  // P_k = sum_i e^{-k x_i} = sum_m (-k)^m p_m / m!
  auto exp_power_sum = [&](int k) {
    GradedPoly s(n);
    Rational scale = 1;
    for (int m = 0; m <= n; ++m) {
      s += roots_power[m] * scale;
      scale = scale * Rational(-k) / Rational(m + 1);
    }
    return s;
  };

  // Newton: q e_q = sum_{i=1}^q (-1)^{i-1} e_{q-i} P_i
  std::vector<GradedPoly> e{GradedPoly::constant(n, 1)};
  std::vector<GradedPoly> P{GradedPoly(n)};
  for (int q = 1; q <= p; ++q) {
    P.push_back(exp_power_sum(q));
    GradedPoly acc(n);
    for (int i = 1; i <= q; ++i) {
      const GradedPoly t = e[q - i] * P[i];
      if (i % 2 == 1) acc += t;
      else acc -= t;
    }
    e.push_back(acc * Rational(1, q));
  }
  return e[p];
}

ChernFunctional chi_p(int n, int p) {
  if (n < 0 || p < 0 || p > n) throw std::invalid_argument("chi_p: p out of range [0, n]");
  if (n == 0) return ChernFunctional::from_poly(GradedPoly::constant(0, 1), BasisConvention::cotangent);
  const GradedPoly integrand = ch_exterior_cotangent(p, n) * todd_class(n);
  return flip_basis(top_part(integrand, BasisConvention::tangent));
}

ChernFunctional euler_functional(int n) {
  if (n < 0) throw std::invalid_argument("euler_functional needs n >= 0");
  if (n == 0) return ChernFunctional::from_poly(GradedPoly::constant(0, 1), BasisConvention::cotangent);
  return flip_basis(ChernFunctional::from_poly(GradedPoly::chern(n, n), BasisConvention::tangent));
}

ChiTable chi_table(int n) {
  if (n < 0) throw std::invalid_argument("chi_table needs n >= 0");
  ChiTable table{n, BasisConvention::cotangent, {}};
  for (int p = 0; p <= n; ++p) table.rows.push_back(chi_p(n, p));

  const Rational serre = n % 2 == 0 ? 1 : -1;
  ChernFunctional alternating(n, BasisConvention::cotangent);
  for (int p = 0; p <= n; ++p) {
    if (!(table.rows[p] == table.rows[n - p] * serre))
      throw std::logic_error("Serre duality violated in chi table row " + std::to_string(p));
    alternating = alternating + table.rows[p] * Rational(p % 2 == 0 ? 1 : -1);
  }
  if (!(alternating == euler_functional(n))) throw std::logic_error("alternating chi sum differs from the Euler class");
  return table;
}

std::pair<ChernFunctional, Integer> clear_denominators(const ChernFunctional& f) {
  const Integer l = denominator_lcm(f.coeffs);
  return {f * Rational(l), l};
}

}  // namespace chernsign
