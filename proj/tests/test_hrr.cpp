#include "chernsign/hrr.hpp"
#include "chernsign/symchern.hpp"
#include "roots.hpp"

#include <doctest.h>

#include <future>

using namespace chernsign;

namespace {
GradedPoly P(const char* text, int dim) { return parse_poly(text, dim); }
ChernFunctional F(const char* text, int dim) { return ChernFunctional::from_poly(P(text, dim), BasisConvention::cotangent); }
}  // namespace

TEST_CASE("Todd class low-weight components") {
  const auto td = todd_class(4);
  CHECK(td.constant_term() == 1);
  CHECK(td.component(1) == P("1/2*c1", 4));
  CHECK(td.component(2) == P("1/12*c1^2 + 1/12*c2", 4));
  CHECK(td.component(3) == P("1/24*c1*c2", 4));
  CHECK(todd_class(2).component(2) == P("1/12*c1^2 + 1/12*c2", 2));
  CHECK(todd_class(3).component(3) == P("1/24*c1*c2", 3));
}

TEST_CASE("Todd class matches the Bernoulli-number product on roots") {
  const auto b = oracle::bernoulli_plus(7);
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rational> series(n + 1);
    Rational fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fact *= k;
      series[k] = b[k] / fact;
    }
    oracle::RootPoly prod = oracle::RootPoly::constant(n, n, 1);
    for (int i = 0; i < n; ++i) prod = prod * oracle::RootPoly::univariate(n, n, i, series);
    GradedPoly expected(n);
    for (int w = 0; w <= n; ++w) {
      // Components of weight w < n live in the first w variables only.
      const auto part = oracle::symmetric_to_chern(prod.homogeneous(w), n);
      expected += part;
    }
    CHECK(todd_class(n) == expected);
  }
}

TEST_CASE("Chern character of exterior powers of the cotangent bundle") {
  CHECK(ch_exterior_cotangent(0, 3) == GradedPoly::constant(3, 1));
  for (int n = 1; n <= 4; ++n) {
    const auto top = ch_exterior_cotangent(n, n);
    CHECK(top.constant_term() == 1);
    CHECK(top.component(1) == -GradedPoly::chern(n, 1));
  }
  CHECK(ch_exterior_cotangent(1, 2) == P("2 - c1 + 1/2*c1^2 - c2", 2));
  CHECK_THROWS_AS(ch_exterior_cotangent(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(ch_exterior_cotangent(-1, 2), std::invalid_argument);
}

TEST_CASE("chi_p reproduces the Riemann-Roch displays") {
  CHECK(chi_p(1, 1) == F("1/2*c1", 1));
  CHECK(chi_p(2, 0) == F("1/12*c1^2 + 1/12*c2", 2));
  CHECK(chi_p(2, 1) == F("1/6*c1^2 - 5/6*c2", 2));
  CHECK(chi_p(3, 3) == F("1/24*c1*c2", 3));
  CHECK(chi_p(4, 4) == F("-1/720*c1^4 + 4/720*c1^2*c2 + 1/720*c1*c3 + 3/720*c2^2 - 1/720*c4", 4));
  CHECK(chi_p(0, 0).coeffs[0] == 1);
  CHECK_THROWS_AS(chi_p(2, 3), std::invalid_argument);
}

TEST_CASE("chi_table rows") {
  const auto t2 = chi_table(2);
  REQUIRE(t2.rows.size() == 3);
  CHECK(t2.rows[0] == F("1/12*c1^2 + 1/12*c2", 2));
  CHECK(t2.rows[1] == F("1/6*c1^2 - 5/6*c2", 2));
  CHECK(t2.rows[2] == t2.rows[0]);

  const auto t3 = chi_table(3);
  CHECK(t3.rows[0] == F("-1/24*c1*c2", 3));
  CHECK(t3.rows[3] == F("1/24*c1*c2", 3));

  const auto t1 = chi_table(1);
  CHECK(t1.rows[0] == F("-1/2*c1", 1));
  CHECK(t1.rows[1] == F("1/2*c1", 1));
}

TEST_CASE("Euler functional") {
  CHECK(euler_functional(2) == F("c2", 2));
  CHECK(euler_functional(3) == F("-c3", 3));
  const auto t = chi_table(2);
  CHECK(t.rows[0] - t.rows[1] + t.rows[2] == F("c2", 2));
}

TEST_CASE("Serre duality and the Euler identity hold coefficient-wise") {
  for (int n = 0; n <= 6; ++n) {
    ChernFunctional alternating(n, BasisConvention::cotangent);
    for (int p = 0; p <= n; ++p) {
      CHECK(chi_p(n, p) == chi_p(n, n - p) * Rational(n % 2 == 0 ? 1 : -1));
      alternating = alternating + chi_p(n, p) * Rational(p % 2 == 0 ? 1 : -1);
    }
    CHECK(alternating == euler_functional(n));
  }
}

TEST_CASE("surface signature identities") {
  // chi_top = c2(TX), sigma = (c1(TX)^2 - 2 c2(TX))/3, both top-weight functionals
  const auto chi_top = F("c2", 2);
  const auto sigma = F("1/3*c1^2 - 2/3*c2", 2);
  CHECK(chi_p(2, 0) == (chi_top + sigma) * Rational(1, 4));
  CHECK(chi_p(2, 1) == (sigma - chi_top) * Rational(1, 2));
}

TEST_CASE("chi_p agrees with the chi_y generating function on explicit roots") {
  for (int n = 1; n <= 5; ++n) {
    const auto oracle_rows = oracle::chi_y_tangent(n);
    REQUIRE(static_cast<int>(oracle_rows.size()) == n + 1);
    for (int p = 0; p <= n; ++p) {
      const auto expected = flip_basis(ChernFunctional::from_poly(oracle_rows[p], BasisConvention::tangent));
      CHECK(chi_p(n, p) == expected);
    }
  }
}

TEST_CASE("clear_denominators") {
  auto [f, scale] = clear_denominators(chi_p(4, 4));
  CHECK(scale == 720);
  CHECK(f == F("-c1^4 + 4*c1^2*c2 + c1*c3 + 3*c2^2 - c4", 4));
  CHECK(clear_denominators(chi_p(2, 1)).second == 6);
  CHECK(clear_denominators(ChernFunctional(3, BasisConvention::cotangent)).second == 1);
}

TEST_CASE("concurrent chi_table calls give identical results") {
  const auto reference = chi_table(5);
  std::vector<std::future<ChiTable>> jobs;
  for (int i = 0; i < 4; ++i) jobs.push_back(std::async(std::launch::async, [] { return chi_table(5); }));
  for (auto& j : jobs) {
    const auto t = j.get();
    for (int p = 0; p <= 5; ++p) CHECK(t.rows[p] == reference.rows[p]);
  }
}
