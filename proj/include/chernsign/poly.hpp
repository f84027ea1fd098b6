#pragma once

#include "chernsign/rational.hpp"

#include <json.hpp>

#include <climits>
#include <concepts>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chernsign {

/// Which bundle the variables c_i are Chern classes of. The two are related
/// by c_i(cotangent) = (-1)^i c_i(tangent).
enum class BasisConvention { tangent, cotangent };

std::string to_string(BasisConvention c);
BasisConvention parse_convention(std::string_view text);

/// Exponent vector of c_1^{e_1} ... c_n^{e_n}; exps[i] is the exponent of c_{i+1}.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e);
  static Monomial one(int dim) { return Monomial(std::vector<int>(dim, 0)); }
  static Monomial variable(int dim, int index);  // c_index, 1 <= index <= dim

  int dim() const { return static_cast<int>(exps.size()); }
  int weight() const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;
};

/// Weight ascending, then exponents lexicographically descending (c_1 highest).
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of weight exactly n in n variables, in canonical order.
/// Their count is the partition number p(n).
std::vector<Monomial> weight_basis(int n);

/// Polynomial in c_1..c_n with exact rational coefficients, truncated above
/// weight max_weight (= n unless built untruncated for internal elimination).
class GradedPoly {
 public:
  static constexpr int kUnbounded = INT_MAX;
  using TermMap = std::map<Monomial, Rational, CanonicalLess>;

  explicit GradedPoly(int dim, int max_weight = -1);

  static GradedPoly constant(int dim, const Rational& c);
  /// c_i with c_0 = 1 and c_i = 0 outside [0, dim].
  static GradedPoly chern(int dim, int i);
  static GradedPoly term(int dim, const Monomial& m, const Rational& c);
  template <std::floating_point F>
  static GradedPoly term(int dim, const Monomial& m, F) = delete;
  template <std::floating_point F>
  static GradedPoly constant(int dim, F) = delete;

  int dim() const { return dim_; }
  int max_weight() const { return max_weight_; }
  bool truncated() const { return max_weight_ == dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  GradedPoly component(int weight) const;
  bool is_homogeneous(int weight) const;
  Rational constant_term() const { return coefficient(Monomial::one(dim_)); }

  /// Adds c*m in place; drops the term if it cancels or exceeds max_weight.
  void add_term(const Monomial& m, const Rational& c);

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator-() const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator*(const Rational& s) const;
  template <std::floating_point F>
  GradedPoly operator*(F) const = delete;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);

  GradedPoly pow(int e) const;

  /// Same terms with a different truncation weight; throws if a term would be lost.
  GradedPoly with_max_weight(int max_weight) const;

  bool operator==(const GradedPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

 private:
  void require_compatible(const GradedPoly& o) const;

  int dim_;
  int max_weight_;
  TermMap terms_;
};

inline GradedPoly operator*(const Rational& s, const GradedPoly& p) { return p * s; }

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);

/// Quotient q with a = q*b, for untruncated polynomials. Throws
/// std::domain_error if b does not divide a.
GradedPoly exact_divide(const GradedPoly& a, const GradedPoly& b);

/// exp(u) for u with zero constant term (nilpotent in the truncated ring).
GradedPoly exp_nilpotent(const GradedPoly& u);

/// Top-weight linear functional on Chern numbers: coefficients over
/// weight_basis(dim) in canonical order, tagged with the variables' convention.
struct ChernFunctional {
  int dim = 0;
  BasisConvention convention = BasisConvention::cotangent;
  RationalVector coeffs;

  ChernFunctional() = default;
  ChernFunctional(int n, BasisConvention c);
  ChernFunctional(int n, BasisConvention c, RationalVector v);

  static ChernFunctional from_poly(const GradedPoly& p, BasisConvention c);
  GradedPoly to_poly() const;

  bool is_zero() const;
  ChernFunctional operator+(const ChernFunctional& o) const;
  ChernFunctional operator-(const ChernFunctional& o) const;
  ChernFunctional operator*(const Rational& s) const;
  bool operator==(const ChernFunctional& o) const;
};

/// Weight-dim part of a, as a functional (lower weights are discarded).
ChernFunctional top_part(const GradedPoly& a, BasisConvention convention = BasisConvention::cotangent);

std::string to_string(const Monomial& m);
/// Canonical text: `-1*c1^4 + 4*c1^2*c2 + 1*c1*c3 + 3*c2^2 - 1*c4`, "0" when empty.
std::string to_string(const GradedPoly& p);
/// Accepts the canonical text and looser input ("c1^2 + c2", "3c1*c2",
/// "c1c2"). Terms above weight dim are rejected, as are decimal literals.
GradedPoly parse_poly(std::string_view text, int dim);
Monomial parse_monomial(std::string_view text, int dim);

nlohmann::json to_json(const GradedPoly& p);
GradedPoly poly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChernFunctional& f);
ChernFunctional functional_from_json(const nlohmann::json& j);

}  // namespace chernsign
