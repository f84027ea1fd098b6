#pragma once

#include "chernsign/cone.hpp"
#include "chernsign/hrr.hpp"

#include <json.hpp>

#include <concepts>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace chernsign {

class VarietyDescriptor;

struct ProjectiveSpace { int n; };
struct Curve { int genus; };
/// Chern numbers of the cotangent bundle (equal to those of TX in weight 2).
struct Surface { Integer c1sq; Integer c2; };
/// Degree-d hypersurface in P^ambient, of dimension ambient - 1.
struct Hypersurface { int degree; int ambient; };
struct AbelianVariety { int n; };
struct Product {
  std::shared_ptr<const VarietyDescriptor> left;
  std::shared_ptr<const VarietyDescriptor> right;
};
/// Raw Chern numbers over weight_basis(n) in the stated convention.
struct Explicit {
  int n;
  BasisConvention convention;
  std::vector<Integer> numbers;
};

/// Symbolic recipe for a compact complex manifold with computable Chern numbers.
class VarietyDescriptor {
 public:
  using Kind = std::variant<ProjectiveSpace, Curve, Surface, Hypersurface, AbelianVariety, Product, Explicit>;

  VarietyDescriptor(Kind kind);  // validates
  template <typename T>
    requires(!std::same_as<std::decay_t<T>, Kind> && std::constructible_from<Kind, T>)
  VarietyDescriptor(T alternative) : VarietyDescriptor(Kind(std::move(alternative))) {}

  static VarietyDescriptor product(const VarietyDescriptor& left, const VarietyDescriptor& right);

  const Kind& kind() const { return kind_; }
  int dim() const;

 private:
  Kind kind_;
};

struct ChernNumberSet {
  int dim = 0;
  BasisConvention convention = BasisConvention::tangent;
  RationalVector values;  // over weight_basis(dim)

  ChernNumberSet in(BasisConvention target) const;
  Rational value(const Monomial& m) const;
};

inline constexpr int kDefaultVarietyMaxDim = 8;

ChernNumberSet chern_numbers(const VarietyDescriptor& v, BasisConvention convention = BasisConvention::cotangent,
                             int max_dim = kDefaultVarietyMaxDim);

/// Exact pairing of a top-weight functional with the Chern numbers of v.
Rational evaluate(const ChernFunctional& f, const VarietyDescriptor& v);

/// chi^0 .. chi^n of v.
std::vector<Rational> chi_values(const VarietyDescriptor& v);

struct SignCheck {
  std::string name;
  int dim = 0;
  NefMode mode = NefMode::nef_cotangent;
  std::vector<Rational> chi;     // chi^p
  std::vector<Rational> signed_values;  // (-1)^{n-p} chi^p or (-1)^p chi^p
  Rational euler;
  bool pass = false;
};

/// Per-p signed values of chi^p under the sign pattern of `mode`. The nef
/// hypothesis itself is the caller's assertion.
SignCheck check_signs(const VarietyDescriptor& v, NefMode mode);

/// Compact names: "pn:3", "curve:2", "abelian:2", "hyp:5:4" (degree, ambient),
/// "surface:9:3" (c1^2, c2), and products joined with '*' ("curve:2*curve:2").
VarietyDescriptor parse_variety(std::string_view text);
std::string describe(const VarietyDescriptor& v);

nlohmann::json to_json(const VarietyDescriptor& v);
VarietyDescriptor variety_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SignCheck& c);

/// One line of a JSON-lines corpus.
struct CorpusEntry {
  std::string name;
  VarietyDescriptor descriptor;
  nlohmann::json expected;
};

std::vector<CorpusEntry> read_corpus(std::istream& in);

/// Compares a corpus entry's "expected" block (keys "mode", "chi", "euler",
/// "pass", all optional except mode when chi/pass are given) with computed
/// values. Returns an empty string on agreement, otherwise a description.
std::string compare_with_expected(const CorpusEntry& entry);

}  // namespace chernsign
