#pragma once

#include "chernsign/poly.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace chernsign {

enum class Assumption { schur, my2, my4, c1top };
using AssumptionSet = std::set<Assumption>;

std::string to_string(Assumption a);
Assumption parse_assumption(std::string_view text);
/// Comma-separated list, e.g. "my4,c1top". Empty text gives the empty set.
AssumptionSet parse_assumptions(std::string_view text);

/// Which bundle is assumed nef. Cotangent targets the sign pattern
/// (-1)^{n-p} chi^p >= 0, tangent the pattern (-1)^p chi^p >= 0.
enum class NefMode { nef_cotangent, nef_tangent };
std::string to_string(NefMode m);
NefMode parse_nef_mode(std::string_view text);

struct Generator {
  std::string name;
  ChernFunctional functional;
};

/// Functionals assumed non-negative. Schur generators come first in
/// partition order; assumption generators follow under stable names.
struct GeneratorSet {
  int dim = 0;
  BasisConvention convention = BasisConvention::cotangent;
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Appends a user-supplied generator; the name must be new.
  void add(std::string name, ChernFunctional f);
  RationalMatrix matrix() const;  // one column per generator
};

/// Generators for the nef bundle of rank n whose Chern classes are the
/// variables of `convention`: Schur polynomials, 3c2 - c1^2 (my2, n = 2),
/// (5/2)c1^2c2 - c1^4 (my4, n = 4), c1^n (c1top).
GeneratorSet generators(int n, const AssumptionSet& assumptions,
                        BasisConvention convention = BasisConvention::cotangent);

/// target = sum_i coefficients[i] * g_i + residual, coefficients >= 0.
struct Certificate {
  ChernFunctional target;
  RationalVector coefficients;
  ChernFunctional residual;
};

/// Farkas witness: <witness, g_i> <= 0 for every generator and <witness, target> > 0.
struct Infeasibility {
  ChernFunctional target;
  RationalVector witness;
};

using CertifyResult = std::variant<Certificate, Infeasibility>;

/// Exact equality-constrained cone membership of target in cone(gens).
CertifyResult certify(const ChernFunctional& target, const GeneratorSet& gens);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

VerifyResult verify_certificate(const Certificate& cert, const GeneratorSet& gens);
VerifyResult verify_infeasibility(const Infeasibility& inf, const GeneratorSet& gens);

struct SignEntry {
  int p = 0;
  int sign = 1;              // applied to chi^p
  Integer scale = 1;         // denominator-clearing multiplier
  ChernFunctional target;    // sign * scale * chi^p in the generators' convention
  CertifyResult outcome;

  bool certified() const { return std::holds_alternative<Certificate>(outcome); }
};

struct SignReport {
  int dim = 0;
  NefMode mode = NefMode::nef_cotangent;
  GeneratorSet generators;
  std::vector<SignEntry> entries;

  bool all_certified() const;
};

inline constexpr int kDefaultCertifyMaxDim = 6;

/// Runs certify on every signed, denominator-free chi^p target. In
/// nef_tangent mode targets are moved to tangent variables first.
SignReport certify_chi_signs(int n, NefMode mode, const AssumptionSet& assumptions, int max_dim = kDefaultCertifyMaxDim);
/// Same, with a caller-built generator set (e.g. extended from config).
SignReport certify_chi_signs(int n, NefMode mode, const GeneratorSet& gens, int max_dim = kDefaultCertifyMaxDim);

/// Sign and target used for chi^p under `mode`, before any certify call.
std::pair<int, ChernFunctional> signed_chi_target(int n, int p, NefMode mode);

nlohmann::json to_json(const Certificate& cert, const GeneratorSet& gens);
Certificate certificate_from_json(const nlohmann::json& j, const GeneratorSet& gens);
nlohmann::json to_json(const Infeasibility& inf, const GeneratorSet& gens);
Infeasibility infeasibility_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SignReport& report);

}  // namespace chernsign
