#include "chernsign/cone.hpp"

#include "chernsign/hrr.hpp"
#include "chernsign/simplex.hpp"
#include "chernsign/symchern.hpp"

#include <sstream>
#include <stdexcept>

namespace chernsign {

std::string to_string(Assumption a) {
  switch (a) {
    case Assumption::schur: return "schur";
    case Assumption::my2: return "my2";
    case Assumption::my4: return "my4";
    case Assumption::c1top: return "c1top";
  }
  return "?";
}

Assumption parse_assumption(std::string_view text) {
  for (Assumption a : {Assumption::schur, Assumption::my2, Assumption::my4, Assumption::c1top})
    if (text == to_string(a)) return a;
  throw std::invalid_argument("unknown assumption '" + std::string(text) + "'");
}

AssumptionSet parse_assumptions(std::string_view text) {
  AssumptionSet out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(parse_assumption(item));
  return out;
}

std::string to_string(NefMode m) { return m == NefMode::nef_cotangent ? "nef_cotangent" : "nef_tangent"; }

NefMode parse_nef_mode(std::string_view text) {
  if (text == "nef_cotangent" || text == "nef-cotangent") return NefMode::nef_cotangent;
  if (text == "nef_tangent" || text == "nef-tangent") return NefMode::nef_tangent;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

void GeneratorSet::add(std::string name, ChernFunctional f) {
  if (f.dim != dim || f.convention != convention) throw std::invalid_argument("generator dimension/convention mismatch");
  if (index_of(name)) throw std::invalid_argument("duplicate generator name '" + name + "'");
  generators.push_back({std::move(name), std::move(f)});
}

RationalMatrix GeneratorSet::matrix() const {
  const Eigen::Index m = static_cast<Eigen::Index>(weight_basis(dim).size());
  RationalMatrix A(m, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) A.col(static_cast<Eigen::Index>(j)) = generators[j].functional.coeffs;
  return A;
}

GeneratorSet generators(int n, const AssumptionSet& assumptions, BasisConvention convention) {
  if (n < 1) throw std::invalid_argument("generators need n >= 1");
  if (assumptions.contains(Assumption::my2) && n != 2) throw std::invalid_argument("my2 applies only in dimension 2");
  if (assumptions.contains(Assumption::my4) && n != 4) throw std::invalid_argument("my4 applies only in dimension 4");

  GeneratorSet gens{n, convention, {}};
  auto add = [&](std::string name, const GradedPoly& p) { gens.add(std::move(name), ChernFunctional::from_poly(p, convention)); };
  if (assumptions.contains(Assumption::schur))
    for (const Partition& a : partitions_of(n)) add(generator_name(a), schur(a, n));

  const GradedPoly c1 = GradedPoly::chern(n, 1);
  if (assumptions.contains(Assumption::my2)) add("my2", GradedPoly::chern(2, 2) * Rational(3) - c1 * c1);
  if (assumptions.contains(Assumption::my4))
    add("my4", c1 * c1 * GradedPoly::chern(4, 2) * Rational(5, 2) - c1.pow(4));
  if (assumptions.contains(Assumption::c1top)) add("c1top", c1.pow(n));
  return gens;
}

namespace {

void require_matching(const ChernFunctional& target, const GeneratorSet& gens) {
  if (target.dim != gens.dim) throw std::invalid_argument("target and generators differ in dimension");
  if (target.convention != gens.convention) throw std::invalid_argument("target and generators differ in convention");
}

// Scales a witness to a primitive integer vector; positive multiples keep
// the Farkas inequalities.
RationalVector normalize_witness(RationalVector w) {
  w *= Rational(denominator_lcm(w));
  Integer g = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) g = boost::multiprecision::gcd(g, numerator(w[i]));
  if (g > 1) w /= Rational(g);
  return w;
}

}  // namespace

CertifyResult certify(const ChernFunctional& target, const GeneratorSet& gens) {
  require_matching(target, gens);
  for (const auto& g : gens.generators)
    if (g.functional.dim != gens.dim || g.functional.convention != gens.convention)
      throw std::invalid_argument("generator '" + g.name + "' does not match its set");

  const auto result = solve_feasibility<Rational>(gens.matrix(), target.coeffs);
  if (result.feasible())
    return Certificate{target, *result.solution, ChernFunctional(target.dim, target.convention)};
  return Infeasibility{target, normalize_witness(*result.farkas)};
}

VerifyResult verify_certificate(const Certificate& cert, const GeneratorSet& gens) {
  if (cert.target.dim != gens.dim || cert.target.convention != gens.convention)
    return {false, "target does not match the generator set"};
  if (cert.residual.dim != gens.dim || cert.residual.convention != gens.convention)
    return {false, "residual does not match the generator set"};
  if (cert.coefficients.size() != static_cast<Eigen::Index>(gens.size()))
    return {false, "coefficient vector is not aligned with the generators"};
  for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i)
    if (cert.coefficients[i] < 0)
      return {false, "negative coefficient " + to_string(cert.coefficients[i]) + " on " + gens.generators[i].name};

  if (!cert.residual.is_zero()) {
    bool declared = false;
    for (const auto& g : gens.generators) {
      // residual = mu * g with mu >= 0
      Eigen::Index pivot = -1;
      for (Eigen::Index i = 0; i < g.functional.coeffs.size(); ++i)
        if (g.functional.coeffs[i] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      const Rational mu = cert.residual.coeffs[pivot] / g.functional.coeffs[pivot];
      if (mu >= 0 && cert.residual.coeffs == RationalVector(g.functional.coeffs * mu)) {
        declared = true;
        break;
      }
    }
    if (!declared) return {false, "residual is neither zero nor a non-negative generator multiple"};
  }

  RationalVector sum = cert.residual.coeffs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    sum += gens.generators[i].functional.coeffs * cert.coefficients[static_cast<Eigen::Index>(i)];
  if (sum != cert.target.coeffs) {
    const ChernFunctional diff(gens.dim, gens.convention, RationalVector(cert.target.coeffs - sum));
    return {false, "combination differs from target by " + to_string(diff.to_poly())};
  }
  return {true, ""};
}

VerifyResult verify_infeasibility(const Infeasibility& inf, const GeneratorSet& gens) {
  if (inf.target.dim != gens.dim || inf.target.convention != gens.convention)
    return {false, "target does not match the generator set"};
  if (inf.witness.size() != inf.target.coeffs.size()) return {false, "witness has the wrong length"};
  for (const auto& g : gens.generators) {
    const Rational pairing = inf.witness.dot(g.functional.coeffs);
    if (pairing > 0) return {false, "witness pairs positively (" + to_string(pairing) + ") with " + g.name};
  }
  const Rational t = inf.witness.dot(inf.target.coeffs);
  if (t <= 0) return {false, "witness pairs non-positively (" + to_string(t) + ") with the target"};
  return {true, ""};
}

bool SignReport::all_certified() const {
  for (const auto& e : entries)
    if (!e.certified()) return false;
  return true;
}

std::pair<int, ChernFunctional> signed_chi_target(int n, int p, NefMode mode) {
  const int exponent = mode == NefMode::nef_cotangent ? n - p : p;
  const int sign = exponent % 2 == 0 ? 1 : -1;
  ChernFunctional target = chi_p(n, p) * Rational(sign);
  if (mode == NefMode::nef_tangent) target = flip_basis(target);
  return {sign, target};
}

SignReport certify_chi_signs(int n, NefMode mode, const AssumptionSet& assumptions, int max_dim) {
  const BasisConvention conv = mode == NefMode::nef_cotangent ? BasisConvention::cotangent : BasisConvention::tangent;
  return certify_chi_signs(n, mode, generators(n, assumptions, conv), max_dim);
}

SignReport certify_chi_signs(int n, NefMode mode, const GeneratorSet& gens, int max_dim) {
  if (n < 1 || n > max_dim)
    throw std::invalid_argument("certify_chi_signs: dimension outside 1.." + std::to_string(max_dim));
  SignReport report{n, mode, gens, {}};
  for (int p = 0; p <= n; ++p) {
    auto [sign, target] = signed_chi_target(n, p, mode);
    auto [cleared, scale] = clear_denominators(target);
    CertifyResult outcome = certify(cleared, gens);
    report.entries.push_back({p, sign, scale, cleared, std::move(outcome)});
  }
  return report;
}

// ------------------------------------------------------------------- JSON

nlohmann::json to_json(const Certificate& cert, const GeneratorSet& gens) {
  nlohmann::json terms = nlohmann::json::array();
  for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i)
    if (cert.coefficients[i] != 0)
      terms.push_back({{"gen", gens.generators[static_cast<std::size_t>(i)].name}, {"coef", to_string(cert.coefficients[i])}});
  return {{"target", to_json(cert.target)}, {"terms", terms}, {"residual", to_json(cert.residual)}};
}

Certificate certificate_from_json(const nlohmann::json& j, const GeneratorSet& gens) {
  Certificate cert{functional_from_json(j.at("target")), RationalVector::Zero(static_cast<Eigen::Index>(gens.size())),
                   functional_from_json(j.at("residual"))};
  for (const auto& t : j.at("terms")) {
    const auto name = t.at("gen").get<std::string>();
    const auto index = gens.index_of(name);
    if (!index) throw std::invalid_argument("certificate names unknown generator '" + name + "'");
    cert.coefficients[static_cast<Eigen::Index>(*index)] += parse_rational(t.at("coef").get<std::string>());
  }
  return cert;
}

nlohmann::json to_json(const Infeasibility& inf, const GeneratorSet& gens) {
  const auto basis = weight_basis(inf.target.dim);
  nlohmann::json witness = nlohmann::json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    witness.push_back({{"monomial", to_string(basis[i])}, {"value", to_string(inf.witness[static_cast<Eigen::Index>(i)])}});
  nlohmann::json pairings = nlohmann::json::array();
  for (const auto& g : gens.generators)
    pairings.push_back({{"gen", g.name}, {"value", to_string(Rational(inf.witness.dot(g.functional.coeffs)))}});
  return {{"target", to_json(inf.target)},
          {"witness", witness},
          {"generator_pairings", pairings},
          {"target_pairing", to_string(Rational(inf.witness.dot(inf.target.coeffs)))}};
}

Infeasibility infeasibility_from_json(const nlohmann::json& j) {
  Infeasibility inf{functional_from_json(j.at("target")), {}};
  const auto basis = weight_basis(inf.target.dim);
  const auto& w = j.at("witness");
  if (w.size() != basis.size()) throw std::invalid_argument("witness has the wrong length");
  inf.witness = RationalVector(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (parse_monomial(w[i].at("monomial").get<std::string>(), inf.target.dim) != basis[i])
      throw std::invalid_argument("witness entries out of canonical order");
    inf.witness[static_cast<Eigen::Index>(i)] = parse_rational(w[i].at("value").get<std::string>());
  }
  return inf;
}

nlohmann::json to_json(const SignReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row = {{"p", e.p}, {"sign", e.sign}, {"scale", e.scale.str()}, {"target", to_string(e.target.to_poly())}};
    if (const auto* cert = std::get_if<Certificate>(&e.outcome)) {
      row["status"] = "certified";
      row["certificate"] = to_json(*cert, report.generators);
    } else {
      row["status"] = "open";
      row["infeasibility"] = to_json(std::get<Infeasibility>(e.outcome), report.generators);
    }
    entries.push_back(std::move(row));
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : report.generators.generators) gens.push_back({{"name", g.name}, {"poly", to_string(g.functional.to_poly())}});
  return {{"dim", report.dim}, {"mode", to_string(report.mode)}, {"generators", gens}, {"entries", entries},
          {"all_certified", report.all_certified()}};
}

}  // namespace chernsign
