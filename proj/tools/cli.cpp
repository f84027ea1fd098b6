#include "cli.hpp"

#include "chernsign/cone.hpp"
#include "chernsign/hrr.hpp"
#include "chernsign/symchern.hpp"
#include "chernsign/varieties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#ifndef CHERNSIGN_VERSION
#define CHERNSIGN_VERSION "0.0.0"
#endif

namespace chernsign::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExtraGenerator {
  int dim;
  BasisConvention convention;
  std::string name;
  GradedPoly poly;
};

struct Config {
  int max_dim = kDefaultVarietyMaxDim;
  int certify_max_dim = kDefaultCertifyMaxDim;
  std::vector<ExtraGenerator> extra_generators;
};

Config load_config() {
  Config cfg;
  const char* path = std::getenv("CHERNSIGN_CONFIG");
  if (path == nullptr || *path == '\0') return cfg;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot read config file ") + path);
  json j;
  try {
    j = json::parse(in);
    cfg.max_dim = j.value("max_dim", cfg.max_dim);
    cfg.certify_max_dim = j.value("certify_max_dim", cfg.certify_max_dim);
    for (const auto& g : j.value("extra_generators", json::array())) {
      const int dim = g.at("dim").get<int>();
      cfg.extra_generators.push_back({dim, parse_convention(g.value("convention", std::string("cotangent"))),
                                      g.at("name").get<std::string>(), parse_poly(g.at("poly").get<std::string>(), dim)});
    }
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad config file ") + path + ": " + e.what());
  }
  return cfg;
}

struct Globals {
  bool json = false;
  std::string convention = "cotangent";
  std::optional<int> max_dim;
};

json envelope(const std::string& command, int dim, const std::string& convention, json payload) {
  return {{"command", command},
          {"dimension", dim},
          {"convention", convention},
          {"payload", std::move(payload)},
          {"toolVersion", CHERNSIGN_VERSION}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// "(a*c1 + b*c2)/d" with the least common denominator pulled out.
std::string fraction_text(const ChernFunctional& f) {
  auto [cleared, scale] = clear_denominators(f);
  const std::string body = to_string(cleared.to_poly());
  if (scale == 1) return body;
  return "(" + body + ")/" + scale.str();
}

void check_dim(int dim, int max_dim) {
  if (dim < 0 || dim > max_dim)
    throw UsageError("dimension " + std::to_string(dim) + " outside 0.." + std::to_string(max_dim));
}

// ------------------------------------------------------------------- chi

int cmd_chi(int dim, const Globals& g, const Config& cfg, std::ostream& out) {
  check_dim(dim, g.max_dim.value_or(cfg.max_dim));
  const BasisConvention conv = parse_convention(g.convention);
  ChiTable table = chi_table(dim);
  if (conv == BasisConvention::tangent)
    for (auto& row : table.rows) row = flip_basis(row);

  if (g.json) {
    json rows = json::array();
    for (int p = 0; p <= dim; ++p)
      rows.push_back({{"p", p}, {"poly", to_json(table.rows[p].to_poly())}, {"text", fraction_text(table.rows[p])}});
    emit_json(out, envelope("chi", dim, g.convention, {{"rows", rows}}));
    return kOk;
  }
  out << "# chi^p = chi(X, Omega^p), dim " << dim << ", " << g.convention << " variables\n";
  for (int p = 0; p <= dim; ++p) out << "chi^" << p << " = " << fraction_text(table.rows[p]) << "\n";
  return kOk;
}

// ----------------------------------------------------------------- schur

int cmd_schur(int dim, const std::string& partition, bool segre, const Globals& g, const Config& cfg, std::ostream& out) {
  check_dim(dim, g.max_dim.value_or(cfg.max_dim));
  if (dim < 1) throw UsageError("schur needs --dim >= 1");
  std::vector<Partition> parts;
  if (partition.empty()) parts = partitions_of(dim);
  else parts.push_back(parse_partition(partition, dim));

  if (g.json) {
    json rows = json::array();
    for (const auto& a : parts)
      rows.push_back({{"partition", to_string(a)}, {"name", generator_name(a)}, {"poly", to_json(schur(a, dim))}});
    json payload = {{"polynomials", rows}};
    if (segre) payload["segre_top"] = to_json(segre_top(dim));
    emit_json(out, envelope("schur", dim, g.convention, payload));
    return kOk;
  }
  for (const auto& a : parts) out << generator_name(a) << " = " << to_string(schur(a, dim)) << "\n";
  if (segre) out << "s_" << dim << " = " << to_string(segre_top(dim)) << "\n";
  return kOk;
}

// --------------------------------------------------------------- certify

struct ResolvedTarget {
  ChernFunctional functional;
  int sign = 1;
  Integer scale = 1;
};

ResolvedTarget resolve_target(const std::string& spec, int dim, NefMode mode, BasisConvention gens_conv,
                              BasisConvention input_conv) {
  ResolvedTarget t;
  if (spec.rfind("chi:", 0) == 0) {
    int p = -1;
    try {
      std::size_t used = 0;
      p = std::stoi(spec.substr(4), &used);
      if (used != spec.size() - 4) p = -1;
    } catch (const std::exception&) {
    }
    if (p < 0 || p > dim) throw UsageError("target '" + spec + "' needs 0 <= p <= dim");
    auto [sign, f] = signed_chi_target(dim, p, mode);
    t.sign = sign;
    t.functional = f;
  } else if (spec == "euler") {
    // Sign pattern (-1)^n for nef cotangent bundles, + for nef tangent bundles.
    ChernFunctional e = euler_functional(dim);
    if (mode == NefMode::nef_cotangent) {
      t.sign = dim % 2 == 0 ? 1 : -1;
      e = e * Rational(t.sign);
    } else {
      e = flip_basis(e);
    }
    t.functional = e;
  } else {
    GradedPoly p(dim);
    try {
      p = parse_poly(spec, dim);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!p.is_homogeneous(dim)) throw UsageError("inline target must be homogeneous of weight " + std::to_string(dim));
    t.functional = ChernFunctional::from_poly(p, input_conv);
    if (input_conv != gens_conv) t.functional = flip_basis(t.functional);
  }
  auto [cleared, scale] = clear_denominators(t.functional);
  t.functional = cleared;
  t.scale = scale;
  return t;
}

int cmd_certify(int dim, const std::string& target_spec, const std::string& assume, const std::string& mode_text,
                const Globals& g, const Config& cfg, std::ostream& out) {
  const int max_dim = g.max_dim.value_or(cfg.certify_max_dim);
  if (dim < 1 || dim > max_dim) throw UsageError("certify needs 1 <= --dim <= " + std::to_string(max_dim));
  NefMode mode;
  AssumptionSet assumptions;
  try {
    mode = parse_nef_mode(mode_text);
    assumptions = parse_assumptions(assume);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (assumptions.contains(Assumption::schur)) throw UsageError("schur generators are always included; --assume takes my2, my4, c1top");
  assumptions.insert(Assumption::schur);

  const BasisConvention gens_conv = mode == NefMode::nef_cotangent ? BasisConvention::cotangent : BasisConvention::tangent;
  GeneratorSet gens;
  try {
    gens = generators(dim, assumptions, gens_conv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& extra : cfg.extra_generators) {
    if (extra.dim != dim) continue;
    ChernFunctional f = top_part(extra.poly, extra.convention);
    if (f.convention != gens_conv) f = flip_basis(f);
    gens.add(extra.name, f);
  }

  const ResolvedTarget target = resolve_target(target_spec, dim, mode, gens_conv, parse_convention(g.convention));
  const CertifyResult result = certify(target.functional, gens);

  json payload = {{"target_spec", target_spec},
                  {"mode", to_string(mode)},
                  {"sign", target.sign},
                  {"scale", target.scale.str()},
                  {"target", to_string(target.functional.to_poly())}};
  json names = json::array();
  for (const auto& gen : gens.generators) names.push_back(gen.name);
  payload["generators"] = names;

  int code;
  VerifyResult check;
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    check = verify_certificate(*cert, gens);
    payload["status"] = "certified";
    payload["certificate"] = to_json(*cert, gens);
    code = kOk;
  } else {
    const auto& inf = std::get<Infeasibility>(result);
    check = verify_infeasibility(inf, gens);
    payload["status"] = "infeasible";
    payload["infeasibility"] = to_json(inf, gens);
    code = kFailed;
  }
  payload["verified"] = check.ok;
  if (!check.ok) throw std::logic_error("self-check failed: " + check.diagnostic);

  if (g.json) {
    emit_json(out, envelope("certify", dim, to_string(gens_conv), payload));
    return code;
  }
  out << "target " << target_spec << " (dim " << dim << ", " << to_string(mode) << ", sign " << (target.sign > 0 ? "+" : "-")
      << ", scaled by " << target.scale << ")\n";
  out << "  " << to_string(target.functional.to_poly()) << "\n";
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    out << "certified: target = sum of non-negative multiples of generators\n";
    for (Eigen::Index i = 0; i < cert->coefficients.size(); ++i)
      if (cert->coefficients[i] != 0)
        out << "  " << to_string(cert->coefficients[i]) << " * " << gens.generators[static_cast<std::size_t>(i)].name << "\n";
  } else {
    const auto& inf = std::get<Infeasibility>(result);
    out << "infeasible: no non-negative combination of the generators equals the target\n";
    out << "farkas witness w (w.g <= 0 for all generators, w.target > 0):\n";
    const auto basis = weight_basis(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << "  w[" << to_string(basis[i]) << "] = " << to_string(inf.witness[static_cast<Eigen::Index>(i)]) << "\n";
    for (const auto& gen : gens.generators)
      out << "  w." << gen.name << " = " << to_string(Rational(inf.witness.dot(gen.functional.coeffs))) << "\n";
    out << "  w.target = " << to_string(Rational(inf.witness.dot(inf.target.coeffs))) << "\n";
  }
  out << "verified: yes\n";
  return code;
}

// --------------------------------------------------------- variety / check

ChernFunctional resolve_functional(const std::string& spec, int dim, BasisConvention conv) {
  if (spec.rfind("chi:", 0) == 0) {
    const int p = std::stoi(spec.substr(4));
    if (p < 0 || p > dim) throw UsageError("functional '" + spec + "' needs 0 <= p <= dim");
    return chi_p(dim, p);
  }
  if (spec == "euler") return euler_functional(dim);
  const GradedPoly p = parse_poly(spec, dim);
  if (!p.is_homogeneous(dim)) throw UsageError("functional must be homogeneous of weight " + std::to_string(dim));
  return ChernFunctional::from_poly(p, conv);
}

int cmd_variety_eval(const std::string& name, const std::string& functional, const Globals& g, const Config& cfg,
                     std::ostream& out) {
  VarietyDescriptor v = parse_variety(name);
  const int max_dim = g.max_dim.value_or(cfg.max_dim);
  check_dim(v.dim(), max_dim);
  const BasisConvention conv = parse_convention(g.convention);
  const ChernNumberSet numbers = chern_numbers(v, conv, max_dim);
  const auto basis = weight_basis(v.dim());
  const auto chi = chi_values(v);
  const Rational euler = evaluate(euler_functional(v.dim()), v);
  std::optional<Rational> value;
  if (!functional.empty()) value = evaluate(resolve_functional(functional, v.dim(), conv), v);

  if (g.json) {
    json nums = json::object();
    for (std::size_t i = 0; i < basis.size(); ++i) nums[to_string(basis[i])] = to_string(numbers.values[static_cast<Eigen::Index>(i)]);
    json chis = json::array();
    for (const auto& c : chi) chis.push_back(to_string(c));
    json payload = {{"variety", describe(v)}, {"descriptor", to_json(v)}, {"chern_numbers", nums}, {"chi", chis},
                    {"euler", to_string(euler)}};
    if (value) payload["value"] = {{"functional", functional}, {"result", to_string(*value)}};
    emit_json(out, envelope("variety eval", v.dim(), g.convention, payload));
    return kOk;
  }
  out << describe(v) << " (dim " << v.dim() << ", " << g.convention << " Chern numbers)\n";
  for (std::size_t i = 0; i < basis.size(); ++i)
    out << "  " << to_string(basis[i]) << " = " << to_string(numbers.values[static_cast<Eigen::Index>(i)]) << "\n";
  for (std::size_t p = 0; p < chi.size(); ++p) out << "  chi^" << p << " = " << to_string(chi[p]) << "\n";
  out << "  euler = " << to_string(euler) << "\n";
  if (value) out << "value of " << functional << " = " << to_string(*value) << "\n";
  return kOk;
}

void print_check(const SignCheck& c, std::ostream& out) {
  out << c.name << " [" << to_string(c.mode) << "] " << (c.pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t p = 0; p < c.chi.size(); ++p)
    out << "  p=" << p << "  chi^p = " << to_string(c.chi[p]) << "  signed = " << to_string(c.signed_values[p])
        << (c.signed_values[p] < 0 ? "  FAIL" : "") << "\n";
}

int cmd_check(const std::string& target, const std::string& mode_text, const std::optional<long long>& c1sq,
              const std::optional<long long>& c2, const Globals& g, const Config& cfg, std::ostream& out) {
  const int max_dim = g.max_dim.value_or(cfg.max_dim);
  std::optional<NefMode> mode;
  if (!mode_text.empty()) {
    try {
      mode = parse_nef_mode(mode_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<CorpusEntry> entries;
  const bool is_file = target.size() > 6 && (target.ends_with(".jsonl") || std::filesystem::is_regular_file(target));
  if (is_file) {
    std::ifstream in(target);
    if (!in) throw UsageError("cannot read corpus file " + target);
    try {
      entries = read_corpus(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (target == "surface") {
    if (!c1sq || !c2) throw UsageError("check surface needs --c1sq and --c2");
    entries.push_back({"surface", Surface{Integer(*c1sq), Integer(*c2)}, json::object()});
  } else {
    try {
      entries.push_back({target, parse_variety(target), json::object()});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  bool all_pass = true;
  json results = json::array();
  for (const auto& entry : entries) {
    check_dim(entry.descriptor.dim(), max_dim);
    std::optional<NefMode> m = mode;
    if (!m && entry.expected.contains("mode")) m = parse_nef_mode(entry.expected.at("mode").get<std::string>());
    std::string mismatch;
    if (!entry.expected.empty()) mismatch = compare_with_expected(entry);
    if (!m) {
      // Corpus entries without a sign pattern only record values.
      if (!is_file) throw UsageError("no --mode given for " + entry.name);
      const bool ok = mismatch.empty();
      all_pass = all_pass && ok;
      json r = {{"name", entry.name}, {"dim", entry.descriptor.dim()}, {"ok", ok}};
      if (!ok) r["mismatch"] = mismatch;
      results.push_back(r);
      if (!g.json) {
        out << entry.name << " [values] " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) out << "  expected-value mismatch: " << mismatch << "\n";
      }
      continue;
    }
    SignCheck c = check_signs(entry.descriptor, *m);
    c.name = entry.name;
    // Corpus entries may record an expected failure; the audit then checks agreement.
    const bool ok = entry.expected.contains("pass") ? mismatch.empty() : (c.pass && mismatch.empty());
    all_pass = all_pass && ok;
    json r = to_json(c);
    if (!mismatch.empty()) r["mismatch"] = mismatch;
    r["ok"] = ok;
    results.push_back(r);
    if (!g.json) {
      print_check(c, out);
      if (!mismatch.empty()) out << "  expected-value mismatch: " << mismatch << "\n";
    }
  }
  if (g.json) {
    const int dim = entries.size() == 1 ? entries[0].descriptor.dim() : -1;
    emit_json(out, envelope("check", dim, "cotangent", {{"results", results}, {"all_pass", all_pass}}));
  } else {
    out << (all_pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return all_pass ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chern-number toolkit: chi^p genera, Schur generators, positivity certificates", "chernsign"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", CHERNSIGN_VERSION);

  Globals g;
  app.add_flag("--json", g.json, "Emit canonical JSON");
  app.add_option("--convention", g.convention, "Variables for input and output polynomials")
      ->check(CLI::IsMember({"tangent", "cotangent"}));
  app.add_option("--max-dim", g.max_dim, "Largest dimension accepted");

  int dim = -1;
  auto* chi = app.add_subcommand("chi", "Table of chi^p = chi(X, Omega^p) as Chern-number polynomials");
  chi->add_option("--dim", dim, "Complex dimension n")->required();

  std::string partition;
  bool segre = false;
  auto* schur_cmd = app.add_subcommand("schur", "Schur polynomials det(c_{a_i - i + j}) of weight n");
  schur_cmd->add_option("--dim", dim, "Complex dimension n")->required();
  schur_cmd->add_option("--partition", partition, "Single partition, e.g. 2,1");
  schur_cmd->add_flag("--segre", segre, "Also print the top Segre class");

  std::string target, assume, mode = "nef-cotangent";
  auto* certify_cmd = app.add_subcommand("certify", "Search for an exact positivity certificate");
  certify_cmd->add_option("--dim", dim, "Complex dimension n")->required();
  certify_cmd->add_option("--target", target, "chi:p, euler, or an inline polynomial")->required();
  certify_cmd->add_option("--assume", assume, "Extra generators: my2, my4, c1top (comma-separated)");
  certify_cmd->add_option("--mode", mode, "nef-cotangent or nef-tangent");

  std::string variety_name, functional;
  auto* variety = app.add_subcommand("variety", "Variety descriptors");
  variety->require_subcommand(1);
  auto* eval = variety->add_subcommand("eval", "Chern numbers, chi^p values, and functional evaluation");
  eval->add_option("name", variety_name, "Descriptor such as pn:3, curve:2*curve:2, hyp:5:4")->required();
  eval->add_option("--functional", functional, "chi:p, euler, or an inline polynomial");

  std::string check_target, check_mode;
  std::optional<long long> c1sq, c2;
  auto* check = app.add_subcommand("check", "Audit the conjectured chi^p sign patterns");
  check->add_option("target", check_target, "Builtin descriptor, 'surface', or a JSON-lines corpus file")->required();
  check->add_option("--mode", check_mode, "nef-cotangent or nef-tangent");
  check->add_option("--c1sq", c1sq, "c1^2 for 'surface'");
  check->add_option("--c2", c2, "c2 for 'surface'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << CHERNSIGN_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Config cfg = load_config();
    if (chi->parsed()) return cmd_chi(dim, g, cfg, out);
    if (schur_cmd->parsed()) return cmd_schur(dim, partition, segre, g, cfg, out);
    if (certify_cmd->parsed()) return cmd_certify(dim, target, assume, mode, g, cfg, out);
    if (eval->parsed()) return cmd_variety_eval(variety_name, functional, g, cfg, out);
    if (check->parsed()) return cmd_check(check_target, check_mode, c1sq, c2, g, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace chernsign::cli
