#include "chernsign/cone.hpp"
#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chernsign;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string source(const std::string& rel) { return std::string(CHERNSIGN_SOURCE_DIR) + "/" + rel; }

// Points CHERNSIGN_CONFIG at a temporary file for the lifetime of the guard.
struct ConfigGuard {
  std::filesystem::path path;
  explicit ConfigGuard(const std::string& body) {
    path = std::filesystem::temp_directory_path() / ("chernsign_test_config_" + std::to_string(::getpid()) + ".json");
    std::ofstream(path) << body;
    ::setenv("CHERNSIGN_CONFIG", path.c_str(), 1);
  }
  ~ConfigGuard() {
    ::unsetenv("CHERNSIGN_CONFIG");
    std::filesystem::remove(path);
  }
};

}  // namespace

TEST_CASE("chi tables match the golden files") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto r = run({"chi", "--dim", std::to_string(n)});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == slurp(source("tests/golden/chi_dim" + std::to_string(n) + ".txt")));
  }
}

TEST_CASE("chi output in tangent variables") {
  const auto r = run({"--convention", "tangent", "chi", "--dim", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("chi^0 = (1*c1)/2") != std::string::npos);
  CHECK(r.out.find("tangent variables") != std::string::npos);
}

TEST_CASE("chi in JSON parses back") {
  const auto r = run({"--json", "chi", "--dim", "2"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("command") == "chi");
  CHECK(j.at("dimension") == 2);
  CHECK(j.at("convention") == "cotangent");
  CHECK(j.contains("toolVersion"));
}

TEST_CASE("schur prints the generators") {
  const auto r = run({"schur", "--dim", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "P_(3,0,0) = 1*c3\nP_(2,1,0) = 1*c1*c2 - 1*c3\nP_(1,1,1) = 1*c1^3 - 2*c1*c2 + 1*c3\n");
  CHECK(run({"schur", "--dim", "4", "--partition", "2,2"}).out == "P_(2,2,0,0) = -1*c1*c3 + 1*c2^2\n");
  CHECK(run({"schur", "--dim", "3", "--partition", "2,2"}).code == cli::kUsage);
}

TEST_CASE("certify exit codes") {
  CHECK(run({"certify", "--dim", "4", "--target", "chi:4", "--assume", "my4,c1top"}).code == cli::kOk);
  CHECK(run({"certify", "--dim", "4", "--target", "chi:4"}).code == cli::kFailed);
  CHECK(run({"certify", "--dim", "2", "--target", "chi:1", "--assume", "my2"}).code == cli::kOk);
  CHECK(run({"certify", "--dim", "2", "--target", "chi:1"}).code == cli::kFailed);
  // (-1)^n e = c_n(cotangent) is itself a Schur generator.
  CHECK(run({"certify", "--dim", "3", "--target", "euler"}).code == cli::kOk);
  CHECK(run({"certify", "--dim", "3", "--target", "c1*c2"}).code == cli::kOk);
  CHECK(run({"certify", "--dim", "4", "--target", "chi:9"}).code == cli::kUsage);
  CHECK(run({"certify", "--dim", "4", "--target", "chi:4", "--assume", "my2"}).code == cli::kUsage);
  CHECK(run({"certify", "--dim", "4", "--target", "chi:4", "--assume", "bmy"}).code == cli::kUsage);
  CHECK(run({"certify", "--dim", "3", "--target", "c1^2"}).code == cli::kUsage);
  CHECK(run({"certify", "--dim", "3", "--target", "c1 c2"}).code == cli::kUsage);
  CHECK(run({"certify", "--dim", "7", "--target", "chi:0"}).code == cli::kUsage);
  CHECK(run({"certify", "--target", "chi:0"}).code == cli::kUsage);
}

TEST_CASE("certify JSON carries a verifiable certificate") {
  const auto r = run({"--json", "certify", "--dim", "4", "--target", "chi:4", "--assume", "my4,c1top"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  const auto& payload = j.at("payload");
  CHECK(payload.at("status") == "certified");
  CHECK(payload.at("verified") == true);
  const auto gens = generators(4, {Assumption::schur, Assumption::my4, Assumption::c1top});
  const auto cert = certificate_from_json(payload.at("certificate"), gens);
  CHECK(verify_certificate(cert, gens).ok);
}

TEST_CASE("infeasible certify JSON carries a verifiable witness") {
  const auto r = run({"--json", "certify", "--dim", "4", "--target", "chi:4"});
  REQUIRE(r.code == cli::kFailed);
  const auto payload = json::parse(r.out).at("payload");
  CHECK(payload.at("status") == "infeasible");
  const auto inf = infeasibility_from_json(payload.at("infeasibility"));
  CHECK(verify_infeasibility(inf, generators(4, {Assumption::schur})).ok);
}

TEST_CASE("certify output is byte-identical across runs") {
  const std::vector<std::string> args{"--json", "certify", "--dim", "4", "--target", "chi:4", "--assume", "my4,c1top"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> text{"certify", "--dim", "4", "--target", "chi:4"};
  CHECK(run(text).out == run(text).out);
}

TEST_CASE("check subcommand") {
  CHECK(run({"check", "pn:3", "--mode", "nef_tangent"}).code == cli::kOk);
  CHECK(run({"check", "curve:2", "--mode", "nef_tangent"}).code == cli::kFailed);
  CHECK(run({"check", "curve:2", "--mode", "nef-cotangent"}).code == cli::kOk);
  CHECK(run({"check", "surface", "--c1sq", "9", "--c2", "3", "--mode", "nef_cotangent"}).code == cli::kOk);
  CHECK(run({"check", "surface", "--c1sq", "9", "--mode", "nef_cotangent"}).code == cli::kUsage);
  CHECK(run({"check", "hyp:3:3"}).code == cli::kUsage);
  CHECK(run({"check", "torus:3", "--mode", "nef_tangent"}).code == cli::kUsage);

  const auto corpus = run({"check", source("data/varieties.jsonl")});
  CHECK(corpus.code == cli::kOk);
  CHECK(corpus.out.find("quintic threefold [values] PASS") != std::string::npos);
  CHECK(corpus.out.find("all checks passed") != std::string::npos);

  const auto j = json::parse(run({"--json", "check", source("data/varieties.jsonl")}).out);
  CHECK(j.at("payload").at("all_pass") == true);
  CHECK(j.at("payload").at("results").size() == 18);
}

TEST_CASE("check flags corpus values that disagree") {
  const auto path = std::filesystem::temp_directory_path() / ("chernsign_bad_corpus_" + std::to_string(::getpid()) + ".jsonl");
  std::ofstream(path) << R"({"name": "P2", "descriptor": {"type": "projective_space", "n": 2}, "expected": {"chi": ["1", "1", "1"]}})"
                      << "\n";
  const auto r = run({"check", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == cli::kFailed);
  CHECK(r.out.find("expected-value mismatch") != std::string::npos);
}

TEST_CASE("variety eval") {
  const auto r = run({"variety", "eval", "hyp:5:4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("euler = -200") != std::string::npos);
  CHECK(r.out.find("chi^1 = 100") != std::string::npos);

  const auto j = json::parse(run({"--json", "variety", "eval", "pn:2", "--functional", "c1^2"}).out);
  CHECK(j.at("payload").at("value").at("result") == "9");
  CHECK(j.at("payload").at("euler") == "3");
  CHECK(run({"variety", "eval", "pn:2", "--functional", "chi:5"}).code == cli::kUsage);
  CHECK(run({"variety", "eval", "pn:9"}).code == cli::kUsage);
  CHECK(run({"--max-dim", "9", "variety", "eval", "pn:9"}).code == cli::kOk);
}

TEST_CASE("config file adds generators and limits") {
  CHECK(run({"certify", "--dim", "2", "--target", "chi:1"}).code == cli::kFailed);
  {
    ConfigGuard cfg(R"({"extra_generators": [{"dim": 2, "name": "bmy", "poly": "3*c2 - c1^2"}]})");
    const auto r = run({"certify", "--dim", "2", "--target", "chi:1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("bmy") != std::string::npos);
  }
  {
    ConfigGuard cfg(R"({"max_dim": 3})");
    CHECK(run({"chi", "--dim", "4"}).code == cli::kUsage);
  }
  {
    ConfigGuard cfg("not json");
    CHECK(run({"chi", "--dim", "1"}).code == cli::kUsage);
  }
  CHECK(run({"chi", "--dim", "4"}).code == cli::kOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"chi"}).code == cli::kUsage);
  CHECK(run({"chi", "--dim", "-1"}).code == cli::kUsage);
  CHECK(run({"chi", "--dim", "9"}).code == cli::kUsage);
  CHECK(run({"--convention", "sideways", "chi", "--dim", "1"}).code == cli::kUsage);
  const auto r = run({"chi", "--dim", "9"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}
