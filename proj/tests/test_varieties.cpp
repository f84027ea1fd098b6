#include "chernsign/hrr.hpp"
#include "chernsign/varieties.hpp"
#include "roots.hpp"

#include <doctest.h>

#include <fstream>

using namespace chernsign;

namespace {
constexpr auto kTan = BasisConvention::tangent;
constexpr auto kCot = BasisConvention::cotangent;

std::vector<Rational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }
Rational sgn(int k) { return k % 2 == 0 ? 1 : -1; }
}  // namespace

TEST_CASE("Chern numbers of model varieties") {
  const auto p2 = chern_numbers(ProjectiveSpace{2}, kTan);
  CHECK(p2.value(parse_monomial("c1^2", 2)) == 9);
  CHECK(p2.value(parse_monomial("c2", 2)) == 3);

  const auto p3 = chern_numbers(ProjectiveSpace{3}, kTan);
  CHECK(p3.value(parse_monomial("c1^3", 3)) == 64);
  CHECK(p3.value(parse_monomial("c1*c2", 3)) == 24);
  CHECK(p3.value(parse_monomial("c3", 3)) == 4);
  CHECK(chern_numbers(ProjectiveSpace{3}, kCot).value(parse_monomial("c1^3", 3)) == -64);

  CHECK(chern_numbers(Curve{2}, kCot).value(parse_monomial("c1", 1)) == 2);
  CHECK(chern_numbers(Curve{2}, kTan).value(parse_monomial("c1", 1)) == -2);

  for (int n = 1; n <= 4; ++n) CHECK(chern_numbers(AbelianVariety{n}).values.isZero());

  const auto quintic = chern_numbers(Hypersurface{5, 4}, kTan);
  CHECK(quintic.value(parse_monomial("c1^3", 3)) == 0);
  CHECK(quintic.value(parse_monomial("c1*c2", 3)) == 0);
  CHECK(quintic.value(parse_monomial("c3", 3)) == -200);
}

TEST_CASE("convention change flips odd-weight Chern numbers") {
  const auto cot = chern_numbers(ProjectiveSpace{3}, kCot);
  const auto tan = chern_numbers(ProjectiveSpace{3}, kTan);
  CHECK(cot.in(kTan).values == tan.values);
  CHECK(cot.values == -tan.values);
  CHECK(chern_numbers(ProjectiveSpace{4}, kCot).values == chern_numbers(ProjectiveSpace{4}, kTan).values);
}

TEST_CASE("evaluate chi^p on model varieties") {
  CHECK(evaluate(chi_p(3, 0), Hypersurface{5, 4}) == 0);
  CHECK(evaluate(chi_p(3, 1), Hypersurface{5, 4}) == 100);
  CHECK(evaluate(chi_p(2, 0), Surface{9, 3}) == 1);
  CHECK(evaluate(chi_p(2, 0), Hypersurface{4, 3}) == 2);
  CHECK(chi_values(ProjectiveSpace{3}) == ints({1, -1, 1, -1}));
  CHECK(chi_values(Curve{3}) == ints({-2, 2}));
  CHECK(chi_values(parse_variety("curve:2*curve:2")) == ints({1, -2, 1}));
  CHECK(chi_values(Hypersurface{3, 3}) == ints({1, -7, 1}));
  CHECK_THROWS_AS(evaluate(chi_p(2, 0), ProjectiveSpace{3}), std::invalid_argument);
}

TEST_CASE("chi^p of projective space is (-1)^p") {
  for (int n = 1; n <= 6; ++n) {
    const auto chi = chi_values(ProjectiveSpace{n});
    for (int p = 0; p <= n; ++p) CHECK(chi[p] == sgn(p));
  }
}

TEST_CASE("Euler numbers") {
  for (int n = 1; n <= 6; ++n) CHECK(evaluate(euler_functional(n), ProjectiveSpace{n}) == n + 1);
  for (int g = 0; g <= 6; ++g) CHECK(evaluate(euler_functional(1), Curve{g}) == 2 - 2 * g);
  for (int n = 1; n <= 4; ++n) CHECK(evaluate(euler_functional(n), AbelianVariety{n}) == 0);

  // Series oracle: c(TX) = (1+h)^{N+1} / (1+dh), deg h^{N-1} = d.
  CHECK(oracle::total_class_series(5, 5, 3)[3] * 5 == -200);
  for (int ambient = 2; ambient <= 6; ++ambient)
    for (int d = 1; d <= 6; ++d) {
      CAPTURE(ambient);
      CAPTURE(d);
      const int n = ambient - 1;
      const Rational expected = oracle::total_class_series(ambient + 1, d, n)[n] * d;
      CHECK(evaluate(euler_functional(n), Hypersurface{d, ambient}) == expected);
    }
}

TEST_CASE("Serre duality on evaluated values") {
  for (const char* name : {"pn:4", "curve:3", "hyp:5:4", "hyp:3:4", "hyp:4:5", "surface:7:5", "abelian:3",
                           "curve:2*pn:2", "hyp:3:3*curve:4"}) {
    CAPTURE(name);
    const auto v = parse_variety(name);
    const auto chi = chi_values(v);
    const int n = v.dim();
    for (int p = 0; p <= n; ++p) CHECK(chi[p] == sgn(n) * chi[n - p]);
  }
}

TEST_CASE("chi^p of a product is the convolution of the factors") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"pn:2", "curve:3"}, {"abelian:1", "pn:2"}, {"hyp:3:3", "curve:2"}, {"pn:1", "hyp:4:3"}, {"curve:2", "curve:5"}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CAPTURE(b);
    const auto x = chi_values(parse_variety(a));
    const auto y = chi_values(parse_variety(b));
    const auto xy = chi_values(VarietyDescriptor::product(parse_variety(a), parse_variety(b)));
    REQUIRE(xy.size() == x.size() + y.size() - 1);
    for (std::size_t p = 0; p < xy.size(); ++p) {
      Rational sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (p >= i && p - i < y.size()) sum += x[i] * y[p - i];
      CHECK(xy[p] == sum);
    }
  }
}

TEST_CASE("surface identities") {
  for (int c1sq = -4; c1sq <= 12; ++c1sq)
    for (int c2 = -4; c2 <= 12; ++c2) {
      const Surface s{c1sq, c2};
      const auto chi = chi_values(s);
      CHECK(chi[0] * 12 == c1sq + c2);
      CHECK(chi[1] * 6 == c1sq - 5 * c2);
      CHECK(chi[0] - chi[1] + chi[2] == c2);
    }
}

TEST_CASE("check_signs") {
  const auto p3 = check_signs(ProjectiveSpace{3}, NefMode::nef_tangent);
  CHECK(p3.pass);
  CHECK(p3.signed_values == ints({1, 1, 1, 1}));
  CHECK(p3.euler == 4);

  CHECK(check_signs(Curve{2}, NefMode::nef_cotangent).pass);
  CHECK_FALSE(check_signs(Curve{2}, NefMode::nef_tangent).pass);
  CHECK(check_signs(ProjectiveSpace{2}, NefMode::nef_cotangent).pass);
  CHECK_FALSE(check_signs(ProjectiveSpace{3}, NefMode::nef_cotangent).pass);

  for (int n = 1; n <= 4; ++n) CHECK(check_signs(ProjectiveSpace{n}, NefMode::nef_tangent).pass);
  for (int n = 1; n <= 3; ++n) CHECK(check_signs(AbelianVariety{n}, NefMode::nef_cotangent).pass);
  for (int g : {2, 3, 5}) CHECK(check_signs(Curve{g}, NefMode::nef_cotangent).pass);
  CHECK(check_signs(parse_variety("curve:2*curve:2"), NefMode::nef_cotangent).pass);
  const auto ball = check_signs(Surface{9, 3}, NefMode::nef_cotangent);
  CHECK(ball.pass);
  CHECK(ball.signed_values == ints({1, 1, 1}));
}

TEST_CASE("descriptor names and validation") {
  for (const char* name : {"pn:3", "curve:2", "abelian:2", "hyp:5:4", "surface:9:3", "curve:2*curve:2"})
    CHECK(describe(parse_variety(name)) == name);
  CHECK(parse_variety("pn:1*pn:1*pn:1").dim() == 3);
  for (const char* bad : {"pn:0", "curve:-1", "hyp:0:3", "hyp:3:1", "abelian:0", "torus:2", "pn:x", "pn:2*", ""})
    CHECK_THROWS_AS(parse_variety(bad), std::invalid_argument);
  CHECK_THROWS_AS(chern_numbers(ProjectiveSpace{9}), std::invalid_argument);
  CHECK_NOTHROW(chern_numbers(ProjectiveSpace{9}, kCot, 9));
  CHECK_THROWS_AS(VarietyDescriptor(Explicit{2, kTan, {Integer(1)}}), std::invalid_argument);
}

TEST_CASE("descriptor JSON round-trip") {
  const std::vector<VarietyDescriptor> samples{
      ProjectiveSpace{3},  Curve{4},  Surface{9, 3}, Hypersurface{5, 4}, AbelianVariety{2},
      parse_variety("curve:2*pn:1"), Explicit{2, kTan, {Integer(9), Integer(3)}}};
  for (const auto& v : samples) {
    const auto text = to_json(v).dump();
    const auto back = variety_from_json(nlohmann::json::parse(text));
    CHECK(to_json(back).dump() == text);
    CHECK(chern_numbers(back).values == chern_numbers(v).values);
  }
  CHECK_THROWS_AS(variety_from_json(nlohmann::json::parse(R"({"type":"explicit","n":2,"numbers":{"c1^2":"9"}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(variety_from_json(nlohmann::json::parse(R"({"type":"explicit","n":2,"numbers":{"c1^2":"9","c2":"1/2"}})")),
                  std::invalid_argument);
}

TEST_CASE("reference corpus replays") {
  std::ifstream in(std::string(CHERNSIGN_SOURCE_DIR) + "/data/varieties.jsonl");
  REQUIRE(in);
  const auto corpus = read_corpus(in);
  CHECK(corpus.size() == 18);
  for (const auto& entry : corpus) {
    CAPTURE(entry.name);
    CHECK(compare_with_expected(entry) == "");
  }
}

TEST_CASE("corpus reader reports bad lines") {
  std::istringstream in("# comment\n\n{\"name\": \"x\", \"descriptor\": {\"type\": \"nope\"}}\n");
  CHECK_THROWS_WITH_AS(read_corpus(in), doctest::Contains("corpus line 3"), std::invalid_argument);
}
