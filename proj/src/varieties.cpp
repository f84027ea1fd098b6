#include "chernsign/varieties.hpp"

#include "chernsign/series.hpp"
#include "chernsign/symchern.hpp"

#include <istream>
#include <map>
#include <stdexcept>

namespace chernsign {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// Chern numbers from a total Chern class whose classes are multiples of one
// generator h: c_i = a_i h^i and the integral of h^n is `volume`.
RationalVector from_total_class(int n, const std::vector<Rational>& a, const Rational& volume) {
  const auto basis = weight_basis(n);
  RationalVector v(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Rational value = volume;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < basis[k].exps[i]; ++e) value *= a[i + 1];
    v[static_cast<Eigen::Index>(k)] = value;
  }
  return v;
}

// Whitney/Kuenneth: c(X x Y) = c(X) c(Y); the integral of a product class
// is the product of the component integrals in bidegree (dim X, dim Y).
RationalVector product_numbers(const ChernNumberSet& x, const ChernNumberSet& y) {
  const int nx = x.dim, ny = y.dim, n = nx + ny;
  using Bigraded = std::map<std::pair<std::vector<int>, std::vector<int>>, Rational>;
  auto weight = [](const std::vector<int>& e) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
  };
  // c_k(X x Y) = sum_{a+b=k} c_a(X) c_b(Y)
  auto total_class = [&](int k) {
    Bigraded t;
    for (int a = 0; a <= std::min(k, nx); ++a) {
      const int b = k - a;
      if (b > ny) continue;
      std::vector<int> ex(nx, 0), ey(ny, 0);
      if (a > 0) ex[a - 1] = 1;
      if (b > 0) ey[b - 1] = 1;
      t[{ex, ey}] += 1;
    }
    return t;
  };
  auto multiply = [&](const Bigraded& p, const Bigraded& q) {
    Bigraded r;
    for (const auto& [pm, pc] : p)
      for (const auto& [qm, qc] : q) {
        std::vector<int> ex = pm.first, ey = pm.second;
        for (int i = 0; i < nx; ++i) ex[i] += qm.first[i];
        for (int i = 0; i < ny; ++i) ey[i] += qm.second[i];
        if (weight(ex) > nx || weight(ey) > ny) continue;
        r[{ex, ey}] += pc * qc;
      }
    return r;
  };

  const auto basis = weight_basis(n);
  RationalVector out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Bigraded acc{{{std::vector<int>(nx, 0), std::vector<int>(ny, 0)}, Rational(1)}};
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < basis[k].exps[i]; ++e) acc = multiply(acc, total_class(i + 1));
    Rational value = 0;
    for (const auto& [m, c] : acc)
      if (c != 0 && weight(m.first) == nx && weight(m.second) == ny)
        value += c * x.value(Monomial(m.first)) * y.value(Monomial(m.second));
    out[static_cast<Eigen::Index>(k)] = value;
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------- descriptor

VarietyDescriptor::VarietyDescriptor(Kind kind) : kind_(std::move(kind)) {
  std::visit(overloaded{
                 [](const ProjectiveSpace& v) {
                   if (v.n < 1) throw std::invalid_argument("projective space needs n >= 1");
                 },
                 [](const Curve& v) {
                   if (v.genus < 0) throw std::invalid_argument("curve genus must be non-negative");
                 },
                 [](const Surface&) {},
                 [](const Hypersurface& v) {
                   if (v.ambient < 2 || v.degree < 1) throw std::invalid_argument("hypersurface needs degree >= 1, ambient >= 2");
                 },
                 [](const AbelianVariety& v) {
                   if (v.n < 1) throw std::invalid_argument("abelian variety needs n >= 1");
                 },
                 [](const Product& v) {
                   if (!v.left || !v.right) throw std::invalid_argument("product needs two factors");
                 },
                 [](const Explicit& v) {
                   if (v.n < 1) throw std::invalid_argument("explicit descriptor needs n >= 1");
                   if (v.numbers.size() != weight_basis(v.n).size())
                     throw std::invalid_argument("explicit descriptor needs p(n) Chern numbers");
                 },
             },
             kind_);
}

VarietyDescriptor VarietyDescriptor::product(const VarietyDescriptor& left, const VarietyDescriptor& right) {
  return VarietyDescriptor(
      Product{std::make_shared<const VarietyDescriptor>(left), std::make_shared<const VarietyDescriptor>(right)});
}

int VarietyDescriptor::dim() const {
  return std::visit(overloaded{
                        [](const ProjectiveSpace& v) { return v.n; },
                        [](const Curve&) { return 1; },
                        [](const Surface&) { return 2; },
                        [](const Hypersurface& v) { return v.ambient - 1; },
                        [](const AbelianVariety& v) { return v.n; },
                        [](const Product& v) { return v.left->dim() + v.right->dim(); },
                        [](const Explicit& v) { return v.n; },
                    },
                    kind_);
}

// ------------------------------------------------------------ chern numbers

ChernNumberSet ChernNumberSet::in(BasisConvention target) const {
  if (target == convention) return *this;
  return {dim, target, RationalVector(values * Rational(dim % 2 == 0 ? 1 : -1))};
}

Rational ChernNumberSet::value(const Monomial& m) const {
  const auto basis = weight_basis(dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return values[static_cast<Eigen::Index>(i)];
  throw std::invalid_argument("monomial " + to_string(m) + " is not of top weight");
}

ChernNumberSet chern_numbers(const VarietyDescriptor& v, BasisConvention convention, int max_dim) {
  const int n = v.dim();
  if (n > max_dim) throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds maximum " + std::to_string(max_dim));

  ChernNumberSet tangent = std::visit(
      overloaded{
          [&](const ProjectiveSpace&) {
            std::vector<Rational> a(n + 1);
            for (int i = 0; i <= n; ++i) a[i] = binomial(n + 1, i);
            return ChernNumberSet{n, BasisConvention::tangent, from_total_class(n, a, 1)};
          },
          [&](const Curve& c) {
            RationalVector vals(1);
            vals[0] = Rational(2 - 2 * c.genus);
            return ChernNumberSet{1, BasisConvention::tangent, vals};
          },
          [&](const Surface& s) {
            RationalVector vals(2);  // c1^2, c2: even weight, same in both conventions
            vals[0] = Rational(s.c1sq);
            vals[1] = Rational(s.c2);
            return ChernNumberSet{2, BasisConvention::tangent, vals};
          },
          [&](const Hypersurface& h) {
            // (1+h)^{N+1} (1+dh)^{-1} with h^{n+1} = 0, integral of h^n = d
            const RationalSeries total = RationalSeries::linear(n, 1, 1).pow(h.ambient + 1) *
                                         RationalSeries::linear(n, 1, Rational(h.degree)).inverse();
            std::vector<Rational> a(n + 1);
            for (int i = 0; i <= n; ++i) a[i] = total[i];
            return ChernNumberSet{n, BasisConvention::tangent, from_total_class(n, a, Rational(h.degree))};
          },
          [&](const AbelianVariety&) {
            return ChernNumberSet{n, BasisConvention::tangent,
                                  RationalVector::Zero(static_cast<Eigen::Index>(weight_basis(n).size()))};
          },
          [&](const Product& p) {
            const auto x = chern_numbers(*p.left, BasisConvention::tangent, max_dim);
            const auto y = chern_numbers(*p.right, BasisConvention::tangent, max_dim);
            return ChernNumberSet{n, BasisConvention::tangent, product_numbers(x, y)};
          },
          [&](const Explicit& e) {
            RationalVector vals(static_cast<Eigen::Index>(e.numbers.size()));
            for (std::size_t i = 0; i < e.numbers.size(); ++i) vals[static_cast<Eigen::Index>(i)] = Rational(e.numbers[i]);
            return ChernNumberSet{n, e.convention, vals}.in(BasisConvention::tangent);
          },
      },
      v.kind());
  return tangent.in(convention);
}

Rational evaluate(const ChernFunctional& f, const VarietyDescriptor& v) {
  if (f.dim != v.dim())
    throw std::invalid_argument("functional of dimension " + std::to_string(f.dim) + " evaluated on a variety of dimension " +
                                std::to_string(v.dim()));
  return f.coeffs.dot(chern_numbers(v, f.convention, std::max(f.dim, kDefaultVarietyMaxDim)).values);
}

std::vector<Rational> chi_values(const VarietyDescriptor& v) {
  const ChiTable table = chi_table(v.dim());
  const ChernNumberSet numbers = chern_numbers(v, table.convention, std::max(v.dim(), kDefaultVarietyMaxDim));
  std::vector<Rational> out;
  for (const auto& row : table.rows) out.push_back(row.coeffs.dot(numbers.values));
  return out;
}

SignCheck check_signs(const VarietyDescriptor& v, NefMode mode) {
  SignCheck c{describe(v), v.dim(), mode, chi_values(v), {}, evaluate(euler_functional(v.dim()), v), true};
  for (int p = 0; p <= c.dim; ++p) {
    const int exponent = mode == NefMode::nef_cotangent ? c.dim - p : p;
    const Rational s = c.chi[p] * Rational(exponent % 2 == 0 ? 1 : -1);
    c.signed_values.push_back(s);
    if (s < 0) c.pass = false;
  }
  return c;
}

// ------------------------------------------------------------------ names

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long to_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

VarietyDescriptor parse_factor(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& kind = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1) throw std::invalid_argument("variety '" + text + "' needs " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "pn") {
    need(1);
    return ProjectiveSpace{static_cast<int>(to_int(parts[1]))};
  }
  if (kind == "curve") {
    need(1);
    return Curve{static_cast<int>(to_int(parts[1]))};
  }
  if (kind == "abelian") {
    need(1);
    return AbelianVariety{static_cast<int>(to_int(parts[1]))};
  }
  if (kind == "hyp") {
    need(2);
    return Hypersurface{static_cast<int>(to_int(parts[1])), static_cast<int>(to_int(parts[2]))};
  }
  if (kind == "surface") {
    need(2);
    return Surface{Integer(to_int(parts[1])), Integer(to_int(parts[2]))};
  }
  throw std::invalid_argument("unknown variety kind '" + kind + "'");
}

}  // namespace

VarietyDescriptor parse_variety(std::string_view text) {
  const auto factors = split(text, '*');
  VarietyDescriptor v = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) v = VarietyDescriptor::product(v, parse_factor(factors[i]));
  return v;
}

std::string describe(const VarietyDescriptor& v) {
  return std::visit(overloaded{
                        [](const ProjectiveSpace& s) { return "pn:" + std::to_string(s.n); },
                        [](const Curve& c) { return "curve:" + std::to_string(c.genus); },
                        [](const Surface& s) { return "surface:" + s.c1sq.str() + ":" + s.c2.str(); },
                        [](const Hypersurface& h) { return "hyp:" + std::to_string(h.degree) + ":" + std::to_string(h.ambient); },
                        [](const AbelianVariety& a) { return "abelian:" + std::to_string(a.n); },
                        [](const Product& p) { return describe(*p.left) + "*" + describe(*p.right); },
                        [](const Explicit& e) { return "explicit:" + std::to_string(e.n); },
                    },
                    v.kind());
}

// ------------------------------------------------------------------- JSON

nlohmann::json to_json(const VarietyDescriptor& v) {
  return std::visit(overloaded{
                        [](const ProjectiveSpace& p) -> nlohmann::json { return {{"type", "projective_space"}, {"n", p.n}}; },
                        [](const Curve& c) -> nlohmann::json { return {{"type", "curve"}, {"genus", c.genus}}; },
                        [](const Surface& s) -> nlohmann::json {
                          return {{"type", "surface"}, {"c1sq", s.c1sq.str()}, {"c2", s.c2.str()}};
                        },
                        [](const Hypersurface& h) -> nlohmann::json {
                          return {{"type", "hypersurface"}, {"degree", h.degree}, {"ambient", h.ambient}};
                        },
                        [](const AbelianVariety& a) -> nlohmann::json { return {{"type", "abelian"}, {"n", a.n}}; },
                        [](const Product& p) -> nlohmann::json {
                          return {{"type", "product"}, {"left", to_json(*p.left)}, {"right", to_json(*p.right)}};
                        },
                        [](const Explicit& e) -> nlohmann::json {
                          nlohmann::json numbers = nlohmann::json::object();
                          const auto basis = weight_basis(e.n);
                          for (std::size_t i = 0; i < basis.size(); ++i) numbers[to_string(basis[i])] = e.numbers[i].str();
                          return {{"type", "explicit"}, {"n", e.n}, {"convention", to_string(e.convention)}, {"numbers", numbers}};
                        },
                    },
                    v.kind());
}

namespace {

Integer integer_field(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1) throw std::invalid_argument("expected an integer Chern number");
    return numerator(r);
  }
  throw std::invalid_argument("expected an integer (number or string), got " + j.dump());
}

}  // namespace

VarietyDescriptor variety_from_json(const nlohmann::json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "projective_space") return ProjectiveSpace{j.at("n").get<int>()};
  if (type == "curve") return Curve{j.at("genus").get<int>()};
  if (type == "surface") return Surface{integer_field(j.at("c1sq")), integer_field(j.at("c2"))};
  if (type == "hypersurface") return Hypersurface{j.at("degree").get<int>(), j.at("ambient").get<int>()};
  if (type == "abelian") return AbelianVariety{j.at("n").get<int>()};
  if (type == "product") return VarietyDescriptor::product(variety_from_json(j.at("left")), variety_from_json(j.at("right")));
  if (type == "explicit") {
    const int n = j.at("n").get<int>();
    const auto basis = weight_basis(n);
    std::vector<Integer> numbers(basis.size(), Integer(0));
    std::vector<bool> seen(basis.size(), false);
    for (const auto& [key, value] : j.at("numbers").items()) {
      const Monomial m = parse_monomial(key, n);
      bool found = false;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) {
          numbers[i] = integer_field(value);
          seen[i] = found = true;
        }
      if (!found) throw std::invalid_argument("explicit Chern number '" + key + "' is not of top weight");
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!seen[i]) throw std::invalid_argument("explicit descriptor is missing " + to_string(basis[i]));
    return Explicit{n, parse_convention(j.value("convention", std::string("cotangent"))), std::move(numbers)};
  }
  throw std::invalid_argument("unknown descriptor type '" + type + "'");
}

nlohmann::json to_json(const SignCheck& c) {
  nlohmann::json chi = nlohmann::json::array(), signed_values = nlohmann::json::array();
  for (const auto& x : c.chi) chi.push_back(to_string(x));
  for (const auto& x : c.signed_values) signed_values.push_back(to_string(x));
  return {{"name", c.name}, {"dim", c.dim},         {"mode", to_string(c.mode)}, {"chi", chi},
          {"signed", signed_values}, {"euler", to_string(c.euler)}, {"pass", c.pass}};
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back({j.at("name").get<std::string>(), variety_from_json(j.at("descriptor")),
                     j.value("expected", nlohmann::json::object())});
    } catch (const std::exception& e) {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string compare_with_expected(const CorpusEntry& entry) {
  const auto& exp = entry.expected;
  std::string problems;
  if (exp.contains("chi")) {
    const auto chi = chi_values(entry.descriptor);
    const auto& want = exp.at("chi");
    if (want.size() != chi.size()) {
      problems += "chi table has " + std::to_string(chi.size()) + " rows, expected " + std::to_string(want.size()) + "; ";
    } else {
      for (std::size_t p = 0; p < chi.size(); ++p)
        if (chi[p] != parse_rational(want[p].get<std::string>()))
          problems += "chi^" + std::to_string(p) + " = " + to_string(chi[p]) + ", expected " + want[p].get<std::string>() + "; ";
    }
  }
  if (exp.contains("euler")) {
    const Rational e = evaluate(euler_functional(entry.descriptor.dim()), entry.descriptor);
    if (e != parse_rational(exp.at("euler").get<std::string>()))
      problems += "euler = " + to_string(e) + ", expected " + exp.at("euler").get<std::string>() + "; ";
  }
  if (exp.contains("pass")) {
    const auto check = check_signs(entry.descriptor, parse_nef_mode(exp.at("mode").get<std::string>()));
    if (check.pass != exp.at("pass").get<bool>())
      problems += std::string("sign check ") + (check.pass ? "passed" : "failed") + " unexpectedly; ";
  }
  return problems;
}

}  // namespace chernsign
