#include "chernsign/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace chernsign {

std::string to_string(BasisConvention c) { return c == BasisConvention::tangent ? "tangent" : "cotangent"; }

BasisConvention parse_convention(std::string_view text) {
  if (text == "tangent") return BasisConvention::tangent;
  if (text == "cotangent") return BasisConvention::cotangent;
  throw std::invalid_argument("unknown convention '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> e) : exps(std::move(e)) {
  for (int x : exps)
    if (x < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::variable(int dim, int index) {
  if (index < 1 || index > dim) throw std::invalid_argument("variable index out of range");
  Monomial m = one(dim);
  m.exps[index - 1] = 1;
  return m;
}

int Monomial::weight() const {
  int w = 0;
  for (int i = 0; i < dim(); ++i) w += (i + 1) * exps[i];
  return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < dim(); ++i) r.exps[i] += o.exps[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < dim(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (int i = 0; i < dim(); ++i) r.exps[i] -= divisor.exps[i];
  return r;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return b.exps < a.exps;
}

std::vector<Monomial> weight_basis(int n) {
  std::vector<Monomial> out;
  if (n <= 0) {
    out.push_back(Monomial::one(std::max(n, 0)));
    return out;
  }
  std::vector<int> e(n, 0);
  // Fill exponents from c_1 downward so the first emitted monomial is c_1^n.
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == n) {
      if (remaining == 0) out.emplace_back(e);
      return;
    }
    const int w = index + 1;
    for (int k = remaining / w; k >= 0; --k) {
      e[index] = k;
      self(self, index + 1, remaining - k * w);
    }
    e[index] = 0;
  };
  rec(rec, 0, n);
  return out;
}

// -------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(int dim, int max_weight) : dim_(dim), max_weight_(max_weight < 0 ? dim : max_weight) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
}

GradedPoly GradedPoly::constant(int dim, const Rational& c) { return term(dim, Monomial::one(dim), c); }

GradedPoly GradedPoly::chern(int dim, int i) {
  if (i == 0) return constant(dim, 1);
  GradedPoly p(dim);
  if (i < 0 || i > dim) return p;
  p.add_term(Monomial::variable(dim, i), 1);
  return p;
}

GradedPoly GradedPoly::term(int dim, const Monomial& m, const Rational& c) {
  if (m.dim() != dim) throw std::invalid_argument("monomial has wrong number of variables");
  GradedPoly p(dim);
  p.add_term(m, c);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedPoly GradedPoly::component(int weight) const {
  GradedPoly r(dim_, max_weight_);
  for (const auto& [m, c] : terms_)
    if (m.weight() == weight) r.terms_.emplace(m, c);
  return r;
}

bool GradedPoly::is_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weight() == weight; });
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.dim() != dim_) throw std::invalid_argument("monomial has wrong number of variables");
  if (c == 0 || m.weight() > max_weight_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::require_compatible(const GradedPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
  if (max_weight_ != o.max_weight_) throw std::invalid_argument("truncation weight mismatch");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  GradedPoly r = *this;
  r += o;
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  GradedPoly r = *this;
  r -= o;
  return r;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GradedPoly GradedPoly::operator*(const Rational& s) const {
  GradedPoly r(dim_, max_weight_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  require_compatible(o);
  GradedPoly r(dim_, max_weight_);
  for (const auto& [ma, ca] : terms_) {
    const int wa = ma.weight();
    for (const auto& [mb, cb] : o.terms_) {
      if (max_weight_ != kUnbounded && wa + mb.weight() > max_weight_) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

GradedPoly GradedPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  GradedPoly r = constant(dim_, 1).with_max_weight(max_weight_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

GradedPoly GradedPoly::with_max_weight(int max_weight) const {
  GradedPoly r(dim_, max_weight);
  for (const auto& [m, c] : terms_) {
    if (m.weight() > r.max_weight_) throw std::domain_error("term above target truncation weight");
    r.terms_.emplace(m, c);
  }
  return r;
}

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) { return a + b; }
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

namespace {

// Graded lexicographic maximum: a monomial order, unlike plain canonical
// position, so leading terms multiply.
const std::pair<const Monomial, Rational>& leading_term(const GradedPoly& p) {
  const auto& t = p.terms();
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it) {
    const int w = it->first.weight(), wb = best->first.weight();
    if (w > wb || (w == wb && it->first.exps > best->first.exps)) best = it;
  }
  return *best;
}

}  // namespace

GradedPoly exact_divide(const GradedPoly& a, const GradedPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in division");
  if (a.max_weight() != GradedPoly::kUnbounded || b.max_weight() != GradedPoly::kUnbounded)
    throw std::domain_error("exact division requires untruncated polynomials");
  const auto& [lm, lc] = leading_term(b);
  GradedPoly q(a.dim(), GradedPoly::kUnbounded);
  GradedPoly r = a;
  while (!r.is_zero()) {
    const auto& [rm, rc] = leading_term(r);
    if (!lm.divides(rm)) throw std::domain_error("polynomial division is not exact");
    GradedPoly t(a.dim(), GradedPoly::kUnbounded);
    t.add_term(rm.quotient(lm), rc / lc);
    q += t;
    r -= t * b;
  }
  return q;
}

GradedPoly exp_nilpotent(const GradedPoly& u) {
  if (u.constant_term() != 0) throw std::domain_error("exp_nilpotent needs zero constant term");
  if (!u.truncated()) throw std::domain_error("exp_nilpotent needs a truncated polynomial");
  GradedPoly result = GradedPoly::constant(u.dim(), 1);
  GradedPoly power = result;
  for (int m = 1; m <= u.dim(); ++m) {
    power = power * u * Rational(1, m);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

// --------------------------------------------------------- ChernFunctional

ChernFunctional::ChernFunctional(int n, BasisConvention c)
    : dim(n), convention(c), coeffs(RationalVector::Zero(static_cast<Eigen::Index>(weight_basis(n).size()))) {}

ChernFunctional::ChernFunctional(int n, BasisConvention c, RationalVector v) : dim(n), convention(c), coeffs(std::move(v)) {
  if (coeffs.size() != static_cast<Eigen::Index>(weight_basis(n).size()))
    throw std::invalid_argument("functional length does not match the weight basis");
}

ChernFunctional ChernFunctional::from_poly(const GradedPoly& p, BasisConvention c) {
  const auto basis = weight_basis(p.dim());
  ChernFunctional f(p.dim(), c);
  for (std::size_t i = 0; i < basis.size(); ++i) f.coeffs[static_cast<Eigen::Index>(i)] = p.coefficient(basis[i]);
  return f;
}

GradedPoly ChernFunctional::to_poly() const {
  const auto basis = weight_basis(dim);
  GradedPoly p(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[static_cast<Eigen::Index>(i)]);
  return p;
}

bool ChernFunctional::is_zero() const {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) return false;
  return true;
}

ChernFunctional ChernFunctional::operator+(const ChernFunctional& o) const {
  if (dim != o.dim || convention != o.convention) throw std::invalid_argument("functional dimension/convention mismatch");
  return {dim, convention, RationalVector(coeffs + o.coeffs)};
}

ChernFunctional ChernFunctional::operator-(const ChernFunctional& o) const {
  if (dim != o.dim || convention != o.convention) throw std::invalid_argument("functional dimension/convention mismatch");
  return {dim, convention, RationalVector(coeffs - o.coeffs)};
}

ChernFunctional ChernFunctional::operator*(const Rational& s) const { return {dim, convention, RationalVector(coeffs * s)}; }

bool ChernFunctional::operator==(const ChernFunctional& o) const {
  return dim == o.dim && convention == o.convention && coeffs == o.coeffs;
}

ChernFunctional top_part(const GradedPoly& a, BasisConvention convention) {
  return ChernFunctional::from_poly(a.component(a.dim()), convention);
}

// ------------------------------------------------------------------- text

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'c' + std::to_string(i + 1);
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const std::string mag = to_string(Rational(negative ? Rational(-c) : c));
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += mag;
    if (m.weight() > 0) out += '*' + to_string(m);
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  GradedPoly parse() {
    GradedPoly p(dim_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = parse_term();
      if (m.weight() > dim_) fail("term " + to_string(m) + " exceeds weight " + std::to_string(dim_));
      p.add_term(m, c * sign);
      first = false;
      skip_ws();
    }
    return p;
  }

  Monomial parse_monomial_only() {
    skip_ws();
    auto [m, c] = parse_term();
    skip_ws();
    if (!at_end() || c != 1) fail("expected a bare monomial");
    return m;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coef = 1;
    Monomial m = Monomial::one(dim_);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_number();
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'c') fail("expected a Chern variable after '*'");
      }
    }
    while (peek() == 'c') {
      ++pos_;
      const int index = static_cast<int>(parse_uint());
      if (index < 1 || index > dim_) fail("variable c" + std::to_string(index) + " outside c1..c" + std::to_string(dim_));
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = static_cast<int>(parse_uint());
      }
      m.exps[index - 1] += e;
      any = true;
      if (peek() == 'c') continue;  // juxtaposed factors: c1c2
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'c') fail("expected a Chern variable after '*'");
      } else if (peek() == 'c') {
        fail("missing '*' between factors");
      }
    }
    if (!any) fail("expected a term");
    if (peek() == '/') {
      // trailing "/den" as in "c1^2/12"
      ++pos_;
      skip_ws();
      const Rational den = Rational(parse_uint());
      if (den == 0) fail("zero denominator");
      coef /= den;
    }
    return {m, coef};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' || peek() == '.' ||
                         peek() == 'e' || peek() == 'E'))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  unsigned long parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (peek() == '.') fail("floating-point literal rejected");
    return v;
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(std::string_view text, int dim) { return PolyParser(text, dim).parse(); }

Monomial parse_monomial(std::string_view text, int dim) {
  if (text == "1") return Monomial::one(dim);
  return PolyParser(text, dim).parse_monomial_only();
}

// ------------------------------------------------------------------- JSON

nlohmann::json to_json(const GradedPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exps", m.exps}, {"num", numerator(c).str()}, {"den", denominator(c).str()}});
  return {{"dim", p.dim()}, {"terms", terms}};
}

GradedPoly poly_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  GradedPoly p(dim);
  for (const auto& t : j.at("terms")) {
    Monomial m(t.at("exps").get<std::vector<int>>());
    if (m.dim() != dim) throw std::invalid_argument("JSON term has wrong exponent length");
    if (m.weight() > dim) throw std::invalid_argument("JSON term exceeds top weight");
    const Rational c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    if (c == 0) throw std::invalid_argument("JSON term with zero coefficient");
    if (p.coefficient(m) != 0) throw std::invalid_argument("duplicate JSON term");
    p.add_term(m, c);
  }
  return p;
}

nlohmann::json to_json(const ChernFunctional& f) {
  nlohmann::json j = to_json(f.to_poly());
  j["convention"] = to_string(f.convention);
  return j;
}

ChernFunctional functional_from_json(const nlohmann::json& j) {
  const GradedPoly p = poly_from_json(j);
  if (!p.is_homogeneous(p.dim())) throw std::invalid_argument("functional JSON must be homogeneous of top weight");
  return ChernFunctional::from_poly(p, parse_convention(j.at("convention").get<std::string>()));
}

}  // namespace chernsign
