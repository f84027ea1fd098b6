#include "chernsign/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chernsign {

std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      if (ch == '.' || ch == 'e' || ch == 'E')
        throw std::invalid_argument("floating-point literal rejected: '" + std::string(whole) + "'");
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

Integer denominator_lcm(const RationalVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Integer d = denominator(v[i]);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

}  // namespace chernsign
