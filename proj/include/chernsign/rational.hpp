#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <type_traits>

namespace chernsign {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator. Expression templates are disabled so the type behaves like a
// plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

template <typename T>
concept ExactScalar = !std::is_floating_point_v<T>;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b" (optional leading sign). Decimal points and exponents
/// are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Least common multiple of the denominators of a coefficient vector.
Integer denominator_lcm(const RationalVector& v);

}  // namespace chernsign
