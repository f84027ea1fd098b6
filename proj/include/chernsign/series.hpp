#pragma once

#include "chernsign/rational.hpp"

#include <stdexcept>

namespace chernsign {

// Univariate power series a_0 + a_1 t + ... + a_N t^N with t^{N+1} = 0.
// Dense coefficient storage; all operations keep the same order N.
template <ExactScalar Scalar>
class TruncatedSeries {
 public:
  using Coeffs = Vector<Scalar>;

  explicit TruncatedSeries(int order) : coeffs_(Coeffs::Zero(order + 1)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
  }
  TruncatedSeries(int order, const Coeffs& leading) : TruncatedSeries(order) {
    const Eigen::Index k = std::min<Eigen::Index>(leading.size(), coeffs_.size());
    coeffs_.head(k) = leading.head(k);
  }

  static TruncatedSeries constant(int order, const Scalar& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  // a + b t
  static TruncatedSeries linear(int order, const Scalar& a, const Scalar& b) {
    TruncatedSeries s = constant(order, a);
    if (order >= 1) s.coeffs_[1] = b;
    return s;
  }
  // exp(k t)
  static TruncatedSeries exponential(int order, const Scalar& k) {
    TruncatedSeries s(order);
    Scalar term = 1;
    for (int i = 0; i <= order; ++i) {
      s.coeffs_[i] = term;
      term = term * k / Scalar(i + 1);
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeffs& coeffs() const { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_[i]; }
  Scalar& operator[](int i) { return coeffs_[i]; }

  TruncatedSeries operator+(const TruncatedSeries& o) const { return from(coeffs_ + checked(o).coeffs_); }
  TruncatedSeries operator-(const TruncatedSeries& o) const { return from(coeffs_ - checked(o).coeffs_); }
  TruncatedSeries operator-() const { return from(-coeffs_); }
  TruncatedSeries operator*(const Scalar& s) const { return from(coeffs_ * s); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    checked(o);
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= order(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
  }

  TruncatedSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries r = constant(order(), Scalar(1));
    TruncatedSeries base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Requires a non-zero constant term.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries r(order());
    r.coeffs_[0] = Scalar(1) / coeffs_[0];
    for (int k = 1; k <= order(); ++k) {
      Scalar acc = 0;
      for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -acc / coeffs_[0];
    }
    return r;
  }

  // Requires constant term 1.
  TruncatedSeries log() const {
    if (coeffs_[0] != 1) throw std::domain_error("log needs constant term 1");
    TruncatedSeries u = *this;
    u.coeffs_[0] = 0;
    TruncatedSeries r(order()), power = u;
    for (int m = 1; m <= order(); ++m) {
      r = r + power * (Scalar(m % 2 == 1 ? 1 : -1) / Scalar(m));
      power = power * u;
    }
    return r;
  }

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  static TruncatedSeries from(const Coeffs& c) {
    TruncatedSeries s(static_cast<int>(c.size()) - 1);
    s.coeffs_ = c;
    return s;
  }
  const TruncatedSeries& checked(const TruncatedSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    return o;
  }

  Coeffs coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

}  // namespace chernsign
