#include "chernsign/symchern.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chernsign {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  const int n = size();
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if (parts_[i] < 0 || parts_[i] > n) throw std::invalid_argument("partition part out of range [0, n]");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    sum += parts_[i];
  }
  if (sum != n) throw std::invalid_argument("partition parts must sum to n = " + std::to_string(n));
}

Partition Partition::conjugate() const {
  const int n = size();
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < parts_[i]; ++k) ++c[k];
  return Partition(std::move(c));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::vector<int> padded = cur;
      padded.resize(n, 0);
      out.emplace_back(std::move(padded));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string to_string(const Partition& a) {
  std::string out;
  for (int x : a.parts()) {
    if (x == 0) break;
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string generator_name(const Partition& a) {
  std::string out = "P_(";
  for (int i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view text, int n) {
  std::vector<int> parts;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(item));
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("partition has more than n parts");
  parts.resize(n, 0);
  return Partition(std::move(parts));
}

GradedPoly determinant_bareiss(const std::vector<std::vector<GradedPoly>>& input) {
  const int size = static_cast<int>(input.size());
  if (size == 0) throw std::invalid_argument("empty matrix");
  const int dim = input[0][0].dim();
  std::vector<std::vector<GradedPoly>> m;
  m.reserve(size);
  for (const auto& row : input) {
    if (static_cast<int>(row.size()) != size) throw std::invalid_argument("matrix is not square");
    auto& out = m.emplace_back();
    for (const auto& e : row) out.push_back(e.with_max_weight(GradedPoly::kUnbounded));
  }

  bool negate = false;
  GradedPoly prev = GradedPoly::constant(dim, 1).with_max_weight(GradedPoly::kUnbounded);
  for (int k = 0; k < size - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return GradedPoly(dim);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  GradedPoly det = m[size - 1][size - 1];
  if (negate) det = -det;
  // Restore the caller's truncation. Weight above dim would mean a bug.
  return det.with_max_weight(input[0][0].max_weight());
}

GradedPoly determinant_cofactor(const std::vector<std::vector<GradedPoly>>& m) {
  const int size = static_cast<int>(m.size());
  if (size == 0) throw std::invalid_argument("empty matrix");
  if (size == 1) return m[0][0];
  GradedPoly det(m[0][0].dim(), m[0][0].max_weight());
  for (int col = 0; col < size; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<GradedPoly>> minor;
    for (int i = 1; i < size; ++i) {
      auto& row = minor.emplace_back();
      for (int j = 0; j < size; ++j)
        if (j != col) row.push_back(m[i][j]);
    }
    const GradedPoly term = m[0][col] * determinant_cofactor(minor);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

namespace {

std::vector<std::vector<GradedPoly>> jacobi_trudi_matrix(const Partition& a, int n) {
  std::vector<std::vector<GradedPoly>> m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1].push_back(GradedPoly::chern(n, a[i - 1] - i + j));
  return m;
}

}  // namespace

GradedPoly schur(const Partition& a, int n) {
  if (a.size() != n) throw std::invalid_argument("partition is not padded to length n");
  if (n == 0) return GradedPoly::constant(0, 1);
  return determinant_bareiss(jacobi_trudi_matrix(a, n));
}

GradedPoly segre_top(int n) {
  if (n < 1) throw std::invalid_argument("segre_top needs n >= 1");
  // s = 1 - u + u^2 - ..., u = c_1 + ... + c_n; u^{n+1} is truncated away.
  GradedPoly u(n);
  for (int i = 1; i <= n; ++i) u += GradedPoly::chern(n, i);
  GradedPoly s = GradedPoly::constant(n, 1), power = s;
  for (int k = 1; k <= n; ++k) {
    power = power * u;
    s += (k % 2 == 0) ? power : -power;
  }
  return s.component(n);
}

GradedPoly power_sum(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("power_sum index out of range");
  std::vector<GradedPoly> p;
  p.reserve(k + 1);
  p.emplace_back(GradedPoly::constant(n, n));
  for (int m = 1; m <= k; ++m) {
    GradedPoly pm(n);
    for (int i = 1; i < m; ++i) {
      const GradedPoly t = GradedPoly::chern(n, i) * p[m - i];
      if (i % 2 == 1) pm += t;
      else pm -= t;
    }
    const GradedPoly last = GradedPoly::chern(n, m) * Rational(m);
    if (m % 2 == 1) pm += last;
    else pm -= last;
    p.push_back(std::move(pm));
  }
  return p[k];
}

GradedPoly flip_basis(const GradedPoly& a, BasisConvention) {
  GradedPoly r(a.dim(), a.max_weight());
  for (const auto& [m, c] : a.terms()) {
    int odd = 0;
    for (int i = 0; i < m.dim(); i += 2) odd += m.exps[i];  // c_1, c_3, ...
    r.add_term(m, odd % 2 == 0 ? c : Rational(-c));
  }
  return r;
}

ChernFunctional flip_basis(const ChernFunctional& f) {
  // Every top-weight monomial has weight n, so the sign is (-1)^n throughout.
  return {f.dim, opposite(f.convention), RationalVector(f.coeffs * Rational(f.dim % 2 == 0 ? 1 : -1))};
}

}  // namespace chernsign
