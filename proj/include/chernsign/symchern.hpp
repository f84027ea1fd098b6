#pragma once

#include "chernsign/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace chernsign {

/// Non-increasing parts a_1 >= ... >= a_n >= 0 summing to n, zero-padded to length n.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[i]; }
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n padded to length n, reverse-lexicographic:
/// (3,0,0), (2,1,0), (1,1,1). n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// "2,1" for (2,1,0).
std::string to_string(const Partition& a);
/// "P_(2,1,0)"
std::string generator_name(const Partition& a);
/// Parses "2,1" and pads to length n; throws if the parts do not form a partition of n.
Partition parse_partition(std::string_view text, int n);

/// det(c_{a_i - i + j}) with c_0 = 1 and c_k = 0 outside [0, n]; homogeneous of weight n.
GradedPoly schur(const Partition& a, int n);

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination with row pivoting. Entries are lifted to untruncated
/// arithmetic so every intermediate division is exact.
GradedPoly determinant_bareiss(const std::vector<std::vector<GradedPoly>>& m);
/// Laplace expansion along the first row; exponential, used for cross-checks.
GradedPoly determinant_cofactor(const std::vector<std::vector<GradedPoly>>& m);

/// Weight-n component of (1 + c_1 + ... + c_n)^{-1}.
GradedPoly segre_top(int n);

/// k-th power sum of the Chern roots via Newton's identities, 1 <= k <= n.
GradedPoly power_sum(int k, int n);

/// c_i -> (-1)^i c_i. Involutive; `from` only documents the source convention.
GradedPoly flip_basis(const GradedPoly& a, BasisConvention from);
ChernFunctional flip_basis(const ChernFunctional& f);

inline BasisConvention opposite(BasisConvention c) {
  return c == BasisConvention::tangent ? BasisConvention::cotangent : BasisConvention::tangent;
}

}  // namespace chernsign
