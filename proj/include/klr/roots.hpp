#pragma once

#include "klr/laurent.hpp"
#include "klr/partition.hpp"

#include <string>
#include <vector>

namespace klr {

/// Positive root of type A_{p-1}^(1).  Real roots are +-beta + n delta with
/// beta = alpha_lo + ... + alpha_hi (1 <= lo <= hi <= p-1); imaginary roots
/// are n delta.
struct AffineRoot {
  /// +1, -1, or 0 for imaginary.
  int sign = 0;
  int lo = 0;
  int hi = 0;
  int n = 0;

  static AffineRoot real(int sign, int lo, int hi, int n);
  static AffineRoot imaginary(int n);

  bool is_real() const { return sign != 0; }
  ContentVector content(const Arith& a) const;
  int height(const Arith& a) const;
  /// e.g. "a1", "a[1,2]+d", "-a[1,2]+2d", "d".
  std::string to_string() const;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// Positive real roots of height <= bound, sorted by height then content.
std::vector<AffineRoot> real_roots_up_to(const Arith& a, int height_bound);

enum class Order { Less, Equivalent, Greater };

/// Slope preorder: beta is compared through c1(beta)/ht(beta), where
/// c1(alpha_i) = B^{pi(i)} for i >= 1, c1(alpha_0) = -p * sum_{i>=1} B^i and
/// B = scale * 2 p H^2 + 1.  Equal slopes on non-proportional roots raise.
class ConvexPreorder {
public:
  /// pi is a permutation of 1..p-1 (empty means identity); scale >= 1.
  ConvexPreorder(const Arith& a, int height_bound, std::vector<int> pi = {}, int scale = 1);
  /// Variant 0, 1, 2, ...: the identity, the reversal, then cyclic shifts of
  /// 1..p-1, each with its own scale.
  static ConvexPreorder variant(const Arith& a, int height_bound, int which);

  Order compare(const AffineRoot& x, const AffineRoot& y) const;
  int height_bound() const { return bound_; }

private:
  BigInt c1(const AffineRoot& r) const;

  Arith arith_;
  int bound_;
  std::vector<BigInt> weights_;  // c1(alpha_i), i = 0..p-1
};

struct RootPartition {
  /// Real roots with positive multiplicity, in decreasing preorder.
  std::vector<std::pair<AffineRoot, int>> real_mults;
  /// l = p-1 partitions of total size m_delta.
  std::vector<Partition> multipartition;

  int m_delta() const;
  ContentVector content(const Arith& a) const;
  std::string to_string() const;
};

std::vector<std::vector<Partition>> multipartitions(int n, int l);
std::vector<RootPartition> root_partitions(const Arith& a, const ContentVector& alpha, const ConvexPreorder& o);

}  // namespace klr
