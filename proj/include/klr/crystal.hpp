#pragma once

#include "klr/partition.hpp"

#include <optional>
#include <vector>

namespace klr {

/// The reduced i-signature of a partition.
struct SignatureReport {
  int i = 0;
  /// Addable and removable i-nodes, left to right.
  std::vector<Node> nodes;
  /// +1 for addable, -1 for removable.
  std::vector<int> raw;
  /// Raw signs with cancelled +- pairs set to 0.
  std::vector<int> reduced;
  /// 0-based positions of the normal nodes, decreasing (r_1 > r_2 > ...).
  std::vector<int> normal;
  /// 0-based positions of the conormal nodes, increasing (a_1 < a_2 < ...).
  std::vector<int> conormal;

  int epsilon() const { return static_cast<int>(normal.size()); }
  int phi() const { return static_cast<int>(conormal.size()); }
};

/// Cancels every + that has an unmatched - somewhere to its right.
std::vector<int> reduce_signs(const std::vector<int>& raw);

SignatureReport signature(const Arith& a, const Partition& mu, int i);
int epsilon(const Arith& a, const Partition& mu, int i);
int phi(const Arith& a, const Partition& mu, int i);
std::optional<Partition> e_tilde(const Arith& a, const Partition& mu, int i);
std::optional<Partition> f_tilde(const Arith& a, const Partition& mu, int i);

/// wt(mu) = Lambda_0 - cont(mu).
struct Weight {
  int lambda0 = 1;
  ContentVector content;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight weight(const Arith& a, const Partition& mu);
/// (wt, alpha_i) using (Lambda_0, alpha_j) = delta_{0j}.
int pair_with_simple(const Arith& a, const Weight& w, int i);

struct CrystalEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int color = 0;
};

struct CrystalGraph {
  /// Grouped by size, each level in the order discovered from the previous one.
  std::vector<Partition> vertices;
  std::vector<CrystalEdge> edges;
};

/// All vertices reachable from the empty partition with at most n_max boxes.
CrystalGraph crystal_graph(const Arith& a, int n_max);

}  // namespace klr
