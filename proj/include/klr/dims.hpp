#pragma once

#include "klr/laurent.hpp"
#include "klr/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klr {

/// Partitions with the given content.
std::vector<Partition> partitions_with_content(const Arith& a, const ContentVector& alpha);
/// Distinct contents of partitions of n, sorted.
std::vector<ContentVector> blocks_of(const Arith& a, int n);

/// sum over St(mu) of q^deg(T), by recursion on removable nodes.
LaurentPoly specht_graded_dim(const Arith& a, const Partition& mu);
/// sum over standard T with residue sequence i of q^deg(T).
LaurentPoly word_graded_dim(const Arith& a, const Partition& mu, const Word& i);
/// dim_q 1_i H_alpha 1_j.  Throws DomainError if i, j do not have content alpha.
LaurentPoly idempotent_graded_dim(const Arith& a, const ContentVector& alpha, const Word& i, const Word& j);
LaurentPoly block_graded_dim(const Arith& a, const ContentVector& alpha);

enum class Direction { Restrict, Induce };

struct BranchEntry {
  Partition target;
  LaurentPoly multiplicity;
  /// "normal-node" or "mullineux-twist".
  std::string provenance;
  /// Set when both sources predict this target (with equal multiplicity).
  bool confirmed_by_both = false;
};

struct HomEntry {
  Partition target;
  LaurentPoly dim;
  /// The target is not p-restricted, so only the Specht module exists.
  bool specht_only = false;
};

struct BranchTable {
  Partition source;
  int i = 0;
  Direction direction = Direction::Restrict;
  int epsilon = 0;
  int phi = 0;
  /// e_i D = 0 iff epsilon = 0 (f_i D = 0 iff phi = 0).
  bool vanishes = false;
  /// Known composition factors; a lower bound on the full answer.
  std::vector<BranchEntry> entries;
  std::vector<HomEntry> homs;
};

/// Throws DomainError unless mu is p-restricted.
BranchTable branch_table(const Arith& a, const Partition& mu, int i, Direction dir);

struct SoclePrediction {
  Partition target;
  int socle_shift = 0;
  int head_shift = 0;
  LaurentPoly top_multiplicity;
  int endomorphism_dim = 0;
  bool irreducible = false;
};

/// nullopt when the functor kills D^mu.
std::optional<SoclePrediction> socle_prediction(const Arith& a, const Partition& mu, int i, Direction dir);

}  // namespace klr
