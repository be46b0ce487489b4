#pragma once

#include "klr/tableau.hpp"

#include <optional>
#include <vector>

namespace klr {

std::vector<Node> garnir_nodes(const Partition& mu);

struct GarnirData {
  Partition shape;
  Node node;
  /// Belt nodes in filling order: row r+1 left to right, then row r.
  std::vector<Node> belt;
  int u = 0;
  int v = 0;
  Tableau garnir_tableau;
  /// B_1..B_k, each p nodes left to right.
  std::vector<std::vector<Node>> bricks;
  int k = 0;
  int f = 0;
  /// Smallest entry of G^A in a brick; absent when k = 0.
  std::optional<int> d;
  /// w_1^A .. w_{k-1}^A as elements of Sigma_n.
  std::vector<Permutation> generators;
  Tableau minimal_tableau;
  /// Elements of D^A as reduced words in the brick generators (1-based),
  /// ordered by length, then lexicographically.
  std::vector<std::vector<int>> coset_reps;
  /// The same elements in Sigma_n.
  std::vector<Permutation> coset_perms;
  /// u T^A for u in coset_reps, same order.
  std::vector<Tableau> gar_set;
};

/// Throws DomainError unless A is a Garnir node of mu.
GarnirData garnir_data(const Arith& a, const Partition& mu, const Node& A);

struct TauFactor {
  /// r, for tau_r = psi_{w_r} + 1.
  int index = 0;
  /// Reduced word of w_r in the s_j.
  std::vector<int> psi_word;
  /// Degree of psi_{w_r} on the word it meets.
  int degree = 0;
};

struct GarnirTerm {
  std::vector<TauFactor> tau;
  std::vector<int> psi_tableau_word;
  int psi_tableau_degree = 0;
  Word idempotent;
};

struct GarnirElement {
  Node node;
  std::vector<GarnirTerm> terms;
};

GarnirElement garnir_element_symbolic(const Arith& a, const Partition& mu, const Node& A);

struct SpechtPresentation {
  Partition shape;
  int generator_degree = 0;
  Word idempotent;
  std::vector<int> y_killed;
  std::vector<int> psi_killed;
  std::vector<GarnirElement> garnir;
};

SpechtPresentation specht_presentation(const Arith& a, const Partition& mu);

}  // namespace klr
