#pragma once

#include "klr/partition.hpp"

#include <vector>

namespace klr {

/// Permutation of {1..n} in one-line notation: w(k) = one_line[k-1].
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// s_{a_1} s_{a_2} ... s_{a_k} in Sigma_n.
  static Permutation from_word(int n, const std::vector<int>& word);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& one_line() const { return w_; }
  Permutation inverse() const;
  /// (this * o)(k) = this(o(k)).
  Permutation operator*(const Permutation& o) const;
  /// Inversion count.
  int length() const;
  /// Lexicographically smallest reduced word.
  std::vector<int> reduced_word() const;
  /// Ehresmann tableau criterion.
  bool bruhat_leq(const Permutation& o) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> w_;
};

/// Filling of a Young diagram by 1..n; need not be standard.
class Tableau {
public:
  Tableau() = default;
  /// Throws DomainError unless row lengths match a partition and entries are a
  /// bijection onto 1..n.
  explicit Tableau(std::vector<std::vector<int>> rows);

  Partition shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;
  int at(const Node& n) const;
  Node position(int entry) const;
  bool is_standard() const;
  /// Entries read along successive rows.
  std::vector<int> reading_word() const;
  /// (w T)(A) = w(T(A)).
  Tableau act(const Permutation& w) const;
  /// Removes the box holding n.
  Tableau restrict_last() const;

  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
  std::vector<std::vector<int>> rows_;
};

Tableau leading_tableau(const Partition& mu);
/// Standard tableaux, sorted lexicographically by reading word.
std::vector<Tableau> standard_tableaux(const Partition& mu);
Word residue_sequence(const Arith& a, const Tableau& t);
/// w^T with w^T T^mu = T.
Permutation tableau_permutation(const Tableau& t);
/// S <= T iff w^S <= w^T.  Throws DomainError on shape mismatch.
bool bruhat_leq(const Tableau& s, const Tableau& t);
/// d_A(mu).  Throws DomainError unless A is removable.
int node_degree(const Arith& a, const Partition& mu, const Node& A);
/// Throws DomainError on non-standard tableaux.
int tableau_degree(const Arith& a, const Tableau& t);
/// Number of standard tableaux by the hook length formula.
long long hook_length_count(const Partition& mu);

}  // namespace klr

namespace klr {

/// Place action: (w i)_r = i_{w^{-1}(r)}.
Word act_on_word(const Permutation& w, const Word& i);
/// Degree of psi_{r_1} ... psi_{r_m} 1_i, i.e. of the product applied right to left.
int psi_degree(const Arith& a, const std::vector<int>& word, const Word& i);

}  // namespace klr
