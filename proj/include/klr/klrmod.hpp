#pragma once

#include "klr/characters.hpp"
#include "klr/tableau.hpp"

#include <set>
#include <string>
#include <vector>

namespace klr {

/// Integer matrix stored by columns: column c lists the nonzero (row, value).
class SparseMatrix {
public:
  using Vec = std::map<int, long long>;

  SparseMatrix() = default;
  explicit SparseMatrix(int dim) : cols_(static_cast<std::size_t>(dim)) {}

  int dim() const { return static_cast<int>(cols_.size()); }
  void set(int row, int col, long long v);
  const std::vector<std::pair<int, long long>>& column(int col) const { return cols_.at(static_cast<std::size_t>(col)); }
  bool is_zero() const;
  /// Overflow-checked product with a sparse vector.
  Vec apply(const Vec& v) const;

private:
  std::vector<std::vector<std::pair<int, long long>>> cols_;
};

struct BasisVector {
  std::string label;
  Word word;
  int degree = 0;
};

/// Finite-dimensional module over the KLR generators: 1_i acts as projection
/// onto the basis vectors labelled i.
struct GradedModule {
  int n = 0;
  std::vector<BasisVector> basis;
  /// y_1..y_n at indices 0..n-1.
  std::vector<SparseMatrix> y;
  /// psi_1..psi_{n-1} at indices 0..n-2.
  std::vector<SparseMatrix> psi;

  int dim() const { return static_cast<int>(basis.size()); }
};

struct RelationFailure {
  /// R1, R2, R2PsiE, R6, R4, R3Psi, R7, Cyclo or Grading.
  std::string relation;
  Word word;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationFailure> failures;
  long long checks = 0;
  bool passed() const { return failures.empty(); }
};

RelationReport check_relations(const Arith& a, const SignChoice& s, const GradedModule& m, bool cyclotomic);

/// chi(mu) = mu_1 + length - max{t : mu_t = mu_1}.
int hook_chi(const Partition& mu);
/// Hook condition pairs ordered so that the lower-left box holds the larger entry.
bool is_p_standard(const Arith& a, const Tableau& t);
std::vector<Tableau> p_standard_tableaux(const Arith& a, const Partition& mu);

/// Throws DomainError unless mu is p-restricted with chi(mu) <= p.
GradedModule homogeneous_module(const Arith& a, const Partition& mu);
/// The module on chi^i = (i, 1^{p-i}); throws unless 1 <= i <= p-1.
GradedModule hook_module(const Arith& a, int i);

std::set<Word> word_graph_component(const Arith& a, const Word& seed);
/// Throws DomainError("non-homogeneous component", ...) if the candidate
/// fails a relation.
GradedModule component_module(const Arith& a, const SignChoice& s, const std::set<Word>& component);

FormalCharacter character(const GradedModule& m);

}  // namespace klr
