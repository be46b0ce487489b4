#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace klr {

/// Sequence of residues.
using Word = std::vector<int>;
/// "(0,1,2)".
std::string word_to_string(const Word& w);

/// Quantum characteristic p >= 2; the index set is I = Z/pZ.
class Arith {
public:
  explicit Arith(int p);

  int p() const { return p_; }
  /// Representative of x mod p in [0, p).
  int residue(long long x) const;
  /// True when p is prime.  Non-prime p is accepted; only the symmetric-group
  /// interpretation needs primality.
  bool is_prime() const;
  /// i and j differ by +-1 mod p (for p = 2: i != j).
  bool adjacent(int i, int j) const;

private:
  int p_;
};

/// Affine Cartan matrix of type A_{p-1}^(1).
int cartan_entry(const Arith& a, int i, int j);

/// Element sum_i n_i alpha_i of Q_+ (counts are never negative).
class ContentVector {
public:
  ContentVector() = default;
  explicit ContentVector(int p) : counts_(static_cast<std::size_t>(p), 0) {}
  explicit ContentVector(std::vector<int> counts);

  int p() const { return static_cast<int>(counts_.size()); }
  int operator[](int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  int& operator[](int i) { return counts_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& counts() const { return counts_; }
  int height() const;
  bool is_zero() const { return height() == 0; }
  /// Componentwise <=.
  bool dominated_by(const ContentVector& o) const;

  ContentVector& operator+=(const ContentVector& o);
  /// Throws std::domain_error if the result would leave Q_+.
  ContentVector& operator-=(const ContentVector& o);
  friend ContentVector operator+(ContentVector a, const ContentVector& b) { return a += b; }
  friend ContentVector operator-(ContentVector a, const ContentVector& b) { return a -= b; }
  ContentVector scaled(int k) const;

  friend bool operator==(const ContentVector&, const ContentVector&) = default;
  friend auto operator<=>(const ContentVector&, const ContentVector&) = default;

  /// "0:1,1:2" (zero counts omitted).
  std::string to_string() const;
  /// Parses "i:count,..." for the given p.  Repeated residues accumulate.
  static ContentVector parse(const Arith& a, const std::string& text);
  static ContentVector simple(const Arith& a, int i);

private:
  std::vector<int> counts_;
};

/// (x, y) = sum c_ij x_i y_j.
int form(const Arith& a, const ContentVector& x, const ContentVector& y);
/// delta = sum_i alpha_i.
ContentVector null_root(const Arith& a);

/// Signs eps_ij for adjacent (i, j) with eps_ij * eps_ji = -1.
class SignChoice {
public:
  /// eps_ij = +1 when j = i+1, -1 when j = i-1; for p = 2, eps_01 = +1, eps_10 = -1.
  static SignChoice standard(const Arith& a);
  /// "default" or "custom:<i>-<j>=<+1|-1>,..."; unspecified pairs take the
  /// standard value.  The antisymmetry constraint is validated.
  static SignChoice parse(const Arith& a, const std::string& text);

  int eps(int i, int j) const;
  int p() const { return p_; }

private:
  int p_ = 0;
  std::vector<int> table_;  // p*p, 0 on non-adjacent pairs
};

/// Polynomial in commuting u, v with integer coefficients.
class BivariatePoly {
public:
  using Terms = std::map<std::pair<int, int>, long long>;

  BivariatePoly() = default;
  void add(int deg_u, int deg_v, long long c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The polynomial with u and v exchanged.
  BivariatePoly swapped() const;
  std::string to_string() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
  Terms terms_;
};

/// Q_ij(u, v): 0 if i = j, 1 if c_ij = 0, eps_ij (u^{-c_ij} - v^{-c_ji}) otherwise.
BivariatePoly q_poly(const Arith& a, const SignChoice& s, int i, int j);

}  // namespace klr
