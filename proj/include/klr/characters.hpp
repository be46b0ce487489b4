#pragma once

#include "klr/laurent.hpp"
#include "klr/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klr {

/// Finitely supported map word -> Z[q,q^-1].
class FormalCharacter {
public:
  using Terms = std::map<Word, LaurentPoly>;

  FormalCharacter() = default;
  /// The empty word with coefficient 1.
  static FormalCharacter unit();
  static FormalCharacter word(const Word& w, const LaurentPoly& c = 1);

  void add(const Word& w, const LaurentPoly& c);
  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  /// Common content of all words; nullopt if empty.  Throws std::logic_error
  /// if the words disagree.
  std::optional<ContentVector> content(const Arith& a) const;
  /// Sum of all coefficients at q = 1.
  BigInt dimension() const;

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter x, const FormalCharacter& y) { return x += y; }
  friend FormalCharacter operator-(FormalCharacter x, const FormalCharacter& y) { return x -= y; }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  /// "(0,1,0,1) + (q^-2 + 2 + q^2)(0,0,1,1)"; "0" when empty.
  std::string to_string() const;

private:
  Terms terms_;
};

/// Quantum shuffle: a right-factor letter j emitted while left-factor letter
/// i is still pending contributes q^{-(alpha_i, alpha_j)}.
FormalCharacter shuffle(const Arith& a, const FormalCharacter& x, const FormalCharacter& y);

/// Residue sequence of the leading tableau of chi^i = (i, 1^{p-i}):
/// (0, 1, ..., i-1, p-1, p-2, ..., i).
Word canonical_base_word(const Arith& a, int color);

/// Character of the homogeneous module on the word-graph component of
/// base^n; n = 0 gives the unit.
FormalCharacter column_char(const Arith& a, int n, int color);
/// Shuffle determinant of column characters for the transpose of mu.
FormalCharacter jacobi_trudi(const Arith& a, const Partition& mu, int color);

Word gg_word(const Word& base, const std::vector<int>& composition);
/// Coefficient of g^mu in V divided by ([mu_1]! ... [mu_n]!)^p; throws
/// std::domain_error if the division is not exact.
LaurentPoly gg_coefficient(const Arith& a, const FormalCharacter& v, const Word& base, const std::vector<int>& composition);

}  // namespace klr
