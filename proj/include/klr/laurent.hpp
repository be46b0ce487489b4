#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace klr {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1].  Terms are kept in a sorted map from exponent to
/// coefficient and zero coefficients are never stored, so structural equality
/// is coefficient-wise equality.
class LaurentPoly {
public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(implicit)

  static LaurentPoly monomial(int exponent, BigInt coeff = 1);
  static LaurentPoly q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  /// Multiplication by q^m.
  LaurentPoly shift(int m) const;
  /// q -> q^-1.
  LaurentPoly bar() const;
  /// Value at q = 1.
  BigInt at_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_nonnegative_coeffs() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient a / b, or nullopt when b does not divide a in Z[q,q^-1]
  /// (up to the unit q^k).  Throws std::domain_error on b == 0.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical rendering: increasing exponent, e.g. "q^-1 + q", "2 - 3q^2".
  std::string to_string() const;

private:
  void add_term(int exponent, const BigInt& c);
  Terms terms_;
};

/// [n]_q = (q^n - q^-n)/(q - q^-1); [0] = 0, [-n] = -[n].
LaurentPoly quantum_int(int n);
/// [n]_q! = [1]_q ... [n]_q.  Throws std::invalid_argument on n < 0.
LaurentPoly quantum_factorial(int n);

inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

}  // namespace klr
