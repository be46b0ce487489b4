#include "klr/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace klr {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
  LaurentPoly r;
  r.add_term(exponent, coeff);
  return r;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shift(int m) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};

  // Schoolbook division from the top degree down; Z is not a field, so every
  // step must divide the leading coefficient exactly.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int b_hi = b.max_exponent();
  const int b_lo = b.min_exponent();
  const BigInt& b_lead = b.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int r_hi = rem.max_exponent();
    if (r_hi - b_hi < rem.min_exponent() - b_lo) return std::nullopt;
    const BigInt& r_lead = rem.terms_.rbegin()->second;
    if (r_lead % b_lead != 0) return std::nullopt;
    LaurentPoly t = monomial(r_hi - b_hi, r_lead / b_lead);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly quantum_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -quantum_int(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r += LaurentPoly::monomial(e);
  return r;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n must be nonnegative, got " + std::to_string(n));
  LaurentPoly r = 1;
  for (int k = 2; k <= n; ++k) r *= quantum_int(k);
  return r;
}

}  // namespace klr
