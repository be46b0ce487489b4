#include "klr/characters.hpp"

#include "klr/error.hpp"
#include "klr/klrmod.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace klr {

FormalCharacter FormalCharacter::unit() { return word({}, 1); }

FormalCharacter FormalCharacter::word(const Word& w, const LaurentPoly& c) {
  FormalCharacter ch;
  ch.add(w, c);
  return ch;
}

void FormalCharacter::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[w];
  slot += c;
  if (slot.is_zero()) terms_.erase(w);
}

LaurentPoly FormalCharacter::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::optional<ContentVector> FormalCharacter::content(const Arith& a) const {
  std::optional<ContentVector> out;
  for (const auto& [w, _] : terms_) {
    ContentVector c(a.p());
    for (int x : w) ++c[a.residue(x)];
    if (out && *out != c) throw std::logic_error("character words have different contents");
    out = c;
  }
  return out;
}

BigInt FormalCharacter::dimension() const {
  BigInt d = 0;
  for (const auto& [_, c] : terms_) d += c.at_one();
  return d;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

std::string FormalCharacter::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ");
    first = false;
    if (c != LaurentPoly(1)) os << "(" << c.to_string() << ")";
    os << word_to_string(w);
  }
  return os.str();
}

FormalCharacter shuffle(const Arith& a, const FormalCharacter& x, const FormalCharacter& y) {
  FormalCharacter out;
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      // pending[k][j] = sum over left letters u_k, u_{k+1}, ... of -(alpha_{u}, alpha_j)
      std::vector<std::vector<int>> pending(u.size() + 1, std::vector<int>(static_cast<std::size_t>(a.p()), 0));
      for (std::size_t k = u.size(); k-- > 0;)
        for (int j = 0; j < a.p(); ++j)
          pending[k][static_cast<std::size_t>(j)] = pending[k + 1][static_cast<std::size_t>(j)] - cartan_entry(a, u[k], j);
      std::map<Word, LaurentPoly> acc;
      Word cur;
      std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t ia, std::size_t ib, int e) {
        if (ia == u.size() && ib == v.size()) {
          acc[cur] += LaurentPoly::monomial(e);
          return;
        }
        if (ia < u.size()) {
          cur.push_back(u[ia]);
          rec(ia + 1, ib, e);
          cur.pop_back();
        }
        if (ib < v.size()) {
          cur.push_back(v[ib]);
          rec(ia, ib + 1, e + pending[ia][static_cast<std::size_t>(a.residue(v[ib]))]);
          cur.pop_back();
        }
      };
      rec(0, 0, 0);
      const LaurentPoly c = cu * cv;
      for (const auto& [w, poly] : acc) out.add(w, poly * c);
    }
  }
  return out;
}

Word canonical_base_word(const Arith& a, int color) {
  if (color < 1 || color > a.p() - 1) throw DomainError("color must lie in 1..p-1", std::to_string(color));
  Word w;
  for (int k = 0; k < color; ++k) w.push_back(k);
  for (int k = a.p() - 1; k >= color; --k) w.push_back(k);
  return w;
}

FormalCharacter column_char(const Arith& a, int n, int color) {
  if (n < 0) throw DomainError("column length must be >= 0", std::to_string(n));
  const Word base = canonical_base_word(a, color);
  if (n == 0) return FormalCharacter::unit();
  Word seed;
  for (int k = 0; k < n; ++k) seed.insert(seed.end(), base.begin(), base.end());
  const auto comp = word_graph_component(a, seed);
  return character(component_module(a, SignChoice::standard(a), comp));
}

FormalCharacter jacobi_trudi(const Arith& a, const Partition& mu, int color) {
  const Partition lambda = mu.transpose();
  const int len = lambda.length();
  std::map<int, FormalCharacter> cache;
  auto entry = [&](int r, int s) -> FormalCharacter {
    const int m = lambda.part(r) - r + s;
    if (m < 0) return {};
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, column_char(a, m, color)).first;
    return it->second;
  };
  std::function<FormalCharacter(int, std::vector<int>)> det = [&](int rows, std::vector<int> cols) -> FormalCharacter {
    if (rows == 0) return FormalCharacter::unit();
    FormalCharacter total;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      FormalCharacter e = entry(rows, cols[k]);
      if (e.is_zero()) continue;
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      FormalCharacter term = shuffle(a, det(rows - 1, rest), e);
      // sign of position k among the remaining columns, last row
      if ((static_cast<int>(cols.size()) - 1 - static_cast<int>(k)) % 2 == 0)
        total += term;
      else
        total -= term;
    }
    return total;
  };
  std::vector<int> cols;
  for (int s = 1; s <= len; ++s) cols.push_back(s);
  return det(len, cols);
}

Word gg_word(const Word& base, const std::vector<int>& composition) {
  Word w;
  for (int t : composition) {
    if (t < 0) throw DomainError("composition entries must be nonnegative", std::to_string(t));
    for (int letter : base)
      for (int k = 0; k < t; ++k) w.push_back(letter);
  }
  return w;
}

LaurentPoly gg_coefficient(const Arith& a, const FormalCharacter& v, const Word& base, const std::vector<int>& composition) {
  const LaurentPoly raw = v.coeff(gg_word(base, composition));
  LaurentPoly c = 1;
  for (int t : composition) c *= quantum_factorial(t);
  LaurentPoly cp = 1;
  for (int k = 0; k < a.p(); ++k) cp *= c;
  auto quotient = LaurentPoly::divide_exact(raw, cp);
  if (!quotient)
    throw std::domain_error("Gelfand-Graev coefficient " + raw.to_string() + " is not divisible by " + cp.to_string());
  return *quotient;
}

}  // namespace klr
