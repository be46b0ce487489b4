#include "klr/tableau.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace klr {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation must be a bijection of 1..n", std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  // left-multiplying by s_a swaps the values a, a+1; build from the right
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int a = *it;
    if (a < 1 || a >= n) throw DomainError("generator index out of range", std::to_string(a));
    for (int& v : p.w_) {
      if (v == a) v = a + 1;
      else if (v == a + 1) v = a;
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int k = 1; k <= n(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.n() != n()) throw std::invalid_argument("permutations of different degree");
  std::vector<int> r(w_.size());
  for (int k = 1; k <= n(); ++k) r[static_cast<std::size_t>(k - 1)] = (*this)(o(k));
  return Permutation(std::move(r));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < w_.size(); ++a)
    for (std::size_t b = a + 1; b < w_.size(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  std::vector<int> pos(w_.size() + 1);  // pos[v] = w^{-1}(v)
  for (int k = 1; k <= n(); ++k) pos[static_cast<std::size_t>((*this)(k))] = k;
  while (true) {
    int a = 1;
    while (a < n() && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(a + 1)]) ++a;
    if (a >= n()) break;
    word.push_back(a);
    std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)]);
  }
  return word;
}

bool Permutation::bruhat_leq(const Permutation& o) const {
  if (o.n() != n()) throw DomainError("Bruhat comparison needs equal degree", std::to_string(o.n()));
  std::vector<int> a, b;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    a.insert(std::upper_bound(a.begin(), a.end(), w_[k]), w_[k]);
    b.insert(std::upper_bound(b.begin(), b.end(), o.w_[k]), o.w_[k]);
    for (std::size_t j = 0; j <= k; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  if (!Partition::from_rows(lens) || (!lens.empty() && lens.back() == 0))
    throw DomainError("tableau rows must have partition shape", to_string());
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw DomainError("tableau entries must be a bijection onto 1..n", to_string());
      seen[static_cast<std::size_t>(v)] = true;
    }
}

Partition Tableau::shape() const {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lens));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int Tableau::at(const Node& n) const {
  return rows_.at(static_cast<std::size_t>(n.row - 1)).at(static_cast<std::size_t>(n.col - 1));
}

Node Tableau::position(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw DomainError("entry not present in tableau", std::to_string(entry));
}

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] > rows_[r][c]) return false;
    }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

Tableau Tableau::act(const Permutation& w) const {
  if (w.n() != size()) throw DomainError("permutation degree must match tableau size", std::to_string(w.n()));
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) v = w(v);
  return Tableau(std::move(rows));
}

Tableau Tableau::restrict_last() const {
  auto rows = rows_;
  const int n = size();
  for (auto& r : rows)
    if (!r.empty() && r.back() == n) r.pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? "/" : "");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
  }
  return os.str();
}

Tableau leading_tableau(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int r = 1; r <= mu.length(); ++r) {
    rows.emplace_back();
    for (int c = 1; c <= mu.part(r); ++c) rows.back().push_back(next++);
  }
  return Tableau(std::move(rows));
}

std::vector<Tableau> standard_tableaux(const Partition& mu) {
  // Placing n into each removable node recursively yields every standard tableau.
  std::vector<Tableau> out;
  const int n = mu.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(mu.length()));
  for (int r = 1; r <= mu.length(); ++r) rows[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(mu.part(r)), 0);
  std::function<void(const Partition&, int)> rec = [&](const Partition& shape, int k) {
    if (k == 0) {
      out.emplace_back(rows);
      return;
    }
    for (const Node& A : shape.removable_nodes()) {
      rows[static_cast<std::size_t>(A.row - 1)][static_cast<std::size_t>(A.col - 1)] = k;
      rec(shape.remove(A), k - 1);
    }
  };
  rec(mu, n);
  std::sort(out.begin(), out.end(),
            [](const Tableau& x, const Tableau& y) { return x.reading_word() < y.reading_word(); });
  return out;
}

Word residue_sequence(const Arith& a, const Tableau& t) {
  Word w(static_cast<std::size_t>(t.size()));
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      w[static_cast<std::size_t>(rows[r][c] - 1)] = residue(a, {static_cast<int>(r) + 1, static_cast<int>(c) + 1});
  return w;
}

Permutation tableau_permutation(const Tableau& t) { return Permutation(t.reading_word()); }

bool bruhat_leq(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape())
    throw DomainError("Bruhat comparison needs tableaux of the same shape", s.shape().to_string() + " vs " + t.shape().to_string());
  return tableau_permutation(s).bruhat_leq(tableau_permutation(t));
}

int node_degree(const Arith& a, const Partition& mu, const Node& A) {
  if (!mu.is_removable(A)) throw DomainError("node must be removable", A.to_string() + " in " + mu.to_string());
  const int i = residue(a, A);
  int d = 0;
  for (const Node& B : addable_nodes(a, mu, i))
    if (B.col < A.col) ++d;
  for (const Node& B : removable_nodes(a, mu, i))
    if (B.col < A.col) --d;
  return d;
}

int tableau_degree(const Arith& a, const Tableau& t) {
  if (!t.is_standard()) throw DomainError("tableau must be standard", t.to_string());
  int deg = 0;
  Tableau cur = t;
  while (cur.size() > 0) {
    const Node A = cur.position(cur.size());
    deg += node_degree(a, cur.shape(), A);
    cur = cur.restrict_last();
  }
  return deg;
}

long long hook_length_count(const Partition& mu) {
  const Partition tr = mu.transpose();
  long long num = 1;
  for (int k = 2; k <= mu.size(); ++k) num *= k;
  long long hooks = 1;
  for (const Node& A : mu.nodes()) hooks *= (mu.part(A.row) - A.col) + (tr.part(A.col) - A.row) + 1;
  return num / hooks;
}

}  // namespace klr

namespace klr {

Word act_on_word(const Permutation& w, const Word& i) {
  if (w.n() != static_cast<int>(i.size())) throw DomainError("permutation degree must match word length", word_to_string(i));
  Word out(i.size());
  for (int r = 1; r <= w.n(); ++r) out[static_cast<std::size_t>(w(r) - 1)] = i[static_cast<std::size_t>(r - 1)];
  return out;
}

int psi_degree(const Arith& a, const std::vector<int>& word, const Word& i) {
  Word cur = i;
  int deg = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto r = static_cast<std::size_t>(*it);
    if (*it < 1 || r >= cur.size()) throw DomainError("generator index out of range", std::to_string(*it));
    deg -= cartan_entry(a, cur[r - 1], cur[r]);
    std::swap(cur[r - 1], cur[r]);
  }
  return deg;
}

}  // namespace klr
