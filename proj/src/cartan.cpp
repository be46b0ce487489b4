#include "klr/cartan.hpp"

#include "klr/error.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

std::string word_to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

Arith::Arith(int p) : p_(p) {
  if (p < 2) throw DomainError("p must be >= 2", std::to_string(p));
}

int Arith::residue(long long x) const {
  long long r = x % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

bool Arith::is_prime() const {
  for (int d = 2; d * d <= p_; ++d)
    if (p_ % d == 0) return false;
  return true;
}

bool Arith::adjacent(int i, int j) const {
  int d = residue(i - j);
  return d == 1 || d == p_ - 1;
}

int cartan_entry(const Arith& a, int i, int j) {
  i = a.residue(i);
  j = a.residue(j);
  if (i == j) return 2;
  if (!a.adjacent(i, j)) return 0;
  return a.p() == 2 ? -2 : -1;
}

ContentVector::ContentVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw DomainError("content counts must be nonnegative", std::to_string(c));
}

int ContentVector::height() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool ContentVector::dominated_by(const ContentVector& o) const {
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > o.counts_.at(i)) return false;
  return true;
}

ContentVector& ContentVector::operator+=(const ContentVector& o) {
  if (o.counts_.size() != counts_.size()) throw std::invalid_argument("content vectors over different p");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  return *this;
}

ContentVector& ContentVector::operator-=(const ContentVector& o) {
  if (o.counts_.size() != counts_.size()) throw std::invalid_argument("content vectors over different p");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < o.counts_[i]) throw std::domain_error("content subtraction leaves Q_+");
    counts_[i] -= o.counts_[i];
  }
  return *this;
}

ContentVector ContentVector::scaled(int k) const {
  ContentVector r = *this;
  for (int& c : r.counts_) c *= k;
  return r;
}

std::string ContentVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!first) os << ",";
    os << i << ":" << counts_[i];
    first = false;
  }
  return os.str();
}

ContentVector ContentVector::parse(const Arith& a, const std::string& text) {
  ContentVector r(a.p());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("content entries must look like i:count", item);
    int i = 0, c = 0;
    try {
      i = std::stoi(item.substr(0, colon));
      c = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("content entries must look like i:count", item);
    }
    if (i < 0 || i >= a.p()) throw DomainError("residue must lie in [0, p)", item);
    if (c < 0) throw DomainError("content counts must be nonnegative", item);
    r[i] += c;
  }
  return r;
}

ContentVector ContentVector::simple(const Arith& a, int i) {
  ContentVector r(a.p());
  r[a.residue(i)] = 1;
  return r;
}

int form(const Arith& a, const ContentVector& x, const ContentVector& y) {
  int s = 0;
  for (int i = 0; i < a.p(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < a.p(); ++j) s += x[i] * y[j] * cartan_entry(a, i, j);
  }
  return s;
}

ContentVector null_root(const Arith& a) { return ContentVector(std::vector<int>(static_cast<std::size_t>(a.p()), 1)); }

SignChoice SignChoice::standard(const Arith& a) {
  SignChoice s;
  const int p = a.p();
  s.p_ = p;
  s.table_.assign(static_cast<std::size_t>(p * p), 0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (!a.adjacent(i, j)) continue;
      int v = 0;
      if (p == 2)
        v = (i == 0) ? 1 : -1;
      else
        v = (a.residue(i + 1) == j) ? 1 : -1;
      s.table_[static_cast<std::size_t>(i * p + j)] = v;
    }
  }
  return s;
}

SignChoice SignChoice::parse(const Arith& a, const std::string& text) {
  SignChoice s = standard(a);
  if (text.empty() || text == "default") return s;
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) != 0) throw DomainError("sign convention must be 'default' or 'custom:<table>'", text);
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  const int p = a.p();
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    auto eq = item.find('=');
    if (dash == std::string::npos || eq == std::string::npos || eq < dash)
      throw DomainError("sign entries must look like i-j=+1", item);
    int i = 0, j = 0, v = 0;
    try {
      i = std::stoi(item.substr(0, dash));
      j = std::stoi(item.substr(dash + 1, eq - dash - 1));
      v = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("sign entries must look like i-j=+1", item);
    }
    if (i < 0 || i >= p || j < 0 || j >= p || !a.adjacent(i, j))
      throw DomainError("sign entries need adjacent residues in [0, p)", item);
    if (v != 1 && v != -1) throw DomainError("sign values must be +1 or -1", item);
    s.table_[static_cast<std::size_t>(i * p + j)] = v;
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (a.adjacent(i, j) && s.eps(i, j) * s.eps(j, i) != -1)
        throw DomainError("signs must satisfy eps_ij * eps_ji = -1",
                          std::to_string(i) + "-" + std::to_string(j));
  return s;
}

int SignChoice::eps(int i, int j) const {
  return table_.at(static_cast<std::size_t>(i * p_ + j));
}

void BivariatePoly::add(int deg_u, int deg_v, long long c) {
  if (c == 0) return;
  auto key = std::make_pair(deg_u, deg_v);
  auto& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly r;
  for (const auto& [k, c] : terms_) r.add(k.second, k.first, c);
  return r;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [du, dv] = it->first;
    long long c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long mag = c < 0 ? -c : c;
    bool bare = du == 0 && dv == 0;
    if (mag != 1 || bare) os << mag;
    if (du > 0) os << "u" << (du > 1 ? "^" + std::to_string(du) : "");
    if (dv > 0) os << "v" << (dv > 1 ? "^" + std::to_string(dv) : "");
  }
  return os.str();
}

BivariatePoly q_poly(const Arith& a, const SignChoice& s, int i, int j) {
  i = a.residue(i);
  j = a.residue(j);
  BivariatePoly r;
  if (i == j) return r;
  const int cij = cartan_entry(a, i, j);
  if (cij == 0) {
    r.add(0, 0, 1);
    return r;
  }
  const int cji = cartan_entry(a, j, i);
  const int e = s.eps(i, j);
  r.add(-cij, 0, e);
  r.add(0, -cji, -e);
  return r;
}

}  // namespace klr
