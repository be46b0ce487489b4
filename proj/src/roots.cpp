#include "klr/roots.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

AffineRoot AffineRoot::real(int sign, int lo, int hi, int n) {
  if ((sign != 1 && sign != -1) || lo < 1 || hi < lo || n < (sign > 0 ? 0 : 1))
    throw std::invalid_argument("not a positive real root");
  return AffineRoot{sign, lo, hi, n};
}

AffineRoot AffineRoot::imaginary(int n) {
  if (n < 1) throw std::invalid_argument("imaginary roots need n >= 1");
  return AffineRoot{0, 0, 0, n};
}

ContentVector AffineRoot::content(const Arith& a) const {
  ContentVector c(std::vector<int>(static_cast<std::size_t>(a.p()), n));
  if (sign != 0)
    for (int i = lo; i <= hi; ++i) c[i] += sign;
  return c;
}

int AffineRoot::height(const Arith& a) const { return n * a.p() + sign * (hi - lo + 1); }

std::string AffineRoot::to_string() const {
  std::ostringstream os;
  if (sign != 0) {
    if (sign < 0) os << "-";
    if (lo == hi)
      os << "a" << lo;
    else
      os << "a[" << lo << "," << hi << "]";
    if (n > 0) os << "+";
  }
  if (n > 0) {
    if (n > 1) os << n;
    os << "d";
  }
  return os.str();
}

std::vector<AffineRoot> real_roots_up_to(const Arith& a, int height_bound) {
  if (height_bound < 1) throw DomainError("height bound must be >= 1", std::to_string(height_bound));
  const int p = a.p();
  std::vector<AffineRoot> out;
  for (int lo = 1; lo < p; ++lo)
    for (int hi = lo; hi < p; ++hi) {
      const int h = hi - lo + 1;
      for (int n = 0; n * p + h <= height_bound; ++n) out.push_back(AffineRoot::real(1, lo, hi, n));
      for (int n = 1; n * p - h <= height_bound; ++n) out.push_back(AffineRoot::real(-1, lo, hi, n));
    }
  std::sort(out.begin(), out.end(), [&](const AffineRoot& x, const AffineRoot& y) {
    const int hx = x.height(a), hy = y.height(a);
    if (hx != hy) return hx < hy;
    return x.content(a) < y.content(a);
  });
  return out;
}

ConvexPreorder::ConvexPreorder(const Arith& a, int height_bound, std::vector<int> pi, int scale)
    : arith_(a), bound_(height_bound) {
  const int p = a.p();
  if (height_bound < 1) throw DomainError("height bound must be >= 1", std::to_string(height_bound));
  if (scale < 1) throw DomainError("preorder scale must be >= 1", std::to_string(scale));
  if (pi.empty()) {
    pi.resize(static_cast<std::size_t>(p - 1));
    std::iota(pi.begin(), pi.end(), 1);
  }
  std::vector<int> check = pi;
  std::sort(check.begin(), check.end());
  std::vector<int> want(static_cast<std::size_t>(p - 1));
  std::iota(want.begin(), want.end(), 1);
  if (check != want) throw DomainError("preorder permutation must permute 1..p-1", std::to_string(pi.size()));
  const BigInt B = BigInt(scale) * 2 * p * height_bound * height_bound + 1;
  weights_.assign(static_cast<std::size_t>(p), 0);
  BigInt sum = 0;
  for (int i = 1; i < p; ++i) {
    weights_[static_cast<std::size_t>(i)] = boost::multiprecision::pow(B, static_cast<unsigned>(pi[static_cast<std::size_t>(i - 1)]));
    sum += boost::multiprecision::pow(B, static_cast<unsigned>(i));
  }
  weights_[0] = -BigInt(p) * sum;
}

ConvexPreorder ConvexPreorder::variant(const Arith& a, int height_bound, int which) {
  const int l = a.p() - 1;
  std::vector<int> pi(static_cast<std::size_t>(l));
  std::iota(pi.begin(), pi.end(), 1);
  if (which % 3 == 1) std::reverse(pi.begin(), pi.end());
  if (which % 3 == 2) std::rotate(pi.begin(), pi.begin() + (l > 1 ? 1 : 0), pi.end());
  return ConvexPreorder(a, height_bound, pi, which + 1);
}

BigInt ConvexPreorder::c1(const AffineRoot& r) const {
  const ContentVector c = r.content(arith_);
  BigInt v = 0;
  for (int i = 0; i < arith_.p(); ++i) v += weights_[static_cast<std::size_t>(i)] * c[i];
  return v;
}

Order ConvexPreorder::compare(const AffineRoot& x, const AffineRoot& y) const {
  if (!x.is_real() && !y.is_real()) return Order::Equivalent;
  const BigInt lhs = c1(x) * y.height(arith_);
  const BigInt rhs = c1(y) * x.height(arith_);
  if (lhs < rhs) return Order::Less;
  if (lhs > rhs) return Order::Greater;
  if (x == y) return Order::Equivalent;
  throw DomainError("slope collision between non-proportional roots; choose another functional",
                    x.to_string() + " vs " + y.to_string());
}

int RootPartition::m_delta() const {
  int m = 0;
  for (const auto& part : multipartition) m += part.size();
  return m;
}

ContentVector RootPartition::content(const Arith& a) const {
  ContentVector c = null_root(a).scaled(m_delta());
  for (const auto& [root, m] : real_mults) c += root.content(a).scaled(m);
  return c;
}

std::string RootPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < real_mults.size(); ++k)
    os << (k ? ", " : "") << real_mults[k].first.to_string() << "^" << real_mults[k].second;
  os << " | ";
  for (std::size_t k = 0; k < multipartition.size(); ++k) os << (k ? ";" : "") << "(" << multipartition[k].to_string() << ")";
  os << ")";
  return os.str();
}

std::vector<std::vector<Partition>> multipartitions(int n, int l) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int left, int slot) {
    if (slot == l - 1) {
      for (const auto& mu : partitions_of(left)) {
        cur.push_back(mu);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int take = left; take >= 0; --take)
      for (const auto& mu : partitions_of(take)) {
        cur.push_back(mu);
        rec(left - take, slot + 1);
        cur.pop_back();
      }
  };
  if (l >= 1 && n >= 0) rec(n, 0);
  return out;
}

std::vector<RootPartition> root_partitions(const Arith& a, const ContentVector& alpha, const ConvexPreorder& o) {
  if (alpha.p() != a.p()) throw DomainError("content has the wrong number of residues", alpha.to_string());
  const int ht = alpha.height();
  std::vector<RootPartition> out;
  if (ht == 0) {
    out.push_back({{}, std::vector<Partition>(static_cast<std::size_t>(a.p() - 1))});
    return out;
  }
  auto roots = real_roots_up_to(a, ht);
  std::stable_sort(roots.begin(), roots.end(),
                   [&](const AffineRoot& x, const AffineRoot& y) { return o.compare(x, y) == Order::Greater; });
  std::vector<ContentVector> contents;
  for (const auto& r : roots) contents.push_back(r.content(a));
  // position of delta in the decreasing order: after every real root above it
  const AffineRoot delta = AffineRoot::imaginary(1);
  std::size_t delta_pos = 0;
  while (delta_pos < roots.size() && o.compare(roots[delta_pos], delta) == Order::Greater) ++delta_pos;

  struct Keyed {
    std::vector<int> key;
    std::string tail;
    RootPartition rp;
  };
  std::vector<Keyed> found;
  std::vector<int> mult(roots.size(), 0);
  const ContentVector d = null_root(a);
  std::function<void(std::size_t, const ContentVector&)> rec = [&](std::size_t k, const ContentVector& rest) {
    if (k == roots.size()) {
      const int m = rest[0];
      if (rest != d.scaled(m)) return;
      std::vector<int> key = mult;
      key.insert(key.begin() + static_cast<std::ptrdiff_t>(delta_pos), m);
      for (auto& mp : multipartitions(m, a.p() - 1)) {
        RootPartition rp;
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (mult[j] > 0) rp.real_mults.push_back({roots[j], mult[j]});
        rp.multipartition = std::move(mp);
        std::string tail = rp.to_string();
        found.push_back({key, std::move(tail), std::move(rp)});
      }
      return;
    }
    ContentVector cur = rest;
    mult[k] = 0;
    rec(k + 1, cur);
    while (contents[k].dominated_by(cur)) {
      cur -= contents[k];
      ++mult[k];
      rec(k + 1, cur);
    }
    mult[k] = 0;
  };
  rec(0, alpha);
  std::sort(found.begin(), found.end(), [](const Keyed& x, const Keyed& y) {
    if (x.key != y.key) return x.key > y.key;
    return x.tail < y.tail;
  });
  for (auto& f : found) out.push_back(std::move(f.rp));
  return out;
}

}  // namespace klr
