#include "klr/klrmod.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace klr {

namespace {

long long checked_add(long long x, long long y) {
  long long r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

using Vec = SparseMatrix::Vec;

void axpy(Vec& acc, long long c, const Vec& v) {
  for (const auto& [k, x] : v) {
    long long& slot = acc[k];
    slot = checked_add(slot, checked_mul(c, x));
    if (slot == 0) acc.erase(k);
  }
}

Vec minus(const Vec& x, const Vec& y) {
  Vec r = x;
  axpy(r, -1, y);
  return r;
}

std::string vec_to_string(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : v) {
    os << (first ? "" : " + ") << x << "*v" << k;
    first = false;
  }
  return os.str();
}

}  // namespace

void SparseMatrix::set(int row, int col, long long v) {
  auto& c = cols_.at(static_cast<std::size_t>(col));
  std::erase_if(c, [&](const auto& e) { return e.first == row; });
  if (v != 0) c.emplace_back(row, v);
  std::sort(c.begin(), c.end());
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrix::Vec SparseMatrix::apply(const Vec& v) const {
  Vec out;
  for (const auto& [col, x] : v)
    for (const auto& [row, m] : column(col)) {
      long long& slot = out[row];
      slot = checked_add(slot, checked_mul(m, x));
      if (slot == 0) out.erase(row);
    }
  return out;
}

RelationReport check_relations(const Arith& a, const SignChoice& s, const GradedModule& m, bool cyclotomic) {
  RelationReport rep;
  const int n = m.n;
  const int dim = m.dim();
  auto fail = [&](const char* rel, const Word& w, std::string detail) {
    rep.failures.push_back({rel, w, std::move(detail)});
  };
  if (static_cast<int>(m.y.size()) != n || static_cast<int>(m.psi.size()) != std::max(n - 1, 0)) {
    fail("R1", {}, "generator count does not match n");
    return rep;
  }
  for (const auto& mat : m.y)
    if (mat.dim() != dim) {
      fail("R1", {}, "y matrix dimension mismatch");
      return rep;
    }
  for (const auto& mat : m.psi)
    if (mat.dim() != dim) {
      fail("R1", {}, "psi matrix dimension mismatch");
      return rep;
    }

  std::optional<ContentVector> block;
  for (int b = 0; b < dim; ++b) {
    const Word& w = m.basis[static_cast<std::size_t>(b)].word;
    ++rep.checks;
    if (static_cast<int>(w.size()) != n || std::any_of(w.begin(), w.end(), [&](int x) { return x < 0 || x >= a.p(); })) {
      fail("R1", w, "basis word is not a word of length n over I");
      return rep;
    }
    ContentVector c(a.p());
    for (int x : w) ++c[x];
    if (!block) block = c;
    if (*block != c) fail("R1", w, "basis words do not share one content");
  }

  auto word_of = [&](int b) -> const Word& { return m.basis[static_cast<std::size_t>(b)].word; };
  auto deg_of = [&](int b) { return m.basis[static_cast<std::size_t>(b)].degree; };
  auto Y = [&](int t, const Vec& v) { return m.y[static_cast<std::size_t>(t - 1)].apply(v); };
  auto P = [&](int r, const Vec& v) { return m.psi[static_cast<std::size_t>(r - 1)].apply(v); };
  auto y_monomial = [&](std::vector<std::pair<int, int>> powers, Vec v) {
    for (const auto& [t, e] : powers)
      for (int k = 0; k < e; ++k) v = Y(t, v);
    return v;
  };

  for (int b = 0; b < dim; ++b) {
    const Word& w = word_of(b);
    const Vec v{{b, 1}};

    for (int t = 1; t <= n; ++t) {
      ++rep.checks;
      for (const auto& [row, val] : m.y[static_cast<std::size_t>(t - 1)].column(b)) {
        if (word_of(row) != w) fail("R2", w, "y_" + std::to_string(t) + " leaves the word space");
        if (deg_of(row) - deg_of(b) != 2) fail("Grading", w, "y_" + std::to_string(t) + " does not raise degree by 2");
        (void)val;
      }
      for (int u = t + 1; u <= n; ++u) {
        ++rep.checks;
        if (Y(t, Y(u, v)) != Y(u, Y(t, v)))
          fail("R2", w, "y_" + std::to_string(t) + " and y_" + std::to_string(u) + " do not commute");
      }
    }

    for (int r = 1; r < n; ++r) {
      ++rep.checks;
      Word sw = w;
      std::swap(sw[static_cast<std::size_t>(r - 1)], sw[static_cast<std::size_t>(r)]);
      const int want = -cartan_entry(a, w[static_cast<std::size_t>(r - 1)], w[static_cast<std::size_t>(r)]);
      for (const auto& [row, val] : m.psi[static_cast<std::size_t>(r - 1)].column(b)) {
        if (word_of(row) != sw) fail("R2PsiE", w, "psi_" + std::to_string(r) + " does not map 1_i to 1_{s_r i}");
        if (deg_of(row) - deg_of(b) != want)
          fail("Grading", w, "psi_" + std::to_string(r) + " has the wrong degree");
        (void)val;
      }
    }

    for (int r = 1; r < n; ++r) {
      const int ir = w[static_cast<std::size_t>(r - 1)], ir1 = w[static_cast<std::size_t>(r)];
      const Vec pv = P(r, v);
      for (int t = 1; t <= n; ++t) {
        ++rep.checks;
        const int st = t == r ? r + 1 : (t == r + 1 ? r : t);
        const Vec lhs = minus(Y(t, pv), P(r, Y(st, v)));
        Vec rhs;
        if (ir == ir1) {
          if (t == r + 1) rhs = v;
          if (t == r) axpy(rhs, -1, v);
        }
        if (lhs != rhs)
          fail("R6", w, "r=" + std::to_string(r) + " t=" + std::to_string(t) + ": " + vec_to_string(lhs) + " != " + vec_to_string(rhs));
      }

      ++rep.checks;
      const Vec lhs = P(r, pv);
      Vec rhs;
      const BivariatePoly quad = q_poly(a, s, ir, ir1);
      for (const auto& [k, c] : quad.terms())
        axpy(rhs, c, y_monomial({{r, k.first}, {r + 1, k.second}}, v));
      if (lhs != rhs)
        fail("R4", w, "r=" + std::to_string(r) + ": " + vec_to_string(lhs) + " != " + vec_to_string(rhs));

      for (int t = r + 2; t < n; ++t) {
        ++rep.checks;
        if (P(r, P(t, v)) != P(t, P(r, v)))
          fail("R3Psi", w, "psi_" + std::to_string(r) + " and psi_" + std::to_string(t) + " do not commute");
      }
    }

    for (int r = 1; r + 2 <= n; ++r) {
      ++rep.checks;
      const int ir = w[static_cast<std::size_t>(r - 1)], ir1 = w[static_cast<std::size_t>(r)], ir2 = w[static_cast<std::size_t>(r + 1)];
      const Vec lhs = minus(P(r + 1, P(r, P(r + 1, v))), P(r, P(r + 1, P(r, v))));
      Vec rhs;
      if (ir == ir2) {
        const BivariatePoly quad = q_poly(a, s, ir, ir1);
        for (const auto& [k, c] : quad.terms()) {
          const int du = k.first, dv = k.second;
          for (int e = 0; e < du; ++e) axpy(rhs, c, y_monomial({{r + 2, e}, {r, du - 1 - e}, {r + 1, dv}}, v));
        }
      }
      if (lhs != rhs)
        fail("R7", w, "r=" + std::to_string(r) + ": " + vec_to_string(lhs) + " != " + vec_to_string(rhs));
    }

    if (cyclotomic && n > 0) {
      ++rep.checks;
      if (w[0] != 0)
        fail("Cyclo", w, "word space with i_1 != 0 must vanish");
      else if (!Y(1, v).empty())
        fail("Cyclo", w, "y_1 must act as zero when i_1 = 0");
    }
  }
  return rep;
}

int hook_chi(const Partition& mu) {
  if (mu.empty()) return 0;
  int last = 1;
  while (mu.part(last + 1) == mu.part(1)) ++last;
  return mu.part(1) + mu.length() - last;
}

bool is_p_standard(const Arith& a, const Tableau& t) {
  if (!t.is_standard()) return false;
  const Partition mu = t.shape();
  const auto nodes = mu.nodes();
  for (const Node& lo : nodes)
    for (const Node& hi : nodes)
      if (lo.row > hi.row && lo.col < hi.col && lo.row - hi.row + hi.col - lo.col + 1 == a.p() && t.at(lo) < t.at(hi))
        return false;
  return true;
}

std::vector<Tableau> p_standard_tableaux(const Arith& a, const Partition& mu) {
  auto all = standard_tableaux(mu);
  std::erase_if(all, [&](const Tableau& t) { return !is_p_standard(a, t); });
  return all;
}

namespace {

GradedModule empty_module(int n, int dim) {
  GradedModule m;
  m.n = n;
  m.y.assign(static_cast<std::size_t>(n), SparseMatrix(dim));
  m.psi.assign(static_cast<std::size_t>(std::max(n - 1, 0)), SparseMatrix(dim));
  return m;
}

}  // namespace

GradedModule homogeneous_module(const Arith& a, const Partition& mu) {
  if (!is_restricted(a, mu)) throw DomainError("partition must be p-restricted", mu.to_string());
  const int chi = hook_chi(mu);
  if (chi > a.p())
    throw DomainError("partition must be homogeneous (chi(mu) <= p)", mu.to_string() + " has chi = " + std::to_string(chi));
  const auto tabs = p_standard_tableaux(a, mu);
  const int n = mu.size();
  GradedModule m = empty_module(n, static_cast<int>(tabs.size()));
  std::map<Tableau, int> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    index[tabs[k]] = static_cast<int>(k);
    m.basis.push_back({tabs[k].to_string(), residue_sequence(a, tabs[k]), 0});
  }
  for (std::size_t k = 0; k < tabs.size(); ++k)
    for (int r = 1; r < n; ++r) {
      std::vector<int> sr;
      for (int x = 1; x <= n; ++x) sr.push_back(x == r ? r + 1 : (x == r + 1 ? r : x));
      const Tableau moved = tabs[k].act(Permutation(sr));
      auto it = index.find(moved);
      if (it != index.end()) m.psi[static_cast<std::size_t>(r - 1)].set(it->second, static_cast<int>(k), 1);
    }
  return m;
}

GradedModule hook_module(const Arith& a, int i) {
  if (i < 1 || i > a.p() - 1) throw DomainError("hook color must lie in 1..p-1", std::to_string(i));
  std::vector<int> parts{i};
  for (int k = 0; k < a.p() - i; ++k) parts.push_back(1);
  return homogeneous_module(a, Partition(parts));
}

std::set<Word> word_graph_component(const Arith& a, const Word& seed) {
  std::set<Word> seen{seed};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r + 1 < w.size(); ++r) {
      if (cartan_entry(a, w[r], w[r + 1]) != 0) continue;
      Word x = w;
      std::swap(x[r], x[r + 1]);
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return seen;
}

GradedModule component_module(const Arith& a, const SignChoice& s, const std::set<Word>& component) {
  if (component.empty()) throw DomainError("component must be nonempty", "{}");
  const int n = static_cast<int>(component.begin()->size());
  std::map<Word, int> index;
  for (const Word& w : component) {
    if (static_cast<int>(w.size()) != n) throw DomainError("component words must share one length", word_to_string(w));
    index.emplace(w, static_cast<int>(index.size()));
  }
  GradedModule m = empty_module(n, static_cast<int>(component.size()));
  for (const auto& [w, k] : index) m.basis.push_back({word_to_string(w), w, 0});
  for (const auto& [w, k] : index)
    for (int r = 1; r < n; ++r) {
      const auto ri = static_cast<std::size_t>(r - 1);
      if (cartan_entry(a, w[ri], w[ri + 1]) != 0) continue;
      Word x = w;
      std::swap(x[ri], x[ri + 1]);
      auto it = index.find(x);
      if (it == index.end())
        throw DomainError("component must be closed under admissible transpositions", word_to_string(w));
      m.psi[ri].set(it->second, k, 1);
    }
  const RelationReport rep = check_relations(a, s, m, false);
  if (!rep.passed()) {
    const auto& f = rep.failures.front();
    throw DomainError("non-homogeneous component", f.relation + " fails on " + word_to_string(f.word) + ": " + f.detail);
  }
  return m;
}

FormalCharacter character(const GradedModule& m) {
  FormalCharacter ch;
  for (const auto& b : m.basis) ch.add(b.word, LaurentPoly::monomial(b.degree));
  return ch;
}

}  // namespace klr
