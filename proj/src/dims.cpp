#include "klr/dims.hpp"

#include "klr/crystal.hpp"
#include "klr/error.hpp"
#include "klr/mullineux.hpp"
#include "klr/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace klr {

std::vector<Partition> partitions_with_content(const Arith& a, const ContentVector& alpha) {
  if (alpha.p() != a.p()) throw DomainError("content has the wrong number of residues", alpha.to_string());
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(alpha.height()))
    if (content(a, mu) == alpha) out.push_back(mu);
  return out;
}

std::vector<ContentVector> blocks_of(const Arith& a, int n) {
  std::set<ContentVector> s;
  for (const auto& mu : partitions_of(n)) s.insert(content(a, mu));
  return {s.begin(), s.end()};
}

namespace {

LaurentPoly specht_rec(const Arith& a, const Partition& mu, std::map<Partition, LaurentPoly>& memo) {
  if (mu.empty()) return 1;
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  LaurentPoly total;
  for (const Node& A : mu.removable_nodes())
    total += specht_rec(a, mu.remove(A), memo).shift(node_degree(a, mu, A));
  memo.emplace(mu, total);
  return total;
}

LaurentPoly word_rec(const Arith& a, const Partition& mu, const Word& i, std::size_t len) {
  if (len == 0) return mu.empty() ? LaurentPoly(1) : LaurentPoly();
  LaurentPoly total;
  for (const Node& A : removable_nodes(a, mu, i[len - 1]))
    total += word_rec(a, mu.remove(A), i, len - 1).shift(node_degree(a, mu, A));
  return total;
}

ContentVector word_content(const Arith& a, const Word& w) {
  ContentVector c(a.p());
  for (int x : w) {
    if (x < 0 || x >= a.p()) throw DomainError("word letters must lie in [0, p)", word_to_string(w));
    ++c[x];
  }
  return c;
}

}  // namespace

LaurentPoly specht_graded_dim(const Arith& a, const Partition& mu) {
  std::map<Partition, LaurentPoly> memo;
  return specht_rec(a, mu, memo);
}

LaurentPoly word_graded_dim(const Arith& a, const Partition& mu, const Word& i) {
  if (static_cast<int>(i.size()) != mu.size()) return LaurentPoly();
  return word_rec(a, mu, i, i.size());
}

LaurentPoly idempotent_graded_dim(const Arith& a, const ContentVector& alpha, const Word& i, const Word& j) {
  if (word_content(a, i) != alpha) throw DomainError("word i must have content alpha", word_to_string(i));
  if (word_content(a, j) != alpha) throw DomainError("word j must have content alpha", word_to_string(j));
  LaurentPoly total;
  for (const auto& mu : partitions_with_content(a, alpha)) total += word_graded_dim(a, mu, i) * word_graded_dim(a, mu, j);
  return total;
}

LaurentPoly block_graded_dim(const Arith& a, const ContentVector& alpha) {
  LaurentPoly total;
  for (const auto& mu : partitions_with_content(a, alpha)) {
    LaurentPoly d = specht_graded_dim(a, mu);
    total += d * d;
  }
  return total;
}

namespace {

struct Candidate {
  Partition target;
  int m;
};

/// Normal (restrict) or conormal (induce) nodes of nu for residue i, counted
/// as the branching theorems count them: normal nodes left to right, conormal
/// nodes right to left.
std::vector<Candidate> counted_nodes(const Arith& a, const Partition& nu, int i, Direction dir) {
  auto s = signature(a, nu, i);
  std::vector<Candidate> out;
  if (dir == Direction::Restrict) {
    int m = 0;
    for (auto it = s.normal.rbegin(); it != s.normal.rend(); ++it)
      out.push_back({nu.remove(s.nodes[static_cast<std::size_t>(*it)]), ++m});
  } else {
    int m = 0;
    for (auto it = s.conormal.rbegin(); it != s.conormal.rend(); ++it)
      out.push_back({nu.add(s.nodes[static_cast<std::size_t>(*it)]), ++m});
  }
  return out;
}

}  // namespace

BranchTable branch_table(const Arith& a, const Partition& mu, int i, Direction dir) {
  if (!is_restricted(a, mu)) throw DomainError("partition must be p-restricted", mu.to_string());
  BranchTable t;
  t.source = mu;
  t.i = a.residue(i);
  t.direction = dir;
  t.epsilon = epsilon(a, mu, t.i);
  t.phi = phi(a, mu, t.i);
  t.vanishes = (dir == Direction::Restrict ? t.epsilon : t.phi) == 0;

  for (const auto& c : counted_nodes(a, mu, t.i, dir)) {
    const bool restricted = is_restricted(a, c.target);
    t.homs.push_back({c.target, LaurentPoly::monomial(c.m - 1), !restricted});
    if (restricted) t.entries.push_back({c.target, quantum_int(c.m), "normal-node", false});
  }

  const Partition twisted = mullineux_crystal(a, mu);
  for (const auto& c : counted_nodes(a, twisted, -t.i, dir)) {
    if (!is_restricted(a, c.target)) continue;
    const Partition target = mullineux_crystal(a, c.target);
    const LaurentPoly mult = quantum_int(c.m);
    auto it = std::find_if(t.entries.begin(), t.entries.end(),
                           [&](const BranchEntry& e) { return e.target == target; });
    if (it == t.entries.end()) {
      t.entries.push_back({target, mult, "mullineux-twist", false});
    } else {
      if (it->multiplicity != mult) throw std::logic_error("branching sources disagree on " + target.to_string());
      it->confirmed_by_both = true;
    }
  }
  return t;
}

std::optional<SoclePrediction> socle_prediction(const Arith& a, const Partition& mu, int i, Direction dir) {
  if (!is_restricted(a, mu)) throw DomainError("partition must be p-restricted", mu.to_string());
  const int e = dir == Direction::Restrict ? epsilon(a, mu, i) : phi(a, mu, i);
  if (e == 0) return std::nullopt;
  SoclePrediction s;
  s.target = dir == Direction::Restrict ? *e_tilde(a, mu, i) : *f_tilde(a, mu, i);
  s.socle_shift = e - 1;
  s.head_shift = 1 - e;
  s.top_multiplicity = quantum_int(e);
  s.endomorphism_dim = e;
  s.irreducible = e == 1;
  return s;
}

}  // namespace klr
