#include "klr/mullineux.hpp"

#include "klr/crystal.hpp"
#include "klr/error.hpp"

#include <set>
#include <stdexcept>

namespace klr {

namespace {

void require_restricted(const Arith& a, const Partition& mu) {
  if (!is_restricted(a, mu)) throw DomainError("partition must be p-restricted", mu.to_string());
}

Partition rebuild(const Arith& a, const std::vector<int>& removed) {
  Partition lambda;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto next = f_tilde(a, lambda, -*it);
    if (!next) throw std::logic_error("f~ undefined while rebuilding Mullineux image");
    lambda = *next;
  }
  return lambda;
}

template <class Pick>
Partition mullineux_by_path(const Arith& a, const Partition& mu, Pick pick) {
  require_restricted(a, mu);
  std::vector<int> removed;
  Partition cur = mu;
  while (!cur.empty()) {
    std::vector<int> live;
    for (int i = 0; i < a.p(); ++i)
      if (epsilon(a, cur, i) > 0) live.push_back(i);
    if (live.empty()) throw std::logic_error("no normal node on a nonempty restricted partition");
    int i = pick(live);
    cur = *e_tilde(a, cur, i);
    removed.push_back(i);
  }
  return rebuild(a, removed);
}

}  // namespace

Partition mullineux_crystal(const Arith& a, const Partition& mu) {
  return mullineux_by_path(a, mu, [](const std::vector<int>& live) { return live.front(); });
}

Partition mullineux_crystal(const Arith& a, const Partition& mu, std::mt19937_64& rng) {
  return mullineux_by_path(a, mu, [&](const std::vector<int>& live) {
    std::uniform_int_distribution<std::size_t> d(0, live.size() - 1);
    return live[d(rng)];
  });
}

std::pair<Partition, int> xu_step(const Arith& a, const Partition& mu) {
  if (mu.empty()) throw DomainError("Xu step needs a nonempty partition", "()");
  std::set<Node> doomed;
  for (const auto& seg : p_segments(a, mu)) {
    const bool full = static_cast<int>(seg.size()) == a.p();
    for (std::size_t k = 0; k < seg.size(); ++k) {
      const Node& A = seg[k];
      const bool row_end = A.col == mu.part(A.row);
      const bool pth = full && k + 1 == seg.size();
      if (row_end && !pth) doomed.insert(A);
    }
  }
  std::vector<int> rows = mu.parts();
  for (const Node& A : doomed) --rows[static_cast<std::size_t>(A.row - 1)];
  auto J = Partition::from_rows(rows);
  if (!J) throw std::logic_error("Xu deletion produced a non-partition from " + mu.to_string());
  return {*J, static_cast<int>(doomed.size())};
}

Partition mullineux_xu(const Arith& a, const Partition& mu) {
  require_restricted(a, mu);
  std::vector<int> parts;
  Partition cur = mu;
  while (!cur.empty()) {
    auto [J, j] = xu_step(a, cur);
    if (j == 0) throw std::logic_error("Xu step deleted nothing from " + cur.to_string());
    parts.push_back(j);
    cur = J;
  }
  auto lambda = Partition::from_rows(parts);
  if (!lambda) throw std::logic_error("Xu parts are not weakly decreasing for " + mu.to_string());
  return *lambda;
}

}  // namespace klr
