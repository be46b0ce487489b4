#include "klr/crystal.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <map>

namespace klr {

std::vector<int> reduce_signs(const std::vector<int>& raw) {
  std::vector<int> out = raw;
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] > 0) {
      open.push_back(k);
    } else if (out[k] < 0 && !open.empty()) {
      out[open.back()] = 0;
      out[k] = 0;
      open.pop_back();
    }
  }
  return out;
}

SignatureReport signature(const Arith& a, const Partition& mu, int i) {
  SignatureReport s;
  s.i = a.residue(i);
  std::vector<std::pair<Node, int>> items;
  for (const Node& A : addable_nodes(a, mu, s.i)) items.push_back({A, +1});
  for (const Node& A : removable_nodes(a, mu, s.i)) items.push_back({A, -1});
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first.col < y.first.col; });
  for (const auto& [node, sign] : items) {
    s.nodes.push_back(node);
    s.raw.push_back(sign);
  }
  s.reduced = reduce_signs(s.raw);
  for (int k = static_cast<int>(s.reduced.size()) - 1; k >= 0; --k)
    if (s.reduced[static_cast<std::size_t>(k)] < 0) s.normal.push_back(k);
  for (int k = 0; k < static_cast<int>(s.reduced.size()); ++k)
    if (s.reduced[static_cast<std::size_t>(k)] > 0) s.conormal.push_back(k);
  return s;
}

int epsilon(const Arith& a, const Partition& mu, int i) { return signature(a, mu, i).epsilon(); }
int phi(const Arith& a, const Partition& mu, int i) { return signature(a, mu, i).phi(); }

std::optional<Partition> e_tilde(const Arith& a, const Partition& mu, int i) {
  auto s = signature(a, mu, i);
  if (s.normal.empty()) return std::nullopt;
  return mu.remove(s.nodes[static_cast<std::size_t>(s.normal.front())]);
}

std::optional<Partition> f_tilde(const Arith& a, const Partition& mu, int i) {
  auto s = signature(a, mu, i);
  if (s.conormal.empty()) return std::nullopt;
  return mu.add(s.nodes[static_cast<std::size_t>(s.conormal.front())]);
}

Weight weight(const Arith& a, const Partition& mu) { return Weight{1, content(a, mu)}; }

int pair_with_simple(const Arith& a, const Weight& w, int i) {
  i = a.residue(i);
  int v = (i == 0) ? w.lambda0 : 0;
  for (int j = 0; j < a.p(); ++j) v -= cartan_entry(a, i, j) * w.content[j];
  return v;
}

CrystalGraph crystal_graph(const Arith& a, int n_max) {
  if (n_max < 0) throw DomainError("crystal size bound must be >= 0", std::to_string(n_max));
  CrystalGraph g;
  std::map<Partition, std::size_t> index;
  g.vertices.push_back(Partition());
  index[Partition()] = 0;
  std::vector<std::size_t> level{0};
  for (int n = 0; n < n_max; ++n) {
    std::vector<std::size_t> next;
    for (std::size_t v : level) {
      for (int i = 0; i < a.p(); ++i) {
        auto t = f_tilde(a, g.vertices[v], i);
        if (!t) continue;
        auto [it, fresh] = index.try_emplace(*t, g.vertices.size());
        if (fresh) {
          g.vertices.push_back(*t);
          next.push_back(it->second);
        }
        g.edges.push_back({v, it->second, i});
      }
    }
    level = std::move(next);
  }
  return g;
}

}  // namespace klr
