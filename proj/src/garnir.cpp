#include "klr/garnir.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace klr {

std::vector<Node> garnir_nodes(const Partition& mu) {
  std::vector<Node> out;
  for (const Node& A : mu.nodes())
    if (mu.contains({A.row + 1, A.col})) out.push_back(A);
  return out;
}

namespace {

/// Sigma_k element acting on brick entry blocks, lifted to Sigma_n.
Permutation lift(const Permutation& sigma, int n, int d, int p) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int t = 1; t <= sigma.n(); ++t)
    for (int o = 0; o < p; ++o)
      w[static_cast<std::size_t>(d + (t - 1) * p + o - 1)] = d + (sigma(t) - 1) * p + o;
  return Permutation(std::move(w));
}

}  // namespace

GarnirData garnir_data(const Arith& a, const Partition& mu, const Node& A) {
  if (!mu.contains(A) || !mu.contains({A.row + 1, A.col}))
    throw DomainError("node must be a Garnir node", A.to_string() + " in " + mu.to_string());
  const int r = A.row, s = A.col, p = a.p(), n = mu.size();
  GarnirData g;
  g.shape = mu;
  g.node = A;
  const Tableau lead = leading_tableau(mu);
  g.u = lead.at(A);
  g.v = lead.at({r + 1, s});
  for (int c = 1; c <= s; ++c) g.belt.push_back({r + 1, c});
  for (int c = s; c <= mu.part(r); ++c) g.belt.push_back({r, c});

  auto rows = lead.rows();
  int next = g.u;
  for (const Node& B : g.belt) rows[static_cast<std::size_t>(B.row - 1)][static_cast<std::size_t>(B.col - 1)] = next++;
  g.garnir_tableau = Tableau(rows);

  for (int end = s - (s / p) * p + p; end <= s; end += p) {
    std::vector<Node> brick;
    for (int c = end - p + 1; c <= end; ++c) brick.push_back({r + 1, c});
    g.bricks.push_back(std::move(brick));
  }
  for (int start = s; start + p - 1 <= mu.part(r); start += p) {
    std::vector<Node> brick;
    for (int c = start; c < start + p; ++c) brick.push_back({r, c});
    g.bricks.push_back(std::move(brick));
    ++g.f;
  }
  g.k = static_cast<int>(g.bricks.size());

  if (g.k == 0) {
    g.minimal_tableau = g.garnir_tableau;
    g.coset_reps = {{}};
    g.coset_perms = {Permutation::identity(n)};
    g.gar_set = {g.garnir_tableau};
    return g;
  }

  g.d = g.garnir_tableau.at(g.bricks.front().front());
  const int d = *g.d;
  for (int t = 1; t < g.k; ++t) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (int x = d + t * p - p; x <= d + t * p - 1; ++x) std::swap(w[static_cast<std::size_t>(x - 1)], w[static_cast<std::size_t>(x + p - 1)]);
    g.generators.emplace_back(std::move(w));
  }

  // T^A: the f smallest entry blocks fill the row-r bricks, the rest fill row r+1.
  const int lower = g.k - g.f;
  std::vector<int> to_label(static_cast<std::size_t>(g.k));
  for (int j = 1; j <= g.k; ++j) to_label[static_cast<std::size_t>(j - 1)] = j > lower ? j - lower : g.f + j;
  // G^A holds block j in brick j; T^A = tau G^A with tau(j) = to_label(j).
  g.minimal_tableau = g.garnir_tableau.act(lift(Permutation(to_label), n, d, p));

  // Minimal length left coset representatives of Sigma_f x Sigma_{k-f}, by brute force.
  std::vector<int> ident(static_cast<std::size_t>(g.k));
  std::iota(ident.begin(), ident.end(), 1);
  std::map<std::vector<int>, Permutation> best;  // coset key -> shortest element
  std::vector<int> perm = ident;
  do {
    Permutation sigma(perm);
    // the coset sigma (Sigma_f x Sigma_{k-f}) is determined by the image sets of the two blocks
    std::vector<int> key(perm.begin(), perm.begin() + g.f);
    std::sort(key.begin(), key.end());
    auto it = best.find(key);
    if (it == best.end() || sigma.length() < it->second.length()) best.insert_or_assign(key, sigma);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Permutation> reps;
  for (const auto& [_, sigma] : best) reps.push_back(sigma);
  std::sort(reps.begin(), reps.end(), [](const Permutation& x, const Permutation& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.reduced_word() < y.reduced_word();
  });
  for (const auto& sigma : reps) {
    g.coset_reps.push_back(sigma.reduced_word());
    Permutation w = lift(sigma, n, d, p);
    g.coset_perms.push_back(w);
    g.gar_set.push_back(g.minimal_tableau.act(w));
  }
  return g;
}

GarnirElement garnir_element_symbolic(const Arith& a, const Partition& mu, const Node& A) {
  const GarnirData g = garnir_data(a, mu, A);
  GarnirElement e;
  e.node = A;
  const Word imu = residue_sequence(a, leading_tableau(mu));
  const Word ita = residue_sequence(a, g.minimal_tableau);
  const auto psi_ta = tableau_permutation(g.minimal_tableau).reduced_word();
  const int psi_ta_deg = psi_degree(a, psi_ta, imu);
  for (const auto& rep : g.coset_reps) {
    GarnirTerm term;
    term.psi_tableau_word = psi_ta;
    term.psi_tableau_degree = psi_ta_deg;
    term.idempotent = imu;
    for (int r : rep) {
      const auto& w = g.generators[static_cast<std::size_t>(r - 1)];
      TauFactor f;
      f.index = r;
      f.psi_word = w.reduced_word();
      f.degree = psi_degree(a, f.psi_word, ita);
      term.tau.push_back(std::move(f));
    }
    e.terms.push_back(std::move(term));
  }
  return e;
}

SpechtPresentation specht_presentation(const Arith& a, const Partition& mu) {
  SpechtPresentation sp;
  sp.shape = mu;
  const Tableau lead = leading_tableau(mu);
  sp.generator_degree = mu.empty() ? 0 : tableau_degree(a, lead);
  sp.idempotent = residue_sequence(a, lead);
  for (int t = 1; t <= mu.size(); ++t) sp.y_killed.push_back(t);
  for (int t = 1; t < mu.size(); ++t)
    if (lead.position(t).row == lead.position(t + 1).row) sp.psi_killed.push_back(t);
  for (const Node& A : garnir_nodes(mu)) sp.garnir.push_back(garnir_element_symbolic(a, mu, A));
  return sp;
}

}  // namespace klr
