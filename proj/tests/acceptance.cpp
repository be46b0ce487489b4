// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "klr/characters.hpp"
#include "klr/crystal.hpp"
#include "klr/dims.hpp"
#include "klr/garnir.hpp"
#include "klr/klrmod.hpp"
#include "klr/mullineux.hpp"
#include "klr/roots.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace klr;

namespace {

struct Criterion {
  std::string id;
  double limit_seconds;
  std::function<std::string()> run;  // empty string means pass
};

std::string show(const Partition& mu) { return "(" + mu.to_string() + ")"; }

std::string mul1() {
  Arith a(3);
  const Partition mu{3, 2, 2, 1}, want{2, 1, 1, 1, 1, 1, 1};
  const auto x = mullineux_xu(a, mu), c = mullineux_crystal(a, mu);
  if (x != want) return "xu gave " + show(x);
  if (c != want) return "crystal gave " + show(c);
  return "";
}

std::string mul2() {
  const std::vector<std::pair<int, int>> ranges{{2, 12}, {3, 12}, {5, 10}};
  long long checked = 0;
  for (auto [p, nmax] : ranges) {
    Arith a(p);
    for (int n = 0; n <= nmax; ++n)
      for (const auto& mu : restricted_partitions_of(a, n)) {
        const auto c = mullineux_crystal(a, mu);
        const auto x = mullineux_xu(a, mu);
        if (c != x) return "p=" + std::to_string(p) + " mu=" + show(mu) + ": crystal " + show(c) + " xu " + show(x);
        if (mullineux_crystal(a, c) != mu) return "not an involution at p=" + std::to_string(p) + " mu=" + show(mu);
        ++checked;
      }
  }
  return checked > 0 ? "" : "nothing checked";
}

std::string br1() {
  Arith a(3);
  const Partition mu{3, 3, 2, 1, 1};
  for (int i : {0, 1}) {
    const auto t = branch_table(a, mu, i, Direction::Restrict);
    if (!t.entries.empty() || !t.vanishes) return "e_" + std::to_string(i) + " does not vanish";
  }
  const auto t = branch_table(a, mu, 2, Direction::Restrict);
  std::map<Partition, BranchEntry> got;
  for (const auto& e : t.entries) got[e.target] = e;
  const std::vector<std::tuple<Partition, LaurentPoly, std::string>> want{
      {Partition{3, 3, 2, 1}, LaurentPoly(1), "normal-node"},
      {Partition{3, 3, 1, 1, 1}, quantum_int(2), "normal-node"},
      {Partition{3, 2, 1, 1, 1, 1}, LaurentPoly(1), "mullineux-twist"},
  };
  if (got.size() != want.size()) return "expected 3 entries, got " + std::to_string(got.size());
  BigInt ungraded = 0;
  for (const auto& [target, mult, prov] : want) {
    auto it = got.find(target);
    if (it == got.end()) return "missing " + show(target);
    if (it->second.multiplicity != mult) return show(target) + " has multiplicity " + it->second.multiplicity.to_string();
    if (it->second.provenance != prov) return show(target) + " has provenance " + it->second.provenance;
    ungraded += it->second.multiplicity.at_one();
  }
  if (ungraded != 4) return "ungraded total differs";
  return "";
}

std::string jt1() {
  Arith a2(2);
  const LaurentPoly qq = LaurentPoly::q() + LaurentPoly::q().bar();
  FormalCharacter want = FormalCharacter::word({0, 1, 0, 1});
  want.add({0, 0, 1, 1}, qq * qq);
  const auto got = jacobi_trudi(a2, {2}, 1);
  if (got != want) return "D((1,1)) = " + got.to_string();
  // convention pin: the right letter overtaking a pending left letter
  Arith a3(3);
  FormalCharacter pin = FormalCharacter::word({0, 1});
  pin.add({1, 0}, LaurentPoly::q());
  const auto s = shuffle(a3, FormalCharacter::word({0}), FormalCharacter::word({1}));
  if (s != pin) return "(0)o(1) = " + s.to_string();
  return "";
}

std::string ch1() {
  for (int p : {3, 5, 7}) {
    Arith a(p);
    Word one{0}, last;
    for (int r = p - 1; r >= 1; --r) one.push_back(r);
    for (int r = 0; r < p; ++r) last.push_back(r);
    if (character(hook_module(a, 1)) != FormalCharacter::word(one)) return "L_{delta,1} at p=" + std::to_string(p);
    if (character(hook_module(a, p - 1)) != FormalCharacter::word(last)) return "L_{delta,p-1} at p=" + std::to_string(p);
    FormalCharacter mid;
    for (int r = 0; r <= p - 3; ++r) {
      Word w;
      for (int k = 0; k <= r; ++k) w.push_back(k);
      w.push_back(p - 1);
      for (int k = r + 1; k <= p - 2; ++k) w.push_back(k);
      mid.add(w, 1);
    }
    const auto got = character(hook_module(a, p - 2));
    if (p > 3 && got != mid) return "L_{delta,p-2} at p=" + std::to_string(p) + ": " + got.to_string();
    if (p == 3 && got != FormalCharacter::word(one)) return "L_{delta,1} (as p-2) at p=3";
  }
  return "";
}

std::string rel1() {
  for (int p = 2; p <= 7; ++p) {
    Arith a(p);
    const auto s = SignChoice::standard(a);
    for (int i = 1; i < p; ++i) {
      const auto r = check_relations(a, s, hook_module(a, i), true);
      if (!r.passed()) return "hook " + std::to_string(i) + " at p=" + std::to_string(p) + ": " + r.failures[0].relation;
    }
  }
  for (int p : {2, 3}) {
    Arith a(p);
    const auto s = SignChoice::standard(a);
    for (int color = 1; color < p; ++color) {
      const Word base = canonical_base_word(a, color);
      Word seed;
      for (int n = 1; n <= 3; ++n) {
        seed.insert(seed.end(), base.begin(), base.end());
        const auto m = component_module(a, s, word_graph_component(a, seed));
        const auto r = check_relations(a, s, m, false);
        if (!r.passed()) return "component of " + word_to_string(seed) + ": " + r.failures[0].relation;
      }
    }
  }
  return "";
}

std::string dim1() {
  for (int p : {2, 3}) {
    Arith a(p);
    for (int n = 0; n <= 8; ++n) {
      BigInt total = 0;
      for (const auto& alpha : blocks_of(a, n)) total += block_graded_dim(a, alpha).at_one();
      if (total != BigInt(oracle::factorial(n))) return "p=" + std::to_string(p) + " n=" + std::to_string(n);
    }
  }
  return "";
}

std::string dim2() {
  for (int p : {2, 3, 5}) {
    Arith a(p);
    for (int n = 0; n <= 8; ++n)
      for (const auto& mu : partitions_of(n))
        if (specht_graded_dim(a, mu).at_one() != BigInt(hook_length_count(mu)))
          return "p=" + std::to_string(p) + " mu=" + show(mu);
  }
  return "";
}

std::string cry1() {
  const int nmax = 10;
  for (int p : {2, 3, 5}) {
    Arith a(p);
    const std::string at = " at p=" + std::to_string(p);
    std::set<Partition> rp;
    for (int n = 0; n <= nmax; ++n)
      for (const auto& mu : partitions_of(n)) {
        bool ok = true;
        for (int r = 1; r <= mu.length(); ++r) ok = ok && mu.part(r) - mu.part(r + 1) < p;
        if (ok) rp.insert(mu);
      }
    for (const auto& mu : rp)
      for (int i = 0; i < p; ++i) {
        const Weight w = weight(a, mu);
        if (phi(a, mu, i) - epsilon(a, mu, i) != pair_with_simple(a, w, i)) return "phi - eps" + at + " mu=" + show(mu);
        if (auto up = f_tilde(a, mu, i)) {
          if (!rp.count(*up) && up->size() <= nmax) return "f~ leaves RP" + at;
          if (e_tilde(a, *up, i) != mu) return "e~f~ != id" + at + " mu=" + show(mu);
          if (weight(a, *up).content != w.content + ContentVector::simple(a, i)) return "wt(f~)" + at;
        }
        if (auto down = e_tilde(a, mu, i)) {
          if (!rp.count(*down)) return "e~ leaves RP" + at;
          if (f_tilde(a, *down, i) != mu) return "f~e~ != id" + at + " mu=" + show(mu);
        }
      }
    const auto g = crystal_graph(a, nmax);
    const std::set<Partition> reached(g.vertices.begin(), g.vertices.end());
    if (reached != rp) return "graph from the empty partition does not reach RP" + at;
  }
  return "";
}

// Weak compositions of n into n parts.
void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= n; ++v) {
    cur.push_back(v);
    compositions(n - v, parts, cur, out);
    cur.pop_back();
  }
}

std::string gg1() {
  for (int p : {2, 3}) {
    Arith a(p);
    for (int color = 1; color < p; ++color) {
      const Word base = canonical_base_word(a, color);
      for (int n = 1; n <= 4; ++n) {
        const auto v = column_char(a, n, color);
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, n, cur, comps);
        for (const auto& c : comps) {
          bool zero_one = true;
          for (int x : c) zero_one = zero_one && x <= 1;
          const LaurentPoly want = zero_one ? LaurentPoly(1) : LaurentPoly();
          LaurentPoly got;
          try {
            got = gg_coefficient(a, v, base, c);
          } catch (const std::exception& e) {
            return std::string("division failed: ") + e.what();
          }
          if (got != want) {
            std::ostringstream os;
            os << "p=" << p << " n=" << n << " composition";
            for (int x : c) os << ' ' << x;
            os << " gave " << got.to_string();
            return os.str();
          }
        }
      }
    }
  }
  return "";
}

std::string gar1() {
  const auto g = garnir_data(Arith(2), {7, 7, 4, 1}, {2, 3});
  if (g.u != 10 || g.v != 17) return "belt range";
  if (g.k != 3 || g.f != 2 || g.d != 11) return "brick counts";
  if (g.bricks.size() != 3 || g.bricks[0][0].row != 3 || g.bricks[1][0].row != 2 || g.bricks[2][0].row != 2)
    return "brick layout";
  if (g.gar_set.size() != 3) return "Gar^A size";
  if (g.gar_set[0] != g.minimal_tableau) return "first element is not T^A";
  if (g.gar_set[1] != g.minimal_tableau.act(g.generators[1])) return "second element is not w_2 T^A";
  if (g.gar_set[2] != g.garnir_tableau || g.garnir_tableau != g.minimal_tableau.act(g.generators[0] * g.generators[1]))
    return "third element is not G^A = w_1 w_2 T^A";
  return "";
}

std::string root1() {
  for (int p : {2, 3}) {
    Arith a(p);
    const std::string at = " at p=" + std::to_string(p);
    std::vector<ConvexPreorder> orders;
    for (int v = 0; v < 3; ++v) orders.push_back(ConvexPreorder::variant(a, 8 * p, v));
    for (int h = 0; h <= 6; ++h)
      for (const auto& alpha : oracle::contents_of_height(p, h)) {
        const long long want = oracle::root_partition_count(a, alpha);
        for (const auto& o : orders) {
          const auto rps = root_partitions(a, alpha, o);
          if (static_cast<long long>(rps.size()) != want)
            return "|Pi(" + alpha.to_string() + ")| = " + std::to_string(rps.size()) + ", oracle " + std::to_string(want) + at;
          for (const auto& rp : rps)
            if (rp.content(a) != alpha) return "content mismatch" + at;
        }
      }
    // convexity: beta < gamma with beta + gamma a root forces beta < beta + gamma < gamma
    std::vector<AffineRoot> roots = real_roots_up_to(a, 4 * p);
    for (int n = 1; n <= 4; ++n) roots.push_back(AffineRoot::imaginary(n));
    std::map<ContentVector, std::vector<AffineRoot>> by_content;
    for (const auto& r : real_roots_up_to(a, 8 * p)) by_content[r.content(a)].push_back(r);
    for (int n = 1; n <= 8; ++n) by_content[null_root(a).scaled(n)].push_back(AffineRoot::imaginary(n));
    for (const auto& o : orders)
      for (const auto& x : roots)
        for (const auto& y : roots) {
          auto it = by_content.find(x.content(a) + y.content(a));
          if (it == by_content.end()) continue;
          const AffineRoot& s = it->second.front();
          const Order xy = o.compare(x, y);
          if (xy == Order::Less) {
            if (o.compare(x, s) != Order::Less || o.compare(s, y) != Order::Less)
              return "convexity fails for " + x.to_string() + ", " + y.to_string() + at;
          } else if (xy == Order::Equivalent) {
            if (o.compare(x, s) != Order::Equivalent) return "equivalence not convex for " + x.to_string() + at;
          }
        }
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<std::string> only(argv + 1, argv + argc);
  const std::vector<Criterion> criteria{
      {"MUL-1", 1, mul1},  {"MUL-2", 60, mul2}, {"BR-1", 1, br1},   {"JT-1", 1, jt1},
      {"CH-1", 5, ch1},    {"REL-1", 30, rel1}, {"DIM-1", 60, dim1}, {"DIM-2", 60, dim2},
      {"CRY-1", 60, cry1}, {"GG-1", 60, gg1},   {"GAR-1", 1, gar1},  {"ROOT-1", 60, root1},
  };
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && secs > c.limit_seconds) detail = "over the " + std::to_string(c.limit_seconds) + " s limit";
    if (detail.empty()) {
      std::printf("PASS %-7s %8.3f s\n", c.id.c_str(), secs);
    } else {
      std::printf("FAIL %-7s %8.3f s  %s\n", c.id.c_str(), secs, detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion\n");
    return 2;
  }
  std::printf("%d passed, %d failed\n", ran - failures, failures);
  return failures == 0 ? 0 : 1;
}
