#include "klr/selftest.hpp"

#include "klr/crystal.hpp"
#include "klr/dims.hpp"
#include "klr/garnir.hpp"
#include "klr/klrmod.hpp"
#include "klr/mullineux.hpp"
#include "klr/roots.hpp"

namespace klr {

namespace {

FormalCharacter words(std::initializer_list<Word> ws) {
  FormalCharacter ch;
  for (const auto& w : ws) ch.add(w, 1);
  return ch;
}

}  // namespace

std::vector<SelftestItem> selftest_items() {
  const Arith p2(2), p3(3), p5(5);
  std::vector<SelftestItem> items;
  auto add = [&](std::string name, std::function<bool()> f) { items.push_back({std::move(name), std::move(f)}); };

  add("quantum-int-2", [] { return quantum_int(2) == LaurentPoly::q() + LaurentPoly::monomial(-1); });
  add("cartan-p5-diagonal", [=] { return cartan_entry(p5, 2, 2) == 2; });
  add("cartan-p2-offdiagonal", [=] { return cartan_entry(p2, 0, 1) == -2; });
  add("cartan-p5-distant", [=] { return cartan_entry(p5, 0, 2) == 0; });
  add("residue-p5-(5,1)", [=] { return residue(p5, {5, 1}) == 1; });
  add("content-chi2-p5", [=] { return content(p5, Partition{2, 1, 1, 1}) == null_root(p5); });
  add("removable-2-nodes", [=] {
    return removable_nodes(p3, Partition{3, 3, 2, 1, 1}, 2) == std::vector<Node>{{5, 1}, {3, 2}};
  });
  add("p-rim-(3,2,2,1)", [=] {
    return p_segments(p3, Partition{3, 2, 2, 1}) == std::vector<std::vector<Node>>{{{4, 1}, {3, 1}, {3, 2}}, {{1, 3}}};
  });
  add("leading-tableau-(7,7,4,1)", [] {
    return leading_tableau(Partition{7, 7, 4, 1}).rows() ==
           std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14}, {15, 16, 17, 18}, {19}};
  });
  add("mullineux-crystal-(3,2,2,1)", [=] {
    return mullineux_crystal(p3, Partition{3, 2, 2, 1}) == Partition{2, 1, 1, 1, 1, 1, 1};
  });
  add("mullineux-xu-(3,2,2,1)", [=] { return mullineux_xu(p3, Partition{3, 2, 2, 1}) == Partition{2, 1, 1, 1, 1, 1, 1}; });
  add("mullineux-(3^2,1^3)", [=] { return mullineux_xu(p3, Partition{3, 3, 1, 1, 1}) == Partition{3, 2, 1, 1, 1, 1}; });
  add("mullineux-(3^2,2,1^2)", [=] { return mullineux_xu(p3, Partition{3, 3, 2, 1, 1}) == Partition{3, 3, 1, 1, 1, 1}; });
  add("signature-(3^2,2,1^2)", [=] {
    const Partition mu{3, 3, 2, 1, 1};
    return epsilon(p3, mu, 2) == 2 && epsilon(p3, mu, 0) == 0 && epsilon(p3, mu, 1) == 0 &&
           !removable_nodes(p3, mu, 1).empty();
  });
  add("branching-(3^2,2,1^2)", [=] {
    const Partition mu{3, 3, 2, 1, 1};
    const auto t = branch_table(p3, mu, 2, Direction::Restrict);
    if (t.entries.size() != 3) return false;
    return t.entries[0].target == Partition{3, 3, 2, 1} && t.entries[0].multiplicity == LaurentPoly(1) &&
           t.entries[1].target == Partition{3, 3, 1, 1, 1} && t.entries[1].multiplicity == quantum_int(2) &&
           t.entries[2].target == Partition{3, 2, 1, 1, 1, 1} && t.entries[2].multiplicity == LaurentPoly(1) &&
           t.entries[2].provenance == "mullineux-twist" && branch_table(p3, mu, 0, Direction::Restrict).vanishes &&
           branch_table(p3, mu, 1, Direction::Restrict).vanishes;
  });
  add("garnir-(7,7,4,1)", [=] {
    const auto g = garnir_data(p2, Partition{7, 7, 4, 1}, {2, 3});
    return g.u == 10 && g.v == 17 && g.k == 3 && g.f == 2 && g.d == 11 &&
           g.coset_reps == std::vector<std::vector<int>>{{}, {2}, {1, 2}} && g.gar_set.back() == g.garnir_tableau;
  });
  add("hook-character-L1", [=] { return character(hook_module(p5, 1)) == words({{0, 4, 3, 2, 1}}); });
  add("hook-character-Lp-1", [=] { return character(hook_module(p5, 4)) == words({{0, 1, 2, 3, 4}}); });
  add("hook-character-Lp-2", [=] {
    return character(hook_module(p5, 3)) == words({{0, 4, 1, 2, 3}, {0, 1, 4, 2, 3}, {0, 1, 2, 4, 3}});
  });
  add("word-graph-(0,1,0,1)", [=] { return word_graph_component(p2, {0, 1, 0, 1}) == std::set<Word>{{0, 1, 0, 1}}; });
  add("jacobi-trudi-p2-(2)", [=] {
    const LaurentPoly qq = quantum_int(2) * quantum_int(2);
    FormalCharacter want = words({{0, 1, 0, 1}});
    want.add({0, 0, 1, 1}, qq);
    return jacobi_trudi(p2, Partition{2}, 1) == want;
  });
  add("preorder-anchors", [=] {
    const ConvexPreorder o(p3, 6);
    const auto a1 = AffineRoot::real(1, 1, 1, 0);
    const auto a0 = AffineRoot::real(-1, 1, 2, 1);
    return o.compare(a1, AffineRoot::imaginary(1)) == Order::Greater &&
           o.compare(a0, AffineRoot::imaginary(1)) == Order::Less &&
           o.compare(AffineRoot::imaginary(1), AffineRoot::imaginary(2)) == Order::Equivalent;
  });
  return items;
}

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& item : selftest_items()) {
    bool ok = false;
    try {
      ok = item.check();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << item.name << "\n";
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace klr
