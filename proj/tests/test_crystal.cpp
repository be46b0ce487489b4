#include "klr/crystal.hpp"
#include "klr/dims.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using klr::Arith;
using klr::Node;
using klr::Partition;

TEST(Crystal, SignatureOfWorkedExample) {
  Arith a(3);
  const Partition mu{3, 3, 2, 1, 1};
  const auto s2 = klr::signature(a, mu, 2);
  EXPECT_EQ(s2.epsilon(), 2);
  EXPECT_EQ(s2.nodes[static_cast<std::size_t>(s2.normal[0])], (Node{3, 2}));
  EXPECT_EQ(s2.nodes[static_cast<std::size_t>(s2.normal[1])], (Node{5, 1}));
  EXPECT_EQ(klr::epsilon(a, mu, 1), 0);
  EXPECT_EQ(klr::removable_nodes(a, mu, 1).size(), 1u);
  EXPECT_EQ(klr::epsilon(a, mu, 0), 0);
  EXPECT_TRUE(klr::removable_nodes(a, mu, 0).empty());
}

TEST(Crystal, EmptyPartition) {
  for (int p : {2, 3, 5}) {
    Arith a(p);
    for (int i = 0; i < p; ++i) {
      EXPECT_EQ(klr::epsilon(a, Partition(), i), 0);
      EXPECT_EQ(klr::phi(a, Partition(), i), i == 0 ? 1 : 0);
      EXPECT_FALSE(klr::e_tilde(a, Partition(), i).has_value());
    }
    EXPECT_EQ(klr::f_tilde(a, Partition(), 0), Partition{1});
    EXPECT_EQ(klr::weight(a, Partition()).content, klr::ContentVector(p));
  }
}

TEST(Crystal, SmallOperators) {
  Arith a2(2);
  EXPECT_EQ(klr::f_tilde(a2, {1}, 1), (Partition{1, 1}));
  EXPECT_FALSE(klr::f_tilde(a2, {1}, 0).has_value());
  EXPECT_EQ(klr::e_tilde(Arith(3), {3, 3, 2, 1, 1}, 2), (Partition{3, 3, 1, 1, 1}));
}

TEST(Crystal, StackCancellationMatchesLiteralRule) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(0, 14), coin(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> raw(static_cast<std::size_t>(len(rng)));
    for (auto& x : raw) x = coin(rng) ? 1 : -1;
    EXPECT_EQ(klr::reduce_signs(raw), oracle::literal_reduce(raw));
  }
}

TEST(Crystal, TamperedCancellationChangesWorkedExample) {
  // Cancelling "-+" instead of "+-" would make a different node normal.
  Arith a(3);
  const auto s = klr::signature(a, {3, 3, 2, 1, 1}, 1);
  std::vector<int> negated = s.raw;
  for (auto& x : negated) x = -x;
  int tampered_eps = 0;
  for (int x : oracle::literal_reduce(negated)) tampered_eps += x == 1 ? 1 : 0;
  EXPECT_EQ(s.epsilon(), 0);
  EXPECT_NE(tampered_eps, s.epsilon());
}

TEST(Crystal, SmallGraphs) {
  const auto g1 = klr::crystal_graph(Arith(3), 1);
  ASSERT_EQ(g1.vertices.size(), 2u);
  ASSERT_EQ(g1.edges.size(), 1u);
  EXPECT_EQ(g1.edges[0].color, 0);
  EXPECT_EQ(g1.vertices[g1.edges[0].to], Partition{1});
  const auto g2 = klr::crystal_graph(Arith(2), 2);
  // (1) only has an outgoing 1-edge
  int from_one = 0;
  for (const auto& e : g2.edges)
    if (g2.vertices[e.from] == Partition{1}) {
      ++from_one;
      EXPECT_EQ(e.color, 1);
      EXPECT_EQ(g2.vertices[e.to], (Partition{1, 1}));
    }
  EXPECT_EQ(from_one, 1);
}

TEST(Crystal, AxiomsExhaustiveSmall) {
  for (int p : {2, 3, 5}) {
    Arith a(p);
    for (int n = 0; n <= 8; ++n)
      for (const auto& mu : klr::restricted_partitions_of(a, n))
        for (int i = 0; i < p; ++i) {
          const auto w = klr::weight(a, mu);
          EXPECT_EQ(klr::phi(a, mu, i) - klr::epsilon(a, mu, i), klr::pair_with_simple(a, w, i));
          if (auto up = klr::f_tilde(a, mu, i)) {
            EXPECT_TRUE(klr::is_restricted(a, *up));
            EXPECT_EQ(klr::e_tilde(a, *up, i), mu);
            EXPECT_EQ(klr::weight(a, *up).content, w.content + klr::ContentVector::simple(a, i));
          }
          if (auto down = klr::e_tilde(a, mu, i)) EXPECT_EQ(klr::f_tilde(a, *down, i), mu);
          EXPECT_EQ(klr::f_tilde(a, mu, i).has_value(), klr::phi(a, mu, i) > 0);
        }
  }
}

TEST(Crystal, LevelSizesMatchRestrictedCounts) {
  for (int p : {2, 3}) {
    Arith a(p);
    const auto g = klr::crystal_graph(a, 8);
    std::vector<int> level(9, 0);
    for (const auto& v : g.vertices) ++level[static_cast<std::size_t>(v.size())];
    for (int n = 0; n <= 8; ++n) {
      long long expect = 0;
      for (const auto& mu : klr::partitions_of(n)) {
        bool ok = true;
        for (int r = 1; r <= mu.length(); ++r) ok = ok && mu.part(r) - mu.part(r + 1) < p;
        expect += ok ? 1 : 0;
      }
      EXPECT_EQ(level[static_cast<std::size_t>(n)], expect);
    }
  }
}
