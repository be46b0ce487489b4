#include "klr/error.hpp"
#include "klr/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using klr::Arith;
using klr::Node;
using klr::Partition;

TEST(Partitions, ParseAndRender) {
  EXPECT_EQ(Partition::parse("3,2,2,1"), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(Partition::parse("3^2,1^3"), (Partition{3, 3, 1, 1, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition::parse("0"), Partition());
  EXPECT_EQ((Partition{3, 3, 1, 1, 1}).to_exp_string(), "3^2,1^3");
  EXPECT_EQ((Partition{3, 2, 2, 1}).to_string(), "3,2,2,1");
  EXPECT_THROW(Partition::parse("1,2"), klr::DomainError);
  EXPECT_THROW(Partition::parse("2,x"), klr::DomainError);
  EXPECT_THROW(Partition({2, 0}), klr::DomainError);
}

TEST(Partitions, Restrictedness) {
  Arith a3(3), a2(2);
  EXPECT_TRUE(klr::is_restricted(a3, {3, 2, 2, 1}));
  EXPECT_FALSE(klr::is_restricted(a3, {4, 1}));
  EXPECT_TRUE(klr::is_restricted(a2, {2, 1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(klr::is_restricted(a2, {3, 1}));
  EXPECT_TRUE(klr::is_restricted(a2, Partition()));
}

TEST(Partitions, ResiduesAndContent) {
  Arith a3(3);
  EXPECT_EQ(klr::residue(a3, {1, 1}), 0);
  EXPECT_EQ(klr::residue(a3, {1, 2}), 1);
  EXPECT_EQ(klr::residue(a3, {2, 1}), 2);
  // nodes of (3,2,2,1): residues 0 1 2 / 2 0 / 1 2 / 0
  EXPECT_EQ(klr::content(a3, {3, 2, 2, 1}).to_string(), "0:3,1:2,2:3");
  EXPECT_EQ(klr::content(Arith(2), {2}).to_string(), "0:1,1:1");
}

TEST(Partitions, AddableRemovableByResidue) {
  Arith a3(3);
  const Partition mu{3, 2, 2, 1};
  EXPECT_EQ(klr::addable_nodes(a3, mu, 0), (std::vector<Node>{{1, 4}}));
  EXPECT_EQ(klr::addable_nodes(a3, mu, 1), (std::vector<Node>{{4, 2}, {2, 3}}));
  EXPECT_EQ(klr::removable_nodes(a3, mu, 2), (std::vector<Node>{{3, 2}, {1, 3}}));
  EXPECT_EQ(klr::removable_nodes(a3, mu, 0), (std::vector<Node>{{4, 1}}));
  EXPECT_EQ(klr::addable_nodes(a3, mu, 2), (std::vector<Node>{{5, 1}}));
}

TEST(Partitions, RimAndSegments) {
  Arith a3(3), a2(2);
  EXPECT_EQ(klr::rim({2, 1}), (std::vector<Node>{{2, 1}, {1, 1}, {1, 2}}));
  const auto segs = klr::p_segments(a2, {2, 1});
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[0], (std::vector<Node>{{2, 1}, {1, 1}}));
  EXPECT_EQ(segs[1], (std::vector<Node>{{1, 2}}));
  const auto segs22 = klr::p_segments(a2, {2, 2});
  // (1,2) shares a column with (2,2), so no second segment starts
  ASSERT_EQ(segs22.size(), 1u);
  EXPECT_EQ(segs22[0], (std::vector<Node>{{2, 1}, {2, 2}}));
  EXPECT_THROW(klr::p_segments(a3, Partition()), klr::DomainError);
}

TEST(Partitions, CountsMatchOracle) {
  for (int n = 0; n <= 14; ++n) {
    const auto all = klr::partitions_of(n);
    EXPECT_EQ(static_cast<long long>(all.size()), oracle::partition_count(n)) << n;
    std::set<Partition> uniq(all.begin(), all.end());
    EXPECT_EQ(uniq.size(), all.size());
    for (const auto& mu : all) EXPECT_EQ(mu.size(), n);
  }
}

TEST(Partitions, RestrictedCountsMatchFilter) {
  for (int p : {2, 3, 5}) {
    Arith a(p);
    for (int n = 0; n <= 10; ++n) {
      long long expect = 0;
      for (const auto& mu : klr::partitions_of(n)) {
        bool ok = true;
        for (int r = 1; r <= mu.length(); ++r)
          if (mu.part(r) - mu.part(r + 1) >= p) ok = false;
        if (ok) ++expect;
      }
      EXPECT_EQ(static_cast<long long>(klr::restricted_partitions_of(a, n).size()), expect);
    }
  }
}

TEST(PartitionsProperty, AddableAndRemovableInterleave) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition mu = oracle::random_partition(rng, 16);
    const auto add = mu.addable_nodes();
    const auto rem = mu.removable_nodes();
    EXPECT_EQ(add.size(), rem.size() + 1);
    for (const auto& n : add) {
      EXPECT_EQ(mu.add(n).size(), mu.size() + 1);
      EXPECT_EQ(mu.add(n).remove(n), mu);
    }
    for (const auto& n : rem) EXPECT_EQ(mu.remove(n).add(n), mu);
    EXPECT_EQ(mu.transpose().transpose(), mu);
    EXPECT_EQ(mu.transpose().size(), mu.size());
    EXPECT_EQ(Partition::parse(mu.to_exp_string()), mu);
    // rim is a connected path from bottom-left to top-right
    if (!mu.empty()) {
      const auto r = klr::rim(mu);
      for (std::size_t k = 1; k < r.size(); ++k) {
        const int step = (r[k - 1].row - r[k].row) + (r[k].col - r[k - 1].col);
        EXPECT_EQ(step, 1);
      }
      for (int p : {2, 3}) {
        std::size_t total = 0;
        for (const auto& seg : klr::p_segments(Arith(p), mu)) {
          EXPECT_LE(seg.size(), static_cast<std::size_t>(p));
          total += seg.size();
        }
        EXPECT_LE(total, r.size());
      }
    }
  }
}
