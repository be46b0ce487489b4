#include "klr/error.hpp"
#include "klr/roots.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using klr::AffineRoot;
using klr::Arith;
using klr::ContentVector;
using klr::Order;

namespace {

std::set<ContentVector> contents(const Arith& a, const std::vector<AffineRoot>& roots) {
  std::set<ContentVector> out;
  for (const auto& r : roots) out.insert(r.content(a));
  return out;
}

}  // namespace

TEST(Roots, Rendering) {
  EXPECT_EQ(AffineRoot::real(1, 1, 1, 0).to_string(), "a1");
  EXPECT_EQ(AffineRoot::real(1, 1, 2, 1).to_string(), "a[1,2]+d");
  EXPECT_EQ(AffineRoot::real(-1, 1, 1, 1).to_string(), "-a1+d");
  EXPECT_EQ(AffineRoot::imaginary(2).to_string(), "2d");
}

TEST(Roots, SmallEnumerations) {
  Arith a2(2), a3(3);
  EXPECT_EQ(contents(a2, klr::real_roots_up_to(a2, 1)),
            (std::set<ContentVector>{ContentVector({1, 0}), ContentVector({0, 1})}));
  EXPECT_EQ(contents(a3, klr::real_roots_up_to(a3, 2)),
            (std::set<ContentVector>{ContentVector({1, 0, 0}), ContentVector({0, 1, 0}), ContentVector({0, 0, 1}),
                                     ContentVector({0, 1, 1}), ContentVector({1, 1, 0}), ContentVector({1, 0, 1})}));
  // alpha_0, alpha_1, alpha_0 + delta, alpha_1 + delta, alpha_0 + 2delta, alpha_1 + 2delta
  EXPECT_EQ(klr::real_roots_up_to(a2, 5).size(), 6u);
}

TEST(Roots, RealRootsMatchFormCriterion) {
  for (int p : {2, 3, 4, 5}) {
    Arith a(p);
    for (int bound = 1; bound <= 3 * p; ++bound) {
      const auto mine = klr::real_roots_up_to(a, bound);
      const auto by_form = oracle::roots_by_form(a, bound);
      EXPECT_EQ(contents(a, mine), std::set<ContentVector>(by_form.real.begin(), by_form.real.end()));
      EXPECT_EQ(mine.size(), by_form.real.size());
      for (const auto& im : by_form.imaginary) {
        const int m = im[0];
        EXPECT_EQ(im, klr::null_root(a).scaled(m));
      }
    }
  }
}

TEST(Roots, PreorderAnchors) {
  for (int p : {2, 3, 5}) {
    Arith a(p);
    const klr::ConvexPreorder o(a, 4 * p);
    const AffineRoot a1 = AffineRoot::real(1, 1, 1, 0);
    const AffineRoot a0 = AffineRoot::real(-1, 1, p - 1, 1);
    const AffineRoot d = AffineRoot::imaginary(1), d2 = AffineRoot::imaginary(2);
    EXPECT_EQ(o.compare(a1, d), Order::Greater);
    EXPECT_EQ(o.compare(a0, d), Order::Less);
    EXPECT_EQ(o.compare(d, d2), Order::Equivalent);
    EXPECT_EQ(o.compare(d, a1), Order::Less);
    for (int v = 0; v < 3; ++v) {
      const auto ov = klr::ConvexPreorder::variant(a, 4 * p, v);
      for (const auto& r : klr::real_roots_up_to(a, 2 * p)) {
        const auto rc = r.content(a);
        if (rc[0] == 0) EXPECT_EQ(ov.compare(r, d), Order::Greater) << r.to_string();
      }
    }
  }
}

TEST(Roots, WorkedRootPartitions) {
  Arith a2(2);
  const klr::ConvexPreorder o(a2, 8);
  EXPECT_EQ(klr::root_partitions(a2, ContentVector::simple(a2, 0), o).size(), 1u);
  const auto d = klr::root_partitions(a2, klr::null_root(a2), o);
  ASSERT_EQ(d.size(), 2u);
  int with_delta = 0;
  for (const auto& rp : d) with_delta += rp.m_delta() == 1 ? 1 : 0;
  EXPECT_EQ(with_delta, 1);
  EXPECT_EQ(klr::root_partitions(a2, klr::null_root(a2) + ContentVector::simple(a2, 1), o).size(), 3u);
}

TEST(Roots, RootPartitionCountsMatchOracleSmall) {
  for (int p : {2, 3}) {
    Arith a(p);
    for (int h = 0; h <= 5; ++h)
      for (const auto& alpha : oracle::contents_of_height(p, h)) {
        const klr::ConvexPreorder o(a, 2 * h + 2);
        const auto rps = klr::root_partitions(a, alpha, o);
        EXPECT_EQ(static_cast<long long>(rps.size()), oracle::root_partition_count(a, alpha)) << alpha.to_string();
        for (const auto& rp : rps) {
          EXPECT_EQ(rp.content(a), alpha);
          for (std::size_t k = 1; k < rp.real_mults.size(); ++k)
            EXPECT_NE(o.compare(rp.real_mults[k - 1].first, rp.real_mults[k].first), Order::Less);
        }
      }
  }
}

TEST(Roots, MultipartitionCounts) {
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      EXPECT_EQ(static_cast<long long>(klr::multipartitions(n, l).size()), oracle::multipartition_count(n, l));
}
