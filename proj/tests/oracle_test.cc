#include "balkit/oracle.h"

#include <gtest/gtest.h>

#include <random>

#include "balkit/errors.h"

namespace balkit {
namespace {

TEST(IsqrtTest, Examples) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(3), 1);
  EXPECT_EQ(isqrt(4), 2);
  EXPECT_EQ(isqrt(289), 17);
  EXPECT_EQ(isqrt(288), 16);
  EXPECT_THROW(isqrt(-1), DomainError);
}

TEST(IsqrtProperty, FloorInequalityOnRandomValues) {
  std::mt19937_64 rng(99);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(12345);
  for (int bits : {1, 2, 7, 31, 63, 64, 65, 200, 1000, 5000}) {
    for (int trial = 0; trial < 40; ++trial) {
      BigInt x = gen.get_z_bits(bits);
      BigInt r = isqrt(x);
      ASSERT_LE(r * r, x);
      ASSERT_GT((r + 1) * (r + 1), x);
      // Near perfect squares.
      BigInt sq = r * r;
      ASSERT_EQ(isqrt(sq), r);
      if (r > 0) ASSERT_EQ(isqrt(sq - 1), r - 1);
    }
  }
  for (unsigned long v = 0; v < 20000; ++v) {
    BigInt r = isqrt(BigInt(v));
    ASSERT_TRUE(r * r <= v && (r + 1) * (r + 1) > v) << v;
  }
}

TEST(MembershipTest, Examples) {
  EXPECT_TRUE(is_balancing(6));
  EXPECT_TRUE(is_balancing(1));
  EXPECT_FALSE(is_balancing(2));
  EXPECT_FALSE(is_balancing(0));
  EXPECT_FALSE(is_balancing(-6));
  EXPECT_TRUE(is_cobalancing(0));
  EXPECT_TRUE(is_cobalancing(2));
  EXPECT_FALSE(is_cobalancing(3));
  EXPECT_FALSE(is_cobalancing(-1));
  EXPECT_TRUE(is_triangular(10));
  EXPECT_TRUE(is_triangular(36));
  EXPECT_FALSE(is_triangular(2));
  EXPECT_TRUE(is_triangular(0));
  EXPECT_FALSE(is_triangular(-3));
}

TEST(WitnessTest, Examples) {
  auto w = balancer_of(6);
  EXPECT_EQ(w.r, 2);
  EXPECT_EQ(w.left_sum, 15);
  EXPECT_EQ(w.right_sum, 15);
  w = balancer_of(35);
  EXPECT_EQ(w.r, 14);
  EXPECT_EQ(w.left_sum, 595);
  w = balancer_of(1);
  EXPECT_EQ(w.r, 0);
  EXPECT_EQ(w.left_sum, 0);

  w = cobalancer_of(2);
  EXPECT_EQ(w.r, 1);
  EXPECT_EQ(w.left_sum, 3);
  w = cobalancer_of(14);
  EXPECT_EQ(w.r, 6);
  EXPECT_EQ(w.left_sum, 105);
  EXPECT_EQ(w.right_sum, 105);
  w = cobalancer_of(0);
  EXPECT_EQ(w.r, 0);
  EXPECT_EQ(w.right_sum, 0);

  EXPECT_THROW(balancer_of(7), NotAMemberError);
  EXPECT_THROW(cobalancer_of(3), NotAMemberError);
}

// Literal summation of both sides for every member up to 10^4.
TEST(WitnessProperty, ClosedFormsMatchLoopSums) {
  int balancing = 0, cobalancing = 0;
  for (long x = 0; x <= 10000; ++x) {
    if (is_balancing(x)) {
      ++balancing;
      auto w = balancer_of(x);
      long r = w.r.get_si();
      long left = 0, right = 0;
      for (long k = 1; k < x; ++k) left += k;
      for (long k = x + 1; k <= x + r; ++k) right += k;
      EXPECT_EQ(w.left_sum, left);
      EXPECT_EQ(w.right_sum, right);
      EXPECT_EQ(left, right);
    }
    if (is_cobalancing(x)) {
      ++cobalancing;
      auto w = cobalancer_of(x);
      long r = w.r.get_si();
      long left = 0, right = 0;
      for (long k = 1; k <= x; ++k) left += k;
      for (long k = x + 1; k <= x + r; ++k) right += k;
      EXPECT_EQ(w.left_sum, left);
      EXPECT_EQ(w.right_sum, right);
      EXPECT_EQ(left, right);
    }
  }
  EXPECT_EQ(balancing, 6);    // 1, 6, 35, 204, 1189, 6930
  EXPECT_EQ(cobalancing, 6);  // 0, 2, 14, 84, 492, 2870
}

TEST(SearchTest, Examples) {
  EXPECT_EQ(search_family(SequenceKind::kBalancing, 300), (std::vector<BigInt>{1, 6, 35, 204}));
  EXPECT_EQ(search_family(SequenceKind::kCobalancing, 100), (std::vector<BigInt>{0, 2, 14, 84}));
  EXPECT_TRUE(search_family(SequenceKind::kBalancing, 0).empty());
  EXPECT_EQ(search_family(SequenceKind::kCobalancing, 0), (std::vector<BigInt>{0}));
  EXPECT_EQ(search_family(SequenceKind::kBalancing, 204), (std::vector<BigInt>{1, 6, 35, 204}));
  EXPECT_THROW(search_family(SequenceKind::kLucasBalancing, 10), DomainError);
  EXPECT_THROW(search_family(SequenceKind::kBalancing, -1), DomainError);
}

TEST(SearchTest, PartitionedScanIsOrderedAndComplete) {
  auto serial = search_family(SequenceKind::kCobalancing, 100000, 1);
  for (unsigned w : {2u, 3u, 7u, 16u}) {
    EXPECT_EQ(search_family(SequenceKind::kCobalancing, 100000, w), serial) << w;
  }
  EXPECT_EQ(search_family(SequenceKind::kBalancing, 5, 16), (std::vector<BigInt>{1}));
}

TEST(OracleProperty, SquareRootsRecoverLucasTerms) {
  SequenceCursor big_b(SequenceKind::kBalancing), big_c(SequenceKind::kLucasBalancing);
  SequenceCursor small_b(SequenceKind::kCobalancing), small_c(SequenceKind::kLucasCobalancing);
  for (Index n = 0; n <= 500; ++n) {
    const BigInt& b = big_b.value();
    ASSERT_EQ(isqrt(8 * b * b + 1), big_c.value()) << n;
    if (n >= 1) {
      ASSERT_TRUE(is_balancing(b));
      ASSERT_TRUE(is_triangular(b * b));
      const BigInt& sb = small_b.value();
      ASSERT_EQ(isqrt(8 * sb * sb + 8 * sb + 1), small_c.value()) << n;
      ASSERT_TRUE(is_cobalancing(sb));
      small_b.advance();
      small_c.advance();
    }
    big_b.advance();
    big_c.advance();
  }
}

}  // namespace
}  // namespace balkit
