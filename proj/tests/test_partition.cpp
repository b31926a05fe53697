#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hlq/partition.hpp"

using namespace hlq;

namespace {

// p(n) by the pentagonal number recurrence.
std::vector<long long> partition_numbers(int n_max) {
  std::vector<long long> p(static_cast<std::size_t>(n_max + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  return p;
}

Partition random_partition(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  const auto all = enumerate_partitions(w(rng));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("6,3,3,1").to_string(), "6,3,3,1");
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition::parse("1,3"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
}

TEST(Partition, ConjugateKnown) {
  EXPECT_EQ(Partition({5, 3, 2, 2}).conjugate(), Partition({4, 4, 2, 1, 1}));
  EXPECT_EQ(Partition({1, 1, 1}).conjugate(), Partition({3}));
  EXPECT_EQ(Partition().conjugate(), Partition());
}

TEST(Partition, ConjugationIsAnInvolution) {
  for (const auto& l : enumerate_up_to(12)) {
    EXPECT_EQ(l.conjugate().conjugate(), l);
    EXPECT_EQ(l.conjugate().weight(), l.weight());
    EXPECT_EQ(l.conjugate().length(), l.largest());
  }
}

TEST(Partition, NStatisticTwoWays) {
  for (const auto& l : enumerate_up_to(12)) {
    EXPECT_EQ(n_stat(l), n_stat_by_columns(l)) << l.to_string();
  }
  EXPECT_EQ(n_stat(Partition({5, 3, 2, 2})), 3 + 4 + 6);
}

TEST(Partition, EnumerationMatchesPentagonalRecurrence) {
  const auto p = partition_numbers(20);
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long long>(all.size()), p[static_cast<std::size_t>(n)]) << n;
    std::set<Partition> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(Partition, EnumerationLimitsAreConjugate) {
  // Parts <= a and length <= b, against the conjugate box.
  for (int n = 0; n <= 12; ++n) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        const auto box = enumerate_partitions(n, {.max_length = b, .max_part = a});
        const auto dual = enumerate_partitions(n, {.max_length = a, .max_part = b});
        EXPECT_EQ(box.size(), dual.size());
        for (const auto& l : box) {
          EXPECT_LE(l.length(), b);
          EXPECT_LE(l.largest(), a);
        }
      }
    }
  }
}

TEST(Partition, EnumerateByNorm) {
  for (const auto& l : enumerate_by_norm(30)) EXPECT_LE(dot(l, l), 30);
  std::size_t count = 0;
  for (const auto& l : enumerate_up_to(30)) {
    if (dot(l, l) <= 30) ++count;
  }
  EXPECT_EQ(enumerate_by_norm(30).size(), count);
}

TEST(Partition, DotProduct) {
  EXPECT_EQ(dot(Partition({3, 2}), Partition({4, 1, 1})), 14);
  EXPECT_EQ(dot(Partition(), Partition({4})), 0);
}

TEST(Partition, HorizontalStripDefinition) {
  EXPECT_TRUE(is_horizontal_strip(Partition({5, 3, 2, 2}), Partition({3, 3, 2})));
  EXPECT_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
  EXPECT_FALSE(is_horizontal_strip(Partition({2}), Partition({3})));
  // Brute force: column differences in {0, 1}.
  for (const auto& l : enumerate_up_to(7)) {
    for (const auto& m : enumerate_up_to(7)) {
      bool strip = l.contains(m);
      for (int j = 1; strip && j <= l.largest(); ++j) {
        const int d = l.column(j) - m.column(j);
        strip = d == 0 || d == 1;
      }
      EXPECT_EQ(is_horizontal_strip(l, m), strip) << l.to_string() << "/" << m.to_string();
    }
  }
}

TEST(Partition, StripsOverAndUnderAgree) {
  for (const auto& mu : enumerate_up_to(6)) {
    for (int b = 0; b <= 4; ++b) {
      for (const auto& l : strips_over(mu, b)) {
        EXPECT_TRUE(is_horizontal_strip(l, mu));
        EXPECT_EQ(l.weight(), mu.weight() + b);
        const auto under = strips_under(l);
        EXPECT_NE(std::find(under.begin(), under.end(), mu), under.end());
      }
    }
  }
  // Interlacing lambda_{i+1} <= nu_i <= lambda_i.
  for (const auto& l : enumerate_up_to(10)) {
    long long expect = 1;
    for (int i = 1; i <= l.length(); ++i) {
      expect *= l.part(static_cast<std::size_t>(i)) - l.part(static_cast<std::size_t>(i + 1)) + 1;
    }
    EXPECT_EQ(static_cast<long long>(strips_under(l).size()), expect) << l.to_string();
  }
}

TEST(Partition, StripPrefixMask) {
  const Partition mu{2, 1};
  for (const auto& omega : StripMask::all(3)) {
    for (int b = 0; b <= 5; ++b) {
      for (const auto& l : strips_over(mu, b, omega)) {
        for (int i = 1; i <= omega.size(); ++i) EXPECT_EQ(l.column(i) - mu.column(i), omega[i]);
      }
    }
  }
}

TEST(Partition, MaskAscentsDescents) {
  const auto w = StripMask::parse("01101");
  EXPECT_EQ(w.ones(), 3);
  EXPECT_EQ(w.ascents(), (std::vector<int>{1, 4}));
  EXPECT_EQ(w.descents(), (std::vector<int>{3}));
  EXPECT_EQ(StripMask::all(4).size(), 16u);
  EXPECT_THROW(StripMask::parse("012"), std::invalid_argument);
}

TEST(Partition, RandomContainment) {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    const auto a = random_partition(rng, 9);
    const auto b = random_partition(rng, 9);
    bool inside = true;
    for (int i = 1; i <= b.length(); ++i) inside = inside && b.part(static_cast<std::size_t>(i)) <= a.part(static_cast<std::size_t>(i));
    EXPECT_EQ(a.contains(b), inside);
    EXPECT_EQ(a.contains(b), a.conjugate().contains(b.conjugate()));
  }
}
