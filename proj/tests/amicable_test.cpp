#include "ietlab/amicable.hpp"

#include <gtest/gtest.h>

using namespace ietlab;
using namespace ietlab::amicable;

TEST(Morphisms, Examples) {
  const TernaryWord w("ACABAC");
  EXPECT_EQ(sigma01(w).str(), "0100101");
  EXPECT_EQ(sigma10(w).str(), "0101001");
  EXPECT_EQ(sigma01(TernaryWord("")).str(), "");
}

TEST(Morphisms, LengthsOnFactorsUpToTen) {
  for (const auto& level : triet::enumerate_levels(10))
    for (const auto& w : level) {
      ASSERT_EQ(sigma01(w).size(), w.size() + w.count('B'));
      ASSERT_EQ(sigma10(w).size(), w.size() + w.count('B'));
    }
}

TEST(Merge, Examples) {
  EXPECT_EQ(merge(BinaryWord("0100101"), BinaryWord("0101001"))->str(), "ACABAC");
  EXPECT_EQ(merge(BinaryWord("01"), BinaryWord("10"))->str(), "B");
  EXPECT_FALSE(merge(BinaryWord("0"), BinaryWord("1")).has_value());
  EXPECT_FALSE(merge(BinaryWord("10"), BinaryWord("01")).has_value());
  EXPECT_THROW(merge(BinaryWord("0"), BinaryWord("01")), std::invalid_argument);
}

TEST(Merge, RoundTripOnFactorsUpToSeven) {
  for (const auto& level : triet::enumerate_levels(7))
    for (const auto& w : level) {
      const auto back = merge(sigma01(w), sigma10(w));
      ASSERT_TRUE(back) << w;
      EXPECT_EQ(*back, w);
      const auto pair = amicable_pair(sigma01(w), sigma10(w));
      ASSERT_TRUE(pair);
      EXPECT_EQ(pair->b, w.count('B'));
    }
}

TEST(Amicable, Examples) {
  EXPECT_TRUE(is_b_amicable(BinaryWord("0100101"), BinaryWord("0101001"), 1));
  EXPECT_FALSE(is_b_amicable(BinaryWord("0100101"), BinaryWord("0101001"), 2));
  EXPECT_TRUE(is_b_amicable(BinaryWord("00"), BinaryWord("00"), 0));
  // B consumes the first two positions, then (1,0) has no preimage
  EXPECT_FALSE(amicable_pair(BinaryWord("0110"), BinaryWord("1001")).has_value());
}

TEST(CountPairs, Examples) {
  EXPECT_EQ(count_pairs(1, 0), 2u);
  EXPECT_EQ(count_pairs(2, 1), 1u);
  std::uint64_t sum = 0;
  for (std::size_t b = 0; b <= 1; ++b) sum += count_pairs(static_cast<std::int64_t>(1 + b), b);
  EXPECT_EQ(sum, 3u);
  EXPECT_THROW(count_pairs(1, 2), std::invalid_argument);
}

TEST(CountPairs, IdentityWithEnumerationUpToSeven) {
  const auto levels = triet::enumerate_levels(7);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto by_b = triet::count_by_b(levels[n]);
    std::uint64_t sum = 0;
    for (std::size_t b = 0; b <= n; ++b) {
      const auto pairs = count_pairs(static_cast<std::int64_t>(n + b), b);
      const auto it = by_b.find(b);
      EXPECT_EQ(pairs, it == by_b.end() ? 0u : it->second) << "N=" << n << " b=" << b;
      sum += pairs;
    }
    EXPECT_EQ(sum, levels[n].size());
  }
}

TEST(ClassPairs, Examples) {
  EXPECT_EQ(class_pair_count(2, 0, 1), 1u);
  EXPECT_EQ(class_pair_count(3, 0, 2), 0u);
  // the pair (0100101, 0101001) lives in some class of order 7
  bool found = false;
  for (const auto& cls : sturmian::classes(7)) {
    const auto has = [&](const char* w) {
      return std::binary_search(cls.factors.begin(), cls.factors.end(), BinaryWord(w));
    };
    if (has("0100101") && has("0101001")) {
      found = true;
      EXPECT_GE(class_pair_count(cls, 1), 1u);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(class_pair_count(3, 99, 1), std::out_of_range);
}

TEST(ClassPairs, BoundUpToTwelve) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::size_t b = 0; 2 * b <= static_cast<std::size_t>(m); ++b) {
      for (const auto& row : class_table(m, b)) {
        if (b == 0) {
          // every factor pairs with itself; one more than M - b
          EXPECT_EQ(row.pairs, static_cast<std::uint64_t>(m + 1));
        } else {
          EXPECT_LE(row.pairs, static_cast<std::uint64_t>(m - static_cast<std::int64_t>(b)))
              << "M=" << m << " b=" << b << " class " << row.left.str();
        }
        if (row.pairs > 0) {
          EXPECT_LE(static_cast<std::int64_t>(b), row.corollary);
        }
      }
    }
  }
}

TEST(ZCount, Examples) {
  EXPECT_EQ(z_count(2, 1), 2u);
  // F_1 = {0/1, 1/1} gives a single class {0, 1}
  EXPECT_EQ(sturmian::classes(1).size(), 1u);
  EXPECT_EQ(z_count(1, 0), 1u);
  for (std::int64_t m = 1; m <= 10; ++m)
    for (std::size_t b = static_cast<std::size_t>(m) / 2 + 1; b <= static_cast<std::size_t>(m); ++b)
      EXPECT_EQ(z_count(m, b), 0u);
}
