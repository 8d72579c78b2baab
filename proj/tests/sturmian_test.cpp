#include "ietlab/sturmian.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace ietlab;
using namespace ietlab::sturmian;
using exact::Rational;

namespace {

std::uint64_t phi_by_gcd(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) total += std::gcd(k, n) == 1 ? 1 : 0;
  return total;
}

bool balanced(const std::string& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    std::size_t lo = len, hi = 0;
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      const auto ones = static_cast<std::size_t>(std::count(w.begin() + i, w.begin() + i + len, '1'));
      lo = std::min(lo, ones);
      hi = std::max(hi, ones);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

std::vector<std::string> strs(const std::vector<BinaryWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

TEST(Mechanical, Examples) {
  EXPECT_EQ(mechanical_word(Rational(0), Rational(0), 5, Mechanical::lower).str(), "00000");
  EXPECT_EQ(mechanical_word(Rational(1, 2), Rational(0), 4, Mechanical::lower).str(), "0101");
  EXPECT_EQ(mechanical_word(Rational(1, 2), Rational(0), 4, Mechanical::upper).str(), "1010");
  EXPECT_EQ(mechanical_word(Rational(1), Rational(0), 3, Mechanical::lower).str(), "111");
}

TEST(Mechanical, WindowsAreSturmianFactors) {
  for (const Rational& alpha : {Rational(2, 7), Rational(3, 5), Rational(13, 21)}) {
    for (auto variant : {Mechanical::lower, Mechanical::upper}) {
      const auto u = mechanical_word(alpha, Rational(1, 3), 40, variant);
      for (std::size_t k = 1; k <= 8; ++k)
        for (const auto& w : windows(u, k)) EXPECT_TRUE(is_sturmian_factor(w)) << w;
    }
  }
}

TEST(Farey, Examples) {
  std::vector<std::string> four;
  for (const auto& f : farey(4)) four.push_back(f.str());
  EXPECT_EQ(four, (std::vector<std::string>{"0/1", "1/4", "1/3", "1/2", "2/3", "3/4", "1/1"}));
  EXPECT_EQ(farey(1).size(), 2u);
  EXPECT_EQ(farey(5).size(), 11u);
}

TEST(Farey, UnimodularAndComplete) {
  for (std::int64_t m = 1; m <= 200; ++m) {
    const auto seq = farey(m);
    std::uint64_t expected = 1;
    for (std::int64_t k = 1; k <= m; ++k) expected += phi_by_gcd(static_cast<std::uint64_t>(k));
    ASSERT_EQ(seq.size(), expected) << m;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      ASSERT_EQ(seq[i].q * seq[i + 1].p - seq[i].p * seq[i + 1].q, 1) << m;
  }
}

TEST(PeriodicCoding, Examples) {
  EXPECT_EQ(periodic_coding({1, 2}).str(), "01");
  EXPECT_EQ(periodic_coding({1, 3}).str(), "011");
  EXPECT_EQ(periodic_coding({0, 1}).str(), "1");
  EXPECT_EQ(periodic_coding({1, 1}).str(), "0");
}

TEST(PeriodicCoding, PrimitiveUpToOrderFifty) {
  for (const auto& f : farey(50)) {
    const std::string v = periodic_coding(f).str();
    ASSERT_EQ(v.size(), static_cast<std::size_t>(f.q));
    ASSERT_EQ(static_cast<std::int64_t>(std::count(v.begin(), v.end(), '0')), f.p) << f.str();
    for (std::size_t d = 1; d < v.size(); ++d) {
      if (v.size() % d) continue;
      EXPECT_NE(v.substr(d) + v.substr(0, d), v) << f.str() << " has period " << d;
    }
  }
}

TEST(Classes, Examples) {
  const auto c4 = class_factors(4, 0);
  EXPECT_EQ(strs(c4.factors), (std::vector<std::string>{"0111", "1011", "1101", "1110", "1111"}));
  EXPECT_EQ(strs(class_factors(2, 0).factors), (std::vector<std::string>{"01", "10", "11"}));
  const auto a = cyclic_factors(periodic_coding({1, 3}), 4);
  const auto b = cyclic_factors(periodic_coding({1, 2}), 4);
  std::vector<BinaryWord> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  EXPECT_TRUE(common.empty());
  EXPECT_THROW(class_factors(4, class_count(4)), std::out_of_range);
}

TEST(Classes, SizeAndIntersectionUpToThirty) {
  for (std::int64_t m = 1; m <= 30; ++m) {
    for (const auto& cls : classes(m)) {
      ASSERT_EQ(cls.factors.size(), static_cast<std::size_t>(m + 1));
      const auto l = cyclic_factors(periodic_coding(cls.left), static_cast<std::size_t>(m));
      const auto r = cyclic_factors(periodic_coding(cls.right), static_cast<std::size_t>(m));
      std::vector<BinaryWord> common;
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
      ASSERT_EQ(static_cast<std::int64_t>(common.size()), cls.left.q + cls.right.q - m - 1);
    }
  }
}

TEST(AllFactors, Examples) {
  EXPECT_EQ(all_factors(0).size(), 1u);
  EXPECT_EQ(strs(all_factors(2)), (std::vector<std::string>{"00", "01", "10", "11"}));
  EXPECT_EQ(all_factors(4).size(), 14u);
  EXPECT_EQ(lipatov(0), 1u);
  EXPECT_EQ(lipatov(1), 2u);
  EXPECT_EQ(lipatov(4), 14u);
}

TEST(AllFactors, MatchesFormulaUpToSixty) {
  for (std::int64_t m = 0; m <= 60; ++m)
    EXPECT_EQ(all_factors(m).size(), lipatov(static_cast<std::uint64_t>(m))) << m;
}

TEST(AllFactors, BalanceOracleExhaustiveUpToTwelve) {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::set<std::string> expected;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < n; ++i) w.push_back((bits >> i) & 1 ? '1' : '0');
      if (balanced(w)) expected.insert(w);
    }
    const auto got = strs(all_factors(static_cast<std::int64_t>(n)));
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected) << n;
  }
}

TEST(IsSturmianFactor, Examples) {
  EXPECT_TRUE(is_sturmian_factor(BinaryWord("0100101")));
  EXPECT_FALSE(is_sturmian_factor(BinaryWord("1100")));
  EXPECT_TRUE(is_sturmian_factor(BinaryWord("")));
  EXPECT_THROW(BinaryWord("0120"), std::invalid_argument);
}

TEST(LetterBounds, Examples) {
  const auto seq = farey(4);
  const auto third = std::find(seq.begin(), seq.end(), FareyFraction{1, 3}) - seq.begin();
  EXPECT_EQ(letter_bounds(4, static_cast<std::size_t>(third)).low, 1);
  EXPECT_EQ(letter_bounds(4, static_cast<std::size_t>(third)).high, 2);
  EXPECT_EQ(letter_bounds(4, std::size_t{0}).low, 0);
  EXPECT_EQ(letter_bounds(5, FareyFraction{1, 2}).low, 2);
  EXPECT_EQ(letter_bounds(5, FareyFraction{1, 2}).high, 3);
  EXPECT_THROW(letter_bounds(4, seq.size() - 1), std::out_of_range);
}

TEST(LetterBounds, HoldInEveryClassUpToTwenty) {
  for (std::int64_t m = 1; m <= 20; ++m)
    for (const auto& cls : classes(m)) EXPECT_TRUE(letter_bounds_hold(cls)) << m << " " << cls.left.str();
}

TEST(HCount, Examples) {
  for (std::int64_t m = 0; m <= 20; ++m) EXPECT_EQ(h_count(m, 0), lipatov(static_cast<std::uint64_t>(m)));
  EXPECT_EQ(h_count(2, 1), 3u);
  EXPECT_EQ(h_count(1, 1), 1u);
}
