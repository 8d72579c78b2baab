#include "ietlab/analysis.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ietlab;
using namespace ietlab::analysis;

namespace {

std::uint64_t phi_by_gcd(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) total += std::gcd(k, n) == 1 ? 1 : 0;
  return total;
}

std::int64_t coprime_brute(std::int64_t q, std::int64_t j, std::int64_t i) {
  std::int64_t total = 0;
  for (std::int64_t p = j; p <= i; ++p) total += std::gcd(p < 0 ? -p : p, q) == 1 ? 1 : 0;
  return total;
}

}  // namespace

TEST(Totient, Examples) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(10), 4u);
  EXPECT_EQ(totient_sum(10), 32u);
  EXPECT_THROW(totient(0), std::invalid_argument);
}

TEST(Totient, MatchesGcdCountUpTo2000) {
  std::uint64_t sum = 0;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto phi = phi_by_gcd(n);
    sum += phi;
    ASSERT_EQ(totient(n), phi) << n;
  }
  EXPECT_EQ(totient_sum(2000), sum);
}

TEST(Totient, LipatovAgreesWithFactorizationPath) {
  for (std::uint64_t n = 0; n <= 500; ++n) {
    std::uint64_t expected = 1;
    for (std::uint64_t k = 1; k <= n; ++k) expected += (n + 1 - k) * totient(k);
    ASSERT_EQ(sturmian::lipatov(n), expected) << n;
  }
}

TEST(Totient, PartialSumCheckpoint) {
  const std::uint64_t n = 10'000;
  const Decimal scaled = Decimal(totient_sum(n)) * pi() * pi() / (Decimal(3) * Decimal(n) * Decimal(n));
  EXPECT_GE(scaled, Decimal("0.9"));
  EXPECT_LE(scaled, Decimal("1.1"));
}

TEST(CoprimeInRange, Examples) {
  EXPECT_EQ(coprime_in_range(1, 1, 7), 7);
  EXPECT_EQ(coprime_in_range(6, 1, 6), 2);
  EXPECT_EQ(coprime_in_range(6, 7, 12), 2);
  EXPECT_EQ(coprime_in_range(6, 5, 4), 0);
}

TEST(CoprimeInRange, FullPeriodIsTotient) {
  for (std::uint64_t q = 1; q <= 500; ++q)
    for (std::int64_t j : {-7, 0, 1, 13})
      ASSERT_EQ(coprime_in_range(q, j, j + static_cast<std::int64_t>(q) - 1), static_cast<std::int64_t>(totient(q)));
}

TEST(CoprimeInRange, MatchesBruteForce) {
  for (std::int64_t q = 1; q <= 60; ++q)
    for (std::int64_t j = -20; j <= 20; j += 3)
      for (std::int64_t i = j; i <= j + 50; i += 7)
        ASSERT_EQ(coprime_in_range(static_cast<std::uint64_t>(q), j, i), coprime_brute(q, j, i));
}

TEST(BoundsTable, PrintedRatios) {
  const auto rows = bounds_table(10);
  ASSERT_EQ(rows.size(), 10u);
  const std::vector<std::string> printed{"29.6", "5.55", "3.05", "2.12", "1.78", "1.52", "1.39", "1.28", "1.22", "1.15"};
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(significant(rows[i].ratio, 3), printed[i]) << i + 1;
  EXPECT_EQ(rows.back().count, 1165u);
  EXPECT_STREQ(BoundsRow::lower_const, "17/48");
  EXPECT_STREQ(BoundsRow::upper_const, "2");
  EXPECT_THROW(bounds_table(std::size_t{0}), std::invalid_argument);
}

TEST(BoundsTable, RatioRecomputesFromCount) {
  // 1165 * pi^2 / 10^4 to 12 figures
  EXPECT_EQ(significant(bounds_ratio(10, 1165), 12), "1.14980891273");
}

TEST(PropLower, Examples) {
  const auto two = prop_lower_report(2);
  EXPECT_EQ(two.lhs, 9u);
  EXPECT_EQ(two.rhs, 10u);
  EXPECT_FALSE(two.holds);
  const auto one = prop_lower_report(1);
  EXPECT_EQ(one.lhs, 3u);
  EXPECT_EQ(one.rhs, 4u);
  EXPECT_FALSE(one.holds);
  const auto zero = prop_lower_report(0);
  EXPECT_EQ(zero.lhs, 1u);
  EXPECT_EQ(zero.rhs, 2u);
  EXPECT_FALSE(zero.holds);
}

TEST(Significant, Rounding) {
  EXPECT_EQ(significant(Decimal("29.6088"), 3), "29.6");
  EXPECT_EQ(significant(Decimal("0.0012345"), 2), "0.0012");
  EXPECT_EQ(significant(Decimal(0), 3), "0");
}
