#pragma once

#include "ietlab/sturmian.hpp"
#include "ietlab/triet.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ietlab::analysis {

using Decimal = boost::multiprecision::cpp_dec_float_50;

/// Distinct prime divisors of n in increasing order (trial division).
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// phi(n) = n * prod_{p | n} (1 - 1/p).
inline std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient needs n >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

inline std::uint64_t totient_sum(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) total += totient(k);
  return total;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// #{1 <= p <= n : gcd(p, q) = 1} for n >= 0, by inclusion-exclusion over
// the square-free divisors of q.
inline std::int64_t coprime_prefix(std::int64_t n, const std::vector<std::uint64_t>& primes) {
  std::int64_t total = 0;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::int64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= static_cast<std::int64_t>(primes[i]);
        ++bits;
      }
    }
    total += (bits % 2 == 0 ? 1 : -1) * floor_div(n, d);
  }
  return total;
}

}  // namespace detail

/// #{p : j <= p <= i, gcd(p, q) = 1}. Negative bounds are allowed.
inline std::int64_t coprime_in_range(std::uint64_t q, std::int64_t j, std::int64_t i) {
  if (q == 0) throw std::invalid_argument("coprime_in_range needs q >= 1");
  if (j > i) return 0;
  const auto primes = prime_divisors(q);
  // floor-division form is valid for any integer n, positive or not
  return detail::coprime_prefix(i, primes) - detail::coprime_prefix(j - 1, primes);
}

inline Decimal pi() { return boost::math::constants::pi<Decimal>(); }

/// Decimal rendering with `digits` significant figures.
inline std::string significant(const Decimal& value, int digits) {
  std::ostringstream os;
  if (value == 0) return "0";
  const int exponent = static_cast<int>(std::floor(std::log10(value.convert_to<double>())));
  const int decimals = std::max(0, digits - 1 - exponent);
  // round in the 50-digit type before printing
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

struct BoundsRow {
  std::size_t length = 0;
  std::uint64_t count = 0;
  Decimal ratio;  // pi^2 * count / N^4
  static constexpr const char* lower_const = "17/48";
  static constexpr const char* upper_const = "2";
};

inline Decimal bounds_ratio(std::size_t length, std::uint64_t count) {
  const Decimal n(static_cast<std::uint64_t>(length));
  return pi() * pi() * Decimal(count) / (n * n * n * n);
}

inline std::vector<BoundsRow> bounds_table(const std::vector<std::uint64_t>& counts) {
  std::vector<BoundsRow> rows;
  for (std::size_t n = 1; n < counts.size(); ++n) rows.push_back({n, counts[n], bounds_ratio(n, counts[n])});
  return rows;
}

/// Counts #3iet(N) for N = 0..max_length from a single depth-first pass.
inline std::vector<std::uint64_t> factor_counts(std::size_t max_length, const triet::EnumerateOptions& options = {}) {
  std::vector<std::uint64_t> counts;
  for (const auto& level : triet::enumerate_levels(max_length, options)) counts.push_back(level.size());
  return counts;
}

inline std::vector<BoundsRow> bounds_table(std::size_t max_length, const triet::EnumerateOptions& options = {}) {
  if (max_length < 1) throw std::invalid_argument("bounds table needs Nmax >= 1");
  return bounds_table(factor_counts(max_length, options));
}

struct PropLowerReport {
  std::size_t length = 0;
  std::uint64_t lhs = 0;  // #3iet(N)
  std::uint64_t rhs = 0;  // 2 * sum_{b <= N/2} H_{N-b,b}
  bool holds = false;
};

inline PropLowerReport prop_lower_report(std::size_t length, std::uint64_t factor_count) {
  std::uint64_t sum = 0;
  for (std::size_t b = 0; b <= length / 2; ++b) sum += sturmian::h_count(static_cast<std::int64_t>(length - b), b);
  return {length, factor_count, 2 * sum, factor_count >= 2 * sum};
}

inline PropLowerReport prop_lower_report(std::size_t length) {
  return prop_lower_report(length, triet::enumerate(length).size());
}

/// Asymptotic upper estimate (3/pi^2)(M - 2b)M for #Z_{M,b}; reported only.
inline Decimal z_asymptotic(std::int64_t order, std::int64_t b) {
  return Decimal(3) / (pi() * pi()) * Decimal(order - 2 * b) * Decimal(order);
}

}  // namespace ietlab::analysis
