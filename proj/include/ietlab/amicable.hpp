#pragma once

#include "ietlab/sturmian.hpp"
#include "ietlab/triet.hpp"
#include "ietlab/word.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ietlab::amicable {

struct AmicablePair {
  BinaryWord w1;  // sigma01 image
  BinaryWord w2;  // sigma10 image
  TernaryWord merged;
  std::size_t b = 0;
};

namespace detail {

inline BinaryWord apply(const TernaryWord& w, const char* b_image) {
  std::string out;
  out.reserve(w.size() + w.count('B'));
  for (char ch : w) {
    if (ch == 'A') out.push_back('0');
    else if (ch == 'C') out.push_back('1');
    else out.append(b_image);
  }
  return BinaryWord::unchecked(std::move(out));
}

inline void require_same_length(const BinaryWord& w1, const BinaryWord& w2) {
  if (w1.size() != w2.size()) throw std::invalid_argument("length mismatch");
}

}  // namespace detail

/// A -> 0, B -> 01, C -> 1
inline BinaryWord sigma01(const TernaryWord& w) { return detail::apply(w, "01"); }
/// A -> 0, B -> 10, C -> 1
inline BinaryWord sigma10(const TernaryWord& w) { return detail::apply(w, "10"); }

/// The ternary word w with sigma01(w) = w1 and sigma10(w) = w2, if any.
/// Aligned head pairs decide each letter: (0,0) is A, (1,1) is C, (0,1)
/// must continue as (1,0) and is B, and (1,0) has no preimage.
inline std::optional<TernaryWord> merge(const BinaryWord& w1, const BinaryWord& w2) {
  detail::require_same_length(w1, w2);
  std::string out;
  std::size_t k = 0;
  while (k < w1.size()) {
    const char x = w1[k], y = w2[k];
    if (x == y) {
      out.push_back(x == '0' ? 'A' : 'C');
      ++k;
    } else if (x == '0' && k + 1 < w1.size() && w1[k + 1] == '1' && w2[k + 1] == '0') {
      out.push_back('B');
      k += 2;
    } else {
      return std::nullopt;
    }
  }
  return TernaryWord::unchecked(std::move(out));
}

inline std::optional<AmicablePair> amicable_pair(const BinaryWord& w1, const BinaryWord& w2) {
  auto merged = merge(w1, w2);
  if (!merged || !triet::is_factor(*merged)) return std::nullopt;
  const std::size_t b = merged->count('B');
  return AmicablePair{w1, w2, std::move(*merged), b};
}

inline bool is_b_amicable(const BinaryWord& w1, const BinaryWord& w2, std::size_t b) {
  detail::require_same_length(w1, w2);
  auto merged = merge(w1, w2);
  return merged && merged->count('B') == b && triet::is_factor(*merged);
}

namespace detail {

// Ordered b-amicable pairs with both components drawn from a sorted pool.
inline std::uint64_t count_within(const std::vector<BinaryWord>& pool, std::size_t b) {
  std::uint64_t total = 0;
  for (const auto& w1 : pool) {
    if (w1.count('0') < b || w1.count('1') < b) continue;
    for (const auto& w2 : pool) {
      if (is_b_amicable(w1, w2, b)) ++total;
    }
  }
  return total;
}

}  // namespace detail

/// Ordered b-amicable pairs of length M, scanned over all Sturmian factors of
/// length M (independently of the ternary enumeration).
inline std::uint64_t count_pairs(std::int64_t length, std::size_t b) {
  if (length < 0 || static_cast<std::size_t>(length) < b) throw std::invalid_argument("count_pairs needs M >= b >= 0");
  return detail::count_within(sturmian::all_factors(length), b);
}

inline std::uint64_t class_pair_count(const sturmian::SturmianClass& cls, std::size_t b) {
  if (2 * b > cls.order) return 0;
  return detail::count_within(cls.factors, b);
}

inline std::uint64_t class_pair_count(std::int64_t order, std::size_t index, std::size_t b) {
  return class_pair_count(sturmian::class_factors(order, index), b);
}

/// Upper bound on b: min(floor(M f_i) + 1, M - floor(M f_i)).
inline std::int64_t corollary_bound(const sturmian::SturmianClass& cls) {
  const auto order = static_cast<std::int64_t>(cls.order);
  const std::int64_t base = order * cls.left.p / cls.left.q;
  return std::min(base + 1, order - base);
}

struct ClassPairRow {
  sturmian::FareyFraction left;
  sturmian::FareyFraction right;
  std::uint64_t pairs = 0;
  std::int64_t bound = 0;  // M - b
  std::int64_t corollary = 0;
};

/// Per-class pair counts for order M and a fixed b.
inline std::vector<ClassPairRow> class_table(std::int64_t order, std::size_t b) {
  std::vector<ClassPairRow> rows;
  for (const auto& cls : sturmian::classes(order)) {
    rows.push_back({cls.left, cls.right, class_pair_count(cls, b), order - static_cast<std::int64_t>(b),
                    corollary_bound(cls)});
  }
  return rows;
}

/// #Z_{M,b}: classes of order M containing at least one b-amicable pair.
inline std::uint64_t z_count(std::int64_t order, std::size_t b) {
  if (order < 1) throw std::invalid_argument("z_count needs M >= 1");
  const auto rows = class_table(order, b);
  return static_cast<std::uint64_t>(
      std::count_if(rows.begin(), rows.end(), [](const ClassPairRow& r) { return r.pairs > 0; }));
}

}  // namespace ietlab::amicable
