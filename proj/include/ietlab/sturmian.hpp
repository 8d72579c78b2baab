#pragma once

#include "ietlab/exact/rational.hpp"
#include "ietlab/word.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ietlab::sturmian {

using exact::Rational;

/// Reduced fraction p/q in [0, 1].
struct FareyFraction {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Rational value() const { return Rational(p) / Rational(q); }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
  friend bool operator<(const FareyFraction& a, const FareyFraction& b) { return a.p * b.q < b.p * a.q; }
};

/// Length-M factor set shared by every irrational epsilon in (left, right),
/// where left and right are consecutive in the Farey sequence of order M.
struct SturmianClass {
  std::size_t order = 0;
  FareyFraction left;
  FareyFraction right;
  std::vector<BinaryWord> factors;  // sorted
};

enum class Mechanical { lower, upper };

/// u_k = floor((k+1)a + b) - floor(k a + b) (lower) or the ceiling variant (upper), k < n.
inline BinaryWord mechanical_word(const Rational& alpha, const Rational& beta, std::size_t n, Mechanical variant) {
  if (alpha < Rational(0) || alpha > Rational(1)) throw std::invalid_argument("mechanical word needs 0 <= alpha <= 1");
  if (beta < Rational(0) || beta >= Rational(1)) throw std::invalid_argument("mechanical word needs 0 <= beta < 1");
  auto step = [&](std::size_t k) {
    const Rational t = Rational(static_cast<std::int64_t>(k)) * alpha + beta;
    return variant == Mechanical::lower ? t.floor() : t.ceil();
  };
  std::string letters;
  letters.reserve(n);
  exact::Integer prev = step(0);
  for (std::size_t k = 0; k < n; ++k) {
    exact::Integer next = step(k + 1);
    letters.push_back(next - prev == 0 ? '0' : '1');
    prev = std::move(next);
  }
  return BinaryWord::unchecked(std::move(letters));
}

/// Farey sequence of order M in increasing order, from 0/1 to 1/1.
inline std::vector<FareyFraction> farey(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("Farey order must be positive");
  std::vector<FareyFraction> out{{0, 1}};
  std::int64_t a = 0, b = 1, c = 1, d = order;
  while (c <= order) {
    const std::int64_t k = (order + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    out.push_back({a, b});
  }
  return out;
}

/// Length-q coding of the orbit of 0 under the two-interval exchange with
/// I_0 = [0, p/q). All arithmetic is scaled by q, so it is exact.
inline BinaryWord periodic_coding(const FareyFraction& f) {
  std::string letters;
  letters.reserve(static_cast<std::size_t>(f.q));
  std::int64_t x = 0;
  for (std::int64_t k = 0; k < f.q; ++k) {
    if (x < f.p) {
      letters.push_back('0');
      x += f.q - f.p;
    } else {
      letters.push_back('1');
      x -= f.p;
    }
  }
  return BinaryWord::unchecked(std::move(letters));
}

/// Distinct length-n factors of the bi-infinite periodic word v^Z, sorted.
inline std::vector<BinaryWord> cyclic_factors(const BinaryWord& period, std::size_t n) {
  std::vector<BinaryWord> out;
  const std::string& v = period.str();
  out.reserve(v.size());
  for (std::size_t start = 0; start < v.size(); ++start) {
    std::string w;
    w.reserve(n);
    for (std::size_t k = 0; k < n; ++k) w.push_back(v[(start + k) % v.size()]);
    out.push_back(BinaryWord::unchecked(std::move(w)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::vector<BinaryWord> sorted_union(const std::vector<BinaryWord>& a, const std::vector<BinaryWord>& b) {
  std::vector<BinaryWord> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

inline std::size_t class_count(std::int64_t order) { return farey(order).size() - 1; }

/// The i-th class of order M: cyclic factors of the codings of f_i and f_{i+1}.
inline SturmianClass class_factors(std::int64_t order, std::size_t index, const std::vector<FareyFraction>& seq) {
  if (index + 1 >= seq.size()) throw std::out_of_range("class index out of range");
  SturmianClass cls{static_cast<std::size_t>(order), seq[index], seq[index + 1], {}};
  const auto n = static_cast<std::size_t>(order);
  cls.factors = detail::sorted_union(cyclic_factors(periodic_coding(cls.left), n),
                                     cyclic_factors(periodic_coding(cls.right), n));
  return cls;
}

inline SturmianClass class_factors(std::int64_t order, std::size_t index) {
  return class_factors(order, index, farey(order));
}

inline std::vector<SturmianClass> classes(std::int64_t order) {
  const auto seq = farey(order);
  std::vector<SturmianClass> out;
  out.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(class_factors(order, i, seq));
  return out;
}

/// All Sturmian factors of length M, sorted.
inline std::vector<BinaryWord> all_factors(std::int64_t length) {
  if (length < 0) throw std::invalid_argument("negative length");
  if (length == 0) return {BinaryWord{}};
  std::vector<BinaryWord> out;
  for (const auto& f : farey(length)) {
    auto part = cyclic_factors(periodic_coding(f), static_cast<std::size_t>(length));
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// phi(1..n) by a linear-time sieve
inline std::vector<std::uint64_t> totient_sieve(std::uint64_t n) {
  std::vector<std::uint64_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

}  // namespace detail

/// Number of Sturmian factors of length M: 1 + sum_{k<=M} (M+1-k) phi(k).
inline std::uint64_t lipatov(std::uint64_t length) {
  const auto phi = detail::totient_sieve(length);
  std::uint64_t total = 1;
  for (std::uint64_t k = 1; k <= length; ++k) total += (length + 1 - k) * phi[k];
  return total;
}

inline bool is_sturmian_factor(const BinaryWord& w) {
  const auto all = all_factors(static_cast<std::int64_t>(w.size()));
  return std::binary_search(all.begin(), all.end(), w);
}

/// Admissible counts of the letter 0 for factors in class i of order M.
struct LetterBounds {
  std::int64_t low = 0;   // floor(M f_i)
  std::int64_t high = 0;  // floor(M f_i) + 1
  bool admits(std::int64_t zeros) const { return zeros == low || zeros == high; }
};

inline LetterBounds letter_bounds(std::int64_t order, const FareyFraction& left) {
  const std::int64_t low = order * left.p / left.q;
  return {low, low + 1};
}

inline LetterBounds letter_bounds(std::int64_t order, std::size_t index) {
  const auto seq = farey(order);
  if (index + 1 >= seq.size()) throw std::out_of_range("class index out of range");
  return letter_bounds(order, seq[index]);
}

/// Checks every factor of the class against its letter bounds.
inline bool letter_bounds_hold(const SturmianClass& cls) {
  const auto bounds = letter_bounds(static_cast<std::int64_t>(cls.order), cls.left);
  return std::all_of(cls.factors.begin(), cls.factors.end(), [&](const BinaryWord& w) {
    return bounds.admits(static_cast<std::int64_t>(w.count('0')));
  });
}

/// H_{M,b}: Sturmian factors of length M with at least b letters 1.
inline std::uint64_t h_count(std::int64_t length, std::size_t min_ones) {
  const auto all = all_factors(length);
  return static_cast<std::uint64_t>(
      std::count_if(all.begin(), all.end(), [&](const BinaryWord& w) { return w.count('1') >= min_ones; }));
}

}  // namespace ietlab::sturmian
