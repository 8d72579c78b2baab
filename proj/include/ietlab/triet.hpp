#pragma once

#include "ietlab/exact/affine.hpp"
#include "ietlab/exact/quadratic.hpp"
#include "ietlab/word.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ietlab::triet {

using exact::AffineForm;
using exact::Interval;
using exact::Point;
using exact::QuadraticReal;
using exact::Rational;
using exact::StrictSystem;

/// Enumeration visited more prefixes than its budget allows.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the three-interval exchange T_{eps,ell} with starting point x0.
class IetParams {
 public:
  /// Throws std::invalid_argument unless 0 < eps < 1 irrational,
  /// max(eps, 1-eps) < ell < 1 and 0 <= x0 < ell.
  IetParams(QuadraticReal epsilon, QuadraticReal ell, QuadraticReal x0)
      : epsilon_(std::move(epsilon)), ell_(std::move(ell)), x0_(std::move(x0)) {
    const QuadraticReal zero(0), one(1);
    if (epsilon_.is_rational()) throw std::invalid_argument("epsilon must be irrational");
    if (!(zero < epsilon_ && epsilon_ < one)) throw std::invalid_argument("epsilon must lie in (0,1)");
    const QuadraticReal& wider = epsilon_ > one - epsilon_ ? epsilon_ : one - epsilon_;
    if (!(wider < ell_ && ell_ < one)) throw std::invalid_argument("ell must satisfy max(eps,1-eps) < ell < 1");
    if (!(zero <= x0_ && x0_ < ell_)) throw std::invalid_argument("x0 must lie in [0, ell)");
  }

  const QuadraticReal& epsilon() const { return epsilon_; }
  const QuadraticReal& ell() const { return ell_; }
  const QuadraticReal& x0() const { return x0_; }

  /// Left endpoint of I_B, i.e. ell - 1 + eps.
  QuadraticReal left_cut() const { return ell_ - QuadraticReal(1) + epsilon_; }

 private:
  QuadraticReal epsilon_;
  QuadraticReal ell_;
  QuadraticReal x0_;
};

/// Letter coding the interval that contains x.
inline char letter_at(const IetParams& params, const QuadraticReal& x) {
  if (x < params.left_cut()) return 'A';
  if (x < params.epsilon()) return 'B';
  return 'C';
}

/// One application of T_{eps,ell}; x must lie in [0, ell).
inline QuadraticReal transform(const IetParams& params, const QuadraticReal& x) {
  if (x < QuadraticReal(0) || !(x < params.ell())) throw std::out_of_range("x outside [0, ell)");
  switch (letter_at(params, x)) {
    case 'A': return x + QuadraticReal(1) - params.epsilon();
    case 'B': return x + QuadraticReal(1) - params.epsilon() - params.epsilon();
    default: return x - params.epsilon();
  }
}

/// First n letters of u_{eps,ell,x0}.
inline TernaryWord code_orbit(const IetParams& params, std::size_t n) {
  std::string letters;
  letters.reserve(n);
  QuadraticReal x = params.x0();
  for (std::size_t k = 0; k < n; ++k) {
    letters.push_back(letter_at(params, x));
    if (k + 1 < n) x = transform(params, x);
  }
  return TernaryWord::unchecked(std::move(letters));
}

/// Constraints eps > 0, 1 - eps > 0, ell - eps > 0, ell - (1 - eps) > 0,
/// 1 - ell > 0 and x >= 0.
inline StrictSystem parameter_box() {
  const AffineForm eps = AffineForm::epsilon();
  const AffineForm ell = AffineForm::ell();
  const AffineForm one = AffineForm::constant(1);
  StrictSystem sys;
  sys.add(exact::greater(eps));
  sys.add(exact::greater(one - eps));
  sys.add(exact::greater(ell - eps));
  sys.add(exact::greater(ell - (one - eps)));
  sys.add(exact::greater(one - ell));
  sys.add(exact::greater_equal(AffineForm::x()));
  return sys;
}

/// Orbit point after j steps: x + (a + b) - (a + 2b + c) eps, where a, b, c
/// count the letters of the first j positions.
inline AffineForm orbit_point(std::int64_t a, std::int64_t b, std::int64_t c) {
  return AffineForm(Rational(a + b), Rational(-(a + 2 * b + c)), 0, 1);
}

/// Half-open membership constraints of each orbit point in the interval its
/// letter names, together with the parameter box.
inline StrictSystem word_constraints(const TernaryWord& w) {
  StrictSystem sys = parameter_box();
  const AffineForm eps = AffineForm::epsilon();
  const AffineForm ell = AffineForm::ell();
  const AffineForm left_cut = ell - Rational(1) + eps;
  std::int64_t a = 0, b = 0, c = 0;
  for (char letter : w) {
    const AffineForm p = orbit_point(a, b, c);
    switch (letter) {
      case 'A':
        sys.add(exact::greater_equal(p));
        sys.add(exact::above(left_cut, p));
        ++a;
        break;
      case 'B':
        sys.add(exact::at_least(p, left_cut));
        sys.add(exact::above(eps, p));
        ++b;
        break;
      default:
        sys.add(exact::at_least(p, eps));
        sys.add(exact::above(ell, p));
        ++c;
        break;
    }
  }
  return sys;
}

/// True iff some irrational eps (with suitable ell, x0) realizes w as a
/// factor, i.e. the epsilon-projection of w's constraints has positive length.
inline bool is_factor(const TernaryWord& w) {
  return exact::epsilon_projection(word_constraints(w)).has_positive_length();
}

struct FactorWitness {
  TernaryWord word;
  Interval epsilon_interval;
  Point sample;
  /// Largest r such that (eps, ell*, x*) satisfies every constraint for
  /// |eps - eps*| < r; any irrational eps in that range realizes the word.
  Rational min_slack;
};

inline std::optional<FactorWitness> witness(const TernaryWord& w) {
  const StrictSystem sys = word_constraints(w);
  const Interval proj = exact::epsilon_projection(sys);
  if (!proj.has_positive_length()) return std::nullopt;
  auto sample = exact::sample_point(sys);
  if (!sample) return std::nullopt;
  std::optional<Rational> radius;
  for (const auto& c : sys.constraints()) {
    const Rational& k = c.form.coeff(exact::Var::epsilon);
    if (k.is_zero()) continue;
    const Rational r = c.form.evaluate(*sample) / k.abs();
    if (!radius || r < *radius) radius = r;
  }
  return FactorWitness{w, proj, *sample, radius.value_or(Rational(1))};
}

struct EnumerateOptions {
  unsigned workers = 1;
  std::uint64_t max_nodes = 50'000'000;  // feasibility tests allowed in total
};

namespace detail {

// Depth-first extension of a feasible prefix; every feasible word of length
// k <= max_length is appended to levels[k].
inline void extend(const TernaryWord& prefix, std::size_t max_length, std::vector<std::vector<TernaryWord>>& levels,
                   std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes) {
  levels[prefix.size()].push_back(prefix);
  if (prefix.size() == max_length) return;
  for (char letter : {'A', 'B', 'C'}) {
    if (nodes.fetch_add(1, std::memory_order_relaxed) >= max_nodes)
      throw ResourceLimitError("enumeration exceeded " + std::to_string(max_nodes) + " feasibility tests");
    TernaryWord next = prefix + letter;
    if (is_factor(next)) extend(next, max_length, levels, nodes, max_nodes);
  }
}

}  // namespace detail

/// 3iet(k) for k = 0..max_length, each sorted with A < B < C.
///
/// Depth-first over feasible prefixes: the factor set is closed under taking
/// prefixes, so pruning loses nothing. With several workers the prefixes of
/// a small seed depth are distributed; the result does not depend on the
/// worker count.
inline std::vector<std::vector<TernaryWord>> enumerate_levels(std::size_t max_length,
                                                              const EnumerateOptions& options = {}) {
  std::atomic<std::uint64_t> nodes{0};
  const std::size_t seed_depth = std::min<std::size_t>(max_length, options.workers > 1 ? 3 : 0);
  std::vector<std::vector<TernaryWord>> levels(max_length + 1);
  detail::extend(TernaryWord{}, seed_depth, levels, nodes, options.max_nodes);
  const std::vector<TernaryWord> frontier = levels[seed_depth];
  levels[seed_depth].clear();

  std::vector<std::vector<std::vector<TernaryWord>>> partial(
      frontier.size(), std::vector<std::vector<TernaryWord>>(max_length + 1));
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(frontier.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i)
      detail::extend(frontier[i], max_length, partial[i], nodes, options.max_nodes);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < frontier.size(); i = next++)
            detail::extend(frontier[i], max_length, partial[i], nodes, options.max_nodes);
        } catch (...) {
          errors[t] = std::current_exception();
          next = frontier.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& part : partial)
    for (std::size_t k = seed_depth; k <= max_length; ++k)
      levels[k].insert(levels[k].end(), part[k].begin(), part[k].end());
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

/// 3iet(N), sorted with A < B < C.
inline std::vector<TernaryWord> enumerate(std::size_t length, const EnumerateOptions& options = {}) {
  return std::move(enumerate_levels(length, options).back());
}

/// #3iet(N, b) for every b that occurs.
inline std::map<std::size_t, std::uint64_t> count_by_b(const std::vector<TernaryWord>& words) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& w : words) ++out[w.count('B')];
  return out;
}

inline std::map<std::size_t, std::uint64_t> count_by_b(std::size_t length, const EnumerateOptions& options = {}) {
  return count_by_b(enumerate(length, options));
}

}  // namespace ietlab::triet
