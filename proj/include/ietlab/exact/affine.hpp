#pragma once

#include "ietlab/exact/rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ietlab::exact {

/// Parameter-space variables. Elimination always runs x, then ell, then epsilon.
enum class Var { epsilon = 0, ell = 1, x = 2 };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::epsilon: return "eps";
    case Var::ell: return "ell";
    case Var::x: return "x";
  }
  return "?";
}

/// A point (epsilon, ell, x) with exact coordinates.
struct Point {
  Rational epsilon;
  Rational ell;
  Rational x;

  const Rational& operator[](Var v) const {
    switch (v) {
      case Var::epsilon: return epsilon;
      case Var::ell: return ell;
      case Var::x: return x;
    }
    return x;
  }
  friend bool operator==(const Point&, const Point&) = default;
};

/// c0 + c_eps*eps + c_ell*ell + c_x*x with rational coefficients.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(Rational c0, Rational c_eps, Rational c_ell, Rational c_x)
      : c0_(std::move(c0)), coeff_{std::move(c_eps), std::move(c_ell), std::move(c_x)} {}

  static AffineForm constant(Rational c) { return AffineForm(std::move(c), 0, 0, 0); }
  static AffineForm variable(Var v) {
    AffineForm f;
    f.coeff_[static_cast<int>(v)] = 1;
    return f;
  }
  static AffineForm epsilon() { return variable(Var::epsilon); }
  static AffineForm ell() { return variable(Var::ell); }
  static AffineForm x() { return variable(Var::x); }

  const Rational& c0() const { return c0_; }
  const Rational& coeff(Var v) const { return coeff_[static_cast<int>(v)]; }
  void set_coeff(Var v, Rational value) { coeff_[static_cast<int>(v)] = std::move(value); }

  bool is_constant() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  Rational evaluate(const Point& p) const {
    return c0_ + coeff_[0] * p.epsilon + coeff_[1] * p.ell + coeff_[2] * p.x;
  }

  /// Replaces variable v by a constant value.
  AffineForm substitute(Var v, const Rational& value) const {
    AffineForm out = *this;
    out.c0_ += coeff(v) * value;
    out.set_coeff(v, 0);
    return out;
  }

  AffineForm& operator+=(const AffineForm& o) {
    c0_ += o.c0_;
    for (int i = 0; i < 3; ++i) coeff_[i] += o.coeff_[i];
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    c0_ -= o.c0_;
    for (int i = 0; i < 3; ++i) coeff_[i] -= o.coeff_[i];
    return *this;
  }
  AffineForm& operator*=(const Rational& s) {
    c0_ *= s;
    for (auto& c : coeff_) c *= s;
    return *this;
  }
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rational& s) { return a *= s; }
  friend AffineForm operator*(const Rational& s, AffineForm a) { return a *= s; }
  friend AffineForm operator+(AffineForm a, const Rational& c) { return a += constant(c); }
  friend AffineForm operator-(AffineForm a, const Rational& c) { return a -= constant(c); }
  AffineForm operator-() const { return *this * Rational(-1); }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

  std::string str() const {
    std::string out;
    static constexpr std::array<const char*, 3> names{"eps", "ell", "x"};
    for (int i = 0; i < 3; ++i) {
      if (coeff_[i].is_zero()) continue;
      const Rational mag = coeff_[i].abs();
      out += coeff_[i].sign() < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
      if (mag != Rational(1)) out += mag.str() + "*";
      out += names[i];
    }
    if (!c0_.is_zero() || out.empty()) {
      if (out.empty()) out = c0_.str();
      else out += (c0_.sign() < 0 ? " - " : " + ") + c0_.abs().str();
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const AffineForm& f) { return os << f.str(); }

 private:
  Rational c0_;
  std::array<Rational, 3> coeff_;
};

enum class Relation { positive, nonnegative };  // "> 0" and ">= 0"

struct Constraint {
  AffineForm form;
  Relation relation = Relation::positive;

  bool strict() const { return relation == Relation::positive; }
  bool satisfied_by(const Point& p) const {
    const int s = form.evaluate(p).sign();
    return strict() ? s > 0 : s >= 0;
  }
  std::string str() const { return form.str() + (strict() ? " > 0" : " >= 0"); }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline Constraint greater(AffineForm f) { return {std::move(f), Relation::positive}; }
inline Constraint greater_equal(AffineForm f) { return {std::move(f), Relation::nonnegative}; }
/// lhs >= rhs and lhs > rhs conveniences.
inline Constraint at_least(const AffineForm& lhs, const AffineForm& rhs) { return greater_equal(lhs - rhs); }
inline Constraint above(const AffineForm& lhs, const AffineForm& rhs) { return greater(lhs - rhs); }

/// Conjunction of strict and non-strict affine constraints over (eps, ell, x).
class StrictSystem {
 public:
  StrictSystem() = default;
  explicit StrictSystem(std::vector<Constraint> cs) : constraints_(std::move(cs)) {}

  void add(Constraint c) { constraints_.push_back(std::move(c)); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

  bool satisfied_by(const Point& p) const {
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return c.satisfied_by(p); });
  }

  /// True when the system contains the canonical contradiction 0 > 0.
  bool trivially_infeasible() const {
    return std::any_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) {
      return c.form.is_constant() && !c.satisfied_by(Point{});
    });
  }

  bool mentions(Var v) const {
    return std::any_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return !c.form.coeff(v).is_zero(); });
  }

  StrictSystem substitute(Var v, const Rational& value) const {
    StrictSystem out;
    out.constraints_.reserve(constraints_.size());
    for (const auto& c : constraints_) out.constraints_.push_back({c.form.substitute(v, value), c.relation});
    return out;
  }

  /// Scales every constraint so its variable coefficients are coprime
  /// integers, drops satisfied constant constraints, keeps only the tightest
  /// constraint per direction, and collapses contradictions to {0 > 0}.
  void normalize();

  std::string str() const {
    std::string out;
    for (const auto& c : constraints_) out += c.str() + "\n";
    return out;
  }

 private:
  std::vector<Constraint> constraints_;
};

namespace detail {

inline Constraint scaled_primitive(const Constraint& c) {
  Integer den_lcm = 1;
  for (Var v : {Var::epsilon, Var::ell, Var::x}) {
    const Rational& k = c.form.coeff(v);
    if (!k.is_zero()) den_lcm = boost::multiprecision::lcm(den_lcm, k.denominator());
  }
  Integer num_gcd = 0;
  for (Var v : {Var::epsilon, Var::ell, Var::x}) {
    const Rational& k = c.form.coeff(v);
    if (!k.is_zero()) num_gcd = boost::multiprecision::gcd(num_gcd, (k * Rational(den_lcm)).numerator());
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  if (num_gcd == 0) return c;
  return {c.form * Rational(den_lcm, num_gcd), c.relation};
}

inline bool same_direction(const AffineForm& a, const AffineForm& b) {
  return a.coeff(Var::epsilon) == b.coeff(Var::epsilon) && a.coeff(Var::ell) == b.coeff(Var::ell) &&
         a.coeff(Var::x) == b.coeff(Var::x);
}

inline bool direction_less(const AffineForm& a, const AffineForm& b) {
  for (Var v : {Var::epsilon, Var::ell, Var::x}) {
    if (a.coeff(v) != b.coeff(v)) return a.coeff(v) < b.coeff(v);
  }
  return false;
}

}  // namespace detail

inline void StrictSystem::normalize() {
  std::vector<Constraint> scaled;
  scaled.reserve(constraints_.size());
  for (const auto& c : constraints_) {
    if (c.form.is_constant()) {
      if (c.satisfied_by(Point{})) continue;
      constraints_ = {greater(AffineForm::constant(0))};
      return;
    }
    scaled.push_back(detail::scaled_primitive(c));
  }
  // For a fixed direction, dir.v + c0 (rel) 0 is tightest for the smallest
  // c0, with strict beating non-strict on ties.
  std::sort(scaled.begin(), scaled.end(), [](const Constraint& a, const Constraint& b) {
    if (!detail::same_direction(a.form, b.form)) return detail::direction_less(a.form, b.form);
    if (a.form.c0() != b.form.c0()) return a.form.c0() < b.form.c0();
    return a.strict() && !b.strict();
  });
  std::vector<Constraint> kept;
  for (auto& c : scaled) {
    if (!kept.empty() && detail::same_direction(kept.back().form, c.form)) continue;
    kept.push_back(std::move(c));
  }
  constraints_ = std::move(kept);
}

/// Fourier-Motzkin projection of sys along v. A combined constraint is
/// strict iff either parent is strict, which keeps the projection exact over
/// the reals for mixed systems.
inline StrictSystem eliminate(const StrictSystem& sys, Var v) {
  std::vector<const Constraint*> lower, upper;
  StrictSystem out;
  for (const auto& c : sys.constraints()) {
    const int s = c.form.coeff(v).sign();
    if (s > 0) lower.push_back(&c);
    else if (s < 0) upper.push_back(&c);
    else out.add(c);
  }
  for (const Constraint* lo : lower) {
    for (const Constraint* up : upper) {
      // lo: a*v + r >= 0 (a > 0); up: -b*v + s >= 0 (b > 0)  =>  b*r + a*s >= 0
      const Rational a = lo->form.coeff(v);
      const Rational b = -up->form.coeff(v);
      AffineForm combined = lo->form * b + up->form * a;
      combined.set_coeff(v, 0);
      const bool strict = lo->strict() || up->strict();
      out.add({std::move(combined), strict ? Relation::positive : Relation::nonnegative});
    }
  }
  out.normalize();
  return out;
}

/// An interval on the real line with optional rational endpoints.
struct Interval {
  bool empty = false;
  std::optional<Rational> lower;  // nullopt means unbounded
  bool lower_closed = false;
  std::optional<Rational> upper;
  bool upper_closed = false;

  static Interval empty_set() { return Interval{true, std::nullopt, false, std::nullopt, false}; }

  bool has_positive_length() const {
    if (empty) return false;
    if (!lower || !upper) return true;
    return *lower < *upper;
  }

  bool contains(const Rational& t) const {
    if (empty) return false;
    if (lower && (lower_closed ? t < *lower : t <= *lower)) return false;
    if (upper && (upper_closed ? t > *upper : t >= *upper)) return false;
    return true;
  }

  /// Midpoint for bounded intervals; endpoint -/+ 1 for half-infinite ones.
  std::optional<Rational> interior_sample() const {
    if (empty) return std::nullopt;
    if (lower && upper) return midpoint(*lower, *upper);
    if (lower) return *lower + Rational(1);
    if (upper) return *upper - Rational(1);
    return Rational(0);
  }

  std::string str() const {
    if (empty) return "{}";
    std::string out = lower ? (lower_closed ? "[" : "(") + lower->str() : "(-inf";
    out += ", ";
    out += upper ? upper->str() + (upper_closed ? "]" : ")") : "+inf)";
    return out;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Feasible values of v in a system that mentions no other variable.
inline Interval single_variable_interval(const StrictSystem& sys, Var v) {
  Interval out;
  for (const auto& c : sys.constraints()) {
    const Rational& k = c.form.coeff(v);
    if (k.is_zero()) {
      if (!c.satisfied_by(Point{})) return Interval::empty_set();
      continue;
    }
    // k*v + c0 (rel) 0  =>  v (rel) -c0/k, direction by sign of k
    const Rational bound = -c.form.c0() / k;
    const bool closed = !c.strict();
    if (k.sign() > 0) {
      if (!out.lower || bound > *out.lower || (bound == *out.lower && !closed)) {
        out.lower = bound;
        out.lower_closed = closed;
      }
    } else {
      if (!out.upper || bound < *out.upper || (bound == *out.upper && !closed)) {
        out.upper = bound;
        out.upper_closed = closed;
      }
    }
  }
  if (out.lower && out.upper) {
    if (*out.lower > *out.upper) return Interval::empty_set();
    if (*out.lower == *out.upper && !(out.lower_closed && out.upper_closed)) return Interval::empty_set();
  }
  return out;
}

/// Exact projection of sys onto epsilon (eliminates x, then ell).
inline Interval epsilon_projection(const StrictSystem& sys) {
  StrictSystem reduced = sys;
  reduced.normalize();
  reduced = eliminate(reduced, Var::x);
  reduced = eliminate(reduced, Var::ell);
  if (reduced.trivially_infeasible()) return Interval::empty_set();
  return single_variable_interval(reduced, Var::epsilon);
}

/// Deterministic interior point: back-substitutes interval midpoints in the
/// order epsilon, ell, x. Returns nullopt for infeasible systems.
inline std::optional<Point> sample_point(const StrictSystem& sys) {
  StrictSystem full = sys;
  full.normalize();
  const StrictSystem no_x = eliminate(full, Var::x);
  const StrictSystem eps_only = eliminate(no_x, Var::ell);
  if (eps_only.trivially_infeasible()) return std::nullopt;

  const auto eps = single_variable_interval(eps_only, Var::epsilon).interior_sample();
  if (!eps) return std::nullopt;
  const auto ell = single_variable_interval(no_x.substitute(Var::epsilon, *eps), Var::ell).interior_sample();
  if (!ell) return std::nullopt;
  const auto x = single_variable_interval(full.substitute(Var::epsilon, *eps).substitute(Var::ell, *ell), Var::x)
                     .interior_sample();
  if (!x) return std::nullopt;
  return Point{*eps, *ell, *x};
}

}  // namespace ietlab::exact
