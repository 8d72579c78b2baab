#pragma once

#include "ietlab/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ietlab::exact {

/// Raised by quad_cmp when both operands are irrational with different radicands.
class IncomparableRadicands : public std::domain_error {
 public:
  IncomparableRadicands() : std::domain_error("incomparable radicands") {}
};

/// Exact real number (a + b*sqrt(d)) / c with square-free d.
///
/// Rational values are stored with b = 0 and d = 0, so d > 1 iff the value
/// is irrational. Two values compare exactly when they share d or when at
/// least one of them is rational.
class QuadraticReal {
 public:
  QuadraticReal() : c_(1) {}
  QuadraticReal(const Rational& r)  // NOLINT(google-explicit-constructor)
      : a_(r.numerator()), c_(r.denominator()) {}
  QuadraticReal(std::int64_t n) : QuadraticReal(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  QuadraticReal(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
  }

  static QuadraticReal parse(std::string_view text);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational rational_part() const { return Rational(a_, c_); }
  Rational irrational_coefficient() const { return Rational(b_, c_); }
  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return Rational(a_, c_);
  }

  double to_double() const {
    return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>())) /
           c_.convert_to<double>();
  }

  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a and b*sqrt(d) have opposite signs; compare magnitudes squared.
    const Integer lhs = a_ * a_;
    const Integer rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  std::string str() const {
    if (is_rational()) return rational_part().str();
    std::string out = "(";
    if (a_ != 0) out += a_.str();
    const Integer mag = b_ < 0 ? Integer(-b_) : b_;
    if (b_ < 0) out += "-";
    else if (a_ != 0) out += "+";
    if (mag != 1) out += mag.str() + "*";
    out += "sqrt(" + d_.str() + "))";
    if (c_ != 1) out += "/" + c_.str();
    return out;
  }

  QuadraticReal operator-() const { return QuadraticReal(-a_, -b_, c_, d_); }

  friend QuadraticReal operator+(const QuadraticReal& u, const QuadraticReal& v) {
    const Integer d = common_radicand(u, v);
    return QuadraticReal(u.a_ * v.c_ + v.a_ * u.c_, u.b_ * v.c_ + v.b_ * u.c_, u.c_ * v.c_, d);
  }
  friend QuadraticReal operator-(const QuadraticReal& u, const QuadraticReal& v) { return u + (-v); }
  friend QuadraticReal operator*(const QuadraticReal& u, const Rational& r) {
    return QuadraticReal(u.a_ * r.numerator(), u.b_ * r.numerator(), u.c_ * r.denominator(), u.d_);
  }
  friend QuadraticReal operator*(const Rational& r, const QuadraticReal& u) { return u * r; }

  friend bool operator==(const QuadraticReal& u, const QuadraticReal& v) {
    return u.a_ == v.a_ && u.b_ == v.b_ && u.c_ == v.c_ && u.d_ == v.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticReal& q) { return os << q.str(); }

  /// Radicand shared by u and v (0 when both are rational).
  static Integer common_radicand(const QuadraticReal& u, const QuadraticReal& v) {
    if (u.is_rational()) return v.d_;
    if (v.is_rational() || u.d_ == v.d_) return u.d_;
    throw IncomparableRadicands();
  }

 private:
  void normalize() {
    if (c_ == 0) throw std::domain_error("quadratic real with zero denominator");
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    if (d_ > 1 && b_ != 0) {
      // pull square factors out of the radicand
      Integer outside = 1;
      for (Integer k = 2; k * k <= d_; ++k) {
        while (d_ % (k * k) == 0) {
          d_ /= k * k;
          outside *= k;
        }
      }
      b_ *= outside;
    }
    if (d_ == 1) a_ += b_;
    if (d_ <= 1 || b_ == 0) {
      b_ = 0;
      d_ = 0;
    }
    Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  Integer a_{0};
  Integer b_{0};
  Integer c_{1};
  Integer d_{0};
};

/// Exact three-way comparison without floating point.
inline std::strong_ordering quad_cmp(const QuadraticReal& u, const QuadraticReal& v) {
  const int s = (u - v).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering operator<=>(const QuadraticReal& u, const QuadraticReal& v) {
  return quad_cmp(u, v);
}

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

// Parses "[a](+|-)[b*]sqrt(d)" or "[b*]sqrt(d)" into (a, b, d).
inline void parse_surd_sum(std::string_view body, Integer& a, Integer& b, Integer& d) {
  const auto root = body.find("sqrt(");
  if (root == std::string_view::npos || body.back() != ')')
    throw ParseError("expected sqrt(d) in '" + std::string(body) + "'");
  d = parse_integer(body.substr(root + 5, body.size() - root - 6));
  std::string_view head = body.substr(0, root);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  // head is now "[a](+|-)[b]" or "[(+|-)][b]"
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view coeff = head;
  a = 0;
  if (split != std::string_view::npos) {
    a = parse_integer(head.substr(0, split));
    coeff = head.substr(split);
  }
  if (coeff.empty() || coeff == "+") b = 1;
  else if (coeff == "-") b = -1;
  else b = parse_integer(coeff);
}

}  // namespace detail

/// Grammar: rationals "p/q" or integers; quadratic reals "(a+b*sqrt(d))/c".
/// The "b*" factor, the "/c" suffix and the "a" term are optional, and b may
/// carry a minus sign ("(3-sqrt(5))/2").
inline QuadraticReal QuadraticReal::parse(std::string_view raw) {
  const std::string text = detail::strip_spaces(raw);
  if (text.empty()) throw ParseError("empty number");
  if (text.find("sqrt") == std::string::npos) return QuadraticReal(Rational::parse(text));

  Integer a, b, d, c = 1;
  std::string_view view(text);
  if (view.front() == '(') {
    // find the parenthesis matching the leading one
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (view[i] == '(') ++depth;
      if (view[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced parentheses in '" + text + "'");
    std::string_view tail = view.substr(close + 1);
    if (!tail.empty()) {
      if (tail.front() != '/') throw ParseError("unexpected trailing text in '" + text + "'");
      c = parse_integer(tail.substr(1));
      if (c <= 0) throw ParseError("denominator must be positive in '" + text + "'");
    }
    detail::parse_surd_sum(view.substr(1, close - 1), a, b, d);
  } else {
    detail::parse_surd_sum(view, a, b, d);
  }
  if (d < 0) throw ParseError("negative radicand in '" + text + "'");
  return QuadraticReal(a, b, c, d);
}

}  // namespace ietlab::exact
