#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ietlab::exact {

using Integer = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when text does not match the exact-number grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("expected integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw ParseError("expected integer, got '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? Integer(-value) : value;
}

/// Arbitrary-precision rational number kept in lowest terms with a positive
/// denominator. Values whose numerator and denominator fit in 64 bits are
/// computed with 128-bit intermediates; everything else falls back to
/// boost::multiprecision.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) { assign(BigRational(n)); }  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    // cpp_rational rejects a negative denominator
    assign(d < 0 ? BigRational(Integer(-n), Integer(-d)) : BigRational(n, d));
  }

  /// Accepts "p/q" or a bare integer.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), d);
  }

  Integer numerator() const { return big_ ? Integer(boost::multiprecision::numerator(*big_)) : Integer(num_); }
  Integer denominator() const { return big_ ? Integer(boost::multiprecision::denominator(*big_)) : Integer(den_); }

  int sign() const {
    if (big_) return big_->sign();
    return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
  }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Integer floor() const {
    const Integer n = numerator();
    const Integer d = denominator();
    Integer q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
  }
  Integer ceil() const {
    const Integer f = floor();
    return is_integer() ? f : Integer(f + 1);
  }

  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_big(-as_big());
  }

  Rational& operator+=(const Rational& o) {
    if (!big_ && !o.big_) return set_reduced(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
    return assign(as_big() + o.as_big());
  }
  Rational& operator-=(const Rational& o) {
    if (!big_ && !o.big_) return set_reduced(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
    return assign(as_big() - o.as_big());
  }
  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) return set_reduced(Wide(num_) * o.num_, Wide(den_) * o.den_);
    return assign(as_big() * o.as_big());
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    if (!big_ && !o.big_) return set_reduced(Wide(num_) * o.den_, Wide(den_) * o.num_);
    return assign(as_big() / o.as_big());
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: small values are never stored big
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
    const int c = a.as_big().compare(b.as_big());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Wide = __int128;

  static bool fits(Wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
  }

  static unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Integer to_integer(Wide v) {
    const bool negative = v < 0;
    auto mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag & ~std::uint64_t{0});
    return negative ? Integer(-out) : out;
  }

  // n/d with d != 0, both already exact 128-bit values
  Rational& set_reduced(Wide n, Wide d) {
    if (d < 0) {
      if (n == std::numeric_limits<Wide>::min() || d == std::numeric_limits<Wide>::min())
        return assign(BigRational(to_integer(n), to_integer(d)));
      n = -n;
      d = -d;
    }
    const auto mag = n < 0 ? static_cast<unsigned __int128>(-(n + 1)) + 1 : static_cast<unsigned __int128>(n);
    const auto g = static_cast<Wide>(gcd_wide(mag, static_cast<unsigned __int128>(d)));
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return *this;
    }
    return assign(BigRational(to_integer(n), to_integer(d)));
  }

  BigRational as_big() const { return big_ ? *big_ : BigRational(num_, den_); }

  Rational& assign(BigRational v) {
    const Integer n = boost::multiprecision::numerator(v);
    const Integer d = boost::multiprecision::denominator(v);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max() &&
        d <= std::numeric_limits<std::int64_t>::max()) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
      big_.reset();
    } else {
      big_ = std::move(v);
    }
    return *this;
  }

  static Rational from_big(BigRational v) {
    Rational r;
    r.assign(std::move(v));
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::optional<BigRational> big_;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace ietlab::exact
