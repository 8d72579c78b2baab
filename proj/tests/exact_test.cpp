#include "ietlab/exact/affine.hpp"
#include "ietlab/exact/quadratic.hpp"
#include "ietlab/exact/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace ietlab::exact;

namespace {

using Big = boost::multiprecision::cpp_rational;
using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<80>>;

Big big(const Rational& r) { return Big(r.numerator(), r.denominator()); }

Rational random_rational(std::mt19937_64& rng, std::int64_t span) {
  std::uniform_int_distribution<std::int64_t> num(-span, span);
  std::uniform_int_distribution<std::int64_t> den(1, span);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

Dec decimal(const QuadraticReal& q) {
  return (Dec(q.a()) + Dec(q.b()) * sqrt(Dec(q.d()))) / Dec(q.c());
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2) * Rational(1));
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, MatchesBoostOracleOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng, 1'000'000'000'000LL);
    const Rational b = random_rational(rng, 1'000'000'000'000LL);
    EXPECT_EQ(big(a + b), big(a) + big(b));
    EXPECT_EQ(big(a - b), big(a) - big(b));
    EXPECT_EQ(big(a * b), big(a) * big(b));
    if (!b.is_zero()) {
      EXPECT_EQ(big(a / b), big(a) / big(b));
    }
    EXPECT_EQ(a < b, big(a) < big(b));
  }
}

TEST(Rational, FieldLawsOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000), c = random_rational(rng, 1000);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(Rational, OverflowFallsBackToBigValues) {
  const Rational huge(std::numeric_limits<std::int64_t>::max());
  const Rational square = huge * huge;
  EXPECT_EQ(big(square), big(huge) * big(huge));
  EXPECT_EQ(square / huge, huge);
  EXPECT_EQ(-Rational(std::numeric_limits<std::int64_t>::min()), Rational(Integer("9223372036854775808")));
  EXPECT_EQ((square - square).str(), "0");
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(-7, 2) * Rational(1), Rational::parse("-7/2"));
  EXPECT_EQ(Rational::parse("-7/2").floor(), -4);
  EXPECT_EQ(Rational::parse("-7/2").ceil(), -3);
  EXPECT_EQ(Rational::parse("7/2").floor(), 3);
  EXPECT_EQ(Rational(5).ceil(), 5);
}

TEST(QuadraticReal, ComparisonExamples) {
  EXPECT_EQ(quad_cmp(QuadraticReal::parse("sqrt(2)"), QuadraticReal::parse("141/100")), std::strong_ordering::greater);
  EXPECT_EQ(quad_cmp(QuadraticReal::parse("(1+sqrt(5))/2"), QuadraticReal::parse("(1+sqrt(5))/2")),
            std::strong_ordering::equal);
  EXPECT_EQ(quad_cmp(QuadraticReal::parse("(1+sqrt(5))/2"), QuadraticReal::parse("8/5")), std::strong_ordering::greater);
  EXPECT_THROW((void)quad_cmp(QuadraticReal::parse("sqrt(2)"), QuadraticReal::parse("sqrt(3)")), IncomparableRadicands);
}

TEST(QuadraticReal, NormalizationFoldsSquaresAndRationals) {
  const QuadraticReal eight = QuadraticReal::parse("(2+3*sqrt(8))/4");  // (1 + 3 sqrt 2) / 2
  EXPECT_EQ(eight.d(), 2);
  EXPECT_EQ(eight.str(), "(1+3*sqrt(2))/2");
  EXPECT_TRUE(QuadraticReal::parse("(1+sqrt(4))/3").is_rational());
  EXPECT_EQ(QuadraticReal::parse("(1+sqrt(4))/3").str(), "1");
  EXPECT_EQ(QuadraticReal::parse("(3-sqrt(5))/2").str(), "(3-sqrt(5))/2");
  EXPECT_EQ(QuadraticReal::parse("5*sqrt(0)").str(), "0");
  EXPECT_THROW(QuadraticReal::parse("(1+sqrt(5)/2"), ParseError);
  EXPECT_THROW(QuadraticReal::parse("(1+sqrt(-5))/2"), ParseError);
}

TEST(QuadraticReal, CompareAgreesWithHighPrecisionEvaluation) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(-40, 40), pos(1, 40), rad(0, 30);
  int decided = 0;
  for (int i = 0; i < 1000; ++i) {
    const Integer d(rad(rng));
    const QuadraticReal u(Integer(small(rng)), Integer(small(rng)), Integer(pos(rng)), d);
    const QuadraticReal v(Integer(small(rng)), Integer(small(rng)), Integer(pos(rng)), d);
    const Dec du = decimal(u), dv = decimal(v);
    const auto ord = quad_cmp(u, v);
    if (abs(du - dv) > Dec("1e-60")) {
      ++decided;
      EXPECT_EQ(ord == std::strong_ordering::less, du < dv) << u << " vs " << v;
    } else {
      EXPECT_EQ(ord, std::strong_ordering::equal) << u << " vs " << v;
    }
  }
  EXPECT_GT(decided, 900);
}

TEST(QuadraticReal, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-99, 99), pos(1, 99), rad(0, 50);
  for (int i = 0; i < 500; ++i) {
    const QuadraticReal q(Integer(small(rng)), Integer(small(rng)), Integer(pos(rng)), Integer(rad(rng)));
    EXPECT_EQ(QuadraticReal::parse(q.str()), q) << q;
    EXPECT_EQ(QuadraticReal::parse(q.str()).str(), q.str());
  }
}

TEST(QuadraticReal, ArithmeticKeepsExactValues) {
  const QuadraticReal phi = QuadraticReal::parse("(-1+sqrt(5))/2");
  EXPECT_EQ(QuadraticReal(1) - phi, QuadraticReal::parse("(3-sqrt(5))/2"));
  EXPECT_EQ((phi + phi) * Rational(1, 2), phi);
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ((QuadraticReal(0) - phi).sign(), -1);
}

// ---- affine forms and elimination ------------------------------------------

TEST(Eliminate, SpecExamples) {
  const AffineForm x = AffineForm::x(), eps = AffineForm::epsilon();
  StrictSystem half_open;
  half_open.add(greater_equal(x));
  half_open.add(greater(AffineForm::constant(1) - x));
  EXPECT_TRUE(eliminate(half_open, Var::x).constraints().empty());

  StrictSystem empty_open;
  empty_open.add(greater(x - eps));
  empty_open.add(greater(eps - x));
  EXPECT_TRUE(eliminate(empty_open, Var::x).trivially_infeasible());
}

TEST(EpsilonProjection, SpecExamples) {
  const AffineForm eps = AffineForm::epsilon();
  const AffineForm one = AffineForm::constant(1);
  StrictSystem open;
  open.add(greater(eps));
  open.add(greater(one - eps));
  const Interval unit = epsilon_projection(open);
  EXPECT_EQ(unit.str(), "(0, 1)");
  EXPECT_TRUE(unit.has_positive_length());

  StrictSystem pinned;
  pinned.add(greater_equal(eps * Rational(2) - one));
  pinned.add(greater_equal(one - eps * Rational(2)));
  const Interval point = epsilon_projection(pinned);
  EXPECT_EQ(point.str(), "[1/2, 1/2]");
  EXPECT_FALSE(point.has_positive_length());
}

TEST(EpsilonProjection, StrictBoundaryPointsAreExcluded) {
  // eps > 1/3 and eps <= 1/3 + x with 0 <= x < 0: infeasible only by strictness
  const AffineForm eps = AffineForm::epsilon(), x = AffineForm::x();
  StrictSystem sys;
  sys.add(greater(eps * Rational(3) - AffineForm::constant(1)));
  sys.add(greater_equal(AffineForm::constant(1) + x * Rational(3) - eps * Rational(3)));
  sys.add(greater_equal(x));
  sys.add(greater(-x));
  EXPECT_TRUE(epsilon_projection(sys).empty);

  // the same with a closed lower bound pins eps = 1/3 only
  StrictSystem closed;
  closed.add(greater_equal(eps * Rational(3) - AffineForm::constant(1)));
  closed.add(greater_equal(AffineForm::constant(1) + x * Rational(3) - eps * Rational(3)));
  closed.add(greater_equal(x));
  closed.add(greater_equal(-x));
  const Interval pinned = epsilon_projection(closed);
  EXPECT_TRUE(pinned.contains(Rational(1, 3)));
  EXPECT_FALSE(pinned.has_positive_length());
  EXPECT_FALSE(pinned.contains(Rational(1, 3) + Rational(1, 1000)));
}

TEST(EpsilonProjection, AgreesWithRationalGridOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), count(2, 5), rel(0, 1);
  // grid of rationals k/4 in [-2, 2]
  std::vector<Rational> grid;
  for (int k = -8; k <= 8; ++k) grid.push_back(Rational(k, 4));
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    StrictSystem sys;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const AffineForm f(Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng)));
      sys.add({f, rel(rng) ? Relation::positive : Relation::nonnegative});
    }
    const Interval proj = epsilon_projection(sys);
    for (const auto& e : grid)
      for (const auto& l : grid)
        for (const auto& x : grid)
          if (sys.satisfied_by(Point{e, l, x})) {
            EXPECT_TRUE(proj.contains(e)) << sys.str() << " at eps=" << e;
          }
    const auto sample = sample_point(sys);
    EXPECT_EQ(sample.has_value(), !proj.empty) << sys.str();
    if (sample) {
      ++feasible;
      EXPECT_TRUE(sys.satisfied_by(*sample)) << sys.str();
      EXPECT_TRUE(proj.contains(sample->epsilon));
    }
  }
  EXPECT_GT(feasible, 50);
}

TEST(AffineForm, EvaluateAndSubstitute) {
  const AffineForm f(Rational(1), Rational(-2), Rational(3), Rational(1, 2));
  const Point p{Rational(1, 3), Rational(1, 2), Rational(2)};
  EXPECT_EQ(f.evaluate(p), Rational(1) - Rational(2, 3) + Rational(3, 2) + Rational(1));
  EXPECT_EQ(f.substitute(Var::ell, Rational(1, 2)).evaluate(p), f.evaluate(p));
  EXPECT_FALSE(f.substitute(Var::ell, Rational(1, 2)).coeff(Var::ell).sign());
}
