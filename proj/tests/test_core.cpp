#include <gtest/gtest.h>

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/quadrature.hpp"
#include "qalg/core/series.hpp"
#include "support.hpp"

using namespace qalg;
using qalg::test::close;

TEST(Precision, RejectsBelowMinimum) {
  EXPECT_THROW(PrecisionContext(29), DomainError);
  EXPECT_THROW(PrecisionContext(50, -1), DomainError);
  PrecisionContext ctx(100);
  EXPECT_EQ(ctx.working_digits(), 120);
  EXPECT_EQ(ctx.check_exponent(), 80);
  EXPECT_EQ(ctx.tail_exponent(), 110);
  EXPECT_EQ(ctx.with_digits(60).guard(), 20);
}

TEST(Real, PiMatchesMachin) {
  for (int d : {30, 100, 300}) {
    PrecisionContext ctx(d);
    EXPECT_TRUE(close(pi_const(ctx), test::machin_pi(ctx), d + 10)) << d;
  }
}

TEST(Real, SqrtByNewton) {
  PrecisionContext ctx(200);
  Real two(2L, ctx);
  Real x(1L, ctx);
  for (int i = 0; i < 20; ++i) x = (x + two / x) / 2;
  EXPECT_TRUE(close(sqrt(two), x, 210));
  EXPECT_THROW(sqrt(Real(-1L, ctx)), DomainError);
  EXPECT_THROW(log(Real(0L, ctx)), DomainError);
}

TEST(Real, PowAndRoots) {
  PrecisionContext ctx(80);
  Real x(Rational(7, 3), ctx);
  EXPECT_TRUE(close(pow(pow(x, Rational(2, 5)), Rational(5, 2)), x, 90));
  EXPECT_TRUE(close(pow(nth_root(x, 7), 7L), x, 90));
  EXPECT_TRUE(close(exp(log(x)), x, 90));
  EXPECT_TRUE(close(elem(ElemFn::nth_root, Real(27L, ctx), Rational(3)), Real(3L, ctx), 90));
}

TEST(Real, DecimalParsing) {
  PrecisionContext ctx(40);
  EXPECT_TRUE(close(Real::from_decimal("1.25", ctx), Real(Rational(5, 4), ctx), 50));
  EXPECT_THROW(Real::from_decimal("1.2x", ctx), DomainError);
}

TEST(Rational, ParsesFractionsOnly) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_THROW(parse_rational("0.2"), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

// B(1/2,1/2) = pi, B(1/3,2/3) = 2pi/sqrt(3), int_0^inf e^-t dt = 1.
TEST(Quadrature, BetaIntegrals) {
  PrecisionContext ctx(100);
  const Rational mh(-1, 2);
  Integrand f = [&](const Abscissa& a) { return pow(a.from_lo, mh) * pow(a.from_hi, mh); };
  Real v = integrate(f, Limit(Real(0L, ctx)), Limit(Real(1L, ctx)), ctx, {2, 2});
  EXPECT_TRUE(close(v, pi_const(ctx), 95));

  Integrand g = [&](const Abscissa& a) { return pow(a.from_lo, Rational(-2, 3)) * pow(a.from_hi, Rational(-1, 3)); };
  Real w = integrate(g, Limit(Real(0L, ctx)), Limit(Real(1L, ctx)), ctx, {3, 3});
  EXPECT_TRUE(close(w, 2 * pi_const(ctx) / sqrt(Real(3L, ctx)), 95));
}

TEST(Quadrature, InfiniteRange) {
  PrecisionContext ctx(60);
  // int_1^inf t^{-3/2} dt = 2
  Integrand f = [&](const Abscissa& a) { return pow(a.t, Rational(-3, 2)); };
  Real v = integrate(f, Limit(Real(1L, ctx)), Limit::infinity(), ctx, {1, 2});
  EXPECT_TRUE(close(v, Real(2L, ctx), 55));
}

TEST(Series, ExpLogRoundTrip) {
  FormalSeries s(40);
  s[0] = 1;
  for (std::size_t n = 1; n <= 40; ++n) s[n] = make_rational(static_cast<long>(n % 7) - 3, static_cast<long>(n + 1));
  EXPECT_EQ(series_exp(series_log(s)), s);
  EXPECT_EQ(series_mul(s, series_inverse(s)), FormalSeries::one(40));
}

TEST(Series, BinomialPowMatchesRepeatedProduct) {
  FormalSeries s(30);
  s[0] = 1;
  s[1] = -2;
  s[3] = Rational(1, 3);
  FormalSeries cube = series_mul(series_mul(s, s), s);
  EXPECT_EQ(series_binomial_pow(s, 3), cube);
  EXPECT_EQ(series_pow_int(s, 3), cube);
  FormalSeries half = series_binomial_pow(s, Rational(1, 2));
  EXPECT_EQ(series_mul(half, half), s);
  EXPECT_EQ(series_pow_int(s, -2), series_inverse(series_mul(s, s)));
}

TEST(Series, OneMinusXmPowers) {
  // (1 - x^2)^{-1} = 1 + x^2 + x^4 + ...
  FormalSeries s = FormalSeries::one(10);
  mul_one_minus_xm_pow(s, 2, -1L);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(s[n], Rational(n % 2 == 0 ? 1 : 0));
  FormalSeries t = FormalSeries::one(10);
  mul_one_minus_xm_pow(t, 2, Rational(-1));
  EXPECT_EQ(s, t);
  FormalSeries d = series_dilate(s, 2);
  EXPECT_EQ(d[4], Rational(1));
  EXPECT_EQ(d[2], Rational(0));
}

TEST(Series, LogNeedsUnitConstant) {
  FormalSeries s(5);
  s[0] = 2;
  EXPECT_THROW(series_log(s), Error);
  EXPECT_THROW(FormalSeries(std::vector<Rational>{}), OrderError);
}
