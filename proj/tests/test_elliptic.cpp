#include <gtest/gtest.h>

#include "qalg/elliptic.hpp"
#include "support.hpp"

using namespace qalg;
using qalg::test::close;

namespace {

// K(k) = (pi/2) sum ((2n)! / (4^n n!^2))^2 k^{2n}
Real K_hypergeometric(const Real& k, const PrecisionContext& ctx) {
  Real k2 = k * k;
  Real coef(1L, ctx.bits());
  Real kp(1L, ctx.bits());
  Real sum(0L, ctx.bits());
  const Real eps = pow10(-ctx.working_digits() - 5, ctx.bits());
  for (long n = 0; n < 100000; ++n) {
    Real term = coef * coef * kp;
    sum += term;
    if (n > 2 && term < eps) break;
    coef = coef * (2 * n + 1) / (2 * n + 2);
    kp *= k2;
  }
  return pi_const(ctx) / 2 * sum;
}

}  // namespace

TEST(Agm, Basics) {
  PrecisionContext ctx(100);
  Real one(1L, ctx), two(2L, ctx);
  // Gauss constant: agm(1, sqrt 2) = pi / varpi, varpi = Gamma(1/4)^2 / (2 sqrt(2 pi))
  Real varpi = pow(gamma(Real(Rational(1, 4), ctx)), 2L) / (2 * sqrt(2 * pi_const(ctx)));
  EXPECT_TRUE(close(agm(one, sqrt(two)).value, pi_const(ctx) / varpi, 100));
  EXPECT_TRUE(close(agm(two, two).value, two, 110));
  EXPECT_THROW(agm(one, Real(0L, ctx)), DomainError);
}

TEST(EllipticK, HypergeometricOracle) {
  PrecisionContext ctx(100);
  for (Rational k : {Rational(1, 2), Rational(1, 10), make_rational(3, 5)}) {
    Real kk(k, ctx);
    EXPECT_TRUE(close(ellint_K(kk, ctx), K_hypergeometric(kk, ctx), 100));
  }
  EXPECT_TRUE(close(ellint_K(Real(0L, ctx), ctx), pi_const(ctx) / 2, 110));
  EXPECT_THROW(ellint_K(Real(1L, ctx), ctx), DomainError);
  EXPECT_THROW(ellint_K(Real(-1L, ctx), ctx), DomainError);
}

TEST(EllipticE, LegendreRelation) {
  PrecisionContext ctx(120);
  for (Rational k : {Rational(1, 3), make_rational(7, 10), make_rational(1, 100)}) {
    Real kk(k, ctx);
    Real kp = sqrt(1 - kk * kk);
    auto [K, E] = ellint_KE(kk, ctx);
    auto [Kp, Ep] = ellint_KE(kp, ctx);
    EXPECT_TRUE(close(E * Kp + Ep * K - K * Kp, pi_const(ctx) / 2, 120));
  }
  PrecisionContext c2(60);
  EXPECT_TRUE(close(ellint_E(Real(0L, c2), c2), pi_const(c2) / 2, 65));
}

TEST(SingularModulus, ClosedForms) {
  PrecisionContext ctx(150);
  Real s2 = sqrt(Real(2L, ctx));
  Real s6 = sqrt(Real(6L, ctx));
  EXPECT_TRUE(close(singular_modulus(Rational(1), ctx), 1 / s2, 150));
  EXPECT_TRUE(close(singular_modulus(Rational(2), ctx), s2 - 1, 150));
  EXPECT_TRUE(close(singular_modulus(Rational(4), ctx), 3 - 2 * s2, 150));
  EXPECT_TRUE(close(singular_modulus(Rational(3), ctx), (s6 - s2) / 4, 150));
  // k_{1/r} = k'_r
  SingularModulus p = singular_modulus_pair(Real(Rational(1, 4), ctx), ctx);
  EXPECT_TRUE(close(p.k_prime, 3 - 2 * s2, 150));
  EXPECT_THROW(singular_modulus(Rational(0), ctx), DomainError);
}

TEST(SingularModulus, LargeRKeepsRelativePrecision) {
  PrecisionContext ctx(60);
  // k_r ~ 4 q^{1/2}, q = e^{-pi sqrt r}
  Real k = singular_modulus(Rational(400), ctx);
  Real approx = 4 * exp(-pi_const(ctx) * 20 / 2);
  EXPECT_TRUE(close(k, approx, 10));
  EXPECT_TRUE(close(inverse_singular_modulus(k, ctx), Real(400L, ctx), 55));
}

TEST(SingularModulus, InverseRoundTrip) {
  PrecisionContext ctx(100);
  for (Rational r : {Rational(1, 5), Rational(1), make_rational(7, 3), Rational(10)}) {
    Real k = singular_modulus(r, ctx);
    EXPECT_TRUE(close(inverse_singular_modulus(k, ctx), Real(r, ctx), 95));
    EXPECT_TRUE(close(nome_from_modulus(k, ctx).q(), make_nome(r, ctx).q(), 95));
  }
  EXPECT_THROW(inverse_singular_modulus(Real(1L, ctx), ctx), DomainError);
  EXPECT_THROW(nome_from_modulus(Real(0L, ctx), ctx), DomainError);
}

TEST(JInvariant, ClassNumberOne) {
  PrecisionContext ctx(120);
  const std::pair<long, long> cases[] = {{1, 1728}, {2, 8000}, {3, 54000}, {4, 287496}, {7, 16581375}};
  for (auto [r, j] : cases) {
    EXPECT_TRUE(close(j_invariant(Rational(r), JRoute::modulus, ctx), Real(j, ctx), 115)) << r;
    EXPECT_TRUE(close(j_invariant(Rational(r), JRoute::eta, ctx), Real(j, ctx), 115)) << r;
  }
  EXPECT_THROW(j_invariant(Rational(0), JRoute::eta, ctx), DomainError);
}

TEST(Alpha, KnownValues) {
  PrecisionContext ctx(120);
  Real s2 = sqrt(Real(2L, ctx));
  EXPECT_TRUE(close(elliptic_alpha(Rational(1), ctx), Real(Rational(1, 2), ctx), 115));
  EXPECT_TRUE(close(elliptic_alpha(Rational(4), ctx), 2 * (s2 - 1) * (s2 - 1), 115));
  // alpha(2) = sqrt 2 - 1
  EXPECT_TRUE(close(elliptic_alpha(Rational(2), ctx), s2 - 1, 115));
}

TEST(Multiplier, Basics) {
  PrecisionContext ctx(80);
  EXPECT_TRUE(close(multiplier(Rational(2), 1, ctx), Real(1L, ctx), 85));
  // against the two K values directly
  Real m = multiplier(Rational(1), 2, ctx);
  Real direct = ellint_K(singular_modulus(Rational(4), ctx), ctx) / ellint_K(singular_modulus(Rational(1), ctx), ctx);
  EXPECT_TRUE(close(m, direct, 75));
  EXPECT_THROW(multiplier(Rational(1), 0, ctx), DomainError);
}

TEST(EllipticData, Consistent) {
  PrecisionContext ctx(60);
  EllipticData d = elliptic_data(Rational(1), ctx);
  EXPECT_TRUE(close(d.j, Real(1728L, ctx), 55));
  EXPECT_TRUE(close(d.alpha, Real(Rational(1, 2), ctx), 55));
  EXPECT_TRUE(close(d.k, d.k_prime, 60));
}
