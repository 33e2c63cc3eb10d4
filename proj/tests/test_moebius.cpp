#include <gtest/gtest.h>

#include "qalg/moebius.hpp"
#include "support.hpp"

using namespace qalg;
using qalg::test::close;

namespace {

std::vector<Rational> periodic(std::vector<long> values, std::size_t n) {
  std::vector<Rational> X(n);
  for (std::size_t i = 0; i < n; ++i) X[i] = values[i % values.size()];
  return X;
}

}  // namespace

TEST(Moebius, Mu) {
  const int expect[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0};
  for (long n = 1; n <= 16; ++n) EXPECT_EQ(moebius_mu(n), expect[n - 1]) << n;
  EXPECT_EQ(moebius_mu(30), -1);
  EXPECT_EQ(moebius_mu(1001), -1);
  // sum_{d|n} mu(d) = [n == 1]
  for (long n = 1; n <= 200; ++n) {
    int s = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) s += moebius_mu(d);
    }
    EXPECT_EQ(s, n == 1 ? 1 : 0);
  }
}

TEST(Moebius, Factorize) {
  auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<long, int>{2, 3}));
  EXPECT_EQ(f[1], (std::pair<long, int>{3, 2}));
  EXPECT_EQ(f[2], (std::pair<long, int>{5, 1}));
}

TEST(Jacobi, KnownValues) {
  // quadratic residues mod 5 are 1 and 4
  const int mod5[] = {0, 1, -1, -1, 1};
  for (long n = 0; n < 20; ++n) EXPECT_EQ(jacobi_symbol(n, 5), mod5[n % 5]);
  EXPECT_EQ(jacobi_symbol(2, 15), 1);
  EXPECT_EQ(jacobi_symbol(7, 15), -1);
  EXPECT_EQ(jacobi_symbol(3, 9), 0);
  EXPECT_EQ(jacobi_symbol(-1, 5), 1);
  EXPECT_EQ(jacobi_symbol(-1, 3), -1);
  EXPECT_EQ(jacobi_symbol(7, 1), 1);
  // Kronecker at 4 and 8
  EXPECT_EQ(jacobi_symbol(3, 4), 1);
  EXPECT_EQ(jacobi_symbol(2, 4), 0);
  EXPECT_EQ(jacobi_symbol(3, 8), -1);
  EXPECT_EQ(jacobi_symbol(7, 8), 1);
}

TEST(Jacobi, EulerCriterionForPrimes) {
  for (long p : {3L, 7L, 11L, 13L, 29L}) {
    for (long n = 1; n < p; ++n) {
      long acc = 1;
      for (long k = 0; k < (p - 1) / 2; ++k) acc = acc * n % p;
      EXPECT_EQ(jacobi_symbol(n, p), acc == 1 ? 1 : -1) << n << "/" << p;
    }
  }
}

TEST(Jacobi, RejectsExactlyOneFactorTwo) {
  EXPECT_THROW(jacobi_symbol(1, 2), DomainError);
  EXPECT_THROW(jacobi_symbol(1, 6), DomainError);
  EXPECT_THROW(JacobiCharacter(10), DomainError);
  EXPECT_THROW(JacobiCharacter(0), DomainError);
  EXPECT_NO_THROW(JacobiCharacter(12));
  EXPECT_NO_THROW(JacobiCharacter(5));
}

TEST(ExtractX, RoundTripProperty) {
  auto gen = test::rng();
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> X(60);
    for (auto& x : X) x = make_rational(num(gen), den(gen));
    EXPECT_EQ(extract_X(taylor_from_X(X)), X);
  }
  EXPECT_THROW(extract_X(TaylorInput{}), InsufficientData);
}

// -log(1 - x) has c_n = 1/n and X = (1, 0, 0, ...).
TEST(ExtractX, LogOneMinusX) {
  TaylorInput in;
  for (long n = 1; n <= 30; ++n) in.coeffs.push_back(make_rational(1, n));
  auto X = extract_X(in);
  EXPECT_EQ(X[0], Rational(1));
  for (std::size_t i = 1; i < X.size(); ++i) EXPECT_EQ(X[i], Rational(0));
  auto pc = detect_period(X, 10);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 1);
  ASSERT_EQ(pc->finite_factors.size(), 1u);
  EXPECT_EQ(pc->finite_factors[0], (std::pair<long, Rational>{1, 1}));
}

TEST(DetectPeriod, RogersRamanujanExponents) {
  auto pc = detect_period(periodic({1, -1, -1, 1, 0}, 60), 20);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 5);
  EXPECT_TRUE(pc->catoptric);
  EXPECT_EQ(pc->A, make_rational(1, 5));
  ProductRepresentation rep = represent_product(*pc);
  ASSERT_EQ(rep.agiles.size(), 2u);
  EXPECT_EQ(rep.agiles[0].first.a(), Rational(1));
  EXPECT_EQ(rep.agiles[0].second, Rational(1));
  EXPECT_EQ(rep.agiles[1].first.a(), Rational(2));
  EXPECT_EQ(rep.agiles[1].second, Rational(-1));
}

TEST(DetectPeriod, PeriodThree) {
  auto pc = detect_period(periodic({1, 1, 0}, 30), 10);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 3);
  // eta-type: A = 1/12 * 1 + ... ; weight(1,3) = -1/2 + 1/6 + 1/4
  EXPECT_EQ(pc->A, make_rational(-1, 12));
}

TEST(DetectPeriod, Eta) {
  // X = 1 for all n: period 1 is ruled out (a_1 != 0); T = 2 needs a_2 = 0.
  std::vector<Rational> X = periodic({1}, 40);
  EXPECT_FALSE(detect_period(X, 10));
}

TEST(DetectPeriod, EvenPeriodMiddleTerm) {
  // T = 4, a = (1, 2, 1, 0): middle a_2 counts half.
  auto pc = detect_period(periodic({1, 2, 1, 0}, 40), 10);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 4);
  Rational w1 = Rational(-1, 2) + make_rational(1, 8) + make_rational(1, 3);
  Rational w2 = Rational(-1) + make_rational(4, 8) + make_rational(1, 3);
  Rational expect = w1 + w2;  // 2 * w2 / 2
  expect.canonicalize();
  EXPECT_EQ(pc->A, expect);
  auto rep = represent_product(*pc);
  ASSERT_EQ(rep.agiles.size(), 2u);
  EXPECT_EQ(rep.agiles[1].first.a(), Rational(2));
  EXPECT_EQ(rep.agiles[1].second, Rational(1));
}

TEST(DetectPeriod, NonCatoptric) {
  auto pc = detect_period(periodic({1, 2, 0}, 30), 10);
  ASSERT_TRUE(pc);
  EXPECT_FALSE(pc->catoptric);
  EXPECT_THROW(represent_product(*pc), DomainError);
  EXPECT_THROW(exponent_A(*pc), DomainError);
}

TEST(DetectPeriod, NotPeriodicAndInsufficientData) {
  std::vector<Rational> sq;
  for (long n = 1; n <= 30; ++n) sq.push_back(Rational(n * n));
  EXPECT_FALSE(detect_period(sq, 10));
  EXPECT_THROW(detect_period(sq, 16), InsufficientData);
  EXPECT_THROW(detect_period(sq, 0), DomainError);
}

TEST(DetectPeriod, ZeroSequence) {
  auto pc = detect_period(std::vector<Rational>(10), 3);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 1);
  EXPECT_TRUE(pc->finite_factors.empty());
  EXPECT_EQ(pc->A, Rational(0));
}

TEST(DetectPeriod, FiniteSupport) {
  std::vector<Rational> X(12);
  X[0] = 2;
  X[2] = -1;
  auto pc = detect_period(X, 4);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->period, 1);
  ASSERT_EQ(pc->finite_factors.size(), 2u);
  EXPECT_EQ(pc->finite_factors[1], (std::pair<long, Rational>{3, -1}));
  // support reaching past half the data is not treated as finite
  std::vector<Rational> Y(12);
  Y[8] = 1;
  EXPECT_FALSE(detect_period(Y, 4));
}

TEST(Product, ExpansionMatchesExpNegTaylor) {
  for (auto vals : {std::vector<long>{1, -1, -1, 1, 0}, {1, 1, 0}, {2, -1, 2, 0}, {1, 0, 0, 0, 0, 0, 1, 0}}) {
    std::vector<Rational> X = periodic(vals, 80);
    TaylorInput in = taylor_from_X(X);
    auto pc = detect_period(X, 20);
    ASSERT_TRUE(pc);
    if (!pc->catoptric) continue;
    EXPECT_EQ(expand_product(represent_product(*pc), 80), exp_neg_taylor(in, 80));
  }
}

TEST(Product, ExpansionMatchesBruteProduct) {
  std::vector<Rational> X = periodic({1, -1, -1, 1, 0}, 40);
  auto pc = detect_period(X, 10);
  FormalSeries brute = FormalSeries::one(40);
  for (std::size_t n = 1; n <= 40; ++n) {
    long x = X[n - 1].get_num().get_si();
    for (long k = 0; k < std::abs(x); ++k) {
      FormalSeries f = FormalSeries::one(40);
      f[n] = -1;
      brute = series_mul(brute, x > 0 ? f : series_inverse(f));
    }
  }
  EXPECT_EQ(expand_product(represent_product(*pc), 40), brute);
}

TEST(Product, ThetaAndProductAgreeNumerically) {
  PrecisionContext ctx(100);
  Nome nome = make_nome(Rational(1, 2), ctx);
  auto pc = detect_period(periodic({1, -1, -1, 1, 0}, 40), 10);
  Real p = evaluate_product(represent_product(*pc), nome);
  Real t = evaluate_theta(represent_theta(*pc), nome);
  EXPECT_TRUE(close(p, t, 100));
  ThetaRepresentation th = represent_theta(*pc);
  EXPECT_EQ(th.eta_exponent, Rational(0));
  EXPECT_EQ(th.factors[0].first.a(), make_rational(5, 2));
  EXPECT_EQ(th.factors[0].first.b(), make_rational(3, 2));
}

TEST(Lambert, MatchesBruteAndLogDerivative) {
  PrecisionContext ctx(80);
  Nome nome = make_nome(1, ctx);
  auto pc = detect_period(periodic({1, -1, -1, 1, 0}, 40), 10);
  Real brute(0L, ctx.bits());
  for (long n = 1; n <= 200; ++n) {
    Real qn = nome.pow(n);
    long x = (n % 5 == 1 || n % 5 == 4) ? 1 : (n % 5 == 0 ? 0 : -1);
    brute += qn * n / (1 - qn) * x;
  }
  Real l = lambert_series(*pc, nome);
  EXPECT_TRUE(close(l, brute, 80));
  EXPECT_TRUE(close(logderiv_representation(*pc, nome), l, 80));
}

TEST(Lambert, CharacterSeriesByBrute) {
  PrecisionContext ctx(60);
  Nome nome = make_nome(2, ctx);
  JacobiCharacter chi(5);
  Real brute(0L, ctx.bits());
  for (long n = 1; n <= 100; ++n) {
    Real qn = nome.pow(n);
    brute += qn * n / (1 - qn) * chi(n);
  }
  EXPECT_TRUE(close(lambert_series(chi, nome), brute, 60));
}

TEST(Conjecture2, EtaQuotients) {
  for (long g : {4L, 9L, 25L, 36L, 49L, 100L, 225L, 441L}) {
    auto r = conjecture2_etaquotient(g, 150);
    EXPECT_TRUE(r.identical) << g;
    EXPECT_FALSE(r.first_mismatch);
  }
  EXPECT_THROW(conjecture2_etaquotient(12, 50), DomainError);
  EXPECT_THROW(conjecture2_etaquotient(0, 50), DomainError);
  EXPECT_EQ(square_primes(900), (std::vector<long>{2, 3, 5}));
}
