#include <gtest/gtest.h>

#include "qalg/core/elementary.hpp"
#include "qalg/recognizer.hpp"
#include "support.hpp"

using namespace qalg;

namespace {

Rational gram_det(const IntegerMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(detail::dot(b[i], b[j]));
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(g[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    std::swap(g[piv], g[c]);
    if (piv != c) det = -det;
    det *= g[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = g[r][c] / g[c][c];
      for (std::size_t k = c; k < n; ++k) g[r][k] -= f * g[c][k];
    }
  }
  return det;
}

IntegerPolynomial poly(std::vector<long> c) {
  std::vector<Integer> z(c.begin(), c.end());
  return IntegerPolynomial(std::move(z));
}

}  // namespace

TEST(Polynomial, NormalizationAndDivision) {
  auto p = IntegerPolynomial::normalized({Integer(4), Integer(-6), Integer(-2)});
  EXPECT_EQ(p.to_string(), IntegerPolynomial::normalized({Integer(-2), Integer(3), Integer(1)}).to_string());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(divides(poly({-1, 1}), poly({-1, 0, 1})));
  EXPECT_FALSE(divides(poly({-2, 1}), poly({-1, 0, 1})));
  EXPECT_TRUE(divides(poly({0, 2}), poly({0, 0, 3})));
  EXPECT_THROW(divides(IntegerPolynomial(), poly({1})), DomainError);
  EXPECT_TRUE(poly({0, 0}).is_zero());
}

TEST(Lattice, ReductionPreservesLatticeAndShortens) {
  auto gen = test::rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5;
    IntegerMatrix b(n, std::vector<Integer>(n));
    for (auto& row : b) {
      for (auto& v : row) v = d(gen);
    }
    IntegerMatrix red = lattice_reduce(b);
    ASSERT_EQ(red.size(), n);
    EXPECT_EQ(gram_det(red), gram_det(b));
    // size reduction keeps the first vector within the LLL bound of every input row
    Integer first = detail::dot(red[0], red[0]);
    Integer shortest = detail::dot(b[0], b[0]);
    for (const auto& row : b) shortest = std::min(shortest, Integer(detail::dot(row, row)));
    EXPECT_LE(first, shortest * 16);
  }
}

TEST(Lattice, FindsPlantedShortVector) {
  // rows (e_i, C x^i) for x = sqrt 2 reveal x^2 - 2
  PrecisionContext ctx(60);
  Real x = sqrt(Real(2L, ctx));
  auto cands = detail::relation_candidates(x, 2, 40);
  ASSERT_FALSE(cands.empty());
  EXPECT_EQ(cands.front().to_string(), IntegerPolynomial::normalized({Integer(-2), Integer(0), Integer(1)}).to_string());
}

TEST(Recognize, Quadratics) {
  PrecisionContext ctx(100);
  Real s2 = sqrt(Real(2L, ctx));
  auto res = recognize(s2, 4, 4, ctx);
  ASSERT_EQ(res.status, RecognitionStatus::recognized);
  EXPECT_EQ(res.poly->degree(), 2);
  EXPECT_TRUE(divides(*res.poly, poly({-2, 0, 1})));

  Evaluator f = [](const PrecisionContext& c) { return (1 + sqrt(Real(5L, c))) / 2; };
  auto r2 = recognize(f, 4, 4, ctx);
  ASSERT_EQ(r2.status, RecognitionStatus::recognized);
  EXPECT_TRUE(divides(*r2.poly, poly({-1, -1, 1})));
  EXPECT_EQ(r2.verify_digits, 200);
}

TEST(Recognize, RationalsAndCubics) {
  PrecisionContext ctx(100);
  auto r = recognize(Real(Rational(-7, 3), ctx), 3, 3, ctx);
  ASSERT_EQ(r.status, RecognitionStatus::recognized);
  EXPECT_EQ(r.poly->degree(), 1);
  Real c = nth_root(Real(2L, ctx), 3) + 1;  // (x-1)^3 = 2
  auto rc = recognize(c, 4, 3, ctx);
  ASSERT_EQ(rc.status, RecognitionStatus::recognized);
  EXPECT_TRUE(divides(*rc.poly, poly({-3, 3, -3, 1})));
}

TEST(Recognize, PlantedRandomRoots) {
  PrecisionContext ctx(150);
  auto gen = test::rng(3);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 8; ++trial) {
    // x^3 + a x + b with b < 0 has a positive real root
    long a = c(gen), b = -1 - std::abs(c(gen));
    auto f = [&](const Real& x) { return x * x * x + a * x + b; };
    Real lo(0L, ctx), hi(100L, ctx);
    for (int i = 0; i < 600; ++i) {
      Real mid = (lo + hi) / 2;
      (f(mid).sign() < 0 ? lo : hi) = mid;
    }
    auto res = recognize(lo, 4, 3, ctx);
    ASSERT_EQ(res.status, RecognitionStatus::recognized) << a << " " << b;
    EXPECT_TRUE(divides(*res.poly, poly({b, a, 0, 1})));
  }
}

TEST(Recognize, TranscendentalsRefuted) {
  PrecisionContext ctx(120);
  auto r = recognize(pi_const(ctx), 6, 6, ctx);
  EXPECT_NE(r.status, RecognitionStatus::recognized);
  EXPECT_FALSE(r.poly);
  auto e = recognize(exp(Real(1L, ctx)), 6, 6, ctx);
  EXPECT_NE(e.status, RecognitionStatus::recognized);
}

TEST(Recognize, PreconditionsAndRequiredDigits) {
  PrecisionContext ctx(80);
  Real x = sqrt(Real(2L, ctx));
  try {
    recognize(x, 8, 8, ctx);
    FAIL() << "expected InsufficientPrecision";
  } catch (const InsufficientPrecision& e) {
    EXPECT_EQ(e.required_digits(), 8 * 8 + 40);
  }
  EXPECT_THROW(recognize(x, 0, 4, ctx), DomainError);
  EXPECT_THROW(recognize(x, 2, 0, ctx), DomainError);
}
