#ifndef QALG_TESTS_SUPPORT_HPP
#define QALG_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"

namespace qalg::test {

/// |a - b| < 10^-exp10 * max(1, |b|).
inline ::testing::AssertionResult close(const Real& a, const Real& b, long exp10) {
  Real diff = abs(a - b);
  Real scale = max(Real(1L, b.precision()), abs(b));
  if (diff < pow10(-exp10, b.precision()) * scale) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_string(40) << " vs " << b.to_string(40) << " (diff "
                                       << diff.to_string(5) << ", wanted < 1e-" << exp10 << ")";
}

inline Real R(long v, const PrecisionContext& ctx) { return Real(v, ctx); }
inline Real R(const Rational& v, const PrecisionContext& ctx) { return Real(v, ctx); }

/// pi by Machin's formula with exact rational arctan series.
inline Real machin_pi(const PrecisionContext& ctx) {
  auto arctan_inv = [&](long n) {
    Real x = Real(1L, ctx) / n;
    Real x2 = x * x;
    Real term = x;
    Real sum(0L, ctx.bits());
    const Real eps = pow10(-ctx.working_digits() - 5, ctx.bits());
    for (long k = 0; abs(term) > eps; ++k) {
      Real t = term / (2 * k + 1);
      sum += (k % 2 == 0) ? t : -t;
      term *= x2;
    }
    return sum;
  };
  return 16 * arctan_inv(5) - 4 * arctan_inv(239);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed1234u + salt); }

}  // namespace qalg::test

#endif  // QALG_TESTS_SUPPORT_HPP
