#ifndef QALG_CORE_SERIES_HPP
#define QALG_CORE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"

namespace qalg {

/// Truncated power series sum_{n<=N} c_n x^n with exact rational coefficients.
class FormalSeries {
 public:
  explicit FormalSeries(std::size_t order) : c_(order + 1) {}
  FormalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw OrderError("series needs at least a constant term");
  }

  static FormalSeries constant(std::size_t order, const Rational& value) {
    FormalSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static FormalSeries one(std::size_t order) { return constant(order, 1); }
  /// coef * x^k (zero when k exceeds the order).
  static FormalSeries monomial(std::size_t order, std::size_t k, const Rational& coef = 1) {
    FormalSeries s(order);
    if (k <= order) s.c_[k] = coef;
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  FormalSeries truncated(std::size_t order) const {
    FormalSeries s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  FormalSeries& operator+=(const FormalSeries& o) {
    shrink_to(o.order());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  FormalSeries& operator-=(const FormalSeries& o) {
    shrink_to(o.order());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  FormalSeries& operator*=(const Rational& k) {
    for (auto& c : c_) c *= k;
    return *this;
  }
  FormalSeries operator-() const {
    FormalSeries s(*this);
    for (auto& c : s.c_) c = -c;
    return s;
  }

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(FormalSeries a, const Rational& k) { return a *= k; }
  friend FormalSeries operator*(const Rational& k, FormalSeries a) { return a *= k; }

  /// Exact comparison on the common truncation order.
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
  }

  /// First index (up to the common order) where the coefficients differ.
  friend std::optional<std::size_t> first_mismatch(const FormalSeries& a, const FormalSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] != b.c_[i]) return i;
    }
    return std::nullopt;
  }

  /// Horner evaluation of the truncated polynomial at x.
  Real evaluate(const Real& x) const {
    Real acc(0, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<Rational> c_;
};

inline FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  std::size_t order = std::min(a.order(), b.order());
  FormalSeries out(order);
  Rational t;
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) == 0) continue;
      t = a[i] * b[j];
      out[i + j] += t;
    }
  }
  return out;
}

inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return series_mul(a, b); }

/// Multiplicative inverse; requires a non-zero constant term.
inline FormalSeries series_inverse(const FormalSeries& s) {
  if (sgn(s[0]) == 0) throw OrderError("series_inverse: constant term is zero");
  std::size_t order = s.order();
  FormalSeries out(order);
  Rational inv0 = 1 / s[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(s[k]) != 0) acc += s[k] * out[n - k];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

/// s^k for integer k (negative k requires a non-zero constant term).
inline FormalSeries series_pow_int(const FormalSeries& s, long k) {
  if (k < 0) return series_pow_int(series_inverse(s), -k);
  FormalSeries result = FormalSeries::one(s.order());
  FormalSeries base = s;
  while (k > 0) {
    if (k & 1) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

/// s^alpha for rational alpha on a series with constant term 1
/// (J.C.P. Miller recurrence: n p_n = sum_k ((alpha+1)k - n) s_k p_{n-k}).
inline FormalSeries series_binomial_pow(const FormalSeries& s, const Rational& alpha) {
  if (s[0] != 1) throw OrderError("series_binomial_pow: constant term must be 1");
  if (is_integer(alpha) && alpha.get_num().fits_slong_p()) return series_pow_int(s, alpha.get_num().get_si());
  std::size_t order = s.order();
  FormalSeries out(order);
  out[0] = 1;
  Rational alpha1 = alpha + 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(s[k]) == 0) continue;
      acc += (alpha1 * static_cast<long>(k) - static_cast<long>(n)) * s[k] * out[n - k];
    }
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

/// Formal logarithm; requires constant term 1.
inline FormalSeries series_log(const FormalSeries& s) {
  if (s[0] != 1) throw OrderError("series_log: constant term must be 1");
  std::size_t order = s.order();
  FormalSeries out(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = s[n] * static_cast<long>(n);
    for (std::size_t k = 1; k < n; ++k) {
      if (sgn(out[k]) == 0 || sgn(s[n - k]) == 0) continue;
      acc -= out[k] * static_cast<long>(k) * s[n - k];
    }
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

/// Formal exponential; requires constant term 0 (n e_n = sum_k k s_k e_{n-k}).
inline FormalSeries series_exp(const FormalSeries& s) {
  if (sgn(s[0]) != 0) throw OrderError("series_exp: constant term must be 0");
  std::size_t order = s.order();
  FormalSeries out(order);
  out[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(s[k]) == 0 || sgn(out[n - k]) == 0) continue;
      acc += s[k] * static_cast<long>(k) * out[n - k];
    }
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

/// Multiplies s in place by (1 - x^m)^k for integer k, in O(order*|k|).
inline void mul_one_minus_xm_pow(FormalSeries& s, std::size_t m, long k) {
  if (m == 0) throw OrderError("mul_one_minus_xm_pow: m must be positive");
  std::size_t order = s.order();
  if (m > order) return;
  if (k > 0) {
    for (long t = 0; t < k; ++t) {
      for (std::size_t n = order; n >= m; --n) {
        s[n] -= s[n - m];
        if (n == m) break;
      }
    }
  } else {
    for (long t = 0; t < -k; ++t) {
      for (std::size_t n = m; n <= order; ++n) s[n] += s[n - m];
    }
  }
}

/// Multiplies s by (1 - x^m)^alpha for rational alpha.
inline void mul_one_minus_xm_pow(FormalSeries& s, std::size_t m, const Rational& alpha) {
  if (is_integer(alpha) && alpha.get_num().fits_slong_p()) {
    mul_one_minus_xm_pow(s, m, alpha.get_num().get_si());
    return;
  }
  FormalSeries factor = FormalSeries::one(s.order());
  if (m <= s.order()) factor[m] = -1;
  s = series_mul(s, series_binomial_pow(factor, alpha));
}

/// Substitutes x -> x^k (result keeps the same truncation order).
inline FormalSeries series_dilate(const FormalSeries& s, std::size_t k) {
  if (k == 0) throw OrderError("series_dilate: k must be positive");
  FormalSeries out(s.order());
  for (std::size_t n = 0; n * k <= s.order(); ++n) out[n * k] = s[n];
  return out;
}

}  // namespace qalg

#endif  // QALG_CORE_SERIES_HPP
