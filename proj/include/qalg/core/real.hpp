#ifndef QALG_CORE_REAL_HPP
#define QALG_CORE_REAL_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"

namespace qalg {

/// Finite arbitrary-precision binary floating point value owning an mpfr_t.
///
/// Every value carries its own precision; the result of a binary operation
/// gets the larger precision of its operands, and operations with integers or
/// rationals keep the precision of the Real operand. NaN and infinities are
/// never stored: producing one raises DomainError.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, const PrecisionContext& ctx) : Real(ctx.bits()) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const Rational& value, const PrecisionContext& ctx) : Real(ctx.bits()) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const Rational& value, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }

  Real(const Real& other) : Real(other.precision()) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  Real(Real&& other) noexcept : Real(mpfr_prec_t{MPFR_PREC_MIN}) { mpfr_swap(v_, other.v_); }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.precision());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal literal ("1.25", "-3e-7") at the context precision.
  static Real from_decimal(std::string_view text, const PrecisionContext& ctx) {
    Real r(ctx.bits());
    std::string s(text);
    char* end = nullptr;
    if (mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
      throw DomainError("malformed decimal number '" + s + "'");
    }
    r.check("decimal literal");
    return r;
  }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  /// Copy rounded to `bits` of precision.
  Real rounded(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real rounded(const PrecisionContext& ctx) const { return rounded(ctx.bits()); }

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  long exponent2() const noexcept { return is_zero() ? 0 : mpfr_get_exp(v_); }

  /// Approximate decimal order of magnitude, log10|x| (very negative for zero).
  double log10_abs() const {
    if (is_zero()) return -1e18;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::abs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  /// Scientific notation with `significant` digits.
  std::string to_string(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Shortest natural notation with `significant` digits (fixed when the
  /// magnitude is moderate, scientific otherwise).
  std::string to_display(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", std::max(significant, 1), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { return binary_inplace(o, mpfr_add); }
  Real& operator-=(const Real& o) { return binary_inplace(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return binary_inplace(o, mpfr_mul); }
  Real& operator/=(const Real& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    return binary_inplace(o, mpfr_div);
  }
  Real& operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long o) {
    if (o == 0) throw DomainError("division by zero");
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(const Rational& o) {
    mpfr_add_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Rational& o) {
    mpfr_sub_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Rational& o) {
    mpfr_mul_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Rational& o) {
    if (o == 0) throw DomainError("division by zero");
    mpfr_div_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
    return *this;
  }

  /// Multiplies by 2^k exactly.
  Real& scale2(long k) {
    mpfr_mul_2si(v_, v_, k, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator/(long a, const Real& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(Real a, const Rational& b) { return a += b; }
  friend Real operator-(Real a, const Rational& b) { return a -= b; }
  friend Real operator*(Real a, const Rational& b) { return a *= b; }
  friend Real operator/(Real a, const Rational& b) { return a /= b; }
  friend Real operator*(const Rational& a, Real b) { return b *= a; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(30); }

  /// Throws DomainError if the value is NaN or infinite.
  const Real& check(const char* what) const {
    if (!mpfr_number_p(v_)) throw DomainError(std::string(what) + ": result is not a finite number");
    return *this;
  }

 private:
  template <typename Op>
  Real& binary_inplace(const Real& o, Op op) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

namespace detail {

template <typename Fn>
Real unary(const Real& x, Fn fn, const char* what) {
  Real r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  r.check(what);
  return r;
}

}  // namespace detail

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs, "abs"); }

inline Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return detail::unary(x, mpfr_sqrt, "sqrt");
}

inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp, "exp"); }

inline Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log requires x > 0");
  return detail::unary(x, mpfr_log, "log");
}

inline Real log1p(const Real& x) {
  if (x <= -1) throw DomainError("log1p requires x > -1");
  return detail::unary(x, mpfr_log1p, "log1p");
}

inline Real sinh(const Real& x) { return detail::unary(x, mpfr_sinh, "sinh"); }
inline Real cosh(const Real& x) { return detail::unary(x, mpfr_cosh, "cosh"); }
inline Real tanh(const Real& x) { return detail::unary(x, mpfr_tanh, "tanh"); }
inline Real gamma(const Real& x) { return detail::unary(x, mpfr_gamma, "gamma"); }

/// Real root of order n; even roots require x >= 0.
inline Real nth_root(const Real& x, unsigned long n) {
  if (n == 0) throw DomainError("root of order zero");
  if (n % 2 == 0 && x.sign() < 0) throw DomainError("even root of a negative number");
  Real r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r.check("nth_root");
}

inline Real pow(const Real& x, long n) {
  if (n < 0 && x.is_zero()) throw DomainError("negative power of zero");
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r.check("pow");
}

/// x^e for rational e on the principal positive branch; requires x > 0 unless
/// e is a non-negative integer.
inline Real pow(const Real& x, const Rational& e) {
  if (is_integer(e) && e.get_num().fits_slong_p()) return pow(x, e.get_num().get_si());
  if (x.sign() <= 0) throw DomainError("fractional power requires a positive base");
  if (e.get_den().fits_ulong_p() && e.get_num().fits_slong_p() && abs(e.get_num()) < 64) {
    Real root = nth_root(x, e.get_den().get_ui());
    return pow(root, e.get_num().get_si());
  }
  return exp(log(x) * e);
}

inline Real pow(const Real& x, const Real& e) {
  if (x.sign() <= 0) throw DomainError("real power requires a positive base");
  Real r(std::max(x.precision(), e.precision()));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r.check("pow");
}

inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

/// 10^e at the given precision.
inline Real pow10(long e, mpfr_prec_t bits) {
  Real r(10, bits);
  return pow(r, e);
}

}  // namespace qalg

#endif  // QALG_CORE_REAL_HPP
