#ifndef QALG_QENGINE_HPP
#define QALG_QENGINE_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/core/series.hpp"

namespace qalg {

/// The nome q = exp(-pi sqrt(r)) attached to r > 0. The logarithm of q is
/// stored so fractional powers q^e = exp(e log q) stay on the positive branch.
class Nome {
 public:
  /// q for exact rational r.
  static Nome from_rational(const Rational& r, const PrecisionContext& ctx) {
    if (r <= 0) throw DomainError("nome requires r > 0, got r = " + to_string(r));
    Nome n = from_real(Real(r, ctx), ctx);
    n.exact_r_ = r;
    return n;
  }

  /// q for real r > 0 (e.g. r = k_i(x), which is not rational in general).
  static Nome from_real(const Real& r, const PrecisionContext& ctx) {
    if (r.sign() <= 0) throw DomainError("nome requires r > 0");
    Real rr = r.rounded(ctx);
    Real log_q = -pi_const(ctx) * sqrt(rr);
    return Nome(std::move(rr), std::move(log_q), ctx);
  }

  /// Nome with a given log q < 0; r = (log q / pi)^2.
  static Nome from_log(const Real& log_q, const PrecisionContext& ctx) {
    if (log_q.sign() >= 0) throw DomainError("nome requires log q < 0");
    Real lq = log_q.rounded(ctx);
    Real s = lq / pi_const(ctx);
    return Nome(s * s, std::move(lq), ctx);
  }

  const Real& q() const noexcept { return q_; }
  const Real& log_q() const noexcept { return log_q_; }
  const Real& r() const noexcept { return r_; }
  const std::optional<Rational>& exact_r() const noexcept { return exact_r_; }
  const PrecisionContext& ctx() const noexcept { return ctx_; }

  /// q^e on the principal positive branch.
  Real pow(const Rational& e) const { return exp(log_q_ * e); }

  /// The nome q^m (r scaled by m^2).
  Nome power(const Rational& m) const {
    if (m <= 0) throw DomainError("nome power must be positive");
    Nome n = from_log(log_q_ * m, ctx_);
    if (exact_r_) n.exact_r_ = *exact_r_ * m * m;
    return n;
  }

 private:
  Nome(Real r, Real log_q, const PrecisionContext& ctx)
      : r_(std::move(r)), log_q_(std::move(log_q)), q_(exp(log_q_)), ctx_(ctx) {}

  Real r_;
  Real log_q_;
  Real q_;
  std::optional<Rational> exact_r_;
  PrecisionContext ctx_;
};

inline Nome make_nome(const Rational& r, const PrecisionContext& ctx) { return Nome::from_rational(r, ctx); }

/// Parameters of the q-product [a,p;q] = prod_{n>=0} (1-q^{pn+a})(1-q^{pn+p-a}).
class AgileSpec {
 public:
  /// Requires 0 < a < p.
  AgileSpec(Rational a, Rational p) : a_(std::move(a)), p_(std::move(p)) {
    if (!(a_ > 0 && a_ < p_)) throw DomainError("agile requires 0 < a < p");
  }

  /// Any a that is not a multiple of p; used by the duplication symmetry
  /// tau*(np +- a, p) where the literal product has finitely many factors
  /// with negative exponent.
  static AgileSpec extended(Rational a, Rational p) {
    if (p <= 0) throw DomainError("agile requires p > 0");
    Rational ratio = a / p;
    if (is_integer(ratio)) throw DomainError("agile parameter a must not be a multiple of p");
    AgileSpec s;
    s.a_ = std::move(a);
    s.p_ = std::move(p);
    return s;
  }

  const Rational& a() const noexcept { return a_; }
  const Rational& p() const noexcept { return p_; }

  /// Exponent p/12 - a/2 + a^2/(2p) of the normalizing power of q.
  Rational star_exponent() const {
    Rational e = p_ / 12 - a_ / 2 + a_ * a_ / (2 * p_);
    e.canonicalize();
    return e;
  }

 private:
  AgileSpec() = default;
  Rational a_;
  Rational p_;
};

/// Parameters of vartheta(a,b;q) = sum_n (-1)^n q^{a n^2 + b n}.
class ThetaSpec {
 public:
  ThetaSpec(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ <= 0) throw DomainError("theta series requires a > 0");
  }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

 private:
  Rational a_;
  Rational b_;
};

/// A q-series value together with its logarithmic q-derivative numerator
/// q d/dq of the same series.
struct SeriesValue {
  Real value;
  Real q_derivative;
};

namespace detail {

/// 10^-(digits + guard): products and sums stop once terms fall below this.
inline Real truncation_eps(const PrecisionContext& ctx) { return pow10(-ctx.working_digits(), ctx.bits()); }

/// sum_{n in Z} s^n q^{a n^2 + b n} with s = -1 (alternating) or +1, and
/// q d/dq of it, by the ratio recurrence q^{e_{n+1}-e_n} = q^{a+b} q^{2an}.
inline SeriesValue theta_sum(const Rational& a, const Rational& b, int sign, const Nome& nome) {
  if (a <= 0) throw DomainError("theta series requires a > 0");
  const PrecisionContext& ctx = nome.ctx();
  const Real eps = truncation_eps(ctx);
  const Real step = nome.pow(2 * a);
  Real value(1L, ctx.bits());
  Real deriv(0L, ctx.bits());
  for (int dir : {1, -1}) {
    const Rational bd = dir > 0 ? b : Rational(-b);
    Real ratio = nome.pow(a + bd);
    Real term(1L, ctx.bits());
    Real largest(1L, ctx.bits());
    for (long n = 1;; ++n) {
      term *= ratio;
      ratio *= step;
      Rational e = a * n * n + bd * n;
      Real signed_term = (sign < 0 && (n & 1)) ? -term : term;
      value += signed_term;
      deriv += signed_term * e;
      if (term > largest) largest = term;
      // Past the peak the ratios shrink geometrically, so the tail is
      // bounded by the current term.
      if (ratio < 1 && term < eps * largest && n > 1) break;
      if (n > 1000000) throw ConvergenceError("theta series did not converge");
    }
  }
  return {std::move(value), std::move(deriv)};
}

}  // namespace detail

/// [a,p;q] = prod_{n>=0} (1-q^{pn+a})(1-q^{pn+p-a}).
inline Real agile(const AgileSpec& spec, const Nome& nome) {
  const PrecisionContext& ctx = nome.ctx();
  const Real eps = detail::truncation_eps(ctx);
  Real x1 = nome.pow(spec.a());
  Real x2 = nome.pow(spec.p() - spec.a());
  const Real step = nome.pow(spec.p());
  Real prod(1L, ctx.bits());
  bool extra_done = false;
  for (long n = 0;; ++n) {
    prod *= (1 - x1);
    prod *= (1 - x2);
    if (x1 < 1 && x2 < 1 && x1 < eps && x2 < eps) {
      if (extra_done) break;
      extra_done = true;
    }
    x1 *= step;
    x2 *= step;
    if (n > 10000000) throw ConvergenceError("agile product did not converge");
  }
  return prod;
}

/// [a,p;q]* = q^{p/12 - a/2 + a^2/(2p)} [a,p;q].
inline Real agile_star(const AgileSpec& spec, const Nome& nome) {
  return nome.pow(spec.star_exponent()) * agile(spec, nome);
}

/// vartheta(a,b;q) = sum_{n in Z} (-1)^n q^{a n^2 + b n}.
inline Real theta_general(const ThetaSpec& spec, const Nome& nome) {
  return detail::theta_sum(spec.a(), spec.b(), -1, nome).value;
}

/// vartheta(a,b;q) and q d/dq vartheta(a,b;q), summed termwise.
inline SeriesValue theta_general_with_derivative(const ThetaSpec& spec, const Nome& nome) {
  return detail::theta_sum(spec.a(), spec.b(), -1, nome);
}

/// theta_2(q) = sum_{n in Z} q^{(n+1/2)^2} = q^{1/4} sum q^{n^2+n}.
inline Real theta2(const Nome& nome) {
  return nome.pow(Rational(1, 4)) * detail::theta_sum(1, 1, 1, nome).value;
}

/// theta_3(q) = sum_{n in Z} q^{n^2}.
inline Real theta3(const Nome& nome) { return detail::theta_sum(1, 0, 1, nome).value; }

/// theta_4(q) = sum_{n in Z} (-1)^n q^{n^2}.
inline Real theta4(const Nome& nome) { return detail::theta_sum(1, 0, -1, nome).value; }

/// sum_{n in Z} q^{n^2 + m n}, summed directly.
inline Real theta_powersum(long m, const Nome& nome) { return detail::theta_sum(1, m, 1, nome).value; }

/// The prefactor-free eta product prod_{n>=1} (1 - q^{m n}).
inline Real eta_paper(const Rational& multiplier, const Nome& nome) {
  if (multiplier <= 0) throw DomainError("eta multiplier must be positive");
  const PrecisionContext& ctx = nome.ctx();
  const Real eps = detail::truncation_eps(ctx);
  const Real step = nome.pow(multiplier);
  Real x = step;
  Real prod(1L, ctx.bits());
  bool extra_done = false;
  for (;;) {
    prod *= (1 - x);
    if (x < eps) {
      if (extra_done) break;
      extra_done = true;
    }
    x *= step;
  }
  return prod;
}

/// Standard Dedekind eta q^{m/24} prod (1 - q^{mn}) at the nome q^m.
inline Real eta_dedekind(const Rational& multiplier, const Nome& nome) {
  return nome.pow(multiplier / 24) * eta_paper(multiplier, nome);
}

/// q d/dq log eta_paper(m tau) = -sum_{n>=1} m n q^{mn}/(1-q^{mn}).
inline Real eta_paper_log_derivative(const Rational& multiplier, const Nome& nome) {
  if (multiplier <= 0) throw DomainError("eta multiplier must be positive");
  const PrecisionContext& ctx = nome.ctx();
  const Real eps = detail::truncation_eps(ctx);
  const Real step = nome.pow(multiplier);
  Real x = step;
  Real sum(0L, ctx.bits());
  for (long n = 1;; ++n) {
    Real term = x * n / (1 - x);
    sum += term;
    if (term < eps * max(Real(1L, ctx.bits()), abs(sum))) break;
    x *= step;
  }
  return -(sum * multiplier);
}

/// M(c,x) = sum_{n>=0} c^n x^{n(n+1)/2}, |x| < 1.
inline Real m_series(const Real& c, const Real& x) {
  if (!(abs(x) < 1)) throw DomainError("m_series requires |x| < 1");
  const mpfr_prec_t bits = std::max(c.precision(), x.precision());
  const Real eps = pow10(-static_cast<long>(bits * 0.30103) + 1, bits);
  Real sum(1L, bits);
  Real term(1L, bits);
  Real xp = x.rounded(bits);  // x^{n+1}
  for (long n = 0;; ++n) {
    Real factor = c * xp;
    term *= factor;
    sum += term;
    xp *= x;
    if (abs(factor) < Real(1L, bits) / 2 && abs(term) <= eps * max(Real(1L, bits), abs(sum))) break;
    if (n > 10000000) throw ConvergenceError("m_series did not converge");
  }
  return sum;
}

/// [a,p;q] through (M(-q^{-a}, q^p) - q^a M(-q^a, q^p)) / eta_paper(p tau).
inline Real agile_via_m_series(const AgileSpec& spec, const Nome& nome) {
  Real qa = nome.pow(spec.a());
  Real qp = nome.pow(spec.p());
  Real numer = m_series(-(1 / qa), qp) - qa * m_series(-qa, qp);
  return numer / eta_paper(spec.p(), nome);
}

/// tau*(a,p;q) = [a,p;q^2]* / [a,p;q]*.
inline Real tau_star(const AgileSpec& spec, const Nome& nome) {
  return agile_star(spec, nome.power(2)) / agile_star(spec, nome);
}

/// Exact expansion of prod_{n>=0}(1-q^{pn+a})(1-q^{pn+p-a}) up to q^order,
/// integer a and p only.
inline FormalSeries agile_qexpansion(long a, long p, std::size_t order) {
  if (order < 1) throw OrderError("agile_qexpansion: order must be at least 1");
  if (!(a > 0 && a < p)) throw DomainError("agile_qexpansion requires integers 0 < a < p");
  FormalSeries s = FormalSeries::one(order);
  for (long n = 0;; ++n) {
    long e1 = p * n + a;
    long e2 = p * n + p - a;
    if (static_cast<std::size_t>(std::min(e1, e2)) > order) break;
    mul_one_minus_xm_pow(s, static_cast<std::size_t>(e1), 1L);
    mul_one_minus_xm_pow(s, static_cast<std::size_t>(e2), 1L);
  }
  return s;
}

/// Exact expansion of prod_{n>=1}(1 - q^{mn}) up to q^order.
inline FormalSeries eta_paper_qexpansion(long multiplier, std::size_t order) {
  if (multiplier <= 0) throw DomainError("eta multiplier must be positive");
  FormalSeries s = FormalSeries::one(order);
  for (std::size_t e = static_cast<std::size_t>(multiplier); e <= order; e += static_cast<std::size_t>(multiplier)) {
    mul_one_minus_xm_pow(s, e, 1L);
  }
  return s;
}

/// Exact expansion of vartheta(a,b;q) for exponents a n^2 + b n that are
/// non-negative integers for every n.
inline FormalSeries theta_qexpansion(const ThetaSpec& spec, std::size_t order) {
  FormalSeries s(order);
  auto exponent = [&](long n) {
    Rational e = spec.a() * n * n + spec.b() * n;
    if (!is_integer(e) || e < 0) throw DomainError("theta_qexpansion needs non-negative integer exponents");
    return e.get_num();
  };
  const double a = spec.a().get_d();
  const double b = std::abs(spec.b().get_d());
  const long n_max = static_cast<long>(std::ceil((b + std::sqrt(b * b + 4 * a * static_cast<double>(order))) / (2 * a))) + 1;
  for (long n = -n_max; n <= n_max; ++n) {
    Integer e = exponent(n);
    if (e <= static_cast<long>(order)) s[e.get_ui()] += (n % 2 == 0) ? 1 : -1;
  }
  return s;
}

}  // namespace qalg

#endif  // QALG_QENGINE_HPP
