#ifndef QALG_CORE_QUADRATURE_HPP
#define QALG_CORE_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <optional>

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/real.hpp"

namespace qalg {

/// A quadrature node. `from_lo` = t - lo and `from_hi` = hi - t are computed
/// without cancellation so integrands can evaluate endpoint singular factors
/// such as (1-t)^(-1/3) accurately. For an infinite upper limit `from_hi`
/// equals t.
struct Abscissa {
  Real t;
  Real from_lo;
  Real from_hi;
};

using Integrand = std::function<Real(const Abscissa&)>;

/// Caller-declared substitutions for algebraic endpoint behaviour. A power k
/// at a finite endpoint c maps t = c +- s^k, which turns (t-c)^(j/k - 1)
/// into a smooth integrand. For an infinite upper limit the map is
/// t = lo * u^(-k) (lo > 0), suited to integrands decaying like t^(-1-1/k).
struct SubstitutionHint {
  unsigned lo_power = 1;
  unsigned hi_power = 1;
};

/// Integration limit: a finite value or +-infinity.
class Limit {
 public:
  Limit(Real value) : value_(std::move(value)) {}
  static Limit infinity(int sign = 1) {
    Limit l(Real(0L, mpfr_prec_t{64}));
    l.infinite_ = sign >= 0 ? 1 : -1;
    return l;
  }
  bool is_infinite() const noexcept { return infinite_ != 0; }
  int infinite_sign() const noexcept { return infinite_; }
  const Real& value() const noexcept { return value_; }

 private:
  Real value_;
  int infinite_ = 0;
};

namespace detail {

/// Tanh-sinh rule on (0,1): g receives (u, 1-u) computed separately.
inline Real tanh_sinh_unit(const std::function<Real(const Real&, const Real&)>& g, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Real pi = pi_const(bits);
  const Real half_pi = pi / 2;
  const int target = ctx.digits();
  const Real tol = pow10(-target, bits);
  // Nodes beyond x_max carry weights below 10^-(working digits).
  const double x_max = std::log(2.0 * ctx.working_digits() * std::log(10.0) / M_PI) + 1.0;
  constexpr int kMaxLevel = 14;

  auto node = [&](const Real& x) {
    // y = (pi/2) sinh x; u = 1/(1+e^{-2y}); 1-u = 1/(1+e^{2y});
    // du/dx = pi cosh x * e^{-2y}/(1+e^{-2y})^2
    Real y = half_pi * sinh(x);
    Real e = exp(-2 * y);
    Real denom = 1 + e;
    Real u = 1 / denom;
    Real v = e / denom;
    Real w = pi * cosh(x) * e / (denom * denom);
    if (u.is_zero() || v.is_zero()) return Real(0L, bits);
    return w * g(u, v);
  };

  Real h(1L, bits);
  Real sum = node(Real(0L, bits));
  for (long k = 1; k <= static_cast<long>(x_max); ++k) {
    Real x(k, bits);
    sum += node(x);
    sum += node(-x);
  }
  Real estimate = sum * h;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    const long count = static_cast<long>(std::ceil(x_max * std::ldexp(1.0, level)));
    for (long k = 1; k <= count; k += 2) {
      Real x = h * k;
      sum += node(x);
      sum += node(-x);
    }
    Real next = sum * h;
    Real diff = abs(next - estimate);
    estimate = std::move(next);
    Real scale = max(Real(1L, bits), abs(estimate));
    if (level >= 3 && diff < tol * scale) return estimate;
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge");
}

}  // namespace detail

/// Integral of f over (lo, hi), absolute error below 10^-(digits - guard/2).
/// Endpoint singularities must be declared through `hint` so that the
/// transformed integrand is bounded.
inline Real integrate(const Integrand& f, const Limit& lo, const Limit& hi, const PrecisionContext& ctx,
                      SubstitutionHint hint = {}) {
  const mpfr_prec_t bits = ctx.bits();
  if (hint.lo_power == 0 || hint.hi_power == 0) throw DomainError("substitution power must be positive");
  if (lo.is_infinite() && lo.infinite_sign() > 0) throw DomainError("lower limit cannot be +infinity");
  if (hi.is_infinite() && hi.infinite_sign() < 0) throw DomainError("upper limit cannot be -infinity");

  if (lo.is_infinite()) {
    // Reflect t -> -t so the infinite end becomes the upper limit.
    if (hi.is_infinite()) {
      Real zero(0L, bits);
      return integrate(f, lo, Limit(zero), ctx, {1, hint.hi_power}) +
             integrate(f, Limit(zero), hi, ctx, {hint.lo_power, 1});
    }
    Integrand reflected = [&f](const Abscissa& a) { return f(Abscissa{-a.t, a.from_hi, a.from_lo}); };
    return integrate(reflected, Limit(-hi.value()), Limit::infinity(), ctx, {hint.hi_power, hint.lo_power});
  }

  const Real a = lo.value().rounded(bits);
  if (hi.is_infinite()) {
    if (a.sign() <= 0 || hint.lo_power > 1) {
      // Split off a finite piece so the infinite map has a positive anchor.
      Real anchor = a.sign() > 0 ? a * 2 : a + 1;
      Real finite = integrate(f, lo, Limit(anchor), ctx, {hint.lo_power, 1});
      return finite + integrate(f, Limit(anchor), hi, ctx, {1, hint.hi_power});
    }
    const unsigned k = hint.hi_power;
    // t = a u^{-k}, dt = k a u^{-k-1} du
    auto g = [&](const Real& u, const Real&) {
      Real uk = pow(u, static_cast<long>(k));
      Real t = a / uk;
      Real jac = t * static_cast<long>(k) / u;
      return f(Abscissa{t, t - a, t}) * jac;
    };
    return detail::tanh_sinh_unit(g, ctx);
  }

  const Real b = hi.value().rounded(bits);
  if (b < a) return -integrate(f, hi, lo, ctx, {hint.hi_power, hint.lo_power});
  if (b == a) return Real(0L, bits);
  const Real width = b - a;

  if (hint.lo_power == 1 && hint.hi_power == 1) {
    auto g = [&](const Real& u, const Real& v) {
      Real dl = width * u;
      Real dh = width * v;
      return f(Abscissa{a + dl, dl, dh}) * width;
    };
    return detail::tanh_sinh_unit(g, ctx);
  }

  Real total(0L, bits);
  const Real half = width / 2;
  auto piece = [&](unsigned k, bool at_lo) {
    if (k == 1) {
      auto g = [&](const Real& u, const Real& v) {
        Real d_near = half * u;  // distance from the singular end of this piece
        Real d_far = half * v;
        if (at_lo) return f(Abscissa{a + d_near, d_near, half + d_far}) * half;
        return f(Abscissa{b - d_near, half + d_far, d_near}) * half;
      };
      return detail::tanh_sinh_unit(g, ctx);
    }
    // distance s^k from the endpoint, s in (0, half^{1/k})
    const Real smax = nth_root(half, k);
    auto g = [&, k](const Real& u, const Real&) {
      Real s = smax * u;
      Real d = pow(s, static_cast<long>(k));
      Real jac = smax * static_cast<long>(k) * pow(s, static_cast<long>(k) - 1);
      if (at_lo) return f(Abscissa{a + d, d, width - d}) * jac;
      return f(Abscissa{b - d, width - d, d}) * jac;
    };
    return detail::tanh_sinh_unit(g, ctx);
  };
  total += piece(hint.lo_power, true);
  total += piece(hint.hi_power, false);
  return total;
}

}  // namespace qalg

#endif  // QALG_CORE_QUADRATURE_HPP
