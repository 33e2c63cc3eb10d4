#ifndef QALG_ELLIPTIC_HPP
#define QALG_ELLIPTIC_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/qengine.hpp"

namespace qalg {

struct AgmResult {
  Real value;
  int iterations;
};

/// Arithmetic-geometric mean of positive a, b.
inline AgmResult agm(Real a, Real b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm requires positive arguments");
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  a = a.rounded(bits);
  b = b.rounded(bits);
  // |a-b| shrinks quadratically; stop once it is below 2^{-bits/2}, then a
  // final mean recovers the remaining half of the bits.
  Real half_eps(1L, bits);
  half_eps.scale2(-static_cast<long>(bits / 2) + 2);
  int iterations = 0;
  while (abs(a - b) > half_eps * a) {
    Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next);
    if (++iterations > 200) throw ConvergenceError("agm did not converge");
  }
  ++iterations;
  return {(a + b) / 2, iterations};
}

namespace detail {

inline void check_modulus(const Real& k) {
  if (k.sign() < 0 || !(k < 1)) throw DomainError("elliptic modulus must satisfy 0 <= k < 1");
}

/// K from the complementary modulus: K = pi / (2 AGM(1, k')).
inline Real ellint_K_from_complement(const Real& k_prime, const PrecisionContext& ctx) {
  if (k_prime.sign() <= 0) throw DomainError("complementary modulus must be positive");
  return pi_const(ctx) / (agm(Real(1L, ctx.bits()), k_prime.rounded(ctx)).value * 2);
}

inline Real complement(const Real& k) { return sqrt((1 - k) * (1 + k)); }

}  // namespace detail

/// Complete elliptic integral of the first kind, K(k) = pi / (2 AGM(1, sqrt(1-k^2))).
inline Real ellint_K(const Real& k, const PrecisionContext& ctx) {
  detail::check_modulus(k);
  return detail::ellint_K_from_complement(detail::complement(k.rounded(ctx)), ctx);
}

namespace detail {

/// K and E from a modulus pair given separately, so a tiny k or k' keeps its
/// relative precision. E/K = 1 - sum_{n>=0} 2^{n-1} c_n^2 with c_0 = k.
inline std::pair<Real, Real> ellint_KE_pair(const Real& k, const Real& k_prime, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  Real a(1L, bits);
  Real b = k_prime.rounded(bits);
  Real c0 = k.rounded(bits);
  Real sum = c0 * c0 / 2;
  Real eps(1L, bits);
  eps.scale2(-static_cast<long>(bits) + 4);
  Real weight(1L, bits);
  for (int n = 1; n < 200; ++n) {
    Real c = (a - b) / 2;
    Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next);
    sum += weight * c * c;
    weight *= 2;
    if (abs(c) < eps) break;
  }
  Real K = pi_const(bits) / (a * 2);
  Real E = K * (1 - sum);
  return {std::move(K), std::move(E)};
}

}  // namespace detail

/// K and E together.
inline std::pair<Real, Real> ellint_KE(const Real& k, const PrecisionContext& ctx) {
  detail::check_modulus(k);
  Real kk = k.rounded(ctx);
  return detail::ellint_KE_pair(kk, detail::complement(kk), ctx);
}

/// Complete elliptic integral of the second kind.
inline Real ellint_E(const Real& k, const PrecisionContext& ctx) { return ellint_KE(k, ctx).second; }

/// A singular modulus k_r and its complement, both to full relative precision.
struct SingularModulus {
  Real k;
  Real k_prime;
};

namespace detail {

/// g(t) = log(K(k')/K(k)) - log(sqrt r) with k = 1/(1+e^{-t}), 1-k = 1/(1+e^{t}).
inline Real modulus_equation(const Real& t, const Real& half_log_r, const PrecisionContext& ctx, Real* k_out = nullptr,
                             Real* kp_out = nullptr, Real* slope = nullptr) {
  Real et = exp(-t);
  Real k = 1 / (1 + et);
  Real one_minus_k = et / (1 + et);
  Real kp = sqrt(one_minus_k * (1 + k));
  Real K = ellint_K_from_complement(kp, ctx);
  Real Kp = ellint_K_from_complement(k, ctx);
  if (slope) {
    // d/dt log(K'/K) = -pi / (2 (1+k) K K')
    *slope = -pi_const(ctx) / ((1 + k) * K * Kp * 2);
  }
  if (k_out) *k_out = k;
  if (kp_out) *kp_out = kp;
  return log(Kp / K) - half_log_r;
}

}  // namespace detail

/// The x in (0,1) with K(sqrt(1-x^2))/K(x) = sqrt(r): bisection in the logit
/// variable to about 10 digits at low precision, then Newton at full precision.
inline SingularModulus singular_modulus_pair(const Real& r, const PrecisionContext& ctx) {
  if (r.sign() <= 0) throw DomainError("singular modulus requires r > 0");
  const PrecisionContext coarse(PrecisionContext::kMinDigits, 0);
  Real half_log_r_coarse = log(r.rounded(coarse)) / 2;
  const double span = ctx.working_digits() * std::log(10.0) + 10;
  Real lo(static_cast<long>(-span), coarse.bits());
  Real hi(static_cast<long>(span), coarse.bits());
  // g decreases in t
  if (detail::modulus_equation(lo, half_log_r_coarse, coarse) < 0 ||
      detail::modulus_equation(hi, half_log_r_coarse, coarse) > 0) {
    throw ConvergenceError("singular modulus outside the representable bracket");
  }
  Real width_tol = Real(1L, coarse.bits()) / 10000000000L;
  while (hi - lo > width_tol * max(Real(1L, coarse.bits()), abs(lo))) {
    Real mid = (lo + hi) / 2;
    if (detail::modulus_equation(mid, half_log_r_coarse, coarse) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const mpfr_prec_t bits = ctx.bits();
  Real t = ((lo + hi) / 2).rounded(bits);
  Real half_log_r = log(r.rounded(bits)) / 2;
  const Real tol = pow10(-(ctx.working_digits() - 3), bits);
  Real k(bits), kp(bits), slope(bits);
  for (int it = 0; it < 60; ++it) {
    Real g = detail::modulus_equation(t, half_log_r, ctx, &k, &kp, &slope);
    Real step = g / slope;
    t -= step;
    if (abs(step) < tol * max(Real(1L, bits), abs(t))) {
      detail::modulus_equation(t, half_log_r, ctx, &k, &kp);
      return {std::move(k), std::move(kp)};
    }
  }
  throw ConvergenceError("singular modulus Newton iteration did not converge");
}

inline Real singular_modulus(const Real& r, const PrecisionContext& ctx) { return singular_modulus_pair(r, ctx).k; }
inline Real singular_modulus(const Rational& r, const PrecisionContext& ctx) {
  if (r <= 0) throw DomainError("singular modulus requires r > 0");
  return singular_modulus(Real(r, ctx), ctx);
}

/// k_i(x) = (K(sqrt(1-x^2))/K(x))^2, the r whose singular modulus is x.
inline Real inverse_singular_modulus(const Real& x, const PrecisionContext& ctx) {
  if (!(x.sign() > 0 && x < 1)) throw DomainError("inverse singular modulus requires 0 < x < 1");
  Real xx = x.rounded(ctx);
  Real ratio = detail::ellint_K_from_complement(xx, ctx) / ellint_K(xx, ctx);
  return ratio * ratio;
}

/// Nome e^{-pi K'/K} of a modulus x, without forming k_i(x) and its root.
inline Nome nome_from_modulus(const Real& x, const PrecisionContext& ctx) {
  if (!(x.sign() > 0 && x < 1)) throw DomainError("modulus must satisfy 0 < x < 1");
  Real xx = x.rounded(ctx);
  Real ratio = detail::ellint_K_from_complement(xx, ctx) / ellint_K(xx, ctx);
  return Nome::from_log(-pi_const(ctx) * ratio, ctx);
}

/// Elliptic alpha function alpha(r) = E(k'_r)/K(k_r) - pi/(4 K(k_r)^2).
inline Real elliptic_alpha(const Real& r, const PrecisionContext& ctx) {
  SingularModulus sm = singular_modulus_pair(r, ctx);
  Real K = detail::ellint_K_from_complement(sm.k_prime, ctx);
  Real E_comp = detail::ellint_KE_pair(sm.k_prime, sm.k, ctx).second;
  return E_comp / K - pi_const(ctx) / (K * K * 4);
}
inline Real elliptic_alpha(const Rational& r, const PrecisionContext& ctx) { return elliptic_alpha(Real(r, ctx), ctx); }

/// Multiplier m_{n^2 r} = K(k_{n^2 r}) / K(k_r).
inline Real multiplier(const Rational& r, long n, const PrecisionContext& ctx) {
  if (r <= 0) throw DomainError("multiplier requires r > 0");
  if (n < 1) throw DomainError("multiplier requires n >= 1");
  SingularModulus base = singular_modulus_pair(Real(r, ctx), ctx);
  SingularModulus scaled = singular_modulus_pair(Real(r * n * n, ctx), ctx);
  return detail::ellint_K_from_complement(scaled.k_prime, ctx) / detail::ellint_K_from_complement(base.k_prime, ctx);
}

enum class JRoute { modulus, eta };

/// j = 256 (k^2 + k'^4)^3 / (k k')^4 at a given modulus pair.
inline Real j_from_modulus(const Real& k, const Real& k_prime) {
  Real k2 = k * k;
  Real kp2 = k_prime * k_prime;
  Real inner = k2 + kp2 * kp2;
  Real kk = k * k_prime;
  Real kk2 = kk * kk;
  return inner * inner * inner * 256 / (kk2 * kk2);
}

/// j from the eta quotient: with s = eta(tau)/eta(2tau) in the standard
/// (q^{1/24}-prefixed) normalization, j = (s^16 + 16 s^-8)^3.
inline Real j_from_nome(const Nome& nome) {
  Real s = eta_dedekind(1, nome) / eta_dedekind(2, nome);
  Real s8 = pow(s, 8L);
  Real bracket = s8 * s8 + 16 / s8;
  return bracket * bracket * bracket;
}

/// j at real r > 0 through the modulus route.
inline Real j_invariant(const Real& r, const PrecisionContext& ctx) {
  SingularModulus sm = singular_modulus_pair(r, ctx);
  return j_from_modulus(sm.k, sm.k_prime);
}

inline Real j_invariant(const Rational& r, JRoute via, const PrecisionContext& ctx) {
  if (r <= 0) throw DomainError("j-invariant requires r > 0");
  if (via == JRoute::modulus) {
    SingularModulus sm = singular_modulus_pair(Real(r, ctx), ctx);
    return j_from_modulus(sm.k, sm.k_prime);
  }
  return j_from_nome(make_nome(r, ctx));
}

/// Bundle of the elliptic quantities at one r.
struct EllipticData {
  Rational r;
  Real k;
  Real k_prime;
  Real K;
  Real E;
  Real alpha;
  Real j;
};

inline EllipticData elliptic_data(const Rational& r, const PrecisionContext& ctx) {
  SingularModulus sm = singular_modulus_pair(Real(r, ctx), ctx);
  auto [K, E] = detail::ellint_KE_pair(sm.k, sm.k_prime, ctx);
  Real E_comp = detail::ellint_KE_pair(sm.k_prime, sm.k, ctx).second;
  Real alpha = E_comp / K - pi_const(ctx) / (K * K * 4);
  Real j = j_from_modulus(sm.k, sm.k_prime);
  return {r, std::move(sm.k), std::move(sm.k_prime), std::move(K), std::move(E), std::move(alpha), std::move(j)};
}

}  // namespace qalg

#endif  // QALG_ELLIPTIC_HPP
