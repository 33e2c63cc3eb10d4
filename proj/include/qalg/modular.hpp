#ifndef QALG_MODULAR_HPP
#define QALG_MODULAR_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/core/elementary.hpp"
#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/quadrature.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/core/series.hpp"
#include "qalg/elliptic.hpp"
#include "qalg/qengine.hpp"
#include "qalg/report.hpp"

namespace qalg {

enum class RrcfMethod { product, continued_fraction };

/// Rogers-Ramanujan continued fraction R(q).
inline Real rrcf(const Nome& nome, RrcfMethod method = RrcfMethod::product) {
  const PrecisionContext& ctx = nome.ctx();
  const Real q15 = nome.pow(Rational(1, 5));
  if (method == RrcfMethod::product) {
    return q15 * agile(AgileSpec(1, 5), nome) / agile(AgileSpec(2, 5), nome);
  }
  // Convergent of depth D by backward recurrence t <- 1 + q^n / t.
  const Real& q = nome.q();
  auto convergent = [&](long depth) {
    Real t(1L, ctx.bits());
    Real qn = pow(q, depth);
    for (long n = depth; n >= 1; --n) {
      t = 1 + qn / t;
      qn /= q;
    }
    return q15 / t;
  };
  const Real tol = pow10(-ctx.tail_exponent(), ctx.bits());
  Real prev = convergent(1);
  for (long depth = 2; depth < 100000; ++depth) {
    Real next = convergent(depth);
    if (abs(next - prev) < tol * abs(next)) return next;
    prev = std::move(next);
  }
  throw ConvergenceError("continued fraction did not converge");
}

/// Klein's icosahedral relation: j from R = R(q^2),
/// j = -(R^20 - 228R^15 + 494R^10 + 228R^5 + 1)^3 / (R^5 (R^10 + 11R^5 - 1)^5).
inline Real klein_j_from_R(const Real& R) {
  const mpfr_prec_t bits = R.precision();
  Real r5 = pow(R, 5L);
  Real r10 = r5 * r5;
  Real r15 = r10 * r5;
  Real r20 = r10 * r10;
  Real den_core = r10 + r5 * 11 - 1;
  Real scale(1L, bits);
  scale.scale2(-static_cast<long>(bits / 2));
  if (R.is_zero() || abs(den_core) < scale) throw SingularError("Klein relation is singular at this R");
  Real num = r20 - r15 * 228 + r10 * 494 + r5 * 228 + 1;
  return -(num * num * num) / (r5 * pow(den_core, 5L));
}

/// k_r from theta quotients, k = theta_2^2 / theta_3^2.
inline Real modulus_from_theta(const Nome& nome) {
  Real t2 = theta2(nome);
  Real t3 = theta3(nome);
  return t2 * t2 / (t3 * t3);
}

/// Residuals of the degree-5 modular equations at q and q^5.
struct Modular5Residuals {
  Real k;
  Real k25;
  Real eq3;           // k l + k' l' + 2^{5/3} (k l k' l')^{1/3} - 1, l = k_{25r}
  Real eq4;           // depressed equation with u = k_{25r}^{1/4}, v = k_r^{1/4}
  Real eq4_literal;   // u = k_r^{1/4}, v = k_{25r}^{1/4}, literal labels
};

namespace detail {

inline Real depressed(const Real& u, const Real& v) {
  Real u2 = u * u, v2 = v * v;
  Real u4 = u2 * u2, v4 = v2 * v2;
  return u4 * u2 - v4 * v2 + 5 * u2 * v2 * (u2 - v2) + 4 * u * v * (1 - u4 * v4);
}

}  // namespace detail

inline Modular5Residuals modular5_residuals(const Nome& nome) {
  const PrecisionContext& ctx = nome.ctx();
  Real k = modulus_from_theta(nome);
  Real l = modulus_from_theta(nome.power(5));
  Real kp = detail::complement(k);
  Real lp = detail::complement(l);
  Real two53 = pow(Real(2L, ctx.bits()), Rational(5, 3));
  Real eq3 = k * l + kp * lp + two53 * nth_root(k * l * kp * lp, 3) - 1;
  Real u = nth_root(k, 4);
  Real v = nth_root(l, 4);
  return {k, l, std::move(eq3), detail::depressed(v, u), detail::depressed(u, v)};
}

/// Residual reports for the k l + k'l' relation and the (relabelled) depressed equation.
inline std::pair<IdentityReport, IdentityReport> modular5_check(const Nome& nome) {
  const PrecisionContext& ctx = nome.ctx();
  Modular5Residuals res = modular5_residuals(nome);
  Real zero(0L, ctx.bits());
  Real tol = default_tolerance(ctx);
  return {make_report("modular5.eq3", res.eq3, zero, tol),
          make_report("modular5.eq4", res.eq4, zero, tol, CheckMode::asserted, "u = k_{25r}^{1/4}, v = k_r^{1/4}")};
}

/// R(q^{1/5})^5 against R(1 - 2R + 4R^2 - 3R^3 + R^4)/(1 + 3R + 4R^2 + 2R^3 + R^4).
inline IdentityReport ramanujan_modular5_check(const Nome& nome) {
  Real R = rrcf(nome);
  Real R5 = pow(rrcf(nome.power(Rational(1, 5))), 5L);
  Real R2 = R * R, R3 = R2 * R, R4 = R2 * R2;
  Real rhs = R * (1 - 2 * R + 4 * R2 - 3 * R3 + R4) / (1 + 3 * R + 4 * R2 + 2 * R3 + R4);
  return make_report("ramanujan.modular5", R5, rhs, default_tolerance(nome.ctx()));
}

/// theta = vartheta(5,1;q)^6 vartheta(5,3;q)^6 / (q^2 eta_paper(10 tau)^12).
inline Real sextic_theta(const Nome& nome) {
  Real a = theta_general(ThetaSpec(5, 1), nome);
  Real b = theta_general(ThetaSpec(5, 3), nome);
  Real e = eta_paper(10, nome);
  Real ab = a * b / (e * e);
  return pow(ab, 6L) / nome.pow(2);
}

/// R(q^2)^{-5} - 11 - R(q^2)^5.
inline Real sextic_theta_rrcf(const Nome& nome) {
  Real R = rrcf(nome.power(2));
  Real r5 = pow(R, 5L);
  return 1 / r5 - 11 - r5;
}

/// Exact form of the theta bridge after multiplying by q^2: with
/// P(x) = [1,5;x]/[2,5;x],
/// vartheta(5,1)^6 vartheta(5,3)^6 / eta_paper(10 tau)^12 = P(q^2)^{-5} - 11 q^2 - q^4 P(q^2)^5.
inline std::pair<FormalSeries, FormalSeries> sextic_bridge_series(std::size_t order) {
  FormalSeries t51 = theta_qexpansion(ThetaSpec(5, 1), order);
  FormalSeries t53 = theta_qexpansion(ThetaSpec(5, 3), order);
  FormalSeries lhs = series_pow_int(series_mul(t51, t53), 6);
  lhs = series_mul(lhs, series_pow_int(eta_paper_qexpansion(10, order), -12));

  FormalSeries P = series_mul(agile_qexpansion(1, 5, order), series_inverse(agile_qexpansion(2, 5, order)));
  FormalSeries P2 = series_dilate(P, 2);
  FormalSeries P5 = series_pow_int(P2, 5);
  FormalSeries rhs = series_inverse(P5);
  if (order >= 2) rhs[2] -= 11;
  FormalSeries shifted(order);
  for (std::size_t n = 4; n <= order; ++n) shifted[n] = P5[n - 4];
  rhs -= shifted;
  return {std::move(lhs), std::move(rhs)};
}

/// Y = q^{-1/6} [1,5;q] [2,5;q]; Y^6 = q^{-1} prod ((1-q^n)/(1-q^{5n}))^6.
inline Real sextic_Y(const Nome& nome) {
  return nome.pow(Rational(-1, 6)) * agile(AgileSpec(1, 5), nome) * agile(AgileSpec(2, 5), nome);
}

/// 3125 + 250 Y^6 + Y^12 - j^{1/3} Y^10 for a given j.
inline Real sextic_Y_residual(const Real& Y, const Real& j) {
  Real y2 = Y * Y;
  Real y6 = y2 * y2 * y2;
  Real y10 = y6 * y2 * y2;
  return 3125 + 250 * y6 + y6 * y6 - nth_root(j, 3) * y10;
}

struct SexticYCheck {
  Real Y;
  std::array<Rational, 3> arguments;  // r, 4r, r/4
  std::array<Real, 3> residuals;
  std::array<bool, 3> satisfied;
  int satisfied_count = 0;
};

/// Tests the Y-equation with j at each of r, 4r and r/4; `satisfied` marks
/// the arguments whose residual is below tolerance.
inline SexticYCheck sextic_Y_check(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real Y = sextic_Y(nome);
  SexticYCheck out{Y, {r, r * 4, r / 4}, {Real(ctx.bits()), Real(ctx.bits()), Real(ctx.bits())}, {}, 0};
  Real tol = default_tolerance(ctx);
  Real scale = pow(Y, 12L) + 3125;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational arg = out.arguments[i];
    arg.canonicalize();
    out.arguments[i] = arg;
    out.residuals[i] = sextic_Y_residual(Y, j_invariant(arg, JRoute::modulus, ctx));
    out.satisfied[i] = abs(out.residuals[i]) < tol * scale;
    if (out.satisfied[i]) ++out.satisfied_count;
  }
  return out;
}

/// (b^2/(20a)) + bY + aY^2 = c Y^{5/3}.
struct SexticInstance {
  Real a;
  Real b;
  Real c;
};

struct SexticSolution {
  Real r;
  Real Y;
  Real j_target;
  Real residual;
};

inline Real sextic_j_target(const SexticInstance& inst) {
  if (inst.a.is_zero() || inst.b.is_zero()) throw DomainError("sextic requires a != 0 and b != 0");
  return 250 * pow(inst.c, 3L) / (inst.a * inst.a * inst.b);
}

/// Solves the sextic on the principal branch r >= 1 (j_r >= 1728).
inline SexticSolution solve_sextic(const SexticInstance& inst, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  Real target = sextic_j_target(inst).rounded(bits);
  if (target < 1728) {
    throw BranchError("j-target " + target.to_display(12) + " is below 1728; only the branch r >= 1 is supported");
  }
  const Real log_target = log(target);
  // h(s) = log j(s^2) - log target, increasing in s = sqrt(r) >= 1.
  const PrecisionContext coarse(PrecisionContext::kMinDigits, 0);
  auto h_at = [](const Real& s, const Real& lt, const PrecisionContext& c) {
    return log(j_invariant(s * s, c)) - lt;
  };
  const Real log_target_coarse = log_target.rounded(coarse);
  Real lo(1L, coarse.bits());
  Real hi(2L, coarse.bits());
  while (h_at(hi, log_target_coarse, coarse) < 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1000000) throw ConvergenceError("sextic j-target too large");
  }
  if (h_at(lo, log_target_coarse, coarse) > 0) lo = Real(1L, coarse.bits());
  for (int i = 0; i < 40; ++i) {
    Real mid = (lo + hi) / 2;
    if (h_at(mid, log_target_coarse, coarse) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real s0 = lo.rounded(bits);
  Real s1 = hi.rounded(bits);
  Real h0 = h_at(s0, log_target, ctx);
  Real h1 = h_at(s1, log_target, ctx);
  const Real tol = pow10(-(ctx.working_digits() - 3), bits);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    if (h1 == h0) {
      converged = true;
      break;
    }
    Real s2 = s1 - h1 * (s1 - s0) / (h1 - h0);
    s0 = std::move(s1);
    h0 = std::move(h1);
    s1 = std::move(s2);
    h1 = h_at(s1, log_target, ctx);
    if (abs(s1 - s0) < tol * s1) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("sextic root-finding did not converge");
  Real r = s1 * s1;
  Nome nome = Nome::from_real(r, ctx);
  Real Y = inst.b / (inst.a * 250) * sextic_theta_rrcf(nome);
  Real residual = inst.b * inst.b / (inst.a * 20) + inst.b * Y + inst.a * Y * Y - inst.c * pow(Y, Rational(5, 3));
  return {std::move(r), std::move(Y), std::move(target), std::move(residual)};
}

/// B(x; p, q) = int_0^x t^{p-1} (1-t)^{q-1} dt.
inline Real incomplete_beta(const Real& x, const Rational& p, const Rational& q, const PrecisionContext& ctx) {
  if (x.sign() < 0 || x > 1) throw DomainError("incomplete beta requires 0 <= x <= 1");
  if (p <= 0 || q <= 0) throw DomainError("incomplete beta requires p, q > 0");
  const mpfr_prec_t bits = ctx.bits();
  if (x.is_zero()) return Real(0L, bits);
  const Real xx = x.rounded(bits);
  const bool complete = xx == 1;
  const Rational pm1 = p - 1, qm1 = q - 1;
  const Real one_minus_x = 1 - xx;
  Integrand f = [&](const Abscissa& a) {
    Real one_minus_t = complete ? a.from_hi : one_minus_x + a.from_hi;
    return pow(a.from_lo, pm1) * pow(one_minus_t, qm1);
  };
  auto power_for = [](const Rational& e) -> unsigned {
    // t^{e} with e > -1 non-integer: t = s^k, k the denominator of e.
    if (is_integer(e) && e >= 0) return 1;
    return static_cast<unsigned>(e.get_den().get_ui());
  };
  SubstitutionHint hint{power_for(pm1), complete ? power_for(qm1) : 1u};
  return integrate(f, Limit(Real(0L, bits)), Limit(xx), ctx, hint);
}

struct Theorem3Values {
  Real theta;
  Real integral;        // (1/5) int_theta^inf dt / (t^{1/6} sqrt(125 + 22t + t^2))
  Real beta_squared;    // B(k_{4r}^2, 1/6, 2/3) / (5 4^{1/3})
  Real beta_literal;    // B(k_{4r}, 1/6, 2/3) / (5 4^{1/3})
  Real k4r;
};

/// (1/5) int_theta^inf dt / (t^{1/6} sqrt(125 + 22t + t^2)).
inline Real theorem3_integral(const Real& theta, const PrecisionContext& ctx) {
  const Rational minus_sixth(-1, 6);
  Integrand f = [&](const Abscissa& a) {
    const Real& t = a.t;
    return pow(t, minus_sixth) / sqrt(125 + t * (22 + t));
  };
  return integrate(f, Limit(theta), Limit::infinity(), ctx, {1, 6}) / 5;
}

inline Theorem3Values theorem3_values(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real theta = sextic_theta(nome);
  Real integral = theorem3_integral(theta, ctx);
  Real k4 = singular_modulus(Rational(r * 4), ctx);
  Real denom = nth_root(Real(4L, ctx.bits()), 3) * 5;
  const Rational p(1, 6), q(2, 3);
  Real b2 = incomplete_beta(k4 * k4, p, q, ctx) / denom;
  Real b1 = incomplete_beta(k4, p, q, ctx) / denom;
  return {std::move(theta), std::move(integral), std::move(b2), std::move(b1), std::move(k4)};
}

/// Integral side against B(k_{4r}^2,...); the literal B(k_{4r},...) is
/// returned second as a recorded measurement.
inline std::pair<IdentityReport, IdentityReport> theorem3_check(const Rational& r, const PrecisionContext& ctx) {
  Theorem3Values v = theorem3_values(r, ctx);
  Real tol = default_tolerance(ctx);
  std::string tag = "r=" + to_string(r);
  return {make_report("thm3.beta_k4r_squared." + tag, v.integral, v.beta_squared, tol),
          make_report("thm3.beta_k4r_literal." + tag, v.integral, v.beta_literal, tol, CheckMode::recorded,
                      "incomplete-beta argument k_{4r}, literal form")};
}

/// Central difference of r -> B(k_r^2, 1/6, 2/3) against
/// -(pi/2) 4^{1/3} q^{1/6} eta_paper(tau)^4 / sqrt(r). Returns the relative difference.
inline Real eq43_relative_difference(const Rational& r, const Real& h, const PrecisionContext& ctx,
                                     Real* lhs_out = nullptr, Real* rhs_out = nullptr) {
  const Rational p(1, 6), q(2, 3);
  auto B = [&](const Real& rr) {
    Real k = singular_modulus(rr, ctx);
    return incomplete_beta(k * k, p, q, ctx);
  };
  Real rr(r, ctx);
  Real deriv = (B(rr + h) - B(rr - h)) / (h * 2);
  Nome nome = make_nome(r, ctx);
  Real closed = -(pi_const(ctx) / 2) * nth_root(Real(4L, ctx.bits()), 3) * nome.pow(Rational(1, 6)) *
                pow(eta_paper(1, nome), 4L) / sqrt(rr);
  if (lhs_out) *lhs_out = deriv;
  if (rhs_out) *rhs_out = closed;
  return abs(deriv - closed) / abs(closed);
}

/// Finite-difference step 10^{-digits/4}.
inline Real eq43_default_step(const PrecisionContext& ctx) { return pow10(-(ctx.digits() / 4), ctx.bits()); }

inline IdentityReport eq43_derivative_check(const Rational& r, const PrecisionContext& ctx) {
  Real lhs(ctx.bits()), rhs(ctx.bits());
  Real rel = eq43_relative_difference(r, eq43_default_step(ctx), ctx, &lhs, &rhs);
  Real tol = pow10(-(ctx.digits() / 4) + 4, ctx.bits());
  return make_report("eq43.derivative.r=" + to_string(r), lhs, rhs, tol, CheckMode::asserted,
                     "relative difference, central difference h = 10^-(digits/4)", &rel);
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Theorem4Sides {
  Real lhs;
  Real rhs;
};

/// Left: pi^2 sqrt(r)/(4K^2) (-1 + p - 24 q d/dq log(eta_paper(p tau)^{-(p-1)/2} prod_j vartheta(p/2,(p-2j)/2)));
/// right: 6 alpha(r) - sqrt(r)(1 + k_r^2) + m^2 (-6 alpha(p^2 r) + p sqrt(r)(1 + k_{p^2 r}^2)).
inline Theorem4Sides theorem4_sides(long p, const Rational& r, const PrecisionContext& ctx) {
  if (!is_prime(p)) throw DomainError("theorem4_sides requires p prime");
  if (r <= 0) throw DomainError("theorem4_sides requires r > 0");
  Nome nome = make_nome(r, ctx);
  Real s = eta_paper_log_derivative(p, nome) * Rational(-(p - 1), 2);
  for (long j = 1; j <= (p - 1) / 2; ++j) {
    SeriesValue v = theta_general_with_derivative(ThetaSpec(Rational(p, 2), Rational(p - 2 * j, 2)), nome);
    s += v.q_derivative / v.value;
  }
  EllipticData base = elliptic_data(r, ctx);
  EllipticData scaled = elliptic_data(Rational(r * p * p), ctx);
  Real sr = sqrt(Real(r, ctx));
  Real pi = pi_const(ctx);
  Real lhs = pi * pi * sr / (base.K * base.K * 4) * (p - 1 - 24 * s);
  Real m = scaled.K / base.K;
  Real rhs = 6 * base.alpha - sr * (1 + base.k * base.k) +
             m * m * (-6 * scaled.alpha + sr * p * (1 + scaled.k * scaled.k));
  return {std::move(lhs), std::move(rhs)};
}

inline IdentityReport theorem4_check(long p, const Rational& r, const PrecisionContext& ctx,
                                     CheckMode mode = CheckMode::asserted) {
  Theorem4Sides s = theorem4_sides(p, r, ctx);
  return make_report("thm4.p" + std::to_string(p) + ".r=" + to_string(r), s.lhs, s.rhs, default_tolerance(ctx), mode);
}

}  // namespace qalg

#endif  // QALG_MODULAR_HPP
