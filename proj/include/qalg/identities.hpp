#ifndef QALG_IDENTITIES_HPP
#define QALG_IDENTITIES_HPP

// Numeric and exact identity checks that combine several modules. Each
// function returns one report; the registry in harness.hpp assigns ids.

#include <string>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/core/series.hpp"
#include "qalg/elliptic.hpp"
#include "qalg/expressions.hpp"
#include "qalg/modular.hpp"
#include "qalg/moebius.hpp"
#include "qalg/qengine.hpp"
#include "qalg/report.hpp"

namespace qalg::identities {

namespace detail {

inline Real scaled_tolerance(const Real& scale, const PrecisionContext& ctx) {
  return default_tolerance(ctx) * max(Real(1L, ctx.bits()), abs(scale));
}

inline IdentityReport compare(const Real& lhs, const Real& rhs, const PrecisionContext& ctx,
                              CheckMode mode = CheckMode::asserted, std::string note = {}) {
  return make_report("", lhs, rhs, scaled_tolerance(rhs, ctx), mode, std::move(note));
}

// L(q^m) = sum n q^{mn} / (1 - q^{mn}).
inline Real divisor_lambert(long m, const Nome& nome) { return -eta_paper_log_derivative(m, nome) / m; }

inline PeriodicCoeffs periodic(const std::vector<Rational>& one_period) {
  return ::qalg::detail::periodic_from_values(one_period);
}

inline PeriodicCoeffs character_period(long G) {
  JacobiCharacter chi(G);
  std::vector<Rational> v(static_cast<std::size_t>(G));
  for (long n = 1; n <= G; ++n) v[static_cast<std::size_t>(n - 1)] = chi(n);
  return periodic(v);
}

inline std::string series_head(const FormalSeries& s, std::size_t terms = 6) {
  std::string out;
  for (std::size_t i = 0; i < terms && i <= s.order(); ++i) out += (i ? ", " : "") + to_string(s[i]);
  return out + (s.order() >= terms ? ", ..." : "");
}

inline IdentityReport exact_series(const FormalSeries& lhs, const FormalSeries& rhs, const std::string& note) {
  auto mismatch = first_mismatch(lhs, rhs);
  IdentityReport rep = make_exact_report("", !mismatch, series_head(lhs), series_head(rhs), note);
  if (mismatch) rep.note += "; first mismatch at q^" + std::to_string(*mismatch);
  return rep;
}

}  // namespace detail

/// k_r = theta2^2/theta3^2 at q and k_{25r} the same at q^5.
inline IdentityReport theta_modulus(const Rational& r, long scale, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = modulus_from_theta(nome.power(scale));
  Real rhs = singular_modulus(Rational(r * scale * scale), ctx);
  return detail::compare(lhs, rhs, ctx);
}

inline IdentityReport modular5_eq3(const Rational& r, const PrecisionContext& ctx) {
  return modular5_check(make_nome(r, ctx)).first;
}

inline IdentityReport modular5_eq4(const Rational& r, bool literal, const PrecisionContext& ctx) {
  if (!literal) return modular5_check(make_nome(r, ctx)).second;
  Modular5Residuals res = modular5_residuals(make_nome(r, ctx));
  return make_report("", res.eq4_literal, Real(0L, ctx.bits()), default_tolerance(ctx), CheckMode::recorded,
                     "u = k_r^{1/4}, v = k_{25r}^{1/4} literal form");
}

/// Klein's relation on R(q^2) against the modulus formula for j_r.
inline IdentityReport klein_consistency(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = klein_j_from_R(rrcf(nome.power(2)));
  Real rhs = j_invariant(r, JRoute::modulus, ctx);
  return detail::compare(lhs, rhs, ctx);
}

inline IdentityReport ramanujan_modular5(const Rational& r, const PrecisionContext& ctx) {
  return ramanujan_modular5_check(make_nome(r, ctx));
}

/// Eta-quotient j against the modulus j.
inline IdentityReport j_routes(const Rational& r, const PrecisionContext& ctx) {
  return detail::compare(j_invariant(r, JRoute::eta, ctx), j_invariant(r, JRoute::modulus, ctx), ctx);
}

/// The eta-quotient j when the standard eta is combined with the explicit
/// q^{-+1/24} factors as well.
inline IdentityReport j_double_counted(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real s = nome.pow(Rational(-1, 24)) * eta_dedekind(1, nome) / eta_dedekind(2, nome);
  Real s8 = pow(s, 8L);
  Real bracket = s8 * s8 + 16 / s8;
  Real lhs = bracket * bracket * bracket;
  return detail::compare(lhs, j_invariant(r, JRoute::modulus, ctx), ctx, CheckMode::recorded,
                         "standard eta together with the explicit q^{-+1/24} factors");
}

/// eta_paper^8 q^{1/3} pi^4 / 2^{8/3} against k^{2/3} k'^{8/3} K^4.
inline IdentityReport eta_modulus(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  EllipticData d = elliptic_data(r, ctx);
  Real pi = pi_const(ctx);
  Real lhs = pow(eta_paper(1, nome), 8L) * nome.pow(Rational(1, 3)) * pow(pi, 4L) /
             pow(Real(2L, ctx.bits()), Rational(8, 3));
  Real rhs = pow(d.k, Rational(2, 3)) * pow(d.k_prime, Rational(8, 3)) * pow(d.K, 4L);
  return detail::compare(lhs, rhs, ctx);
}

/// Sextic solved through j_r = 250 c^3/(a^2 b): recovered r against the expected one.
inline IdentityReport sextic_solution(long a, long b, long c, const Rational& expected_r, const PrecisionContext& ctx) {
  SexticInstance inst{Real(a, ctx), Real(b, ctx), Real(c, ctx)};
  SexticSolution sol = solve_sextic(inst, ctx);
  return detail::compare(sol.r, Real(expected_r, ctx), ctx);
}

/// Agile product against the M-series form.
inline IdentityReport agile_m_series(const Rational& a, const Rational& p, const Rational& r,
                                     const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  AgileSpec spec(a, p);
  return detail::compare(agile_via_m_series(spec, nome), agile(spec, nome), ctx);
}

/// tau*(a,p) against tau*(np + a, p).
inline IdentityReport duplication_symmetry(const Rational& a, const Rational& p, long n, const Rational& r,
                                           const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = tau_star(AgileSpec(a, p), nome);
  Real rhs = tau_star(AgileSpec::extended(p * n + a, p), nome);
  return detail::compare(lhs, rhs, ctx);
}

/// [a,p;q] eta_paper(p tau) against vartheta(p/2, (p-2a)/2; q).
inline IdentityReport agile_theta(const Rational& a, const Rational& p, const Rational& r,
                                  const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = agile(AgileSpec(a, p), nome) * eta_paper(p, nome);
  Real rhs = theta_general(ThetaSpec(p / 2, (p - 2 * a) / 2), nome);
  return detail::compare(lhs, rhs, ctx);
}

/// Product and theta representations of e^{-f} agree numerically.
inline IdentityReport product_vs_theta(const std::vector<Rational>& period, const Rational& r,
                                       const PrecisionContext& ctx) {
  PeriodicCoeffs pc = detail::periodic(period);
  Nome nome = make_nome(r, ctx);
  return detail::compare(evaluate_theta(represent_theta(pc), nome), evaluate_product(represent_product(pc), nome), ctx);
}

/// Lambert series of X against -q d/dq log of its theta representation.
inline IdentityReport lambert_vs_logderiv(const PeriodicCoeffs& pc, const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  return detail::compare(lambert_series(pc, nome), logderiv_representation(pc, nome), ctx);
}

inline IdentityReport character_lambert(long G, const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  JacobiCharacter chi(G);
  return detail::compare(lambert_series(chi, nome), logderiv_representation(detail::character_period(G), nome), ctx);
}

/// sum (n/5) n q^n/(1-q^n) = -q d/dq log(vartheta(5/2,3/2)/vartheta(5/2,1/2)).
inline IdentityReport legendre5_lambert(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  SeriesValue A = theta_general_with_derivative(ThetaSpec(Rational(5, 2), Rational(3, 2)), nome);
  SeriesValue B = theta_general_with_derivative(ThetaSpec(Rational(5, 2), Rational(1, 2)), nome);
  Real rhs = -(A.q_derivative / A.value - B.q_derivative / B.value);
  return detail::compare(lambert_series(JacobiCharacter(5), nome), rhs, ctx);
}

/// vartheta(5/2,3/2)/vartheta(5/2,1/2) = q^{-1/5} R(q).
inline IdentityReport legendre5_rrcf(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = theta_general(ThetaSpec(Rational(5, 2), Rational(3, 2)), nome) /
             theta_general(ThetaSpec(Rational(5, 2), Rational(1, 2)), nome);
  return detail::compare(lhs, nome.pow(Rational(-1, 5)) * rrcf(nome), ctx);
}

/// L(q) - 5 L(q^5) = -q d/dq log(vartheta(5/2,1/2) vartheta(5/2,3/2) / eta_paper(5 tau)^2).
inline IdentityReport lambert_level5(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real lhs = detail::divisor_lambert(1, nome) - 5 * detail::divisor_lambert(5, nome);
  SeriesValue a = theta_general_with_derivative(ThetaSpec(Rational(5, 2), Rational(1, 2)), nome);
  SeriesValue b = theta_general_with_derivative(ThetaSpec(Rational(5, 2), Rational(3, 2)), nome);
  Real rhs = -(a.q_derivative / a.value + b.q_derivative / b.value - 2 * eta_paper_log_derivative(5, nome));
  return detail::compare(lhs, rhs, ctx);
}

/// 1 - 24 L(q) against the alpha / K closed form.
inline IdentityReport eisenstein(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  EllipticData d = elliptic_data(r, ctx);
  Real pi = pi_const(ctx);
  Real sr = sqrt(Real(r, ctx));
  Real lhs = 1 - 24 * detail::divisor_lambert(1, nome);
  Real rhs = 6 / (pi * sr) + 4 * d.K * d.K * (-6 * d.alpha + sr * (1 + d.k * d.k)) / (pi * pi * sr);
  return detail::compare(lhs, rhs, ctx);
}

/// sum q^{n^2 + 2 m' n} = q^{-m'^2} sqrt(2K/pi).
inline IdentityReport powersum_even(long m_half, const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  Real K = ellint_K(singular_modulus(r, ctx), ctx);
  Real rhs = nome.pow(Rational(-m_half * m_half)) * sqrt(2 * K / pi_const(ctx));
  return detail::compare(theta_powersum(2 * m_half, nome), rhs, ctx);
}

/// Odd-m closed form; `literal` uses k22 = sqrt(1 - k12^2) (literal form),
/// otherwise k22 = sqrt(1 - k21^2).
inline IdentityReport powersum_odd(long m, const Rational& r, bool literal, const PrecisionContext& ctx) {
  if (m % 2 == 0) throw DomainError("odd closed form needs odd m");
  Nome nome = make_nome(r, ctx);
  SingularModulus sm = singular_modulus_pair(Real(r, ctx), ctx);
  const Real& k11 = sm.k;
  const Real& k12 = sm.k_prime;
  Real k21 = (2 - k11 * k11 - 2 * k12) / (k11 * k11);
  Real k22 = literal ? sqrt(1 - k12 * k12) : sqrt(1 - k21 * k21);
  Real K = ::qalg::detail::ellint_K_from_complement(k12, ctx);
  Real rhs = pow(Real(2L, ctx.bits()), Rational(5, 6)) * nome.pow(Rational(-m * m, 4)) *
             pow(k11 * k12 * k21, Rational(1, 6)) / pow(k22, Rational(1, 3)) * sqrt(K / pi_const(ctx));
  return detail::compare(theta_powersum(m, nome), rhs, ctx, literal ? CheckMode::recorded : CheckMode::asserted,
                         literal ? "k22 = sqrt(1 - k12^2), literal form" : "k22 = sqrt(1 - k21^2)");
}

/// k_i(k_r) = r.
inline IdentityReport inverse_modulus(const Rational& r, const PrecisionContext& ctx) {
  Real x = singular_modulus(r, ctx);
  return detail::compare(inverse_singular_modulus(x, ctx), Real(r, ctx), ctx);
}

inline IdentityReport sextic_theta_bridge(const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  return detail::compare(sextic_theta(nome), sextic_theta_rrcf(nome), ctx);
}

/// sextic_theta(1/5) = 5 sqrt5.
inline IdentityReport sextic_theta_fifth(const PrecisionContext& ctx) {
  return detail::compare(sextic_theta(make_nome(Rational(1, 5), ctx)), 5 * sqrt(Real(5L, ctx)), ctx);
}

inline IdentityReport k45_matches_radical(const PrecisionContext& ctx) {
  return detail::compare(singular_modulus(Rational(4, 5), ctx), k45_radical(ctx), ctx);
}

inline IdentityReport theorem3(const Rational& r, bool literal, const PrecisionContext& ctx) {
  auto pair = theorem3_check(r, ctx);
  return literal ? pair.second : pair.first;
}

/// Exactly one of j_r, j_{4r}, j_{r/4} satisfies the Y-equation.
inline IdentityReport sextic_Y_index(const Rational& r, CheckMode mode, const PrecisionContext& ctx) {
  SexticYCheck chk = sextic_Y_check(r, ctx);
  std::string which;
  for (std::size_t i = 0; i < 3; ++i) {
    if (chk.satisfied[i]) which += (which.empty() ? "j at r=" : ", r=") + to_string(chk.arguments[i]);
  }
  if (which.empty()) which = "none";
  IdentityReport rep = make_exact_report("", chk.satisfied_count == 1, which, "exactly one of r, 4r, r/4",
                                         std::to_string(chk.satisfied_count) + " argument(s) satisfy the equation");
  if (mode == CheckMode::recorded) rep.verdict = Verdict::recorded;
  return rep;
}

inline IdentityReport theorem4(long p, const Rational& r, CheckMode mode, const PrecisionContext& ctx) {
  IdentityReport rep = theorem4_check(p, r, ctx, mode);
  return rep;
}

/// ([1,4;q]*)^12 = 4(1 - k^2)/k with k = k_r.
inline IdentityReport q14_at_r(const Rational& r, const PrecisionContext& ctx) {
  Real lhs = pow(agile_star(AgileSpec(1, 4), make_nome(r, ctx)), 12L);
  return detail::compare(lhs, q14_closed_form12(singular_modulus(r, ctx)), ctx);
}

inline IdentityReport q124_at_r(const Rational& r, const PrecisionContext& ctx) {
  Real lhs = pow(agile_star(AgileSpec(Rational(1, 2), 4), make_nome(r, ctx)), 48L);
  return detail::compare(lhs, q124_closed_form48(singular_modulus(r, ctx)), ctx);
}

/// Same closed forms in the x variable: the nome is e^{-pi sqrt(k_i(x))}.
inline IdentityReport q14_at_x(const Rational& x, const PrecisionContext& ctx) {
  Real xr(x, ctx);
  Real lhs = pow(agile_star(AgileSpec(1, 4), nome_from_modulus(xr, ctx)), 12L);
  return detail::compare(lhs, q14_closed_form12(xr), ctx);
}

inline IdentityReport q124_at_x(const Rational& x, const PrecisionContext& ctx) {
  Real xr(x, ctx);
  Real lhs = pow(agile_star(AgileSpec(Rational(1, 2), 4), nome_from_modulus(xr, ctx)), 48L);
  return detail::compare(lhs, q124_closed_form48(xr), ctx);
}

/// q^A e^{-f} at r, compared with a closed form.
inline Real qA_ef(const std::vector<Rational>& period, const Rational& r, const PrecisionContext& ctx) {
  ExprParams ps;
  ps.r = r;
  ps.period_values = period;
  return evaluate_subject("qA-ef", ps, ctx);
}

inline IdentityReport example2(const PrecisionContext& ctx) {
  Real lhs = qA_ef({1, 1, 0}, 1, ctx);
  return detail::compare(lhs, nth_root(example2_closed_form12(ctx), 12), ctx);
}

inline IdentityReport example3_ii(const PrecisionContext& ctx) {
  Real lhs = qA_ef({1, 1, 1, 1, 0}, 4, ctx);
  return detail::compare(lhs, example3_closed_form(ctx), ctx);
}

/// At r = 2, v = q^{-1/6} e^{-f} is a root of 3125 + 250 v^6 - 20 v^10 + v^12.
inline IdentityReport example3_i(const PrecisionContext& ctx) {
  Real v = qA_ef({1, 1, 1, 1, 0}, 2, ctx);
  Real v2 = v * v;
  Real v6 = v2 * v2 * v2;
  Real v10 = v6 * v2 * v2;
  Real value = 3125 + 250 * v6 - 20 * v10 + v6 * v6;
  Real zero(0L, ctx.bits());
  return make_report("", value, zero, detail::scaled_tolerance(v6 * v6 + 3125, ctx));
}

/// Exponent A of a period against its expected value.
inline IdentityReport exponent(const PeriodicCoeffs& pc, const Rational& expected) {
  Rational A = exponent_A(pc);
  return make_exact_report("", A == expected, to_string(A), to_string(expected));
}

inline IdentityReport exponent(const std::vector<Rational>& period, const Rational& expected) {
  return exponent(detail::periodic(period), expected);
}

inline IdentityReport exponent_character(long G, const Rational& expected) {
  return exponent(detail::character_period(G), expected);
}

/// Moebius pipeline: Taylor coefficients of f built from X recover X, and
/// exp(-f) equals the finite agile product, coefficientwise.
inline IdentityReport main_theorem_series(const std::vector<Rational>& period, std::size_t order) {
  std::vector<Rational> X(order);
  for (std::size_t n = 0; n < order; ++n) X[n] = period[n % period.size()];
  TaylorInput in = taylor_from_X(X);
  std::vector<Rational> back = extract_X(in);
  if (back != X) return make_exact_report("", false, "X recovered", "X", "Moebius inversion did not round-trip");
  auto pc = detect_period(back, static_cast<long>(period.size()));
  if (!pc) return make_exact_report("", false, "not periodic", "periodic");
  return detail::exact_series(expand_product(represent_product(*pc), order), exp_neg_taylor(in, order),
                              "agile product against exp(-f), order " + std::to_string(order));
}

inline IdentityReport main_theorem_character(long G, std::size_t order) {
  PeriodicCoeffs pc = detail::character_period(G);
  return main_theorem_series(pc.values, order);
}

/// [a,p;q] eta_paper(p tau) = vartheta(p/2,(p-2a)/2;q) coefficientwise.
inline IdentityReport agile_theta_series(long a, long p, std::size_t order) {
  FormalSeries lhs = series_mul(agile_qexpansion(a, p, order), eta_paper_qexpansion(p, order));
  FormalSeries rhs = theta_qexpansion(ThetaSpec(Rational(p, 2), Rational(p - 2 * a, 2)), order);
  return detail::exact_series(lhs, rhs, "order " + std::to_string(order));
}

inline IdentityReport bridge_series(std::size_t order) {
  auto [lhs, rhs] = sextic_bridge_series(order);
  return detail::exact_series(lhs, rhs, "multiplied by q^2, order " + std::to_string(order));
}

inline IdentityReport conjecture2_series(long g, std::size_t order) {
  SeriesIdentityResult res = conjecture2_etaquotient(g, order);
  IdentityReport rep = make_exact_report("", res.identical, "prod (1-q^n)^{(n/" + std::to_string(g) + ")}",
                                         "eta quotient over the primes of " + std::to_string(g),
                                         "order " + std::to_string(order));
  if (res.first_mismatch) rep.note += "; first mismatch at q^" + std::to_string(*res.first_mismatch);
  return rep;
}

/// Lambert series of (n/g) against the inclusion-exclusion combination of
/// L(q^m); `with_prefactor` multiplies by -q^{-1}.
inline IdentityReport conjecture2_lambert(long g, bool with_prefactor, const Rational& r, const PrecisionContext& ctx) {
  Nome nome = make_nome(r, ctx);
  std::vector<long> primes = square_primes(g);
  Real comb(0L, ctx.bits());
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    long m = 1;
    int sign = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        m *= primes[i];
        sign = -sign;
      }
    }
    comb += detail::divisor_lambert(m, nome) * (sign * m);
  }
  if (with_prefactor) comb = -comb / nome.q();
  Real lhs = lambert_series([g](long n) { return Rational(kronecker_symbol(n, g)); }, nome);
  return detail::compare(lhs, comb, ctx, CheckMode::recorded,
                         with_prefactor ? "with the -q^{-1} prefactor (literal form)" : "without the -q^{-1} prefactor");
}

/// Recognition of a named quantity, optionally against an expected polynomial.
inline IdentityReport recognition(const std::string& subject, const ExprParams& ps, int max_degree, int height,
                                  const PrecisionContext& ctx, const std::optional<IntegerPolynomial>& expected) {
  RecognitionResult res = recognize_expression(subject, ps, max_degree, height, ctx);
  const bool recognized = res.status == RecognitionStatus::recognized;
  std::string found = res.poly ? res.poly->to_string() : std::string(to_string(res.status));
  IdentityReport rep;
  if (expected) {
    rep = make_exact_report("", recognized && *res.poly == *expected, found, expected->to_string());
  } else {
    rep.lhs = found;
    rep.rhs = "degree <= " + std::to_string(max_degree) + ", height < 10^" + std::to_string(height);
    rep.abs_difference = recognized ? res.verified_residual.to_string(6) : "n/a";
    rep.tolerance = pow10(-(res.verify_digits - ctx.guard() - (res.poly ? res.poly->degree() : 0) * height),
                          ctx.bits())
                        .to_string(3);
    rep.log10_difference = recognized ? res.verified_residual.log10_abs() : 0;
    rep.verdict = recognized ? Verdict::pass : Verdict::fail;
  }
  rep.note = res.provenance + ": " + to_string(res.status) + ", verified at " + std::to_string(res.verify_digits) +
             " digits";
  if (!res.note.empty()) rep.note += "; " + res.note;
  return rep;
}

/// The nested radical against the computed value, and as a root of the quartic.
inline IdentityReport eq58_value(const PrecisionContext& ctx) {
  ExprParams ps;
  ps.a = 1;
  ps.p = 3;
  ps.x = Rational(1, 5);
  ps.power = 6;
  return detail::compare(eq58_radical(ctx), evaluate_subject("agile-star", ps, ctx), ctx);
}

inline IdentityReport eq58_quartic_root(const PrecisionContext& ctx) {
  Real x = eq58_radical(ctx);
  IntegerPolynomial quartic({-885735, 0, -21870, 364, 45});
  Real residual = quartic.evaluate(x);
  return make_report("", residual, Real(0L, ctx.bits()), detail::scaled_tolerance(quartic.magnitude(x), ctx));
}

}  // namespace qalg::identities

#endif  // QALG_IDENTITIES_HPP
