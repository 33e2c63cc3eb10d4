#ifndef QALG_EXPRESSIONS_HPP
#define QALG_EXPRESSIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/elliptic.hpp"
#include "qalg/modular.hpp"
#include "qalg/moebius.hpp"
#include "qalg/qengine.hpp"
#include "qalg/recognizer.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// Named parameters of an evaluator. Exact quantities are rationals; the
/// nome comes from r, or from a modulus x through r = k_i(x).
struct ExprParams {
  std::optional<Rational> a, p, b, r, x, m, n;
  std::optional<Rational> a2, b2;        // second theta in a quotient
  std::optional<long> power;             // the value is raised to this power
  std::vector<Rational> period_values;   // one period a_1..a_T for q^A e^{-f}
  std::optional<std::string> method;     // rrcf: product | continued-fraction
  std::optional<std::string> route;      // j: modulus | eta
  std::optional<std::string> value;      // literal decimal constant

  std::map<std::string, std::string> describe() const {
    std::map<std::string, std::string> out;
    auto put = [&](const char* k, const std::optional<Rational>& v) {
      if (v) out[k] = to_string(*v);
    };
    put("a", a);
    put("p", p);
    put("b", b);
    put("r", r);
    put("x", x);
    put("m", m);
    put("n", n);
    put("a2", a2);
    put("b2", b2);
    if (power) out["power"] = std::to_string(*power);
    if (!period_values.empty()) {
      std::string s;
      for (const auto& v : period_values) s += (s.empty() ? "" : ",") + to_string(v);
      out["X"] = s;
    }
    if (method) out["method"] = *method;
    if (route) out["route"] = *route;
    if (value) out["value"] = *value;
    return out;
  }
};

namespace detail {

inline const Rational& need(const std::optional<Rational>& v, const char* name, const std::string& subject) {
  if (!v) throw DomainError(subject + " needs --" + name);
  return *v;
}

inline Nome nome_for(const ExprParams& ps, const std::string& subject, const PrecisionContext& ctx) {
  if (ps.x) {
    Real x(*ps.x, ctx);
    if (!(x.sign() > 0 && x < 1)) throw DomainError("modulus x must lie in (0,1)");
    return nome_from_modulus(x, ctx);
  }
  return make_nome(need(ps.r, "r", subject), ctx);
}

inline PeriodicCoeffs periodic_from_values(const std::vector<Rational>& values) {
  if (values.empty()) throw DomainError("q^A e^{-f} needs the period values (--X)");
  const std::size_t T = values.size();
  std::vector<Rational> seq(3 * T);
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = values[i % T];
  auto pc = detect_period(seq, static_cast<long>(T));
  if (!pc || pc->period != static_cast<long>(T)) {
    throw DomainError("X values do not form a period with a_T = 0");
  }
  if (!pc->catoptric) throw DomainError("X values are not catoptric");
  return *pc;
}

}  // namespace detail

/// Subjects accepted by evaluate_subject.
inline const std::vector<std::string>& eval_subjects() {
  static const std::vector<std::string> subjects = {
      "agile", "agile-star", "theta", "theta2", "theta3", "eta-paper", "k", "ki", "K", "alpha", "j", "rrcf",
      "sextic-theta", "multiplier", "qA-ef", "theta-quotient", "agile-star6", "const"};
  return subjects;
}

/// Evaluates a named quantity at ctx precision.
inline Real evaluate_subject(const std::string& subject, const ExprParams& ps, const PrecisionContext& ctx) {
  using detail::need;
  Real v(ctx.bits());
  if (subject == "agile" || subject == "agile-star" || subject == "agile-star6") {
    AgileSpec spec(need(ps.a, "a", subject), need(ps.p, "p", subject));
    Nome nome = detail::nome_for(ps, subject, ctx);
    v = subject == "agile" ? agile(spec, nome) : agile_star(spec, nome);
    if (subject == "agile-star6") v = pow(v, 6L);
  } else if (subject == "theta") {
    v = theta_general(ThetaSpec(need(ps.a, "a", subject), need(ps.b, "b", subject)), detail::nome_for(ps, subject, ctx));
  } else if (subject == "theta-quotient") {
    Nome nome = detail::nome_for(ps, subject, ctx);
    v = theta_general(ThetaSpec(need(ps.a, "a", subject), need(ps.b, "b", subject)), nome) /
        theta_general(ThetaSpec(need(ps.a2, "a2", subject), need(ps.b2, "b2", subject)), nome);
  } else if (subject == "theta2") {
    v = theta2(detail::nome_for(ps, subject, ctx));
  } else if (subject == "theta3") {
    v = theta3(detail::nome_for(ps, subject, ctx));
  } else if (subject == "eta-paper") {
    v = eta_paper(ps.m ? *ps.m : Rational(1), detail::nome_for(ps, subject, ctx));
  } else if (subject == "k") {
    v = singular_modulus(need(ps.r, "r", subject), ctx);
  } else if (subject == "ki") {
    v = inverse_singular_modulus(Real(need(ps.x, "x", subject), ctx), ctx);
  } else if (subject == "K") {
    if (ps.x) {
      v = ellint_K(Real(*ps.x, ctx), ctx);
    } else {
      v = ellint_K(singular_modulus(need(ps.r, "r", subject), ctx), ctx);
    }
  } else if (subject == "alpha") {
    v = elliptic_alpha(need(ps.r, "r", subject), ctx);
  } else if (subject == "j") {
    JRoute route = JRoute::modulus;
    if (ps.route) {
      if (*ps.route == "eta") {
        route = JRoute::eta;
      } else if (*ps.route != "modulus") {
        throw DomainError("j route must be 'modulus' or 'eta'");
      }
    }
    v = j_invariant(need(ps.r, "r", subject), route, ctx);
  } else if (subject == "rrcf") {
    RrcfMethod method = RrcfMethod::product;
    if (ps.method) {
      if (*ps.method == "continued-fraction") {
        method = RrcfMethod::continued_fraction;
      } else if (*ps.method != "product") {
        throw DomainError("rrcf method must be 'product' or 'continued-fraction'");
      }
    }
    v = rrcf(detail::nome_for(ps, subject, ctx), method);
  } else if (subject == "sextic-theta") {
    v = sextic_theta(detail::nome_for(ps, subject, ctx));
  } else if (subject == "multiplier") {
    const Rational& n = need(ps.n, "n", subject);
    if (!is_integer(n)) throw DomainError("multiplier needs an integer n");
    v = multiplier(need(ps.r, "r", subject), n.get_num().get_si(), ctx);
  } else if (subject == "qA-ef") {
    PeriodicCoeffs pc = detail::periodic_from_values(ps.period_values);
    Nome nome = detail::nome_for(ps, subject, ctx);
    v = nome.pow(pc.A) * evaluate_product(represent_product(pc), nome);
  } else if (subject == "const") {
    if (!ps.value) throw DomainError("const needs --value");
    v = Real::from_decimal(*ps.value, ctx);
  } else {
    throw DomainError("unknown subject '" + subject + "'");
  }
  if (ps.power) v = pow(v, *ps.power);
  return v;
}

/// "subject(a=1, p=3, x=1/5)^6" style provenance label.
inline std::string provenance(const std::string& subject, const ExprParams& ps) {
  std::string s = subject + "(";
  bool first = true;
  for (const auto& [k, v] : ps.describe()) {
    if (k == "power") continue;
    s += (first ? "" : ", ") + k + "=" + v;
    first = false;
  }
  s += ")";
  if (ps.power) s += "^" + std::to_string(*ps.power);
  return s;
}

/// Recognizes a named quantity; re-verification recomputes it at twice the digits.
inline RecognitionResult recognize_expression(const std::string& subject, const ExprParams& ps, int max_degree,
                                              int height_digits, const PrecisionContext& ctx) {
  RecognitionResult res;
  if (subject == "const") {
    res = recognize(evaluate_subject(subject, ps, ctx), max_degree, height_digits, ctx);
    res.note += res.note.empty() ? "" : "; ";
    res.note += "literal constant: verified against held-out digits";
  } else {
    res = recognize([&](const PrecisionContext& c) { return evaluate_subject(subject, ps, c); }, max_degree,
                    height_digits, ctx);
  }
  res.provenance = provenance(subject, ps);
  return res;
}

/// Q_{1,4}(x)^12 = 4(1 - x^2)/x.
inline Real q14_closed_form12(const Real& x) { return 4 * (1 - x * x) / x; }

/// Q_{1/2,4}(x)^48 = 4(1-x)^4 (2 + x - 2 sqrt(1+x))^12 / (x^13 (1+x)^2).
inline Real q124_closed_form48(const Real& x) {
  Real inner = 2 + x - 2 * sqrt(1 + x);
  return 4 * pow(1 - x, 4L) * pow(inner, 12L) / (pow(x, 13L) * pow(1 + x, 2L));
}

struct QProbe {
  Rational x;
  RecognitionResult result;
  std::optional<IdentityReport> closed_form;
};

/// Evaluates [a,p; q_x]* (raised to `power`) at each x and recognizes it;
/// (1,4) and (1/2,4) are additionally compared with their closed forms.
inline std::vector<QProbe> probe_Q_function(const Rational& a, const Rational& p, const std::vector<Rational>& xs,
                                            int max_degree, const PrecisionContext& ctx, long power = 1,
                                            int height_digits = 8) {
  std::vector<QProbe> out;
  for (const Rational& x : xs) {
    if (!(x > 0 && x < 1)) throw DomainError("probe points must lie in (0,1)");
    ExprParams ps;
    ps.a = a;
    ps.p = p;
    ps.x = x;
    if (power != 1) ps.power = power;
    QProbe probe{x, recognize_expression("agile-star", ps, max_degree, height_digits, ctx), std::nullopt};
    Real xr(x, ctx);
    if (p == 4 && (a == 1 || a == Rational(1, 2))) {
      const bool quarter = a == 1;
      const long k = quarter ? 12 : 48;
      Real lhs = pow(agile_star(AgileSpec(a, p), nome_from_modulus(xr, ctx)), k);
      Real rhs = quarter ? q14_closed_form12(xr) : q124_closed_form48(xr);
      probe.closed_form = make_report(std::string(quarter ? "eq53" : "eq54") + ".x=" + to_string(x), lhs, rhs,
                                      default_tolerance(ctx) * max(Real(1L, ctx.bits()), abs(rhs)));
    }
    out.push_back(std::move(probe));
  }
  return out;
}

/// 81 (885 + 511 sqrt3 - 3 sqrt(174033 + 100478 sqrt3)), the 12th power of
/// q^{-1/12} e^{-f} at q = e^{-pi} for X = {1,1,0}.
inline Real example2_closed_form12(const PrecisionContext& ctx) {
  Real s3 = sqrt(Real(3L, ctx));
  return 81 * (885 + 511 * s3 - 3 * sqrt(174033 + 100478 * s3));
}

/// sqrt(5/2 + 5 sqrt5 / 2).
inline Real example3_closed_form(const PrecisionContext& ctx) {
  Real s5 = sqrt(Real(5L, ctx));
  return sqrt((5 + 5 * s5) / 2);
}

/// (2 - sqrt(2 - 4 sqrt(sqrt5 - 2))) / (2 + sqrt(2 - 4 sqrt(sqrt5 - 2))), a closed form for k_{4/5}.
inline Real k45_radical(const PrecisionContext& ctx) {
  Real s = sqrt(2 - 4 * sqrt(sqrt(Real(5L, ctx)) - 2));
  return (2 - s) / (2 + s);
}

/// Nested radical closed form of ([1,3; q_{k_i(1/5)}]*)^6.
inline Real eq58_radical(const PrecisionContext& ctx) {
  Real c = nth_root(Real(90L, ctx), 3);  // 3^{2/3} 10^{1/3}
  Real first = sqrt(689224 - 148230 * c);
  Real inner = 92571934 * sqrt(2 / (344612 - 74115 * c)) + 74115 * c + 689224;
  return (-182 - first + sqrt(2 * inner)) / 90;
}

}  // namespace qalg

#endif  // QALG_EXPRESSIONS_HPP
