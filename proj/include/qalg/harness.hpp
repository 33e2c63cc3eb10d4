#ifndef QALG_HARNESS_HPP
#define QALG_HARNESS_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/identities.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// A named, parameterized identity check.
struct IdentityCheck {
  std::string id;
  std::vector<std::string> suites;
  std::map<std::string, Rational> params;
  /// Minimum working digits (0: whatever the suite runs at).
  int digits = 0;
  /// Library operations the check exercises; drives the coverage self-test.
  std::vector<std::string> exercises;
  std::function<IdentityReport(const PrecisionContext&)> run;

  bool in_suite(const std::string& suite) const {
    return suite == "all" || std::find(suites.begin(), suites.end(), suite) != suites.end();
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"paper-core", "conjectures", "series-exact", "all"};
  return names;
}

inline bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

/// Default digits of a suite run.
inline int default_suite_digits(const std::string& suite) {
  if (suite == "conjectures") return 300;
  if (suite == "series-exact") return 50;
  return 120;
}

/// (a, p, r) triples whose normalized agile is recognized below degree 24.
inline std::vector<std::array<Rational, 3>> criterion_triples() {
  return {{1, 2, 1}, {1, 2, 2}, {1, 2, 4}, {1, 2, 3}, {1, 2, Rational(1, 2)}, {1, 3, 2},
          {1, 3, Rational(1, 3)}, {1, 4, 1}, {1, 4, 2}, {1, 4, 4}, {1, 4, Rational(1, 2)}, {1, 6, 2}};
}

namespace detail {

constexpr std::size_t kSeriesOrder = 120;

class RegistryBuilder {
 public:
  using Fn = std::function<IdentityReport(const PrecisionContext&)>;

  RegistryBuilder& add(std::string id, std::vector<std::string> suites, std::vector<std::string> exercises, Fn fn,
                       std::map<std::string, Rational> params = {}, int digits = 0) {
    checks_.push_back({std::move(id), std::move(suites), std::move(params), digits, std::move(exercises), std::move(fn)});
    return *this;
  }

  std::vector<IdentityCheck> take() { return std::move(checks_); }

 private:
  std::vector<IdentityCheck> checks_;
};

inline std::string rtag(const Rational& r) {
  std::string s = to_string(r);
  std::replace(s.begin(), s.end(), '/', '_');
  return s;
}

inline std::vector<IdentityCheck> build_registry() {
  namespace id = identities;
  RegistryBuilder b;
  const std::vector<std::string> core = {"paper-core"};
  const std::vector<std::string> conj = {"conjectures"};
  const std::vector<std::string> exact = {"series-exact"};
  const std::vector<std::string> core_exact = {"paper-core", "series-exact"};
  const std::vector<std::string> conj_exact = {"conjectures", "series-exact"};
  const std::vector<std::string> core_conj = {"paper-core", "conjectures"};

  for (Rational r : {Rational(1), Rational(2), Rational(1, 5)}) {
    b.add("eq03.modular5.r" + rtag(r), core, {"modular5_check", "theta2", "theta3"},
          [r](const PrecisionContext& c) { return id::modular5_eq3(r, c); }, {{"r", r}});
    b.add("eq04.depressed.r" + rtag(r), core, {"modular5_check"},
          [r](const PrecisionContext& c) { return id::modular5_eq4(r, false, c); }, {{"r", r}});
  }
  b.add("eq04.depressed-literal.r1", core, {"modular5_check"},
        [](const PrecisionContext& c) { return id::modular5_eq4(1, true, c); }, {{"r", 1}});
  for (Rational r : {Rational(1), Rational(3, 2)}) {
    b.add("eq05.theta-modulus.r" + rtag(r), core, {"theta2", "theta3", "singular_modulus", "make_nome"},
          [r](const PrecisionContext& c) { return id::theta_modulus(r, 1, c); }, {{"r", r}});
    b.add("eq06.theta-modulus25.r" + rtag(r), core, {"theta2", "theta3", "singular_modulus"},
          [r](const PrecisionContext& c) { return id::theta_modulus(r, 5, c); }, {{"r", r}});
  }
  for (Rational r : {Rational(1), Rational(2), Rational(3)}) {
    b.add("eq08.klein.r" + rtag(r), core, {"klein_j_from_R", "rrcf", "j_invariant"},
          [r](const PrecisionContext& c) { return id::klein_consistency(r, c); }, {{"r", r}});
  }
  for (Rational r : {Rational(4), Rational(25), Rational(50)}) {
    b.add("eq09.ramanujan.r" + rtag(r), core, {"ramanujan_modular5_check", "rrcf"},
          [r](const PrecisionContext& c) { return id::ramanujan_modular5(r, c); }, {{"r", r}});
  }
  b.add("eq14.sextic-solve", core, {"solve_sextic", "j_invariant"},
        [](const PrecisionContext& c) { return id::sextic_solution(1, 250, 20, 2, c); }, {{"a", 1}, {"b", 250}, {"c", 20}});
  for (Rational r : {Rational(1), Rational(2), Rational(3)}) {
    b.add("eq16.j-eta.r" + rtag(r), core, {"j_invariant", "eta_paper"},
          [r](const PrecisionContext& c) { return id::j_routes(r, c); }, {{"r", r}});
  }
  b.add("eq16.j-eta-double-prefactor.r1", core, {"j_invariant"},
        [](const PrecisionContext& c) { return id::j_double_counted(1, c); }, {{"r", 1}});
  for (Rational r : {Rational(1), Rational(2), Rational(3)}) {
    b.add("eq17.eta-modulus.r" + rtag(r), core, {"eta_paper", "ellint_K", "singular_modulus"},
          [r](const PrecisionContext& c) { return id::eta_modulus(r, c); }, {{"r", r}});
  }
  b.add("eq22.exponent.T3", core, {"exponent_A", "detect_period"},
        [](const PrecisionContext&) { return id::exponent({1, 1, 0}, Rational(-1, 12)); });
  b.add("eq22.exponent.T5", core, {"exponent_A", "detect_period"},
        [](const PrecisionContext&) { return id::exponent({1, 1, 1, 1, 0}, Rational(-1, 6)); });
  b.add("eq22.exponent.legendre5", core, {"exponent_A", "jacobi_symbol"},
        [](const PrecisionContext&) { return id::exponent_character(5, Rational(1, 5)); });
  for (auto [a, p] : {std::pair<long, long>{1, 5}, {2, 5}, {1, 3}}) {
    b.add("eq28.m-series.a" + std::to_string(a) + ".p" + std::to_string(p), core, {"m_series", "agile"},
          [a, p](const PrecisionContext& c) { return id::agile_m_series(a, p, 1, c); }, {{"a", a}, {"p", p}, {"r", 1}});
  }
  b.add("eq30.duplication.a1.p5", core, {"tau_star", "agile_star"},
        [](const PrecisionContext& c) { return id::duplication_symmetry(1, 5, 1, 1, c); }, {{"a", 1}, {"p", 5}, {"r", 1}});
  b.add("eq30.duplication.a1_2.p3", core, {"tau_star", "agile_star"},
        [](const PrecisionContext& c) { return id::duplication_symmetry(Rational(1, 2), 3, 2, 2, c); },
        {{"a", Rational(1, 2)}, {"p", 3}, {"r", 2}});
  b.add("eq32.theta-representation.T3", core, {"represent_theta", "represent_product", "theta_general"},
        [](const PrecisionContext& c) { return id::product_vs_theta({1, 1, 0}, 1, c); }, {{"r", 1}});
  b.add("eq32.theta-representation.T8", core, {"represent_theta", "represent_product", "theta_general"},
        [](const PrecisionContext& c) { return id::product_vs_theta({1, 0, 2, 1, 2, 0, 1, 0}, 2, c); }, {{"r", 2}});
  for (auto [a, p] : {std::pair<long, long>{1, 5}, {2, 7}}) {
    b.add("eq33.agile-theta.a" + std::to_string(a) + ".p" + std::to_string(p), core,
          {"agile", "theta_general", "eta_paper"},
          [a, p](const PrecisionContext& c) { return id::agile_theta(a, p, 1, c); }, {{"a", a}, {"p", p}, {"r", 1}});
  }
  b.add("eq34.lambert.T3", core, {"lambert_series", "logderiv_representation"},
        [](const PrecisionContext& c) { return id::lambert_vs_logderiv(identities::detail::periodic({1, 1, 0}), 1, c); }, {{"r", 1}});
  b.add("eq35.legendre5-lambert.r1", core, {"lambert_series", "jacobi_symbol", "theta_general"},
        [](const PrecisionContext& c) { return id::legendre5_lambert(1, c); }, {{"r", 1}});
  b.add("eq35.legendre5-rrcf.r1", core, {"rrcf", "theta_general"},
        [](const PrecisionContext& c) { return id::legendre5_rrcf(1, c); }, {{"r", 1}});
  b.add("eq36.lambert-level5.r1", core, {"eta_paper", "theta_general"},
        [](const PrecisionContext& c) { return id::lambert_level5(1, c); }, {{"r", 1}});
  for (Rational r : {Rational(1, 5), Rational(1), Rational(2)}) {
    b.add("eq39.bridge.r" + rtag(r), core, {"sextic_theta", "rrcf"},
          [r](const PrecisionContext& c) { return id::sextic_theta_bridge(r, c); }, {{"r", r}});
  }
  b.add("eq39.bridge-value.r1_5", core, {"sextic_theta"},
        [](const PrecisionContext& c) { return id::sextic_theta_fifth(c); }, {{"r", Rational(1, 5)}});
  for (Rational r : {Rational(1, 5), Rational(1, 2), Rational(1)}) {
    b.add("eq40.theorem3.r" + rtag(r), core, {"theorem3_check", "incomplete_beta", "integrate"},
          [r](const PrecisionContext& c) { return id::theorem3(r, false, c); }, {{"r", r}});
  }
  b.add("eq40.theorem3-literal.r1_5", core, {"theorem3_check"},
        [](const PrecisionContext& c) { return id::theorem3(Rational(1, 5), true, c); }, {{"r", Rational(1, 5)}});
  b.add("eq41.k45-radical", core, {"singular_modulus"}, [](const PrecisionContext& c) { return id::k45_matches_radical(c); },
        {{"r", Rational(4, 5)}});
  b.add("eq43.derivative.r1", core, {"eq43_derivative_check", "incomplete_beta"},
        [](const PrecisionContext& c) {
          IdentityReport rep = eq43_derivative_check(1, c);
          return rep;
        },
        {{"r", 1}});
  for (long G : {5L, 13L}) {
    b.add("eq44.character-lambert.G" + std::to_string(G), core, {"lambert_series", "logderiv_representation", "jacobi_symbol"},
          [G](const PrecisionContext& c) { return id::character_lambert(G, 1, c); }, {{"G", G}, {"r", 1}});
  }
  for (Rational r : {Rational(1), Rational(2), Rational(3)}) {
    b.add("eq46.eisenstein.r" + rtag(r), core, {"elliptic_alpha", "ellint_K"},
          [r](const PrecisionContext& c) { return id::eisenstein(r, c); }, {{"r", r}});
  }
  for (long mh : {0L, 1L, -1L, 2L}) {
    b.add("eq47.powersum-even.m" + std::to_string(2 * mh), core, {"theta_powersum", "ellint_K"},
          [mh](const PrecisionContext& c) { return id::powersum_even(mh, 1, c); }, {{"m", 2 * mh}, {"r", 1}});
  }
  for (long m : {1L, -1L, 3L}) {
    b.add("eq48.powersum-odd.m" + std::to_string(m), core, {"theta_powersum", "ellint_K"},
          [m](const PrecisionContext& c) { return id::powersum_odd(m, 1, false, c); }, {{"m", m}, {"r", 1}});
  }
  b.add("eq48.powersum-odd-literal.m1", core, {"theta_powersum"},
        [](const PrecisionContext& c) { return id::powersum_odd(1, 1, true, c); }, {{"m", 1}, {"r", 1}});
  for (Rational r : {Rational(1), Rational(3)}) {
    b.add("eq50.inverse-modulus.r" + rtag(r), core, {"inverse_singular_modulus", "singular_modulus"},
          [r](const PrecisionContext& c) { return id::inverse_modulus(r, c); }, {{"r", r}});
  }
  for (Rational x : {Rational(1, 5), Rational(1, 3)}) {
    b.add("eq53.q14.x" + rtag(x), core, {"agile_star", "inverse_singular_modulus"},
          [x](const PrecisionContext& c) { return id::q14_at_x(x, c); }, {{"x", x}});
    b.add("eq54.q124.x" + rtag(x), core, {"agile_star", "inverse_singular_modulus"},
          [x](const PrecisionContext& c) { return id::q124_at_x(x, c); }, {{"x", x}});
  }
  for (Rational r : {Rational(1), Rational(2), Rational(3, 2)}) {
    b.add("eq55.q14.r" + rtag(r), core_conj, {"agile_star", "singular_modulus"},
          [r](const PrecisionContext& c) { return id::q14_at_r(r, c); }, {{"r", r}});
    b.add("eq56.q124.r" + rtag(r), core_conj, {"agile_star", "singular_modulus"},
          [r](const PrecisionContext& c) { return id::q124_at_r(r, c); }, {{"r", r}});
  }
  for (long p : {3L, 5L}) {
    b.add("thm4.p" + std::to_string(p) + ".r1", core, {"theorem4_check", "multiplier", "elliptic_alpha"},
          [p](const PrecisionContext& c) { return id::theorem4(p, 1, CheckMode::asserted, c); }, {{"p", p}, {"r", 1}});
  }
  b.add("thm4.p2.r1", core, {"theorem4_check"},
        [](const PrecisionContext& c) { return id::theorem4(2, 1, CheckMode::recorded, c); }, {{"p", 2}, {"r", 1}});
  b.add("example2.T3.r1", core, {"represent_product", "agile"}, [](const PrecisionContext& c) { return id::example2(c); },
        {{"r", 1}});
  b.add("example3.i.T5.r2", core, {"represent_product", "agile"},
        [](const PrecisionContext& c) { return id::example3_i(c); }, {{"r", 2}});
  b.add("example3.ii.T5.r4", core, {"represent_product", "agile"},
        [](const PrecisionContext& c) { return id::example3_ii(c); }, {{"r", 4}});
  for (Rational r : {Rational(3), Rational(4)}) {
    b.add("example3.y-index.r" + rtag(r), core, {"sextic_Y_check", "j_invariant"},
          [r](const PrecisionContext& c) { return id::sextic_Y_index(r, CheckMode::asserted, c); }, {{"r", r}});
  }
  for (Rational r : {Rational(1), Rational(2)}) {
    b.add("example3.y-index.r" + rtag(r), core, {"sextic_Y_check"},
          [r](const PrecisionContext& c) { return id::sextic_Y_index(r, CheckMode::recorded, c); }, {{"r", r}});
  }

  // Exact coefficientwise identities.
  const std::size_t N = kSeriesOrder;
  b.add("eq25.main-theorem.T3", exact, {"extract_X", "moebius_mu", "represent_product", "series_exp", "series_log"},
        [N](const PrecisionContext&) { return id::main_theorem_series({1, 1, 0}, N); });
  b.add("eq25.main-theorem.T5", exact, {"extract_X", "represent_product", "series_exp"},
        [N](const PrecisionContext&) { return id::main_theorem_series({1, 1, 1, 1, 0}, N); });
  b.add("eq25.main-theorem.T6", exact, {"extract_X", "represent_product", "series_binomial_pow"},
        [N](const PrecisionContext&) { return id::main_theorem_series({Rational(1, 2), 2, -1, 2, Rational(1, 2), 0}, N); });
  b.add("eq25.main-theorem.legendre5", exact, {"extract_X", "represent_product", "jacobi_symbol"},
        [N](const PrecisionContext&) { return id::main_theorem_character(5, N); });
  b.add("eq25.main-theorem.legendre13", exact, {"extract_X", "represent_product", "jacobi_symbol"},
        [N](const PrecisionContext&) { return id::main_theorem_character(13, N); });
  for (auto [a, p] : {std::pair<long, long>{1, 5}, {2, 5}, {1, 4}, {3, 8}}) {
    b.add("eq33.agile-theta-series.a" + std::to_string(a) + ".p" + std::to_string(p), core_exact,
          {"agile_qexpansion", "series_mul"},
          [a, p, N](const PrecisionContext&) { return id::agile_theta_series(a, p, N); }, {{"a", a}, {"p", p}});
  }
  b.add("eq39.bridge-series", core_exact, {"agile_qexpansion", "series_pow_int", "sextic_theta"},
        [N](const PrecisionContext&) { return id::bridge_series(N); });
  for (long g : {9L, 25L, 225L}) {
    b.add("eq45.conjecture2.g" + std::to_string(g), conj_exact, {"conjecture2_etaquotient"},
          [g, N](const PrecisionContext&) { return id::conjecture2_series(g, N); }, {{"g", g}});
  }

  // Conjectural evaluations.
  for (bool prefactor : {true, false}) {
    b.add(std::string("eq45.lambert-combination.") + (prefactor ? "literal" : "no-prefactor") + ".g9", conj,
          {"lambert_series"},
          [prefactor](const PrecisionContext& c) { return id::conjecture2_lambert(9, prefactor, 1, c); },
          {{"g", 9}, {"r", 1}});
  }
  const std::vector<std::array<Rational, 3>> triples = criterion_triples();
  for (const auto& t : triples) {
    ExprParams ps;
    ps.a = t[0];
    ps.p = t[1];
    ps.r = t[2];
    b.add("eq19.recognize.a" + rtag(t[0]) + ".p" + rtag(t[1]) + ".r" + rtag(t[2]), conj,
          {"recognize_expression", "recognize", "agile_star"},
          [ps](const PrecisionContext& c) { return id::recognition("agile-star", ps, 24, 10, c, std::nullopt); },
          {{"a", t[0]}, {"p", t[1]}, {"r", t[2]}}, 300);
  }
  b.add("eq57.probe.q14", conj, {"probe_Q_function", "recognize"},
        [](const PrecisionContext& c) {
          auto probes = probe_Q_function(1, 4, {Rational(1, 5), Rational(1, 3), Rational(1, 2)}, 4, c, 12, 8);
          bool ok = true;
          std::string found;
          for (const auto& pr : probes) {
            ok = ok && pr.result.status == RecognitionStatus::recognized && pr.closed_form && pr.closed_form->passed();
            found += (found.empty() ? "" : "; ") + to_string(pr.x) + ": " +
                     (pr.result.poly ? pr.result.poly->to_string() : to_string(pr.result.status));
          }
          return make_exact_report("", ok, found, "recognized, matching 4(1-x^2)/x");
        },
        {{"a", 1}, {"p", 4}}, 120);
  b.add("eq58.radical-value", conj, {"agile_star", "inverse_singular_modulus"},
        [](const PrecisionContext& c) { return id::eq58_value(c); }, {{"x", Rational(1, 5)}});
  b.add("eq58.radical-quartic-root", conj, {}, [](const PrecisionContext& c) { return id::eq58_quartic_root(c); });
  b.add("eq59.recognize.a1.p3.x1_5", conj, {"recognize_expression", "recognize", "inverse_singular_modulus"},
        [](const PrecisionContext& c) {
          ExprParams ps;
          ps.a = 1;
          ps.p = 3;
          ps.x = Rational(1, 5);
          ps.power = 6;
          IntegerPolynomial quartic({-885735, 0, -21870, 364, 45});
          return id::recognition("agile-star", ps, 6, 8, c, quartic);
        },
        {{"a", 1}, {"p", 3}, {"x", Rational(1, 5)}}, 300);
  return b.take();
}

}  // namespace detail

/// The registry, in its fixed order.
inline const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = detail::build_registry();
  return checks;
}

/// Operations that must be exercised by at least one registered check.
inline const std::vector<std::string>& required_coverage() {
  static const std::vector<std::string> ops = {
      "integrate", "series_mul", "series_pow_int", "series_binomial_pow", "series_log", "series_exp", "make_nome",
      "agile", "agile_star", "theta_general", "theta2", "theta3", "theta_powersum", "eta_paper", "m_series",
      "tau_star", "agile_qexpansion", "ellint_K", "singular_modulus", "inverse_singular_modulus", "elliptic_alpha",
      "multiplier", "j_invariant", "moebius_mu", "jacobi_symbol", "extract_X", "detect_period", "exponent_A",
      "represent_product", "represent_theta", "lambert_series", "logderiv_representation", "conjecture2_etaquotient",
      "rrcf", "klein_j_from_R", "modular5_check", "ramanujan_modular5_check", "sextic_theta", "sextic_Y_check",
      "solve_sextic", "incomplete_beta", "theorem3_check", "eq43_derivative_check", "theorem4_check", "recognize",
      "recognize_expression", "probe_Q_function"};
  return ops;
}

struct SelfTestResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Unique ids, known suite names, a runner for every check, and every
/// required operation covered.
inline SelfTestResult registry_self_test(const std::vector<IdentityCheck>& checks = registry()) {
  SelfTestResult out;
  std::set<std::string> ids;
  std::set<std::string> covered;
  for (const auto& c : checks) {
    if (!ids.insert(c.id).second) out.problems.push_back("duplicate id " + c.id);
    if (c.suites.empty()) out.problems.push_back(c.id + " belongs to no suite");
    for (const auto& s : c.suites) {
      if (!is_suite(s) || s == "all") out.problems.push_back(c.id + " names unknown suite " + s);
    }
    if (!c.run) out.problems.push_back(c.id + " has no runner");
    covered.insert(c.exercises.begin(), c.exercises.end());
  }
  for (const auto& op : required_coverage()) {
    if (!covered.count(op)) out.problems.push_back("operation " + op + " is not exercised by any check");
  }
  out.ok = out.problems.empty();
  return out;
}

/// Runs one check, turning any exception into a failing report.
inline IdentityReport run_check(const IdentityCheck& check, int digits) {
  const int used = std::max(digits, check.digits);
  const auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  try {
    PrecisionContext ctx(used);
    rep = check.run(ctx);
  } catch (const std::exception& e) {
    rep = IdentityReport{};
    rep.lhs = rep.rhs = "";
    rep.abs_difference = "n/a";
    rep.tolerance = "n/a";
    rep.verdict = Verdict::fail;
    rep.note = std::string("error: ") + e.what();
  }
  rep.id = check.id;
  if (used != digits) rep.note += std::string(rep.note.empty() ? "" : "; ") + "run at " + std::to_string(used) + " digits";
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Runs the checks of a suite with at most `parallelism` worker threads.
/// Reports come back in registry order.
inline std::vector<IdentityReport> run_suite(const std::string& name, int digits, int parallelism,
                                             const std::vector<IdentityCheck>& checks = registry()) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  if (digits < 50) throw DomainError("suite runs need at least 50 digits");
  std::vector<const IdentityCheck*> selected;
  for (const auto& c : checks) {
    if (c.in_suite(name)) selected.push_back(&c);
  }
  std::vector<IdentityReport> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) out[i] = run_check(*selected[i], digits);
  };
  const std::size_t n_threads =
      std::min<std::size_t>(selected.size(), static_cast<std::size_t>(std::max(1, parallelism)));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

struct SuiteSummary {
  int pass = 0;
  int fail = 0;
  int recorded = 0;
};

inline SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::pass:
        ++s.pass;
        break;
      case Verdict::fail:
        ++s.fail;
        break;
      case Verdict::recorded:
        ++s.recorded;
        break;
    }
  }
  return s;
}

/// Aligned plain-text table.
inline std::string emit_text(const std::string& suite, int digits, const std::vector<IdentityReport>& reports) {
  std::size_t w = 2;
  for (const auto& r : reports) w = std::max(w, r.id.size());
  std::ostringstream os;
  os << "suite " << suite << ", " << digits << " digits\n";
  os << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(8) << "verdict" << "  "
     << std::setw(14) << "difference" << "  " << std::setw(10) << "tolerance" << "  " << std::right << std::setw(8)
     << "ms" << "  note\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(w)) << r.id << "  " << std::setw(8) << to_string(r.verdict) << "  "
       << std::setw(14) << r.abs_difference << "  " << std::setw(10) << r.tolerance << "  " << std::right
       << std::setw(8) << r.wall_time_ms << "  " << r.note << "\n";
  }
  SuiteSummary s = summarize(reports);
  os << "pass " << s.pass << ", fail " << s.fail << ", recorded " << s.recorded << "\n";
  return os.str();
}

}  // namespace qalg

#endif  // QALG_HARNESS_HPP
