#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qalg/expressions.hpp"
#include "qalg/harness.hpp"
#include "qalg/io/json.hpp"
#include "qalg/moebius.hpp"

namespace {

using qalg::io::json;

enum Exit : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3, kNotPeriodic = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<int> digits;
  std::optional<std::string> json_path;  // set (possibly empty) when --json is given
  std::string out;
  int parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--digits", g.digits, "working decimal digits (>= 30; env QALG_DIGITS)");
  app.add_option("--json", g.json_path, "JSON output (optionally to the given path)")->expected(0, 1);
  app.add_option("--out", g.out, "write output to PATH");
}

int resolve_digits(const Globals& g, int fallback) {
  int d = fallback;
  if (g.digits) {
    d = *g.digits;
  } else if (const char* env = std::getenv("QALG_DIGITS")) {
    try {
      d = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("QALG_DIGITS is not an integer: '") + env + "'");
    }
  }
  if (d < qalg::PrecisionContext::kMinDigits) {
    throw UsageError("digits must be at least " + std::to_string(qalg::PrecisionContext::kMinDigits));
  }
  return d;
}

bool digits_given(const Globals& g) { return g.digits.has_value() || std::getenv("QALG_DIGITS") != nullptr; }

/// Writes to --out, to a --json PATH, or to stdout.
void emit(const Globals& g, const std::string& text) {
  std::string path = g.out;
  if (path.empty() && g.json_path && !g.json_path->empty()) path = *g.json_path;
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw qalg::DomainError("cannot write '" + path + "'");
  f << text;
}

bool json_mode(const Globals& g) { return g.json_path.has_value(); }

struct ParamFlags {
  std::optional<std::string> a, p, b, r, x, m, n, a2, b2, X, method, route, value;
  std::optional<long> power;
};

void add_params(CLI::App& app, ParamFlags& f) {
  app.add_option("--a", f.a, "rational a (n/d)");
  app.add_option("--p", f.p, "rational p (n/d)");
  app.add_option("--b", f.b, "rational b (n/d)");
  app.add_option("--r", f.r, "positive rational r (n/d)");
  app.add_option("--x", f.x, "modulus x in (0,1) (n/d); the nome becomes e^{-pi sqrt(k_i(x))}");
  app.add_option("--m", f.m, "eta multiplier (n/d)");
  app.add_option("--n", f.n, "integer n");
  app.add_option("--a2", f.a2, "theta-quotient denominator a");
  app.add_option("--b2", f.b2, "theta-quotient denominator b");
  app.add_option("--X", f.X, "one period of X(n), comma separated");
  app.add_option("--method", f.method, "rrcf: product | continued-fraction");
  app.add_option("--route", f.route, "j: modulus | eta");
  app.add_option("--value", f.value, "decimal constant (const)");
  app.add_option("--power", f.power, "raise the value to this integer power");
}

std::optional<qalg::Rational> exact(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return qalg::parse_rational(*s);
}

qalg::ExprParams to_params(const ParamFlags& f) {
  qalg::ExprParams ps;
  ps.a = exact(f.a);
  ps.p = exact(f.p);
  ps.b = exact(f.b);
  ps.r = exact(f.r);
  ps.x = exact(f.x);
  ps.m = exact(f.m);
  ps.n = exact(f.n);
  ps.a2 = exact(f.a2);
  ps.b2 = exact(f.b2);
  ps.power = f.power;
  ps.method = f.method;
  ps.route = f.route;
  ps.value = f.value;
  if (ps.r && *ps.r <= 0) throw qalg::DomainError("r must be positive");
  if (f.X) {
    std::stringstream ss(*f.X);
    std::string item;
    while (std::getline(ss, item, ',')) ps.period_values.push_back(qalg::parse_rational(item));
  }
  return ps;
}

json params_json(const qalg::ExprParams& ps) {
  json j = json::object();
  for (const auto& [k, v] : ps.describe()) j[k] = v;
  return j;
}

int cmd_eval(const Globals& g, const std::string& subject, const ParamFlags& flags) {
  const auto& subjects = qalg::eval_subjects();
  if (std::find(subjects.begin(), subjects.end(), subject) == subjects.end()) {
    throw UsageError("unknown subject '" + subject + "'");
  }
  const int digits = resolve_digits(g, 120);
  qalg::PrecisionContext ctx(digits);
  qalg::ExprParams ps = to_params(flags);
  qalg::Real v = qalg::evaluate_subject(subject, ps, ctx);
  const int shown = digits - 10;
  std::string text = v.to_display(shown);
  if (json_mode(g)) {
    json j{{"subject", subject},
           {"params", params_json(ps)},
           {"digits", digits},
           {"display_digits", shown},
           {"value", text}};
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, text + "\n(" + std::to_string(shown) + " significant digits shown of " + std::to_string(digits) +
                " working)\n");
  }
  return kOk;
}

int cmd_analyze(const Globals& g, const std::string& file, long max_period) {
  qalg::TaylorInput in = qalg::io::read_taylor_input(file);
  std::vector<qalg::Rational> X = qalg::extract_X(in);
  if (max_period <= 0) max_period = std::max<long>(1, static_cast<long>(X.size()) / 3);
  auto pc = qalg::detect_period(X, max_period);
  if (!pc) {
    std::string msg = "not periodic: no catoptric period up to " + std::to_string(max_period);
    if (json_mode(g)) {
      emit(g, json{{"X", qalg::io::rationals(X)}, {"periodic", false}, {"error", msg}}.dump(2) + "\n");
    } else {
      std::cerr << msg << "\n";
    }
    return kNotPeriodic;
  }
  json j{{"X", qalg::io::rationals(X)}, {"periodic", true}, {"coefficients", qalg::io::to_json(*pc)}};
  std::ostringstream os;
  os << "X(n):      ";
  for (std::size_t i = 0; i < X.size() && i < 20; ++i) os << (i ? ", " : "") << qalg::to_string(X[i]);
  if (X.size() > 20) os << ", ...";
  os << "\nperiod T:  " << pc->period << "\ncatoptric: " << (pc->catoptric ? "yes" : "no") << "\n";
  if (pc->catoptric) {
    qalg::ProductRepresentation prod = qalg::represent_product(*pc);
    qalg::ThetaRepresentation theta = qalg::represent_theta(*pc);
    j["product"] = qalg::io::to_json(prod);
    j["theta"] = qalg::io::to_json(theta);
    os << "A:         " << qalg::to_string(pc->A) << "\nproduct:   ";
    bool first = true;
    for (const auto& [spec, e] : prod.agiles) {
      os << (first ? "" : " ") << "[" << qalg::to_string(spec.a()) << "," << qalg::to_string(spec.p()) << "]^"
         << qalg::to_string(e);
      first = false;
    }
    for (const auto& [n, e] : prod.monomials) {
      os << (first ? "" : " ") << "(1-x^" << n << ")^" << qalg::to_string(e);
      first = false;
    }
    if (first) os << "1";
    os << "\ntheta:     ";
    first = true;
    if (sgn(theta.eta_exponent) != 0) {
      os << "eta(" << theta.period << "tau)^" << qalg::to_string(theta.eta_exponent);
      first = false;
    }
    for (const auto& [spec, e] : theta.factors) {
      os << (first ? "" : " ") << "theta(" << qalg::to_string(spec.a()) << "," << qalg::to_string(spec.b()) << ")^"
         << qalg::to_string(e);
      first = false;
    }
    for (const auto& [n, e] : theta.monomials) {
      os << (first ? "" : " ") << "(1-x^" << n << ")^" << qalg::to_string(e);
      first = false;
    }
    if (first) os << "1";
    os << "\n";
  }
  emit(g, json_mode(g) ? j.dump(2) + "\n" : os.str());
  return kOk;
}

int cmd_recognize(const Globals& g, const std::string& expr, const ParamFlags& flags, int degree, int height) {
  const auto& subjects = qalg::eval_subjects();
  if (std::find(subjects.begin(), subjects.end(), expr) == subjects.end()) {
    throw UsageError("unknown expression '" + expr + "'");
  }
  const int digits = resolve_digits(g, 120);
  qalg::PrecisionContext ctx(digits);
  qalg::RecognitionResult res = qalg::recognize_expression(expr, to_params(flags), degree, height, ctx);
  if (json_mode(g)) {
    emit(g, qalg::io::to_json(res).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "expression: " << res.provenance << "\nstatus:     " << qalg::to_string(res.status) << "\n";
    if (res.poly) {
      os << "polynomial: " << res.poly->to_string() << "\nresidual:   " << res.residual.to_string(6) << " at "
         << res.digits_used << " digits\nverified:   " << res.verified_residual.to_string(6) << " at "
         << res.verify_digits << " digits\n";
    } else {
      os << "no relation with degree <= " << degree << " and height < 10^" << height << " at " << res.digits_used
         << " digits\n";
    }
    if (!res.note.empty()) os << "note:       " << res.note << "\n";
    emit(g, os.str());
  }
  return res.status == qalg::RecognitionStatus::recognized ? kOk : kVerifyFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& format) {
  if (!qalg::is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  const int digits = digits_given(g) ? resolve_digits(g, 120) : qalg::default_suite_digits(suite);
  if (digits < 50) throw UsageError("verify needs at least 50 digits");
  std::vector<qalg::IdentityReport> reports = qalg::run_suite(suite, digits, g.parallelism);
  const std::string fmt = json_mode(g) ? "json" : format;
  if (fmt != "json" && fmt != "text") throw UsageError("format must be json or text");
  emit(g, qalg::io::emit_report(suite, digits, reports, fmt));
  if (!g.out.empty() || (g.json_path && !g.json_path->empty())) {
    qalg::SuiteSummary s = qalg::summarize(reports);
    std::cout << "pass " << s.pass << ", fail " << s.fail << ", recorded " << s.recorded << "\n";
  }
  return qalg::summarize(reports).fail == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation, analysis, recognition and verification of q-series identities"};
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);

  auto* eval = app.add_subcommand("eval", "evaluate a named quantity");
  std::string subject;
  ParamFlags eval_flags;
  eval->add_option("subject", subject, "quantity to evaluate")->required();
  add_params(*eval, eval_flags);
  add_globals(*eval, g);

  auto* analyze = app.add_subcommand("analyze", "periodic exponents and representations of a Taylor series");
  std::string series_file;
  long max_period = 0;
  analyze->add_option("series_file", series_file, "Taylor input JSON {\"coeffs\": [c_1, c_2, ...]}")->required();
  analyze->add_option("--max-period", max_period, "largest period to try (default: a third of the terms)");
  add_globals(*analyze, g);

  auto* recog = app.add_subcommand("recognize", "find an integer polynomial satisfied by a quantity");
  std::string expr;
  ParamFlags recog_flags;
  int degree = 6;
  int height = 8;
  recog->add_option("--expr", expr, "quantity (an eval subject, or const)")->required();
  recog->add_option("--degree", degree, "maximum degree");
  recog->add_option("--height", height, "coefficient height bound, in decimal digits");
  add_params(*recog, recog_flags);
  add_globals(*recog, g);

  auto* verify = app.add_subcommand("verify", "run a suite of identity checks");
  std::string suite = "paper-core";
  std::string format = "text";
  verify->add_option("--suite", suite, "paper-core | conjectures | series-exact | all");
  verify->add_option("--format", format, "json | text");
  verify->add_option("--parallel", g.parallelism, "worker threads");
  add_globals(*verify, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(g, subject, eval_flags);
    if (*analyze) return cmd_analyze(g, series_file, max_period);
    if (*recog) return cmd_recognize(g, expr, recog_flags, degree, height);
    if (*verify) return cmd_verify(g, suite, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const qalg::InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << "; rerun with --digits " << e.required_digits() << "\n";
    return kDomain;
  } catch (const qalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
