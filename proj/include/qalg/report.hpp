#ifndef QALG_REPORT_HPP
#define QALG_REPORT_HPP

#include <string>
#include <utility>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/real.hpp"

namespace qalg {

enum class Verdict { pass, fail, recorded };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::recorded:
      return "recorded";
  }
  return "fail";
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "recorded") return Verdict::recorded;
  throw DomainError("unknown verdict '" + s + "'");
}

/// Outcome of one identity check. Numbers are decimal strings so reports
/// serialize losslessly at any precision.
struct IdentityReport {
  std::string id;
  std::string lhs;
  std::string rhs;
  std::string abs_difference;
  std::string tolerance;
  Verdict verdict = Verdict::fail;
  long wall_time_ms = 0;
  std::string note;
  /// log10 of the absolute difference; lets callers compare without parsing.
  double log10_difference = 0;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

enum class CheckMode { asserted, recorded };

/// 10^-(digits - guard), the default identity tolerance.
inline Real default_tolerance(const PrecisionContext& ctx) { return pow10(-ctx.check_exponent(), ctx.bits()); }

/// Builds a report comparing lhs with rhs; `difference`, if given, replaces
/// |lhs - rhs| (e.g. a relative difference).
inline IdentityReport make_report(std::string id, const Real& lhs, const Real& rhs, const Real& tolerance,
                                  CheckMode mode = CheckMode::asserted, std::string note = {},
                                  const Real* difference = nullptr) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.lhs = lhs.to_string(40);
  rep.rhs = rhs.to_string(40);
  Real diff = difference ? *difference : abs(lhs - rhs);
  rep.abs_difference = diff.to_string(6);
  rep.tolerance = tolerance.to_string(3);
  rep.log10_difference = diff.log10_abs();
  if (mode == CheckMode::recorded) {
    rep.verdict = Verdict::recorded;
  } else {
    rep.verdict = diff < tolerance ? Verdict::pass : Verdict::fail;
  }
  rep.note = std::move(note);
  return rep;
}

/// Report for an exact identity: difference is 0 or the first mismatch.
inline IdentityReport make_exact_report(std::string id, bool identical, std::string lhs, std::string rhs,
                                        std::string note = {}) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.abs_difference = identical ? "0" : "nonzero";
  rep.tolerance = "0";
  rep.verdict = identical ? Verdict::pass : Verdict::fail;
  rep.log10_difference = identical ? -1e18 : 0;
  rep.note = std::move(note);
  return rep;
}

}  // namespace qalg

#endif  // QALG_REPORT_HPP
