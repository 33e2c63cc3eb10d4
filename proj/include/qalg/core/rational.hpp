#ifndef QALG_CORE_RATIONAL_HPP
#define QALG_CORE_RATIONAL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qalg/core/error.hpp"

namespace qalg {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n", "-n" or "n/d". Decimal notation is rejected: parameters that the
/// mathematics requires to be exact must be given exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw DomainError("not an exact rational (use n/d): '" + s + "'");
    }
  }
  auto slash = s.find('/');
  Integer num, den(1);
  auto parse_int = [&](const std::string& part) {
    Integer z;
    std::string p = part;
    if (!p.empty() && p[0] == '+') p.erase(0, 1);
    if (p.empty() || p == "-" || z.set_str(p, 10) != 0) throw DomainError("malformed rational '" + s + "'");
    return z;
  };
  if (slash == std::string::npos) {
    num = parse_int(s);
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
  }
  if (den == 0) throw DomainError("rational with zero denominator: '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qalg

#endif  // QALG_CORE_RATIONAL_HPP
