#ifndef QALG_CORE_PRECISION_HPP
#define QALG_CORE_PRECISION_HPP

#include <cmath>
#include <string>

#include <mpfr.h>

#include "qalg/core/error.hpp"

namespace qalg {

/// Working precision: `digits` significant decimal digits promised to the
/// caller, computed internally with `digits + guard` digits.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kDefaultGuard = 20;

  explicit PrecisionContext(int digits, int guard = kDefaultGuard) : digits_(digits), guard_(guard) {
    if (digits < kMinDigits) {
      throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                        std::to_string(digits));
    }
    if (guard < 0) throw DomainError("guard digits must be non-negative");
  }

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }

  mpfr_prec_t bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 8;
  }

  /// Same guard, different user-visible digits.
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }

  /// Tolerance exponent used by identity checks: 10^-(digits - guard).
  int check_exponent() const noexcept { return digits_ - guard_; }

  /// Truncation exponent for series tails: 10^-(digits + guard/2).
  int tail_exponent() const noexcept { return digits_ + guard_ / 2; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

}  // namespace qalg

#endif  // QALG_CORE_PRECISION_HPP
