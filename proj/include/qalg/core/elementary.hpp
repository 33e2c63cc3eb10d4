#ifndef QALG_CORE_ELEMENTARY_HPP
#define QALG_CORE_ELEMENTARY_HPP

#include <optional>

#include "qalg/core/real.hpp"

namespace qalg {

/// pi to the context precision.
inline Real pi_const(const PrecisionContext& ctx) {
  Real r(ctx.bits());
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline Real pi_const(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

enum class ElemFn { exp, log, pow_rational, nth_root };

/// Dispatcher over the elementary functions; `extra` is the exponent for
/// pow_rational and the (integer) order for nth_root.
inline Real elem(ElemFn fn, const Real& x, const std::optional<Rational>& extra = std::nullopt) {
  switch (fn) {
    case ElemFn::exp:
      return exp(x);
    case ElemFn::log:
      return log(x);
    case ElemFn::pow_rational:
      if (!extra) throw DomainError("pow_rational needs an exponent");
      return pow(x, *extra);
    case ElemFn::nth_root:
      if (!extra || !is_integer(*extra) || *extra <= 0 || !extra->get_num().fits_ulong_p()) {
        throw DomainError("nth_root needs a positive integer order");
      }
      return nth_root(x, extra->get_num().get_ui());
  }
  throw DomainError("unknown elementary function");
}

}  // namespace qalg

#endif  // QALG_CORE_ELEMENTARY_HPP
