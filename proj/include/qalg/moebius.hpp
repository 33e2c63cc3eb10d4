#ifndef QALG_MOEBIUS_HPP
#define QALG_MOEBIUS_HPP

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"
#include "qalg/core/series.hpp"
#include "qalg/qengine.hpp"

namespace qalg {

/// Distinct prime factors of n >= 1 with multiplicities.
inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int moebius_mu(long n) {
  if (n < 1) throw DomainError("moebius_mu requires n >= 1");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// Kronecker symbol (n/m) for m >= 1; equals the Jacobi symbol for odd m.
inline int kronecker_symbol(long n, long m) {
  if (m < 1) throw DomainError("kronecker_symbol requires m >= 1");
  int result = 1;
  while (m % 2 == 0) {
    m /= 2;
    long r = ((n % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  long a = ((n % m) + m) % m;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

/// Admissible character moduli: G = 2^m g_1^{m_1}... with m != 1.
inline void check_character_modulus(long G) {
  if (G < 1) throw DomainError("character modulus must be positive");
  long twos = 0;
  for (long g = G; g % 2 == 0; g /= 2) ++twos;
  if (twos == 1) throw DomainError("character modulus " + std::to_string(G) + " is divisible by 2 exactly once");
}

/// (n/G) for an admissible modulus G.
inline int jacobi_symbol(long n, long G) {
  check_character_modulus(G);
  return kronecker_symbol(n, G);
}

class JacobiCharacter {
 public:
  explicit JacobiCharacter(long modulus) : modulus_(modulus) { check_character_modulus(modulus); }
  long modulus() const noexcept { return modulus_; }
  int operator()(long n) const { return kronecker_symbol(n, modulus_); }

 private:
  long modulus_;
};

/// Taylor coefficients c_n = f^{(n)}(0)/n!, n = 1..N (c_0 = 0).
struct TaylorInput {
  std::vector<Rational> coeffs;  // coeffs[0] is c_1

  std::size_t size() const noexcept { return coeffs.size(); }
  const Rational& c(std::size_t n) const { return coeffs.at(n - 1); }
};

/// X(n) = (1/n) sum_{d|n} mu(n/d) d c_d, so that f = -sum X(n) log(1-x^n).
/// Result index 0 holds X(1).
inline std::vector<Rational> extract_X(const TaylorInput& in) {
  const std::size_t N = in.size();
  if (N < 1) throw InsufficientData("extract_X needs at least one coefficient");
  std::vector<Rational> X(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      std::size_t e = n / d;
      int mu = moebius_mu(static_cast<long>(e));
      if (mu) acc += in.c(d) * static_cast<long>(d) * mu;
      if (e != d) {
        int mu2 = moebius_mu(static_cast<long>(d));
        if (mu2) acc += in.c(e) * static_cast<long>(e) * mu2;
      }
    }
    acc /= static_cast<long>(n);
    X[n - 1] = acc;
  }
  return X;
}

/// Forward map: c_n = (1/n) sum_{d|n} d X(d).
inline TaylorInput taylor_from_X(const std::vector<Rational>& X) {
  TaylorInput out;
  out.coeffs.resize(X.size());
  for (std::size_t n = 1; n <= X.size(); ++n) {
    Rational acc = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) acc += X[d - 1] * static_cast<long>(d);
    }
    out.coeffs[n - 1] = acc / static_cast<long>(n);
  }
  return out;
}

/// A detected periodic exponent sequence. `values[j-1]` is a_j, j = 1..T.
/// `finite_factors` holds (n, e) pairs for a sequence that is zero beyond a
/// finite support, reported with the degenerate period T = 1.
struct PeriodicCoeffs {
  long period = 1;
  std::vector<Rational> values;
  bool catoptric = true;
  Rational A;
  std::vector<std::pair<long, Rational>> finite_factors;

  const Rational& a(long j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

namespace detail {

inline Rational star_weight(long j, long T) {
  Rational w = Rational(-j, 2) + Rational(j * j, 2 * T) + Rational(T, 12);
  w.canonicalize();
  return w;
}

}  // namespace detail

/// A = sum_{j <= (T-1)/2} (-j/2 + j^2/(2T) + T/12) a_j; for even T the middle
/// index contributes with half weight since [T/2,T] counts it twice.
inline Rational exponent_A(const PeriodicCoeffs& pc) {
  if (!pc.catoptric) throw DomainError("exponent A needs a catoptric sequence");
  const long T = pc.period;
  Rational A = 0;
  for (long j = 1; j <= (T - 1) / 2; ++j) A += detail::star_weight(j, T) * pc.a(j);
  if (T % 2 == 0 && T >= 2) A += detail::star_weight(T / 2, T) * pc.a(T / 2) / 2;
  A.canonicalize();
  return A;
}

/// Smallest T <= max_period with X periodic of period T and a_T = 0.
/// A sequence with finite support (zero after at most half the observed
/// range) is reported as T = 1 with its factors listed separately.
inline std::optional<PeriodicCoeffs> detect_period(const std::vector<Rational>& X, long max_period) {
  if (max_period < 1) throw DomainError("max_period must be positive");
  const long N = static_cast<long>(X.size());
  auto at = [&](long n) -> const Rational& { return X[static_cast<std::size_t>(n - 1)]; };
  for (long T = 1; T <= max_period; ++T) {
    if (N < 2 * T) throw InsufficientData("need at least " + std::to_string(2 * T) + " terms to test period " +
                                          std::to_string(T) + ", have " + std::to_string(N));
    if (sgn(at(T)) != 0) continue;
    bool periodic = true;
    for (long k = 1; k + T <= N && periodic; ++k) periodic = at(k + T) == at(k);
    if (!periodic) continue;
    PeriodicCoeffs pc;
    pc.period = T;
    pc.values.assign(X.begin(), X.begin() + T);
    for (long j = 1; j < T && pc.catoptric; ++j) pc.catoptric = at(j) == at(T - j);
    if (pc.catoptric) pc.A = exponent_A(pc);
    return pc;
  }
  long last = 0;
  for (long n = N; n >= 1; --n) {
    if (sgn(at(n)) != 0) {
      last = n;
      break;
    }
  }
  if (last > 0 && 2 * last <= N) {
    PeriodicCoeffs pc;
    pc.period = 1;
    pc.values = {Rational(0)};
    pc.A = 0;
    for (long n = 1; n <= last; ++n) {
      if (sgn(at(n)) != 0) pc.finite_factors.emplace_back(n, at(n));
    }
    return pc;
  }
  return std::nullopt;
}

/// e^{-f} as prod [j,T;x]^{e_j} times finite factors (1 - x^n)^{e_n}.
struct ProductRepresentation {
  std::vector<std::pair<AgileSpec, Rational>> agiles;
  std::vector<std::pair<long, Rational>> monomials;
};

inline void require_catoptric(const PeriodicCoeffs& pc) {
  if (!pc.catoptric) throw DomainError("representation requires a catoptric sequence");
}

inline ProductRepresentation represent_product(const PeriodicCoeffs& pc) {
  require_catoptric(pc);
  ProductRepresentation rep;
  const long T = pc.period;
  for (long j = 1; j <= (T - 1) / 2; ++j) {
    if (sgn(pc.a(j)) != 0) rep.agiles.emplace_back(AgileSpec(j, T), pc.a(j));
  }
  if (T % 2 == 0 && T >= 2 && sgn(pc.a(T / 2)) != 0) {
    rep.agiles.emplace_back(AgileSpec(T / 2, T), Rational(pc.a(T / 2) / 2));
  }
  rep.monomials = pc.finite_factors;
  return rep;
}

/// e^{-f(q)} = eta_paper(T tau)^{eta_exponent} prod vartheta(T/2,(T-2j)/2;q)^{e_j}
/// times finite factors.
struct ThetaRepresentation {
  long period = 1;
  Rational eta_exponent;
  std::vector<std::pair<ThetaSpec, Rational>> factors;
  std::vector<std::pair<long, Rational>> monomials;
};

inline ThetaRepresentation represent_theta(const PeriodicCoeffs& pc) {
  ProductRepresentation prod = represent_product(pc);
  ThetaRepresentation rep;
  rep.period = pc.period;
  rep.eta_exponent = 0;
  for (const auto& [spec, e] : prod.agiles) {
    rep.factors.emplace_back(ThetaSpec(spec.p() / 2, (spec.p() - 2 * spec.a()) / 2), e);
    rep.eta_exponent -= e;
  }
  rep.monomials = prod.monomials;
  return rep;
}

/// Exact expansion of a product representation to order N.
inline FormalSeries expand_product(const ProductRepresentation& rep, std::size_t order) {
  FormalSeries s = FormalSeries::one(order);
  for (const auto& [spec, e] : rep.agiles) {
    if (!is_integer(spec.a()) || !is_integer(spec.p())) throw DomainError("expansion needs integer agile parameters");
    const long a = spec.a().get_num().get_si();
    const long p = spec.p().get_num().get_si();
    for (long n = 0;; ++n) {
      const long e1 = p * n + a;
      const long e2 = p * n + p - a;
      if (static_cast<std::size_t>(std::min(e1, e2)) > order) break;
      mul_one_minus_xm_pow(s, static_cast<std::size_t>(e1), e);
      mul_one_minus_xm_pow(s, static_cast<std::size_t>(e2), e);
    }
  }
  for (const auto& [n, e] : rep.monomials) mul_one_minus_xm_pow(s, static_cast<std::size_t>(n), e);
  return s;
}

/// exp(-sum c_n x^n) straight from Taylor coefficients, to order min(N, order).
inline FormalSeries exp_neg_taylor(const TaylorInput& in, std::size_t order) {
  order = std::min(order, in.size());
  FormalSeries f(order);
  for (std::size_t n = 1; n <= order; ++n) f[n] = -in.c(n);
  return series_exp(f);
}

/// Exponent sequence as a function n -> X(n), n >= 1.
using ExponentFn = std::function<Rational(long)>;

inline ExponentFn exponent_fn(const PeriodicCoeffs& pc) {
  return [pc](long n) {
    Rational x = pc.a(((n - 1) % pc.period) + 1);
    for (const auto& [m, e] : pc.finite_factors) {
      if (m == n) x += e;
    }
    return x;
  };
}

inline ExponentFn exponent_fn(const JacobiCharacter& chi) {
  return [chi](long n) { return Rational(chi(n)); };
}

/// sum_{n>=1} n X(n) q^n / (1 - q^n).
inline Real lambert_series(const ExponentFn& X, const Nome& nome) {
  const PrecisionContext& ctx = nome.ctx();
  const Real eps = detail::truncation_eps(ctx);
  Real x = nome.q();
  Real sum(0L, ctx.bits());
  for (long n = 1;; ++n) {
    Rational c = X(n);
    Real term = x * n / (1 - x);
    if (sgn(c) != 0) sum += term * c;
    // |X| is bounded for periodic input, so term alone controls the tail.
    if (term < eps) break;
    x *= nome.q();
    if (n > 10000000) throw ConvergenceError("lambert series did not converge");
  }
  return sum;
}

inline Real lambert_series(const PeriodicCoeffs& pc, const Nome& nome) { return lambert_series(exponent_fn(pc), nome); }
inline Real lambert_series(const JacobiCharacter& chi, const Nome& nome) {
  return lambert_series(exponent_fn(chi), nome);
}

/// -q d/dq log of the theta representation, each series differentiated termwise.
inline Real logderiv_representation(const PeriodicCoeffs& pc, const Nome& nome) {
  ThetaRepresentation rep = represent_theta(pc);
  const PrecisionContext& ctx = nome.ctx();
  Real d(0L, ctx.bits());
  if (sgn(rep.eta_exponent) != 0) d += eta_paper_log_derivative(rep.period, nome) * rep.eta_exponent;
  for (const auto& [spec, e] : rep.factors) {
    SeriesValue v = theta_general_with_derivative(spec, nome);
    d += v.q_derivative / v.value * e;
  }
  for (const auto& [n, e] : rep.monomials) {
    Real qn = nome.pow(n);
    d -= qn * n / (1 - qn) * e;
  }
  return -d;
}

/// Numeric e^{-f(q)} from the product representation.
inline Real evaluate_product(const ProductRepresentation& rep, const Nome& nome) {
  Real v(1L, nome.ctx().bits());
  for (const auto& [spec, e] : rep.agiles) v *= pow(agile(spec, nome), e);
  for (const auto& [n, e] : rep.monomials) v *= pow(1 - nome.pow(n), e);
  return v;
}

/// Numeric e^{-f(q)} from the theta representation.
inline Real evaluate_theta(const ThetaRepresentation& rep, const Nome& nome) {
  Real v(1L, nome.ctx().bits());
  if (sgn(rep.eta_exponent) != 0) v *= pow(eta_paper(rep.period, nome), rep.eta_exponent);
  for (const auto& [spec, e] : rep.factors) v *= pow(theta_general(spec, nome), e);
  for (const auto& [n, e] : rep.monomials) v *= pow(1 - nome.pow(n), e);
  return v;
}

/// Outcome of a coefficientwise eta-quotient comparison.
struct SeriesIdentityResult {
  bool identical = false;
  std::size_t order = 0;
  std::optional<std::size_t> first_mismatch;
};

/// Distinct primes of sqrt(g) for a perfect square g.
inline std::vector<long> square_primes(long g) {
  if (g < 1) throw DomainError("g must be positive");
  long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(g))));
  while (s * s > g) --s;
  while ((s + 1) * (s + 1) <= g) ++s;
  if (s * s != g) throw DomainError(std::to_string(g) + " is not a perfect square");
  std::vector<long> primes;
  for (auto [p, e] : factorize(s)) primes.push_back(p);
  return primes;
}

/// prod_n (1-q^n)^{(n/g)} versus prod over subsets S of the primes of sqrt(g)
/// of eta_paper(prod(S) tau)^{(-1)^{|S|}}.
inline SeriesIdentityResult conjecture2_etaquotient(long g, std::size_t order) {
  std::vector<long> primes = square_primes(g);
  FormalSeries lhs = FormalSeries::one(order);
  for (std::size_t n = 1; n <= order; ++n) {
    int chi = kronecker_symbol(static_cast<long>(n), g);
    if (chi) mul_one_minus_xm_pow(lhs, n, static_cast<long>(chi));
  }
  FormalSeries rhs = FormalSeries::one(order);
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    long m = 1;
    int parity = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        m *= primes[i];
        parity = -parity;
      }
    }
    for (std::size_t e = static_cast<std::size_t>(m); e <= order; e += static_cast<std::size_t>(m)) {
      mul_one_minus_xm_pow(rhs, e, static_cast<long>(parity));
    }
  }
  SeriesIdentityResult out;
  out.order = order;
  out.first_mismatch = first_mismatch(lhs, rhs);
  out.identical = !out.first_mismatch.has_value();
  return out;
}

}  // namespace qalg

#endif  // QALG_MOEBIUS_HPP
