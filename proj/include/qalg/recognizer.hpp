#ifndef QALG_RECOGNIZER_HPP
#define QALG_RECOGNIZER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/core/error.hpp"
#include "qalg/core/precision.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/core/real.hpp"

namespace qalg {

/// Integer polynomial c_0 + c_1 x + ... + c_d x^d.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Content 1 and positive leading coefficient.
  static IntegerPolynomial normalized(std::vector<Integer> coeffs) {
    IntegerPolynomial p(std::move(coeffs));
    if (p.c_.empty()) throw DomainError("zero polynomial");
    Integer g = 0;
    for (const auto& c : p.c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.c_.back() < 0) g = -g;
    for (auto& c : p.c_) c /= g;
    return p;
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  const Integer& operator[](std::size_t i) const { return c_.at(i); }
  bool is_zero() const noexcept { return c_.empty(); }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  /// Number of decimal digits of the largest coefficient.
  int height_digits() const {
    std::size_t h = 0;
    for (const auto& c : c_) h = std::max(h, Integer(abs(c)).get_str().size());
    return static_cast<int>(h);
  }

  Real evaluate(const Real& x) const {
    Real acc(0L, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      Real c(x.precision());
      mpfr_set_z(c.get(), it->get_mpz_t(), MPFR_RNDN);
      acc += c;
    }
    return acc;
  }

  /// sum |c_i| |x|^i, the natural scale of an evaluation at x.
  Real magnitude(const Real& x) const {
    Real ax = abs(x);
    Real acc(0L, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= ax;
      Real c(x.precision());
      mpfr_set_z(c.get(), it->get_mpz_t(), MPFR_RNDN);
      acc += abs(c);
    }
    return acc;
  }

  /// Human-readable form, highest degree first: "45x^4 + 364x^3 - 885735".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Integer a = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (a != 1 || i == 0) out += a.get_str();
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// True when d divides p over Q.
inline bool divides(const IntegerPolynomial& d, const IntegerPolynomial& p) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> r(p.coeffs().begin(), p.coeffs().end());
  const int dd = d.degree();
  const Rational lead(d[static_cast<std::size_t>(dd)]);
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    Rational f = r[static_cast<std::size_t>(i)] / lead;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * d[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dd && i < static_cast<int>(r.size()); ++i) {
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return false;
  }
  return true;
}

using IntegerMatrix = std::vector<std::vector<Integer>>;

namespace detail {

inline Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Nearest integer to a/b, b > 0.
inline Integer round_div(const Integer& a, const Integer& b) {
  Integer num = 2 * a + b;
  Integer den = 2 * b;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

/// Integral LLL reduction (all Gram-Schmidt data kept as exact integers,
/// after Cohen, Algorithm 2.6.7) with delta = delta_num/delta_den.
inline IntegerMatrix lattice_reduce(IntegerMatrix b, long delta_num = 99, long delta_den = 100) {
  const std::size_t n = b.size();
  if (n == 0) return b;
  const std::size_t dim = b[0].size();
  for (const auto& row : b) {
    if (row.size() != dim) throw DegenerateBasis("basis rows have different lengths");
  }
  if (!(delta_num > delta_den / 4 && delta_num < delta_den)) throw DomainError("LLL requires 1/4 < delta < 1");
  // 1-based indices as in the reference algorithm; d[0] = 1.
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1));
  auto B = [&](std::size_t i) -> std::vector<Integer>& { return b[i - 1]; };
  d[0] = 1;
  d[1] = detail::dot(B(1), B(1));
  if (d[1] == 0) throw DegenerateBasis("zero basis vector");
  if (n == 1) return b;

  auto red = [&](std::size_t k, std::size_t l) {
    Integer two_lam = 2 * lam[k][l];
    if (abs(two_lam) <= d[l]) return;
    Integer q = detail::round_div(lam[k][l], d[l]);
    auto& bk = B(k);
    const auto& bl = B(l);
    for (std::size_t c = 0; c < dim; ++c) bk[c] -= q * bl[c];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = detail::dot(B(k), B(j));
        for (std::size_t i = 1; i < j; ++i) {
          u = d[i] * u - lam[k][i] * lam[j][i];
          mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i - 1].get_mpz_t());
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) throw DegenerateBasis("basis vectors are linearly dependent");
        }
      }
    }
    red(k, k - 1);
    Integer lhs = d[k] * d[k - 2] * delta_den;
    Integer rhs = d[k - 1] * d[k - 1] * delta_num - lam[k][k - 1] * lam[k][k - 1] * delta_den;
    if (lhs < rhs) {
      std::swap(B(k), B(k - 1));
      for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      Integer l = lam[k][k - 1];
      Integer nb = d[k - 2] * d[k] + l * l;
      mpz_divexact(nb.get_mpz_t(), nb.get_mpz_t(), d[k - 1].get_mpz_t());
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        Integer t = lam[i][k];
        Integer v = d[k] * lam[i][k - 1] - l * t;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d[k - 1].get_mpz_t());
        lam[i][k] = v;
        Integer w = nb * t + l * lam[i][k];
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), d[k].get_mpz_t());
        lam[i][k - 1] = w;
      }
      d[k - 1] = nb;
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  return b;
}

enum class RecognitionStatus { recognized, refuted_at_bounds, inconclusive };

inline const char* to_string(RecognitionStatus s) {
  switch (s) {
    case RecognitionStatus::recognized:
      return "recognized";
    case RecognitionStatus::refuted_at_bounds:
      return "refuted-at-bounds";
    case RecognitionStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

struct RecognitionResult {
  std::optional<IntegerPolynomial> poly;
  Real residual;
  Real verified_residual;
  int digits_used = 0;
  int verify_digits = 0;
  RecognitionStatus status = RecognitionStatus::refuted_at_bounds;
  int max_degree = 0;
  int height_digits = 0;
  std::string provenance;
  std::string note;
};

/// Value of the quantity at a requested precision.
using Evaluator = std::function<Real(const PrecisionContext&)>;

namespace detail {

/// One degree of the scan: LLL on rows (e_i, round(C x^i)), i = 0..d, and
/// the shortest-first candidates with non-zero leading coefficient.
inline std::vector<IntegerPolynomial> relation_candidates(const Real& x, int degree, long scale_exponent) {
  const mpfr_prec_t bits = x.precision();
  // Keep C x^i below the known digits of x: shrink C by max(1,|x|)^d.
  long shrink = 0;
  if (abs(x) > 1) shrink = static_cast<long>(std::ceil(x.log10_abs() * degree));
  Real C = pow10(scale_exponent - shrink, bits);
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  IntegerMatrix basis(n, std::vector<Integer>(n + 1));
  Real xi(1L, bits);
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    Real v = C * xi;
    mpfr_get_z(basis[i][n].get_mpz_t(), v.get(), MPFR_RNDN);
    xi *= x;
  }
  IntegerMatrix red = lattice_reduce(std::move(basis));
  std::vector<IntegerPolynomial> out;
  for (const auto& row : red) {
    std::vector<Integer> c(row.begin(), row.begin() + static_cast<long>(n));
    if (c.back() == 0) continue;
    out.push_back(IntegerPolynomial::normalized(std::move(c)));
  }
  return out;
}

inline Real normalized_residual(const IntegerPolynomial& p, const Real& x) {
  return abs(p.evaluate(x)) / p.magnitude(x);
}

struct RecognitionTiers {
  Real search_value;
  long scale_exponent;   // C = 10^scale_exponent
  long search_exponent;  // accept when residual < 10^-(search_exponent - d h)
  std::function<Real()> verify_value;
  long verify_exponent;  // recognized when verified < 10^-(verify_exponent - d h)
  int verify_digits;
};

inline RecognitionResult run_recognition(const RecognitionTiers& tiers, int max_degree, int height_digits,
                                         const PrecisionContext& ctx) {
  if (max_degree < 1) throw DomainError("max_degree must be at least 1");
  if (height_digits < 1) throw DomainError("height_digits must be at least 1");
  const int required = max_degree * height_digits + 2 * ctx.guard();
  if (ctx.digits() < required) {
    throw InsufficientPrecision("recognition with degree " + std::to_string(max_degree) + " and height 10^" +
                                    std::to_string(height_digits) + " needs at least " + std::to_string(required) +
                                    " digits",
                                required);
  }
  RecognitionResult res;
  res.residual = Real(ctx.bits());
  res.verified_residual = Real(ctx.bits());
  res.digits_used = ctx.digits();
  res.verify_digits = tiers.verify_digits;
  res.max_degree = max_degree;
  res.height_digits = height_digits;
  const Integer height_bound = [&] {
    Integer h;
    mpz_ui_pow_ui(h.get_mpz_t(), 10, static_cast<unsigned long>(height_digits));
    return h;
  }();
  std::optional<Real> verify_x;
  bool saw_unverified = false;
  for (int d = 1; d <= max_degree; ++d) {
    const mpfr_prec_t bits = tiers.search_value.precision();
    const Real tol = pow10(-(tiers.search_exponent - static_cast<long>(d) * height_digits), bits);
    for (const IntegerPolynomial& cand : relation_candidates(tiers.search_value, d, tiers.scale_exponent)) {
      bool within_height = true;
      for (const auto& c : cand.coeffs()) within_height = within_height && abs(c) < height_bound;
      if (!within_height) continue;
      Real r = normalized_residual(cand, tiers.search_value);
      if (!(r < tol)) continue;
      if (!verify_x) verify_x = tiers.verify_value();
      Real vr = normalized_residual(cand, *verify_x);
      const Real vtol = pow10(-(tiers.verify_exponent - static_cast<long>(d) * height_digits), verify_x->precision());
      if (vr < vtol) {
        res.poly = cand;
        res.residual = r;
        res.verified_residual = vr;
        res.status = RecognitionStatus::recognized;
        return res;
      }
      saw_unverified = true;
      res.residual = r;
      res.verified_residual = vr;
      res.note = "degree " + std::to_string(d) + " candidate " + cand.to_string() + " failed re-verification";
    }
  }
  res.status = saw_unverified ? RecognitionStatus::inconclusive : RecognitionStatus::refuted_at_bounds;
  return res;
}

}  // namespace detail

/// Searches degrees 1..max_degree for an integer relation among powers of
/// the value; a candidate must also hold when the value is recomputed at
/// twice the precision.
inline RecognitionResult recognize(const Evaluator& f, int max_degree, int height_digits, const PrecisionContext& ctx) {
  const PrecisionContext verify_ctx(2 * ctx.digits(), ctx.guard());
  detail::RecognitionTiers tiers{f(ctx),
                                 ctx.digits() - ctx.guard(),
                                 ctx.digits() - ctx.guard(),
                                 [&] { return f(verify_ctx); },
                                 verify_ctx.digits() - ctx.guard(),
                                 verify_ctx.digits()};
  return detail::run_recognition(tiers, max_degree, height_digits, ctx);
}

/// Recognition of a bare value known to ctx.digits() digits: the search uses
/// the value cut to digits - guard, and the held-out digits verify.
inline RecognitionResult recognize(const Real& x, int max_degree, int height_digits, const PrecisionContext& ctx) {
  const PrecisionContext search_ctx(std::max(ctx.digits() - ctx.guard(), PrecisionContext::kMinDigits), ctx.guard());
  Real full = x.rounded(ctx);
  detail::RecognitionTiers tiers{x.rounded(search_ctx),
                                 ctx.digits() - 2 * ctx.guard(),
                                 ctx.digits() - 2 * ctx.guard(),
                                 [full] { return full; },
                                 ctx.digits() - ctx.guard(),
                                 ctx.digits()};
  return detail::run_recognition(tiers, max_degree, height_digits, ctx);
}

}  // namespace qalg

#endif  // QALG_RECOGNIZER_HPP
