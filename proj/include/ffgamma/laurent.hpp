#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "ffgamma/errors.hpp"
#include "ffgamma/field.hpp"
#include "ffgamma/rational.hpp"

namespace ffgamma {

/// Precision used for values known exactly (only zeros are stored at
/// this precision; anything at or beyond it is clamped).
constexpr long kExactPrec = 1L << 40;

/// Reduced fraction, used for log_q of absolute values.
struct QFrac {
  long long num = 0, den = 1;
  static QFrac make(long long n, long long d);
  bool operator==(const QFrac& o) const noexcept { return num == o.num && den == o.den; }
  QFrac operator+(const QFrac& o) const { return make(num * o.den + o.num * den, den * o.den); }
  std::string to_string() const;
};

/// Truncated Laurent series over F_q in u = 1/T~, where T~ is the fixed
/// (q-1)-st root of -T.  So T = -u^{-(q-1)} and T~ = u^{-1}.
///
/// The value is known modulo u^prec.  Coefficients are stored densely for
/// the exponents val, val+1, ..., prec-1.  Unless the value is zero to
/// precision the first stored coefficient is nonzero; a zero value has no
/// coefficients and val == prec.
class LaurentNum {
 public:
  using Raw = GaloisField::Raw;

  /// Zero modulo u^prec.
  LaurentNum(const GaloisField& f, long prec) : f_(&f), val_(prec), prec_(prec) {}
  /// Coefficients for exponents val, val+1, ...; anything at or past prec
  /// is dropped and missing slots below prec are zero.
  LaurentNum(const GaloisField& f, long val, long prec, std::vector<Raw> coeffs);

  static LaurentNum zero(const GaloisField& f, long prec) { return LaurentNum(f, prec); }
  static LaurentNum one(const GaloisField& f, long prec) { return monomial(f, 1, 0, prec); }
  static LaurentNum constant(const GaloisField& f, Raw c, long prec) {
    return monomial(f, c, 0, prec);
  }
  static LaurentNum monomial(const GaloisField& f, Raw c, long exponent, long prec);
  /// c * T^n = c (-1)^n u^{-n(q-1)}, any integer n.
  static LaurentNum t_power(const GaloisField& f, long long n, long prec, Raw c = 1);
  static LaurentNum T(const GaloisField& f, long prec) { return t_power(f, 1, prec); }
  static LaurentNum T_tilde(const GaloisField& f, long prec) { return monomial(f, 1, -1, prec); }
  static LaurentNum from_poly(const Poly& a, long prec);
  static LaurentNum from_rational(const RationalK& x, long prec);

  const GaloisField& field() const noexcept { return *f_; }
  unsigned q() const noexcept { return f_->q(); }
  long val() const noexcept { return val_; }
  long prec() const noexcept { return prec_; }
  long rel_prec() const noexcept { return prec_ - val_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// val for nonzero values, prec for values that are zero to precision.
  long valuation() const noexcept { return val_; }
  const std::vector<Raw>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of u^e; throws PrecisionError if e >= prec.
  Raw coeff(long e) const;

  /// log_q |x| = -val/(q-1); throws DomainError when zero to precision.
  QFrac abs_val() const;
  /// True if all stored exponents are divisible by q-1.
  bool in_k_inf() const noexcept;
  /// Coefficient of T^{-1}.  Throws PrecisionError or DomainError.
  Raw residue() const;

  LaurentNum operator+(const LaurentNum& o) const;
  LaurentNum operator-(const LaurentNum& o) const;
  LaurentNum operator-() const;
  LaurentNum operator*(const LaurentNum& o) const;
  LaurentNum operator/(const LaurentNum& o) const;
  LaurentNum& operator+=(const LaurentNum& o) { return *this = *this + o; }
  LaurentNum& operator-=(const LaurentNum& o) { return *this = *this - o; }
  LaurentNum& operator*=(const LaurentNum& o) { return *this = *this * o; }
  LaurentNum scaled(Raw c) const;
  /// Multiply by u^k (exact, shifts val and prec).
  LaurentNum shifted(long k) const;
  /// Throws DomainError when zero to precision.
  LaurentNum inv() const;
  LaurentNum pow(std::uint64_t n) const;

  /// n-fold twist: u^e -> u^{e q^n}.  Negative n needs every exponent
  /// divisible by q^|n| (DomainError otherwise) and rounds prec up.
  /// The result is truncated at `cap` when that is smaller.
  LaurentNum twist(int n, long cap = LONG_MAX) const;
  /// Lower the precision to min(prec, p).
  LaurentNum truncated(long p) const;
  /// Raise the recorded precision by asserting all further coefficients
  /// are zero; only for values known to be exact.
  LaurentNum with_prec(long p) const;

  /// Valuation of this - o (the number of agreeing u-coefficients).
  long residual(const LaurentNum& o) const { return (*this - o).valuation(); }

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  void normalize();

  const GaloisField* f_;
  long val_;
  long prec_;
  std::vector<Raw> coeffs_;
};

/// q^n as a long, throwing PrecisionError on overflow.
long long q_power(unsigned q, unsigned n);

/// Runs fn(wp) for wp = start, 2 start, ... until the result is known to
/// precision `target`, and returns it truncated there.  Throws
/// PrecisionError after `rounds` attempts.
template <class Fn>
LaurentNum at_precision(long target, long start, Fn fn, int rounds = 8) {
  long wp = start > target ? start : target;
  for (int i = 0; i < rounds; ++i, wp *= 2) {
    LaurentNum r = fn(wp);
    if (r.prec() >= target) return r.truncated(target);
  }
  throw PrecisionError("target precision " + std::to_string(target) + " not reached");
}

}  // namespace ffgamma
