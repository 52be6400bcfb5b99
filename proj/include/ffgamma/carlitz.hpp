#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffgamma/bipoly.hpp"
#include "ffgamma/laurent.hpp"
#include "ffgamma/tseries.hpp"

namespace ffgamma {

/// D_n = prod_{i<n} (T^{q^n} - T^{q^i}).
Poly dfac(const GaloisField& f, unsigned n);
/// 1/D_n to absolute precision prec.
LaurentNum inv_dfac(const GaloisField& f, unsigned n, long prec);

/// exp_C(z) = sum_n z^{q^n}/D_n.  The result is known mod u^prec provided
/// z carries enough precision (PrecisionError otherwise).
LaurentNum carlitz_exp(const LaurentNum& z, long prec);

/// The period T T~ prod_{i>=1} (1 - T^{1-q^i})^{-1}, memoized per (q, prec).
LaurentNum period(const GaloisField& f, long prec);

/// Omega = T~^{-q} prod_{i>=1} (1 - t/T^{q^i}), coefficients mod u^prec.
TSeries omega(const GaloisField& f, int trunc_t, long prec);
/// Omega^{(-1)} = T~^{-1} prod_{i>=0} (1 - t/T^{q^i}), from its own product.
TSeries omega_minus1(const GaloisField& f, int trunc_t, long prec);
/// Maclaurin coefficient a_n of Omega^{(-1)}, memoized per (q, prec).
LaurentNum omega_minus1_coeff(const GaloisField& f, unsigned n, long prec);

/// p(t0) for p in F_q[t]; constants never bind below `prec`.
LaurentNum poly_at(const Poly& p, const LaurentNum& t0, long prec);

/// sum_i f_i(t) z^{q^i} with f_i in F_q[t].
class TwistedPoly {
 public:
  explicit TwistedPoly(const GaloisField& f) : f_(&f) {}
  TwistedPoly(const GaloisField& f, std::vector<Poly> coeffs);

  const GaloisField& field() const noexcept { return *f_; }
  /// Largest i with f_i != 0, or -1.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Poly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(*f_); }
  const std::vector<Poly>& coeffs() const noexcept { return c_; }

  TwistedPoly operator+(const TwistedPoly& o) const;
  TwistedPoly operator-(const TwistedPoly& o) const;
  /// Composition: (this o other)(z) = this(other(z)).
  TwistedPoly operator*(const TwistedPoly& o) const;
  TwistedPoly scaled(const Poly& c) const;

  bool operator==(const TwistedPoly& o) const noexcept { return f_ == o.f_ && c_ == o.c_; }

  /// Dense bivariate form, z-degree q^degree.
  BiPoly expand() const;
  /// Value at t = t0, z = z0.
  LaurentNum eval(const LaurentNum& t0, const LaurentNum& z0) const;

  std::string to_string() const;

 private:
  void trim();

  const GaloisField* f_;
  std::vector<Poly> c_;
};

/// C_a(t, z) by Horner in C_T = tz + z^q.
TwistedPoly div_poly(const Poly& a);
/// Adjoint polynomial by the recursion C̄_{Tg+e} = C̄_g(t^q, tz^q + z) + e z^{q^deg}.
TwistedPoly adj_div_poly(const Poly& f);
/// Adjoint polynomial from the coefficients of C_f: sum_i f_i^{q^{n-i-1}} z^{q^{n-i}}.
TwistedPoly adj_div_poly_closed(const Poly& f);

/// #(A/f)^x.
std::uint64_t unit_count(const Poly& f);
/// C_f★ = C_f / prod_{d | f, d != f} C_d★, with C_1★ = z.  Each division is
/// checked to be exact.
BiPoly cyclotomic(const Poly& f);

/// e(x) = exp_C(period * frac(x)), mod u^prec.
LaurentNum e_torsion(const RationalK& x, long prec);
/// e*(x) = sum_n Res(T^n x) a_n, mod u^prec.
LaurentNum e_star(const RationalK& x, long prec);

/// Base-q digit weight: the digit sum if every digit is 0 or 1, else empty
/// (standing for minus infinity).
std::optional<unsigned> alpha_digits(std::uint64_t n, unsigned q);
/// e*(x) from the digit expansion T~ e*(x) = sum_n Res((-T)^{alpha(n)} x) T^{-n}.
LaurentNum e_star_via_digits(const RationalK& x, long prec);

}  // namespace ffgamma
