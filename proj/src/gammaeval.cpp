#include "ffgamma/gammaeval.hpp"

#include <algorithm>

#include "ffgamma/carlitz.hpp"
#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

using Raw = GaloisField::Raw;

long guard_for(const RationalK& x) {
  const long q = static_cast<long>(x.field().q());
  const long d = std::max(x.degree(), 0);
  return 4 * (q - 1) * (d + 2);
}

// Psi_N(x) from y = Psi_{N-1}(x), both known mod u^wp.
LaurentNum next_psi(const LaurentNum& y, unsigned N, long wp) {
  const GaloisField& f = y.field();
  const LaurentNum num = y.twist(1, y.prec()) - y;
  if (num.is_zero()) return LaurentNum::zero(f, wp);
  const long long s = q_power(f.q(), N);
  const long dp = wp + std::max(0L, -num.val()) + 1;
  const LaurentNum den = LaurentNum::t_power(f, s, dp) - LaurentNum::T(f, dp);
  return (num / den).truncated(wp);
}

// prod_N (1 + Psi_N(x)) mod u^wp, with the Psi_N(x) used.
LaurentNum pi_inverse_at(const RationalK& x, long wp) {
  const GaloisField& f = x.field();
  const int d = std::max(x.degree(), 0);
  LaurentNum y = LaurentNum::from_rational(x, wp);
  LaurentNum prod = LaurentNum::one(f, wp);
  for (unsigned N = 0;; ++N) {
    if (static_cast<int>(N) > d && y.is_zero()) break;
    prod *= LaurentNum::one(f, wp) + y;
    y = next_psi(y, N + 1, wp);
  }
  return prod;
}

LaurentNum pi_at(const RationalK& x, long wp) { return pi_inverse_at(x, wp).inv(); }

void require_not_pole(const RationalK& x) {
  if (is_pi_pole(x)) throw DomainError("pole of Pi at " + x.to_string());
}

LaurentNum rational_const(const RationalK& x, long wp) { return LaurentNum::from_rational(x, wp); }

}  // namespace

RationalK rational_frobenius(const RationalK& x) {
  return RationalK(x.num().frobenius(1), x.den().frobenius(1));
}

LinPoly::LinPoly(const GaloisField& f, std::vector<RationalK> coeffs) : f_(&f), c_(std::move(coeffs)) {
  trim();
}

void LinPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
  std::vector<RationalK> v;
  for (std::size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) v.push_back(coeff(i) + o.coeff(i));
  return LinPoly(*f_, std::move(v));
}

LinPoly LinPoly::operator-(const LinPoly& o) const { return *this + o.scaled(RationalK(Poly::constant(*f_, f_->neg(1)))); }

LinPoly LinPoly::scaled(const RationalK& c) const {
  std::vector<RationalK> v;
  for (const RationalK& a : c_) v.push_back(a * c);
  return LinPoly(*f_, std::move(v));
}

LinPoly LinPoly::frobenius() const {
  std::vector<RationalK> v{RationalK(*f_)};
  for (const RationalK& a : c_) v.push_back(rational_frobenius(a));
  return LinPoly(*f_, std::move(v));
}

RationalK LinPoly::eval(const RationalK& z) const {
  RationalK acc(*f_), zp = z;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) acc = acc + c_[i] * zp;
    if (i + 1 < c_.size()) zp = rational_frobenius(zp);
  }
  return acc;
}

std::string LinPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")*z^" + std::to_string(q_power(f_->q(), static_cast<unsigned>(i)));
  }
  return s;
}

LinPoly psi_poly(const GaloisField& f, unsigned N) {
  LinPoly p(f, {RationalK(Poly::constant(f, 1))});
  for (unsigned n = 1; n <= N; ++n) {
    const Poly den = Poly::monomial(f, 1, static_cast<std::size_t>(q_power(f.q(), n))) - Poly::variable(f);
    p = (p.frobenius() - p).scaled(RationalK(Poly::constant(f, 1), den));
  }
  return p;
}

bool is_pi_pole(const RationalK& x) { return x.is_poly() && !x.is_zero() && (-x).num().is_monic(); }

std::vector<LaurentNum> psi_values(const RationalK& x, unsigned upto, long prec) {
  std::vector<LaurentNum> out{LaurentNum::from_rational(x, prec)};
  for (unsigned N = 1; N <= upto; ++N) out.push_back(next_psi(out.back(), N, prec));
  return out;
}

LaurentNum psi_value(const RationalK& x, unsigned N, long prec) { return psi_values(x, N, prec).back(); }

LaurentNum pi_value(const RationalK& x, long prec) {
  require_not_pole(x);
  return at_precision(prec, prec + guard_for(x), [&](long wp) { return pi_at(x, wp); });
}

LaurentNum gamma_value(const RationalK& x, long prec) {
  if (x.is_zero()) throw DomainError("pole of Gamma at 0");
  require_not_pole(x);
  return at_precision(prec, prec + guard_for(x),
                      [&](long wp) { return pi_at(x, wp) / rational_const(x, wp); });
}

LaurentNum pi_direct_partial(const RationalK& x, unsigned max_deg, long prec) {
  const GaloisField& f = x.field();
  RationalK prod(Poly::constant(f, 1));
  for (unsigned d = 0; d <= max_deg; ++d) {
    for (const Poly& a : monic_of_degree(f, d)) {
      const RationalK fac = RationalK(a) + x;
      if (fac.is_zero()) throw DomainError("pole of Pi at " + x.to_string());
      prod = prod * RationalK(a) / fac;
    }
  }
  return LaurentNum::from_rational(prod, prec);
}

LaurentNum pi_monomial(const CycleElement& a, long prec) {
  const GaloisField& f = a.level().field();
  return at_precision(prec, prec + 8 * static_cast<long>(f.q()), [&](long wp) {
    LaurentNum acc = LaurentNum::one(f, wp);
    for (const auto& [idx, m] : a.terms()) {
      const LaurentNum inv = pi_inverse_at(residue_of(a.level(), idx), wp);
      const LaurentNum base = m > 0 ? inv.inv() : inv;
      acc *= base.pow(static_cast<std::uint64_t>(m > 0 ? m : -m));
    }
    return acc;
  });
}

LaurentNum reflection_product(const GaloisField& f, long prec) {
  const long q = static_cast<long>(f.q());
  const long inner = prec + q;
  LaurentNum prod = LaurentNum::one(f, inner);
  for (unsigned i = 1;; ++i) {
    const long long s = q_power(f.q(), i);
    if ((q - 1) * (s - 1) >= inner) break;
    prod *= (LaurentNum::one(f, inner) - LaurentNum::t_power(f, 1 - s, inner)).inv();
  }
  return prod.truncated(prec);
}

long verify_translation(const RationalK& x, const Poly& a0, long prec) {
  if (a0.is_zero()) throw DomainError("translation by zero");
  const RationalK xa = x + RationalK(a0);
  require_not_pole(x);
  require_not_pole(xa);
  const unsigned d = static_cast<unsigned>(a0.degree());
  const GaloisField& f = x.field();
  const LaurentNum diff = at_precision(prec, prec + guard_for(xa), [&](long wp) {
    const LaurentNum lhs = pi_at(xa, wp) / pi_at(x, wp);
    const auto y = psi_values(x, d, wp), ya = psi_values(xa, d, wp);
    LaurentNum rhs = LaurentNum::one(f, wp);
    for (unsigned i = 0; i <= d; ++i)
      rhs *= (LaurentNum::one(f, wp) + y[i]) / (LaurentNum::one(f, wp) + ya[i]);
    return lhs - rhs;
  });
  return diff.valuation();
}

long verify_reflection(const RationalK& x, long prec) {
  if (x.is_poly()) throw DomainError("reflection check needs x outside A");
  const GaloisField& f = x.field();
  const LaurentNum diff = at_precision(prec, prec + guard_for(x), [&](long wp) {
    LaurentNum lhs = LaurentNum::one(f, wp);
    for (Raw e = 1; e < f.q(); ++e) lhs *= pi_at(x.scaled(e), wp);
    const LaurentNum rhs = period(f, wp) * rational_const(x, wp) / e_torsion(x, wp);
    return lhs - rhs;
  });
  return diff.valuation();
}

long verify_gauss(const RationalK& x, const Poly& fp, long prec) {
  if (!fp.is_monic()) throw DomainError("Gauss multiplication needs a monic modulus");
  const GaloisField& f = x.field();
  const unsigned n = static_cast<unsigned>(fp.degree());
  const RationalK finv(Poly::constant(f, 1), fp);
  require_not_pole(x);
  for (const Poly& a : polys_below_degree(f, n)) require_not_pole((x + RationalK(a)) * finv);
  const LaurentNum diff = at_precision(prec, prec + guard_for(x), [&](long wp) {
    LaurentNum lhs = LaurentNum::one(f, wp);
    for (const Poly& a : polys_below_degree(f, n)) lhs *= pi_at((x + RationalK(a)) * finv, wp);
    LaurentNum rhs = pi_at(x, wp);
    if (n > 0) {
      const auto y = psi_values(x, n - 1, wp);
      for (const LaurentNum& v : y) rhs *= LaurentNum::one(f, wp) + v;
    }
    for (unsigned d = 0; d < n; ++d) {
      for (const Poly& a : monic_of_degree(f, d)) {
        for (Raw e = 1; e < f.q(); ++e) rhs *= pi_at((RationalK(a) * finv).scaled(e), wp);
      }
    }
    return lhs - rhs;
  });
  return diff.valuation();
}

}  // namespace ffgamma
