#include "ffgamma/rational.hpp"

#include <climits>

#include "ffgamma/errors.hpp"

namespace ffgamma {

RationalK::RationalK(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RationalK::RationalK(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

void RationalK::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(field(), 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const auto lead_inv = field().inv(den_.lead());
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

int RationalK::degree() const noexcept {
  if (is_zero()) return INT_MIN;
  return num_.degree() - den_.degree();
}

RationalK RationalK::operator+(const RationalK& o) const {
  if (den_ == o.den_) return RationalK(num_ + o.num_, den_);
  return RationalK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalK RationalK::operator-(const RationalK& o) const {
  if (den_ == o.den_) return RationalK(num_ - o.num_, den_);
  return RationalK(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalK RationalK::operator-() const {
  RationalK r = *this;
  r.num_ = -num_;
  return r;
}

RationalK RationalK::operator*(const RationalK& o) const {
  return RationalK(num_ * o.num_, den_ * o.den_);
}

RationalK RationalK::operator/(const RationalK& o) const {
  if (o.is_zero()) throw DomainError("division by zero in k");
  return RationalK(num_ * o.den_, den_ * o.num_);
}

RationalK RationalK::scaled(GaloisField::Raw c) const {
  RationalK r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_ = Poly::constant(field(), 1);
  return r;
}

Poly RationalK::poly_part() const { return num_ / den_; }

RationalK RationalK::frac() const {
  RationalK r = *this;
  r.num_ = num_ % den_;
  if (r.num_.is_zero()) r.den_ = Poly::constant(field(), 1);
  return r;
}

GaloisField::Raw RationalK::coeff_neg(unsigned n) const {
  if (n == 0) return poly_part().coeff(0);
  Poly r = num_ % den_;
  const int dd = den_.degree();
  // den is monic; r/d = c_1/T + c_2/T^2 + ...; multiplying r by T peels off c_1 each step.
  GaloisField::Raw c = 0;
  for (unsigned k = 1; k <= n; ++k) {
    if (r.is_zero()) return 0;
    r = r.shifted(1);
    c = r.degree() == dd ? r.lead() : GaloisField::Raw{0};
    if (c) r = r - den_.scaled(c);
  }
  return c;
}

std::string RationalK::to_string() const {
  if (is_poly()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ffgamma
