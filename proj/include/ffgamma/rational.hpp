#pragma once

#include <string>
#include <utility>

#include "ffgamma/poly.hpp"

namespace ffgamma {

/// Element of k = F_q(T), stored as num/den with den monic and gcd 1.
class RationalK {
 public:
  explicit RationalK(const GaloisField& f) : num_(f), den_(Poly::constant(f, 1)) {}
  RationalK(const Poly& num);  // NOLINT(google-explicit-constructor)
  /// Throws DomainError if den is zero.
  RationalK(const Poly& num, const Poly& den);

  const GaloisField& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_poly() const noexcept { return den_.degree() == 0; }
  /// log_q |x|_inf = deg num - deg den; undefined (INT_MIN) for zero.
  int degree() const noexcept;

  RationalK operator+(const RationalK& o) const;
  RationalK operator-(const RationalK& o) const;
  RationalK operator-() const;
  RationalK operator*(const RationalK& o) const;
  RationalK operator/(const RationalK& o) const;
  RationalK scaled(GaloisField::Raw c) const;

  /// Polynomial part (the A-component of the unique split x = a + y, |y| < 1).
  Poly poly_part() const;
  /// Fractional part y with |y| < 1.
  RationalK frac() const;

  /// Coefficient of T^{-n} in the 1/T-expansion, n >= 1 (fractional range).
  GaloisField::Raw coeff_neg(unsigned n) const;
  /// Coefficient of T^{-1}.
  GaloisField::Raw residue() const { return coeff_neg(1); }

  bool operator==(const RationalK& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalK& o) const noexcept { return !(*this == o); }
  bool operator<(const RationalK& o) const noexcept {
    return num_ < o.num_ || (num_ == o.num_ && den_ < o.den_);
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_, den_;
};

}  // namespace ffgamma
