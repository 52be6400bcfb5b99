#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffgamma/poly.hpp"

namespace ffgamma {

/// Polynomial in (t, z) over F_q, stored as a z-polynomial with F_q[t]
/// coefficients: sum_j c_j(t) z^j.
class BiPoly {
 public:
  explicit BiPoly(const GaloisField& f) : f_(&f) {}
  BiPoly(const GaloisField& f, std::vector<Poly> coeffs);

  static BiPoly z_power(const GaloisField& f, std::size_t k, const Poly& c);

  const GaloisField& field() const noexcept { return *f_; }
  int z_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of z^j (a polynomial in t).
  Poly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Poly(*f_); }
  const std::vector<Poly>& coeffs() const noexcept { return c_; }
  bool is_monic_in_z() const noexcept { return !c_.empty() && c_.back() == Poly::constant(*f_, 1); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  /// Division by a divisor monic in z.  Throws DomainError otherwise.
  static std::pair<BiPoly, BiPoly> divmod(const BiPoly& a, const BiPoly& b);
  BiPoly operator%(const BiPoly& b) const { return divmod(*this, b).second; }

  bool operator==(const BiPoly& o) const noexcept { return f_ == o.f_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  void trim();

  const GaloisField* f_;
  std::vector<Poly> c_;
};

}  // namespace ffgamma
