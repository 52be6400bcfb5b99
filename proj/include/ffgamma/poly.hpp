#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ffgamma/field.hpp"

namespace ffgamma {

/// Dense univariate polynomial over F_q, lowest degree first, never carrying
/// trailing zero coefficients.  Used both for A = F_q[T] and for F_q[t].
class Poly {
 public:
  using Raw = GaloisField::Raw;

  explicit Poly(const GaloisField& f) : f_(&f) {}
  Poly(const GaloisField& f, std::vector<Raw> coeffs);

  static Poly constant(const GaloisField& f, Raw c);
  static Poly monomial(const GaloisField& f, Raw c, std::size_t deg);
  static Poly variable(const GaloisField& f) { return monomial(f, 1, 1); }
  /// Integer coefficients reduced into the prime subfield, lowest first.
  static Poly from_ints(const GaloisField& f, std::initializer_list<long long> c);
  /// The polynomial whose coefficient vector is the base-q expansion of idx.
  static Poly from_index(const GaloisField& f, std::uint64_t idx);

  const GaloisField& field() const noexcept { return *f_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Raw coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Raw{0}; }
  Raw lead() const noexcept { return c_.empty() ? Raw{0} : c_.back(); }
  const std::vector<Raw>& coeffs() const noexcept { return c_; }
  /// Inverse of from_index for polynomials of degree < deg_bound.
  std::uint64_t index() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Raw c) const;
  Poly shifted(std::size_t k) const;  // multiply by X^k

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly operator/(const Poly& b) const { return divmod(*this, b).first; }
  Poly operator%(const Poly& b) const { return divmod(*this, b).second; }

  Poly monic() const;
  Poly pow(std::uint64_t n) const;
  /// p(X)^(q^k) = p(X^(q^k)), valid because the coefficients lie in F_q.
  Poly frobenius(unsigned k) const;
  /// Substitute X -> g.
  Poly compose(const Poly& g) const;
  Raw eval(Raw x) const noexcept;

  static Poly gcd(Poly a, Poly b);  // monic, or zero

  bool operator==(const Poly& o) const noexcept { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const noexcept { return !(*this == o); }
  /// Total order (degree, then coefficients from the top) for use as a map key.
  bool operator<(const Poly& o) const noexcept;

  std::string to_string(char var = 'T') const;

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const GaloisField* f_;
  std::vector<Raw> c_;
};

using PolyA = Poly;

/// Monic irreducible factors with multiplicity, by trial division.
std::vector<std::pair<Poly, unsigned>> factor_monic(const Poly& f);
bool is_irreducible(const Poly& f);
/// All monic divisors of monic f, ascending by degree.
std::vector<Poly> monic_divisors(const Poly& f);
/// All polynomials of degree < n (q^n of them), ordered by index.
std::vector<Poly> polys_below_degree(const GaloisField& f, unsigned n);
/// All monic polynomials of exact degree n.
std::vector<Poly> monic_of_degree(const GaloisField& f, unsigned n);

}  // namespace ffgamma
