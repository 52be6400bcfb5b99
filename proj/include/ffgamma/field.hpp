#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ffgamma {

/// The finite field F_q, q = p^e.
///
/// Elements are encoded as integers 0..q-1: the base-p digits of the
/// encoding are the coordinates in the polynomial basis 1, g, g^2, ... where
/// g is a root of the stored irreducible modulus (the lexicographically first
/// monic irreducible of degree e over F_p).  For e = 1 the encoding is the
/// residue itself.  Instances are interned per q and never destroyed, so a
/// `const GaloisField*` is a stable identity that values may carry around.
class GaloisField {
 public:
  using Raw = std::uint16_t;

  static constexpr unsigned kMaxOrder = 512;

  /// Interned field of order q; throws DomainError unless q is a prime
  /// power in [2, kMaxOrder].
  static const GaloisField& get(unsigned q);

  static bool is_prime_power(unsigned q, unsigned* p = nullptr, unsigned* e = nullptr);

  unsigned q() const noexcept { return q_; }
  unsigned p() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  bool is_prime() const noexcept { return e_ == 1; }

  /// Modulus coefficients over F_p, low degree first, monic (size e+1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Raw add(Raw a, Raw b) const noexcept { return add_[idx(a, b)]; }
  Raw sub(Raw a, Raw b) const noexcept { return add_[idx(a, neg_[b])]; }
  Raw mul(Raw a, Raw b) const noexcept { return mul_[idx(a, b)]; }
  Raw neg(Raw a) const noexcept { return neg_[a]; }
  /// Throws DomainError for a == 0.
  Raw inv(Raw a) const;
  Raw div(Raw a, Raw b) const { return mul(a, inv(b)); }
  Raw pow(Raw a, std::uint64_t n) const noexcept;

  /// Image of an integer in the prime subfield.
  Raw from_int(long long n) const noexcept;

  /// Coordinate `d` (0 <= d < e) of an element in the polynomial basis.
  unsigned digit(Raw a, unsigned d) const noexcept { return digits_[a * e_ + d]; }

  std::string to_string(Raw a) const;

 private:
  explicit GaloisField(unsigned q);

  std::size_t idx(Raw a, Raw b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

  unsigned q_ = 0, p_ = 0, e_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Raw> add_, mul_, neg_, inv_;
  std::vector<unsigned> digits_;
};

/// An element of F_q together with its field.
class FieldElem {
 public:
  using Raw = GaloisField::Raw;

  FieldElem(const GaloisField& f, Raw v) : f_(&f), v_(v) {}
  static FieldElem from_int(const GaloisField& f, long long n) { return {f, f.from_int(n)}; }

  const GaloisField& field() const noexcept { return *f_; }
  Raw raw() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElem operator+(FieldElem o) const { return {*f_, f_->add(v_, o.v_)}; }
  FieldElem operator-(FieldElem o) const { return {*f_, f_->sub(v_, o.v_)}; }
  FieldElem operator*(FieldElem o) const { return {*f_, f_->mul(v_, o.v_)}; }
  FieldElem operator/(FieldElem o) const { return {*f_, f_->div(v_, o.v_)}; }
  FieldElem operator-() const { return {*f_, f_->neg(v_)}; }
  FieldElem inv() const { return {*f_, f_->inv(v_)}; }
  FieldElem pow(std::uint64_t n) const { return {*f_, f_->pow(v_, n)}; }

  bool operator==(const FieldElem& o) const noexcept { return f_ == o.f_ && v_ == o.v_; }

 private:
  const GaloisField* f_;
  Raw v_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace ffgamma
