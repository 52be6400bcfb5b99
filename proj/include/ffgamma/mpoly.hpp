#pragma once

#include <map>
#include <string>
#include <vector>

#include "ffgamma/field.hpp"

namespace ffgamma {

/// Sparse polynomial over F_q in finitely many variables x_0, x_1, ...
class MPoly {
 public:
  using Raw = GaloisField::Raw;
  using Monomial = std::vector<unsigned>;

  MPoly(const GaloisField& f, std::size_t nvars) : f_(&f), n_(nvars) {}
  static MPoly constant(const GaloisField& f, std::size_t nvars, Raw c);
  static MPoly variable(const GaloisField& f, std::size_t nvars, std::size_t i);

  const GaloisField& field() const noexcept { return *f_; }
  bool is_zero() const noexcept { return t_.empty(); }
  const std::map<Monomial, Raw>& terms() const noexcept { return t_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(Raw c) const;
  /// p^q, which is p with every exponent multiplied by q.
  MPoly frobenius() const;

  bool operator==(const MPoly& o) const noexcept { return f_ == o.f_ && t_ == o.t_; }
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, Raw c);

  const GaloisField* f_;
  std::size_t n_;
  std::map<Monomial, Raw> t_;
};

}  // namespace ffgamma
