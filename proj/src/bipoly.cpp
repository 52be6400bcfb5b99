#include "ffgamma/bipoly.hpp"

#include <algorithm>

#include "ffgamma/errors.hpp"

namespace ffgamma {

BiPoly::BiPoly(const GaloisField& f, std::vector<Poly> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::z_power(const GaloisField& f, std::size_t k, const Poly& c) {
  std::vector<Poly> v(k + 1, Poly(f));
  v[k] = c;
  return BiPoly(f, std::move(v));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::vector<Poly> v(std::max(c_.size(), o.c_.size()), Poly(*f_));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = coeff(j) + o.coeff(j);
  return BiPoly(*f_, std::move(v));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  std::vector<Poly> v(std::max(c_.size(), o.c_.size()), Poly(*f_));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = coeff(j) - o.coeff(j);
  return BiPoly(*f_, std::move(v));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return BiPoly(*f_);
  std::vector<Poly> v(c_.size() + o.c_.size() - 1, Poly(*f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
  }
  return BiPoly(*f_, std::move(v));
}

std::pair<BiPoly, BiPoly> BiPoly::divmod(const BiPoly& a, const BiPoly& b) {
  if (!b.is_monic_in_z()) throw DomainError("BiPoly division needs a divisor monic in z");
  const GaloisField& f = a.field();
  std::vector<Poly> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  if (r.size() <= db) return {BiPoly(f), a};
  std::vector<Poly> quot(r.size() - db, Poly(f));
  for (std::size_t k = r.size(); k-- > db;) {
    const Poly c = r[k];
    if (c.is_zero()) continue;
    const std::size_t shift = k - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      if (!b.c_[i].is_zero()) r[shift + i] = r[shift + i] - c * b.c_[i];
    }
  }
  return {BiPoly(f, std::move(quot)), BiPoly(f, std::move(r))};
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool unit = c_[j] == Poly::constant(*f_, 1);
    if (!unit || j == 0) s += "(" + c_[j].to_string('t') + ")";
    if (j > 0) s += (unit ? "" : "*") + std::string("z") + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return s;
}

}  // namespace ffgamma
