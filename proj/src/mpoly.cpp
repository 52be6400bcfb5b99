#include "ffgamma/mpoly.hpp"

namespace ffgamma {

MPoly MPoly::constant(const GaloisField& f, std::size_t nvars, Raw c) {
  MPoly p(f, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const GaloisField& f, std::size_t nvars, std::size_t i) {
  MPoly p(f, nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

void MPoly::add_term(const Monomial& m, Raw c) {
  if (!c) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second = f_->add(it->second, c);
  if (!it->second) t_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(f_->neg(1)); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(*f_, n_);
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      Monomial m(n_);
      for (std::size_t i = 0; i < n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, f_->mul(ca, cb));
    }
  }
  return r;
}

MPoly MPoly::scaled(Raw c) const {
  MPoly r(*f_, n_);
  for (const auto& [m, v] : t_) r.add_term(m, f_->mul(v, c));
  return r;
}

MPoly MPoly::frobenius() const {
  MPoly r(*f_, n_);
  for (const auto& [m, c] : t_) {
    Monomial e = m;
    for (unsigned& x : e) x *= f_->q();
    r.add_term(e, c);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    if (mono.empty()) s += f_->to_string(c);
    else s += (c == 1 ? "" : f_->to_string(c) + "*") + mono;
  }
  return s;
}

}  // namespace ffgamma
