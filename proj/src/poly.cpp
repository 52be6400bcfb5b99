#include "ffgamma/poly.hpp"

#include <algorithm>

#include "ffgamma/errors.hpp"

namespace ffgamma {

Poly::Poly(const GaloisField& f, std::vector<Raw> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const GaloisField& f, Raw c) { return Poly(f, std::vector<Raw>{c}); }

Poly Poly::monomial(const GaloisField& f, Raw c, std::size_t deg) {
  std::vector<Raw> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const GaloisField& f, std::initializer_list<long long> c) {
  std::vector<Raw> v;
  v.reserve(c.size());
  for (long long x : c) v.push_back(f.from_int(x));
  return Poly(f, std::move(v));
}

Poly Poly::from_index(const GaloisField& f, std::uint64_t idx) {
  std::vector<Raw> v;
  while (idx) {
    v.push_back(static_cast<Raw>(idx % f.q()));
    idx /= f.q();
  }
  return Poly(f, std::move(v));
}

std::uint64_t Poly::index() const {
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * f_->q() + c_[i];
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Raw> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
  return Poly(*f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Raw> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff(i), o.coeff(i));
  return Poly(*f_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Raw> v(c_);
  for (auto& x : v) x = f_->neg(x);
  return Poly(*f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*f_);
  std::vector<Raw> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
    }
  }
  return Poly(*f_, std::move(v));
}

Poly Poly::scaled(Raw c) const {
  std::vector<Raw> v(c_);
  for (auto& x : v) x = f_->mul(x, c);
  return Poly(*f_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Raw> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(*f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const GaloisField& f = a.field();
  std::vector<Raw> r = a.c_;
  if (a.degree() < b.degree()) return {Poly(f), a};
  const std::size_t db = b.c_.size() - 1;
  std::vector<Raw> quot(r.size() - db, 0);
  const Raw inv_lead = f.inv(b.lead());
  for (std::size_t k = r.size(); k-- > db;) {
    const Raw c = f.mul(r[k], inv_lead);
    if (c == 0) continue;
    const std::size_t shift = k - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b.c_[i]));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(*f_, 1), base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::frobenius(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::uint64_t step = 1;
  for (unsigned i = 0; i < k; ++i) step *= f_->q();
  std::vector<Raw> v(static_cast<std::size_t>((c_.size() - 1) * step + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return Poly(*f_, std::move(v));
}

Poly Poly::compose(const Poly& g) const {
  Poly r(*f_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(*f_, c_[i]);
  return r;
}

Poly::Raw Poly::eval(Raw x) const noexcept {
  Raw r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool Poly::operator<(const Poly& o) const noexcept {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    std::string c = f_->to_string(c_[i]);
    if (f_->degree() > 1 && c.find('+') != std::string::npos) c = "(" + c + ")";
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += c;
      continue;
    }
    if (c_[i] != 1) s += c + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::vector<std::pair<Poly, unsigned>> factor_monic(const Poly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f.monic();
  const GaloisField& F = f.field();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++d) {
    for (const Poly& g : monic_of_degree(F, d)) {
      unsigned mult = 0;
      while (rest.degree() >= static_cast<int>(d)) {
        auto [quo, rem] = Poly::divmod(rest, g);
        if (!rem.is_zero()) break;
        rest = quo;
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
      if (2 * d > static_cast<unsigned>(std::max(rest.degree(), 0))) break;
    }
  }
  if (rest.degree() > 0) {
    bool merged = false;
    for (auto& [g, m] : out)
      if (g == rest) {
        ++m;
        merged = true;
      }
    if (!merged) out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fac = factor_monic(f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Poly> monic_divisors(const Poly& f) {
  if (!f.is_monic()) throw DomainError("monic_divisors expects a monic polynomial");
  std::vector<Poly> divs{Poly::constant(f.field(), 1)};
  for (const auto& [g, m] : factor_monic(f)) {
    const std::size_t n = divs.size();
    Poly power = g;
    for (unsigned e = 1; e <= m; ++e) {
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * power);
      power = power * g;
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Poly> polys_below_degree(const GaloisField& f, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= f.q();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(Poly::from_index(f, i));
  return out;
}

std::vector<Poly> monic_of_degree(const GaloisField& f, unsigned n) {
  std::vector<Poly> out;
  for (Poly& low : polys_below_degree(f, n)) out.push_back(low + Poly::monomial(f, 1, n));
  return out;
}

}  // namespace ffgamma
