#include "ffgamma/cycle.hpp"

#include "ffgamma/errors.hpp"

namespace ffgamma {

std::uint64_t residue_index(const Poly& f, const RationalK& x) {
  const RationalK fx = x * RationalK(f);
  if (!fx.is_poly()) throw DomainError("symbol " + x.to_string() + " is not at level " + f.to_string());
  return (fx.num() % f).index();
}

RationalK residue_of(const Poly& f, std::uint64_t idx) {
  return RationalK(Poly::from_index(f.field(), idx), f);
}

std::vector<Poly> units_mod(const Poly& f) {
  std::vector<Poly> out;
  const Poly one = Poly::constant(f.field(), 1);
  for (const Poly& a : polys_below_degree(f.field(), static_cast<unsigned>(f.degree()))) {
    if (!a.is_zero() && Poly::gcd(a, f) == one) out.push_back(a);
  }
  return out;
}

CycleElement::CycleElement(const Poly& f) : f_(f), dim_(0) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("level must be monic of positive degree");
  dim_ = static_cast<std::uint64_t>(q_power(f.field().q(), static_cast<unsigned>(f.degree())));
}

CycleElement CycleElement::symbol(const Poly& f, const RationalK& x, long m) {
  CycleElement c(f);
  c.add(x, m);
  return c;
}

CycleElement CycleElement::from_vector(const Poly& f, const std::vector<long>& v) {
  CycleElement c(f);
  if (v.size() != c.dim_) throw DomainError("vector length does not match level");
  for (std::uint64_t i = 0; i < v.size(); ++i) c.add_index(i, v[i]);
  return c;
}

bool CycleElement::is_effective() const noexcept {
  for (const auto& [k, m] : m_) {
    if (m < 0) return false;
  }
  return true;
}

long CycleElement::coeff(const RationalK& x) const {
  auto it = m_.find(residue_index(f_, x));
  return it == m_.end() ? 0 : it->second;
}

void CycleElement::add(const RationalK& x, long m) { add_index(residue_index(f_, x), m); }

void CycleElement::add_index(std::uint64_t idx, long m) {
  if (m == 0) return;
  long& slot = m_[idx];
  slot += m;
  if (slot == 0) m_.erase(idx);
}

void CycleElement::check_level(const CycleElement& o) const {
  if (f_ != o.f_) throw DomainError("level mismatch: " + f_.to_string() + " vs " + o.f_.to_string());
}

CycleElement CycleElement::operator+(const CycleElement& o) const {
  check_level(o);
  CycleElement r = *this;
  for (const auto& [k, m] : o.m_) r.add_index(k, m);
  return r;
}

CycleElement CycleElement::operator-(const CycleElement& o) const { return *this + o * -1; }

CycleElement CycleElement::operator*(long k) const {
  CycleElement r(f_);
  for (const auto& [i, m] : m_) r.add_index(i, m * k);
  return r;
}

std::vector<long> CycleElement::to_vector() const {
  std::vector<long> v(dim_, 0);
  for (const auto& [k, m] : m_) v[k] = m;
  return v;
}

long CycleElement::scaled_weight() const {
  long w = 0;
  for (const auto& [k, m] : m_) {
    if (k != 0) w += m;
  }
  return w;
}

QFrac CycleElement::weight() const {
  return QFrac::make(scaled_weight(), static_cast<long long>(f_.field().q() - 1));
}

std::string CycleElement::to_string() const {
  if (m_.empty()) return "0";
  std::string s;
  for (const auto& [k, m] : m_) {
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    const long a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a) + "*";
    s += "[" + residue_of(f_, k).to_string() + "]";
  }
  return s;
}

CycleElement star(const Poly& a, const CycleElement& c) {
  const Poly& f = c.level();
  if (Poly::gcd(a, f) != Poly::constant(f.field(), 1))
    throw DomainError(a.to_string() + " is not prime to " + f.to_string());
  CycleElement r(f);
  for (const auto& [k, m] : c.terms()) r.add_index(((Poly::from_index(f.field(), k) * a) % f).index(), m);
  return r;
}

}  // namespace ffgamma
