#include "ffgamma/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

using Coeffs = std::vector<unsigned>;  // over F_p, low degree first

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Coeffs decode(unsigned v, unsigned p, unsigned n) {
  Coeffs c(n);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

bool is_irreducible(const Coeffs& m, unsigned p) {
  const unsigned e = static_cast<unsigned>(m.size() - 1);
  // Trial division by every monic polynomial of degree 1..e/2.
  for (unsigned d = 1; 2 * d <= e; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned v = 0; v < count; ++v) {
      Coeffs g = decode(v, p, d);
      g.push_back(1);
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool GaloisField::is_prime_power(unsigned q, unsigned* p_out, unsigned* e_out) {
  if (q < 2) return false;
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

const GaloisField& GaloisField::get(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<const GaloisField>> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto it = interned.find(q);
  if (it != interned.end()) return *it->second;
  if (q > kMaxOrder || !is_prime_power(q)) {
    throw DomainError("q = " + std::to_string(q) + " is not a prime power in [2, 512]");
  }
  auto [pos, _] = interned.emplace(q, std::unique_ptr<const GaloisField>(new GaloisField(q)));
  return *pos->second;
}

GaloisField::GaloisField(unsigned q) : q_(q) {
  is_prime_power(q, &p_, &e_);
  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    unsigned count = 1;
    for (unsigned i = 0; i < e_; ++i) count *= p_;
    for (unsigned v = 0; v < count; ++v) {
      Coeffs m = decode(v, p_, e_);
      m.push_back(1);
      if (m[0] != 0 && is_irreducible(m, p_)) {
        modulus_ = m;
        break;
      }
    }
  }

  digits_.resize(static_cast<std::size_t>(q_) * e_);
  for (unsigned a = 0; a < q_; ++a) {
    const Coeffs c = decode(a, p_, e_);
    for (unsigned d = 0; d < e_; ++d) digits_[a * e_ + d] = c[d];
  }
  auto encode = [&](const Coeffs& c) {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return static_cast<Raw>(v);
  };

  const std::size_t n = static_cast<std::size_t>(q_) * q_;
  add_.resize(n);
  mul_.resize(n);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const Coeffs ca = decode(a, p_, e_);
    Coeffs na(e_);
    for (unsigned d = 0; d < e_; ++d) na[d] = (p_ - ca[d]) % p_;
    neg_[a] = encode(na);
    for (unsigned b = 0; b < q_; ++b) {
      const Coeffs cb = decode(b, p_, e_);
      Coeffs s(e_);
      for (unsigned d = 0; d < e_; ++d) s[d] = (ca[d] + cb[d]) % p_;
      add_[idx(a, b)] = encode(s);
      Coeffs prod(2 * e_, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      Coeffs r = poly_mod(prod, modulus_, p_);
      r.resize(e_, 0);
      mul_[idx(a, b)] = encode(r);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = static_cast<Raw>(b);
        break;
      }
}

GaloisField::Raw GaloisField::inv(Raw a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

GaloisField::Raw GaloisField::pow(Raw a, std::uint64_t n) const noexcept {
  Raw result = 1, base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

GaloisField::Raw GaloisField::from_int(long long n) const noexcept {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Raw>(r);
}

std::string GaloisField::to_string(Raw a) const {
  if (e_ == 1) return std::to_string(a);
  std::string s;
  for (unsigned d = e_; d-- > 0;) {
    const unsigned c = digit(a, d);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (d == 0 || c != 1) s += std::to_string(c);
    if (d > 0) s += (c != 1 ? "*g" : "g");
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.field().to_string(x.raw());
}

}  // namespace ffgamma
