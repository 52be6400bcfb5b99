#include "ffgamma/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "ffgamma/errors.hpp"
#include "ffgamma/kernels.hpp"

namespace ffgamma {

QFrac QFrac::make(long long n, long long d) {
  if (d == 0) throw DomainError("zero denominator in rational number");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  return g > 1 ? QFrac{n / g, d / g} : QFrac{n, d};
}

std::string QFrac::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

long long q_power(unsigned q, unsigned n) {
  long long r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (1LL << 50) / q) throw PrecisionError("q^n overflows the exponent range");
    r *= q;
  }
  return r;
}

LaurentNum::LaurentNum(const GaloisField& f, long val, long prec, std::vector<Raw> coeffs)
    : f_(&f), val_(val), prec_(prec), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentNum::normalize() {
  if (prec_ > kExactPrec) prec_ = kExactPrec;
  const long room = prec_ - val_;
  if (room <= 0) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (static_cast<long>(coeffs_.size()) > room) coeffs_.resize(static_cast<std::size_t>(room));
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (lead) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  val_ += static_cast<long>(lead);
  coeffs_.resize(static_cast<std::size_t>(prec_ - val_), 0);
}

LaurentNum LaurentNum::monomial(const GaloisField& f, Raw c, long exponent, long prec) {
  if (c == 0 || exponent >= prec) return LaurentNum(f, prec);
  std::vector<Raw> v(static_cast<std::size_t>(prec - exponent), 0);
  v[0] = c;
  return LaurentNum(f, exponent, prec, std::move(v));
}

LaurentNum LaurentNum::t_power(const GaloisField& f, long long n, long prec, Raw c) {
  const Raw sign = (n % 2 != 0) ? f.neg(c) : c;
  return monomial(f, sign, static_cast<long>(-n * static_cast<long long>(f.q() - 1)), prec);
}

LaurentNum LaurentNum::from_poly(const Poly& a, long prec) {
  const GaloisField& f = a.field();
  if (a.is_zero()) return LaurentNum(f, prec);
  const long step = static_cast<long>(f.q() - 1);
  const long val = -a.degree() * step;
  if (val >= prec) return LaurentNum(f, prec);
  std::vector<Raw> v(static_cast<std::size_t>(prec - val), 0);
  for (int i = 0; i <= a.degree(); ++i) {
    const long e = -i * step;
    if (e >= prec) continue;
    v[static_cast<std::size_t>(e - val)] = (i % 2) ? f.neg(a.coeff(i)) : a.coeff(i);
  }
  return LaurentNum(f, val, prec, std::move(v));
}

LaurentNum LaurentNum::from_rational(const RationalK& x, long prec) {
  const GaloisField& f = x.field();
  if (x.is_zero()) return LaurentNum(f, prec);
  const long step = static_cast<long>(f.q() - 1);
  const long work = prec + step * (x.num().degree() + x.den().degree()) + 1;
  LaurentNum r = from_poly(x.num(), work) * from_poly(x.den(), work).inv();
  return r.truncated(prec);
}

LaurentNum::Raw LaurentNum::coeff(long e) const {
  if (e >= prec_) throw PrecisionError("coefficient of u^" + std::to_string(e) + " beyond precision");
  if (e < val_) return 0;
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

QFrac LaurentNum::abs_val() const {
  if (is_zero()) throw DomainError("absolute value of a value that is zero to precision");
  return QFrac::make(-val_, static_cast<long long>(q() - 1));
}

bool LaurentNum::in_k_inf() const noexcept {
  const long step = static_cast<long>(q() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] && (val_ + static_cast<long>(i)) % step != 0) return false;
  }
  return true;
}

LaurentNum::Raw LaurentNum::residue() const {
  const long slot = static_cast<long>(q() - 1);
  if (slot >= prec_) throw PrecisionError("residue slot u^(q-1) beyond precision");
  if (!in_k_inf()) throw DomainError("residue of an element outside k_inf");
  return f_->neg(coeff(slot));
}

LaurentNum LaurentNum::operator+(const LaurentNum& o) const {
  const long prec = std::min(prec_, o.prec_);
  const long val = std::min(val_, o.val_);
  if (val >= prec) return LaurentNum(*f_, prec);
  std::vector<Raw> v(static_cast<std::size_t>(prec - val), 0);
  for (std::size_t i = 0; i < coeffs_.size() && val_ + static_cast<long>(i) < prec; ++i)
    v[static_cast<std::size_t>(val_ - val) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size() && o.val_ + static_cast<long>(i) < prec; ++i) {
    Raw& slot = v[static_cast<std::size_t>(o.val_ - val) + i];
    slot = f_->add(slot, o.coeffs_[i]);
  }
  return LaurentNum(*f_, val, prec, std::move(v));
}

LaurentNum LaurentNum::operator-() const {
  LaurentNum r = *this;
  for (auto& c : r.coeffs_) c = f_->neg(c);
  return r;
}

LaurentNum LaurentNum::operator-(const LaurentNum& o) const { return *this + (-o); }

LaurentNum LaurentNum::scaled(Raw c) const {
  if (c == 0) return LaurentNum(*f_, prec_);
  LaurentNum r = *this;
  for (auto& x : r.coeffs_) x = f_->mul(x, c);
  return r;
}

LaurentNum LaurentNum::shifted(long k) const {
  LaurentNum r = *this;
  r.val_ += k;
  r.prec_ += k;
  return r;
}

LaurentNum LaurentNum::operator*(const LaurentNum& o) const {
  const long prec = std::min(prec_ + o.val_, o.prec_ + val_);
  if (is_zero() || o.is_zero()) return LaurentNum(*f_, prec);
  const long val = val_ + o.val_;
  if (val >= prec) return LaurentNum(*f_, prec);
  const std::size_t len = static_cast<std::size_t>(prec - val);
  const std::size_t na = std::min(coeffs_.size(), len), nb = std::min(o.coeffs_.size(), len);

  std::vector<std::uint32_t> nza, nzb;
  for (std::size_t i = 0; i < na; ++i)
    if (coeffs_[i]) nza.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 0; i < nb; ++i)
    if (o.coeffs_[i]) nzb.push_back(static_cast<std::uint32_t>(i));

  std::vector<Raw> out(len, 0);
  // Twisted operands are very sparse; pairwise products beat the dense kernel.
  if (static_cast<double>(nza.size()) * static_cast<double>(nzb.size()) <
      0.25 * static_cast<double>(len) * static_cast<double>(len)) {
    for (std::uint32_t i : nza) {
      const Raw ai = coeffs_[i];
      for (std::uint32_t j : nzb) {
        if (i + j >= len) break;
        out[i + j] = f_->add(out[i + j], f_->mul(ai, o.coeffs_[j]));
      }
    }
  } else {
    kernels::convolve(*f_, coeffs_.data(), na, o.coeffs_.data(), nb, out.data(), len);
  }
  return LaurentNum(*f_, val, prec, std::move(out));
}

LaurentNum LaurentNum::inv() const {
  if (is_zero()) throw DomainError("inverse of a value that is zero to precision");
  const std::size_t r = coeffs_.size();
  std::vector<std::uint32_t> nz;
  for (std::size_t i = 1; i < r; ++i)
    if (coeffs_[i]) nz.push_back(static_cast<std::uint32_t>(i));
  std::vector<Raw> b(r, 0);
  const Raw b0 = f_->inv(coeffs_[0]);
  b[0] = b0;
  const Raw minus_b0 = f_->neg(b0);
  for (std::size_t k = 1; k < r; ++k) {
    Raw acc = 0;
    for (std::uint32_t j : nz) {
      if (j > k) break;
      if (b[k - j]) acc = f_->add(acc, f_->mul(coeffs_[j], b[k - j]));
    }
    b[k] = f_->mul(minus_b0, acc);
  }
  return LaurentNum(*f_, -val_, prec_ - 2 * val_, std::move(b));
}

LaurentNum LaurentNum::operator/(const LaurentNum& o) const { return *this * o.inv(); }

LaurentNum LaurentNum::pow(std::uint64_t n) const {
  if (n == 0) return one(*f_, std::max(prec_, 1L));
  std::optional<LaurentNum> result;
  LaurentNum frob = *this;
  // Base-q digits: x^n = prod_i (x^{q^i})^{n_i}, with x^{q^i} an exact twist.
  while (n) {
    const unsigned d = static_cast<unsigned>(n % q());
    if (d) {
      LaurentNum term = frob;
      for (unsigned k = 1; k < d; ++k) term = term * frob;
      result = result ? *result * term : term;
    }
    n /= q();
    if (n) frob = frob.twist(1);
  }
  return *result;
}

LaurentNum LaurentNum::twist(int n, long cap) const {
  if (n == 0) return truncated(cap);
  const long long s = q_power(q(), static_cast<unsigned>(n < 0 ? -n : n));
  if (n > 0) {
    const __int128 wide = static_cast<__int128>(prec_) * s;
    const long prec = static_cast<long>(std::min<__int128>(std::min<__int128>(wide, cap), kExactPrec));
    const __int128 wval = static_cast<__int128>(val_) * s;
    if (is_zero() || wval >= prec) return LaurentNum(*f_, prec);
    const long val = static_cast<long>(wval);
    std::vector<Raw> v(static_cast<std::size_t>(prec - val), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const long long off = static_cast<long long>(i) * s;
      if (off >= prec - val) break;
      v[static_cast<std::size_t>(off)] = coeffs_[i];
    }
    return LaurentNum(*f_, val, prec, std::move(v));
  }
  auto ceil_div = [](long a, long long b) {
    return static_cast<long>(a >= 0 ? (a + b - 1) / b : -((-a) / b));
  };
  const long prec = std::min(ceil_div(prec_, s), cap);
  if (is_zero()) return LaurentNum(*f_, prec);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] && (val_ + static_cast<long>(i)) % s != 0)
      throw DomainError("negative twist of a series with exponent " +
                        std::to_string(val_ + static_cast<long>(i)) + " not divisible by q^" +
                        std::to_string(-n));
  }
  const long val = static_cast<long>((val_) / s);
  if (val >= prec) return LaurentNum(*f_, prec);
  std::vector<Raw> v(static_cast<std::size_t>(prec - val), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    const long e = (val_ + static_cast<long>(i)) / static_cast<long>(s);
    if (e < prec) v[static_cast<std::size_t>(e - val)] = coeffs_[i];
  }
  return LaurentNum(*f_, val, prec, std::move(v));
}

LaurentNum LaurentNum::truncated(long p) const {
  if (p >= prec_) return *this;
  return LaurentNum(*f_, val_, p, coeffs_);
}

LaurentNum LaurentNum::with_prec(long p) const {
  if (p <= prec_) return truncated(p);
  if (is_zero()) return LaurentNum(*f_, p);
  std::vector<Raw> v = coeffs_;
  v.resize(static_cast<std::size_t>(p - val_), 0);
  return LaurentNum(*f_, val_, p, std::move(v));
}

std::string LaurentNum::to_string(std::size_t max_terms) const {
  std::string s;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (!coeffs_[i]) continue;
    if (!s.empty()) s += " + ";
    s += f_->to_string(coeffs_[i]) + "*u^" + std::to_string(val_ + static_cast<long>(i));
    ++shown;
  }
  if (shown == max_terms) s += " + ...";
  if (!s.empty()) s += " + ";
  return s + "O(u^" + std::to_string(prec_) + ")";
}

}  // namespace ffgamma
