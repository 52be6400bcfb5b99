#include "ffgamma/carlitz.hpp"

#include <map>
#include <mutex>

#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

using Raw = GaloisField::Raw;

// Memo keyed by (q, prec); a cached entry with larger precision also serves
// smaller requests.
class LaurentMemo {
 public:
  template <class Fn>
  LaurentNum get(const GaloisField& f, long prec, Fn compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.lower_bound({f.q(), prec});
      if (it != cache_.end() && it->first.first == f.q()) return it->second.truncated(prec);
    }
    LaurentNum v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::make_pair(f.q(), prec), v);
    return v;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<unsigned, long>, LaurentNum> cache_;
};

LaurentMemo& period_memo() {
  static LaurentMemo m;
  return m;
}

// Horner evaluation of a polynomial in F_q[t] at t0.  Constants are
// created at precision `prec` (at least) so they never bind.
LaurentNum eval_poly(const Poly& p, const LaurentNum& t0, long prec) {
  const GaloisField& f = t0.field();
  if (p.is_zero()) return LaurentNum::zero(f, kExactPrec);
  const long cprec = std::max(prec, t0.prec() - std::min(t0.val(), 0L));
  LaurentNum acc = LaurentNum::constant(f, p.lead(), cprec);
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = acc * t0;
    if (p.coeff(static_cast<std::size_t>(i)))
      acc += LaurentNum::constant(f, p.coeff(static_cast<std::size_t>(i)), acc.prec());
  }
  return acc;
}

// (1 + c t)-style update: series <- series * (1 - a t).
void mul_linear(std::vector<LaurentNum>& c, const LaurentNum& a) {
  for (std::size_t k = c.size(); k-- > 1;) c[k] = c[k] - a * c[k - 1];
}

std::vector<LaurentNum> omega_product(const GaloisField& f, int trunc_t, long prec, unsigned first) {
  std::vector<LaurentNum> c(static_cast<std::size_t>(trunc_t) + 1, LaurentNum::zero(f, prec));
  c[0] = LaurentNum::one(f, prec);
  const long step = static_cast<long>(f.q() - 1);
  for (unsigned i = first;; ++i) {
    const long long s = q_power(f.q(), i);
    if (step * s >= prec) break;
    mul_linear(c, LaurentNum::t_power(f, -s, prec));
  }
  return c;
}

}  // namespace

LaurentNum poly_at(const Poly& p, const LaurentNum& t0, long prec) { return eval_poly(p, t0, prec); }

Poly dfac(const GaloisField& f, unsigned n) {
  Poly r = Poly::constant(f, 1);
  if (n == 0) return r;
  const auto top = static_cast<std::size_t>(q_power(f.q(), n));
  const Poly big = Poly::monomial(f, 1, top);
  for (unsigned i = 0; i < n; ++i)
    r = r * (big - Poly::monomial(f, 1, static_cast<std::size_t>(q_power(f.q(), i))));
  return r;
}

LaurentNum inv_dfac(const GaloisField& f, unsigned n, long prec) {
  if (n == 0) return LaurentNum::one(f, prec);
  const long long s = q_power(f.q(), n);
  const long v = static_cast<long>((f.q() - 1) * s);
  if (static_cast<long long>(n) * v >= prec) return LaurentNum::zero(f, prec);
  const long pb = prec - static_cast<long>(n + 1) * v;
  LaurentNum r = LaurentNum::one(f, prec);
  for (unsigned i = 0; i < n; ++i) {
    LaurentNum b = LaurentNum::t_power(f, s, pb) - LaurentNum::t_power(f, q_power(f.q(), i), pb);
    r = r * b.inv();
  }
  return r.truncated(prec);
}

LaurentNum carlitz_exp(const LaurentNum& z, long prec) {
  const GaloisField& f = z.field();
  if (z.is_zero()) return LaurentNum::zero(f, std::min(z.prec(), prec));
  const long step = static_cast<long>(f.q() - 1);
  LaurentNum sum = LaurentNum::zero(f, prec);
  for (unsigned n = 0;; ++n) {
    if (n > 40) throw PrecisionError("Carlitz exponential series does not settle: |z| too large");
    const long long s = q_power(f.q(), n);
    const long inner = z.val() + step * static_cast<long>(n);
    if (inner > 0 && static_cast<__int128>(s) * inner >= prec) break;
    const LaurentNum d = inv_dfac(f, n, prec - static_cast<long>(s * z.val()));
    if (d.is_zero()) continue;
    sum += z.twist(static_cast<int>(n), prec - d.val()) * d;
  }
  return sum.truncated(prec);
}

LaurentNum period(const GaloisField& f, long prec) {
  return period_memo().get(f, prec, [&] {
    const long q = static_cast<long>(f.q());
    const long inner = prec + q;
    LaurentNum prod = LaurentNum::one(f, inner);
    for (unsigned i = 1;; ++i) {
      const long long s = q_power(f.q(), i);
      if ((q - 1) * (s - 1) >= inner) break;
      LaurentNum factor = LaurentNum::one(f, inner) - LaurentNum::t_power(f, 1 - s, inner);
      prod = prod * factor.inv();
    }
    // T T~ = -u^{-q}
    return prod.shifted(-q).scaled(f.neg(1)).truncated(prec);
  });
}

TSeries omega(const GaloisField& f, int trunc_t, long prec) {
  const long q = static_cast<long>(f.q());
  auto c = omega_product(f, trunc_t, prec - q, 1);
  for (auto& x : c) x = x.shifted(q);
  return TSeries(std::move(c), trunc_t, prec);
}

TSeries omega_minus1(const GaloisField& f, int trunc_t, long prec) {
  auto c = omega_product(f, trunc_t, prec - 1, 0);
  for (auto& x : c) x = x.shifted(1);
  return TSeries(std::move(c), trunc_t, prec);
}

LaurentNum omega_minus1_coeff(const GaloisField& f, unsigned n, long prec) {
  // val(a_n) = q^n, so only a handful of coefficients are nonzero.
  if (n > 0 && q_power(f.q(), std::min(n, 40u)) >= prec) return LaurentNum::zero(f, prec);
  static std::mutex mu;
  static std::map<std::pair<unsigned, long>, std::vector<LaurentNum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.lower_bound({f.q(), prec});
  if (it == cache.end() || it->first.first != f.q()) {
    int trunc = 0;
    while (q_power(f.q(), static_cast<unsigned>(trunc + 1)) < prec) ++trunc;
    it = cache.emplace(std::make_pair(f.q(), prec), omega_minus1(f, trunc + 1, prec).coeffs()).first;
  }
  const auto& v = it->second;
  return n < v.size() ? v[n].truncated(prec) : LaurentNum::zero(f, prec);
}

TwistedPoly::TwistedPoly(const GaloisField& f, std::vector<Poly> coeffs) : f_(&f), c_(std::move(coeffs)) {
  trim();
}

void TwistedPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const {
  std::vector<Poly> v(std::max(c_.size(), o.c_.size()), Poly(*f_));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return TwistedPoly(*f_, std::move(v));
}

TwistedPoly TwistedPoly::operator-(const TwistedPoly& o) const {
  std::vector<Poly> v(std::max(c_.size(), o.c_.size()), Poly(*f_));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return TwistedPoly(*f_, std::move(v));
}

TwistedPoly TwistedPoly::operator*(const TwistedPoly& o) const {
  if (c_.empty() || o.c_.empty()) return TwistedPoly(*f_);
  std::vector<Poly> v(c_.size() + o.c_.size() - 1, Poly(*f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = v[i + j] + c_[i] * o.c_[j].frobenius(static_cast<unsigned>(i));
  }
  return TwistedPoly(*f_, std::move(v));
}

TwistedPoly TwistedPoly::scaled(const Poly& c) const {
  std::vector<Poly> v = c_;
  for (auto& x : v) x = x * c;
  return TwistedPoly(*f_, std::move(v));
}

BiPoly TwistedPoly::expand() const {
  if (c_.empty()) return BiPoly(*f_);
  const auto top = static_cast<std::size_t>(q_power(f_->q(), static_cast<unsigned>(degree())));
  std::vector<Poly> v(top + 1, Poly(*f_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[static_cast<std::size_t>(q_power(f_->q(), static_cast<unsigned>(i)))] = c_[i];
  return BiPoly(*f_, std::move(v));
}

LaurentNum TwistedPoly::eval(const LaurentNum& t0, const LaurentNum& z0) const {
  LaurentNum acc = LaurentNum::zero(*f_, kExactPrec);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const LaurentNum zq = z0.twist(static_cast<int>(i));
    acc += eval_poly(c_[i], t0, zq.prec() - zq.val()) * zq;
  }
  return acc;
}

std::string TwistedPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string('t') + ")*z^(q^" + std::to_string(i) + ")";
  }
  return s;
}

TwistedPoly div_poly(const Poly& a) {
  const GaloisField& f = a.field();
  if (a.is_zero()) return TwistedPoly(f);
  const TwistedPoly ct(f, {Poly::variable(f), Poly::constant(f, 1)});
  auto constant = [&](Raw c) { return TwistedPoly(f, {Poly::constant(f, c)}); };
  TwistedPoly r = constant(a.lead());
  for (int j = a.degree() - 1; j >= 0; --j) r = r * ct + constant(a.coeff(static_cast<std::size_t>(j)));
  return r;
}

TwistedPoly adj_div_poly(const Poly& f) {
  if (!f.is_monic()) throw DomainError("adjoint division polynomial needs a monic f");
  const GaloisField& F = f.field();
  if (f.degree() == 0) return TwistedPoly(F, {Poly::constant(F, 1)});
  const Raw eps = f.coeff(0);
  const Poly g = (f - Poly::constant(F, eps)) / Poly::variable(F);
  const TwistedPoly h = adj_div_poly(g);
  std::vector<Poly> v(static_cast<std::size_t>(f.degree()) + 1, Poly(F));
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    const Poly hi = h.coeffs()[i].frobenius(1);
    v[i] = v[i] + hi;
    v[i + 1] = v[i + 1] + hi * Poly::monomial(F, 1, static_cast<std::size_t>(q_power(F.q(), static_cast<unsigned>(i))));
  }
  v[static_cast<std::size_t>(f.degree())] = v[static_cast<std::size_t>(f.degree())] + Poly::constant(F, eps);
  return TwistedPoly(F, std::move(v));
}

TwistedPoly adj_div_poly_closed(const Poly& f) {
  if (!f.is_monic()) throw DomainError("adjoint division polynomial needs a monic f");
  const GaloisField& F = f.field();
  const TwistedPoly c = div_poly(f);
  const int n = f.degree();
  std::vector<Poly> v(static_cast<std::size_t>(n) + 1, Poly(F));
  v[0] = Poly::constant(F, 1);
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(n - i)] = c.coeff(static_cast<std::size_t>(i)).frobenius(static_cast<unsigned>(n - i - 1));
  return TwistedPoly(F, std::move(v));
}

std::uint64_t unit_count(const Poly& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : factor_monic(f)) {
    const auto d = static_cast<unsigned>(p.degree());
    r *= static_cast<std::uint64_t>(q_power(f.field().q(), d * e) - q_power(f.field().q(), d * (e - 1)));
  }
  return r;
}

namespace {

BiPoly cyclotomic_memo(const Poly& f, std::map<Poly, BiPoly>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const GaloisField& F = f.field();
  BiPoly result(F);
  if (f.degree() == 0) {
    result = BiPoly::z_power(F, 1, Poly::constant(F, 1));
  } else {
    result = div_poly(f).expand();
    for (const Poly& d : monic_divisors(f)) {
      if (d == f) continue;
      auto [quo, rem] = BiPoly::divmod(result, cyclotomic_memo(d, memo));
      if (!rem.is_zero()) throw std::logic_error("cyclotomic factor does not divide C_f");
      result = quo;
    }
    if (static_cast<std::uint64_t>(result.z_degree()) != unit_count(f))
      throw std::logic_error("cyclotomic factor has the wrong z-degree");
  }
  memo.emplace(f, result);
  return result;
}

}  // namespace

BiPoly cyclotomic(const Poly& f) {
  if (!f.is_monic()) throw DomainError("cyclotomic factor needs a monic f");
  std::map<Poly, BiPoly> memo;
  return cyclotomic_memo(f, memo);
}

LaurentNum e_torsion(const RationalK& x, long prec) {
  const GaloisField& f = x.field();
  const RationalK y = x.frac();
  if (y.is_zero()) return LaurentNum::zero(f, prec);
  const long q = static_cast<long>(f.q());
  const LaurentNum z = period(f, prec + q) * LaurentNum::from_rational(y, prec + q);
  return carlitz_exp(z, prec);
}

LaurentNum e_star(const RationalK& x, long prec) {
  const GaloisField& f = x.field();
  const RationalK y = x.frac();
  LaurentNum sum = LaurentNum::zero(f, prec);
  if (y.is_zero()) return sum;
  for (unsigned n = 0; n < 40 && (n == 0 || q_power(f.q(), n) < prec); ++n) {
    const Raw c = y.coeff_neg(n + 1);
    if (c) sum += omega_minus1_coeff(f, n, prec).scaled(c);
  }
  return sum;
}

std::optional<unsigned> alpha_digits(std::uint64_t n, unsigned q) {
  unsigned s = 0;
  for (; n; n /= q) {
    const auto d = n % q;
    if (d > 1) return std::nullopt;
    s += static_cast<unsigned>(d);
  }
  return s;
}

LaurentNum e_star_via_digits(const RationalK& x, long prec) {
  const GaloisField& f = x.field();
  const long step = static_cast<long>(f.q() - 1);
  const long inner = prec - 1;
  if (inner <= 0) return LaurentNum::zero(f, prec);
  std::vector<Raw> s(static_cast<std::size_t>(inner), 0);
  for (long n = 0; n * step < inner; ++n) {
    const auto a = alpha_digits(static_cast<std::uint64_t>(n), f.q());
    if (!a) continue;
    Raw c = x.coeff_neg(*a + 1);
    if (*a % 2) c = f.neg(c);
    if (n % 2) c = f.neg(c);
    s[static_cast<std::size_t>(n * step)] = c;
  }
  // e*(x) = T~^{-1} * (sum) and T~^{-1} = u.
  return LaurentNum(f, 0, inner, std::move(s)).shifted(1);
}

}  // namespace ffgamma
