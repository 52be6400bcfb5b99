#include "ffgamma/coleman.hpp"

#include <map>
#include <mutex>
#include <optional>

#include "ffgamma/brackets.hpp"
#include "ffgamma/carlitz.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/gammaeval.hpp"

namespace ffgamma {
namespace {

using Raw = GaloisField::Raw;
using TPoly = ColemanFn::TPoly;
using Matrix = std::vector<std::vector<Raw>>;

const BiPoly& cyclotomic_cached(const Poly& f) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::vector<Raw>>, BiPoly> cache;
  const auto key = std::make_pair(f.field().q(), f.coeffs());
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, cyclotomic(f)).first;
  return it->second;
}

std::optional<Matrix> invert(const GaloisField& F, Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Raw>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Raw s = F.inv(m[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = F.mul(m[c][j], s);
      inv[c][j] = F.mul(inv[c][j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Raw k = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = F.sub(m[i][j], F.mul(k, m[c][j]));
        inv[i][j] = F.sub(inv[i][j], F.mul(k, inv[c][j]));
      }
    }
  }
  return inv;
}

void add_into(TPoly& acc, std::size_t k, const LaurentNum& v, long prec) {
  while (acc.size() <= k) acc.push_back(LaurentNum::zero(v.field(), prec));
  acc[k] += v;
}

void trim(TPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void require_unit(const Poly& a, const Poly& f) {
  if (Poly::gcd(a % f, f).degree() != 0) throw DomainError(a.to_string() + " is not a unit mod " + f.to_string());
}

// a0 with x = a0/f mod A.
Poly numerator_at(const RationalK& x, const Poly& f) {
  const RationalK y = x.frac() * RationalK(f);
  if (!y.is_poly()) throw DomainError(x.to_string() + " is not in f^{-1}A for f = " + f.to_string());
  if (x.frac().is_zero()) throw DomainError(x.to_string() + " lies in A");
  return y.num();
}

long twist_down(long wp, unsigned q, unsigned n) {
  const long long s = q_power(q, n);
  return static_cast<long>((wp + s - 1) / s) + 8;
}

}  // namespace

Matrix residue_gram(const Poly& f, const std::vector<Poly>& a) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  Matrix g(a.size(), std::vector<Raw>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = RationalK(a[i].shifted(j), f).residue();
  return g;
}

FDual f_dual_for(const Poly& f, const std::vector<Poly>& a) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("f-dual families need f monic of positive degree");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (a.size() != n) throw DomainError("family size differs from deg f");
  const GaloisField& F = f.field();
  const auto inv = invert(F, residue_gram(f, a));
  if (!inv) throw DomainError("family is not a basis of A/f");
  FDual d{a, {}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Raw> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = (*inv)[k][j];
    d.b.emplace_back(F, c);
  }
  return d;
}

FDual f_dual(const Poly& f) {
  std::vector<Poly> a;
  for (int i = 0; i < f.degree(); ++i) a.push_back(Poly::monomial(f.field(), 1, static_cast<std::size_t>(i)));
  return f_dual_for(f, a);
}

ColemanFn::ColemanFn(const Poly& f, BiPoly cstar, long prec)
    : f_(f), cstar_(std::move(cstar)), ell_(static_cast<std::size_t>(cstar_.z_degree())), prec_(prec), c_(ell_) {}

ColemanFn ColemanFn::one(const Poly& f, long prec) {
  ColemanFn r(f, cyclotomic_cached(f), prec);
  r.c_[0].push_back(LaurentNum::one(f.field(), prec));
  return r;
}

ColemanFn ColemanFn::combine(const Poly& f, const std::vector<LaurentNum>& c, const std::vector<BiPoly>& b,
                             long prec) {
  ColemanFn r(f, cyclotomic_cached(f), prec);
  std::vector<TPoly> raw(r.ell_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (b[i].z_degree() >= 0 && raw.size() <= static_cast<std::size_t>(b[i].z_degree()))
      raw.resize(static_cast<std::size_t>(b[i].z_degree()) + 1);
    for (int j = 0; j <= b[i].z_degree(); ++j) {
      const Poly& p = b[i].coeffs()[static_cast<std::size_t>(j)];
      for (int k = 0; k <= p.degree(); ++k) {
        const Raw s = p.coeff(static_cast<std::size_t>(k));
        if (s) add_into(raw[static_cast<std::size_t>(j)], static_cast<std::size_t>(k), c[i].scaled(s), prec);
      }
    }
  }
  r.reduce(raw);
  r.c_ = std::move(raw);
  return r;
}

void ColemanFn::reduce(std::vector<TPoly>& raw) const {
  for (std::size_t j = raw.size(); j-- > ell_;) {
    const TPoly h = raw[j];
    for (std::size_t i = 0; i < ell_; ++i) {
      const Poly& p = cstar_.coeffs()[i];
      for (std::size_t s = 0; s < h.size(); ++s) {
        if (h[s].is_zero()) continue;
        for (int k = 0; k <= p.degree(); ++k) {
          const Raw cf = p.coeff(static_cast<std::size_t>(k));
          if (cf) add_into(raw[j - ell_ + i], s + static_cast<std::size_t>(k), -h[s].scaled(cf), prec_);
        }
      }
    }
  }
  raw.resize(ell_);
  for (auto& p : raw) trim(p);
}

LaurentNum ColemanFn::coeff(std::size_t j, std::size_t k) const {
  if (j < c_.size() && k < c_[j].size()) return c_[j][k];
  return LaurentNum::zero(f_.field(), prec_);
}

ColemanFn ColemanFn::operator+(const ColemanFn& o) const {
  ColemanFn r(f_, cstar_, std::min(prec_, o.prec_));
  for (std::size_t j = 0; j < ell_; ++j) {
    r.c_[j] = c_[j];
    for (std::size_t k = 0; k < o.c_[j].size(); ++k) add_into(r.c_[j], k, o.c_[j][k], r.prec_);
    trim(r.c_[j]);
  }
  return r;
}

ColemanFn ColemanFn::operator-(const ColemanFn& o) const {
  ColemanFn r(f_, cstar_, std::min(prec_, o.prec_));
  for (std::size_t j = 0; j < ell_; ++j) {
    r.c_[j] = c_[j];
    for (std::size_t k = 0; k < o.c_[j].size(); ++k) add_into(r.c_[j], k, -o.c_[j][k], r.prec_);
    trim(r.c_[j]);
  }
  return r;
}

ColemanFn ColemanFn::operator*(const ColemanFn& o) const {
  if (f_ != o.f_) throw DomainError("Coleman functions at different levels");
  ColemanFn r(f_, cstar_, std::min(prec_, o.prec_));
  std::vector<TPoly> raw(2 * ell_);
  for (std::size_t j1 = 0; j1 < ell_; ++j1)
    for (std::size_t k1 = 0; k1 < c_[j1].size(); ++k1)
      for (std::size_t j2 = 0; j2 < ell_; ++j2)
        for (std::size_t k2 = 0; k2 < o.c_[j2].size(); ++k2)
          add_into(raw[j1 + j2], k1 + k2, c_[j1][k1] * o.c_[j2][k2], r.prec_);
  r.reduce(raw);
  r.c_ = std::move(raw);
  return r;
}

ColemanFn ColemanFn::times_z() const {
  ColemanFn r(f_, cstar_, prec_);
  std::vector<TPoly> raw(ell_ + 1);
  for (std::size_t j = 0; j < ell_; ++j) raw[j + 1] = c_[j];
  r.reduce(raw);
  r.c_ = std::move(raw);
  return r;
}

ColemanFn ColemanFn::pow(unsigned n) const {
  ColemanFn r = one(f_, prec_), b = *this;
  for (; n; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

ColemanFn ColemanFn::twist(int n, long cap) const {
  const long long s = q_power(f_.field().q(), static_cast<unsigned>(n < 0 ? -n : n));
  long p = n >= 0 ? (prec_ > cap / s ? cap : static_cast<long>(prec_ * s)) : static_cast<long>((prec_ + s - 1) / s);
  p = std::min(p, cap);
  ColemanFn r(f_, cstar_, p);
  for (std::size_t j = 0; j < ell_; ++j) {
    for (const LaurentNum& v : c_[j]) r.c_[j].push_back(v.twist(n, cap));
    trim(r.c_[j]);
  }
  return r;
}

LaurentNum ColemanFn::eval(const LaurentNum& t0, const LaurentNum& z0) const {
  const GaloisField& F = f_.field();
  LaurentNum acc = LaurentNum::zero(F, kExactPrec);
  for (std::size_t j = ell_; j-- > 0;) {
    LaurentNum v = LaurentNum::zero(F, kExactPrec);
    for (std::size_t k = c_[j].size(); k-- > 0;) v = v * t0 + c_[j][k];
    if (c_[j].empty()) v = LaurentNum::zero(F, prec_);
    acc = acc * z0 + v;
  }
  return acc;
}

LaurentNum ColemanFn::eval_at_t_power(long long m, const LaurentNum& z0) const {
  const GaloisField& F = f_.field();
  const long shift = -static_cast<long>(m) * static_cast<long>(F.q() - 1);
  const bool flip = m % 2 != 0;
  LaurentNum acc = LaurentNum::zero(F, kExactPrec);
  for (std::size_t j = ell_; j-- > 0;) {
    LaurentNum v = LaurentNum::zero(F, c_[j].empty() ? prec_ : kExactPrec);
    for (std::size_t k = c_[j].size(); k-- > 0;) {
      v = v.shifted(shift);
      if (flip) v = -v;
      v += c_[j][k];
    }
    acc = acc * z0 + v;
  }
  return acc;
}

long ColemanFn::residual(const ColemanFn& o) const {
  long r = std::min(prec_, o.prec_);
  const ColemanFn d = *this - o;
  for (const auto& p : d.c_)
    for (const auto& v : p) r = std::min(r, v.valuation());
  return r;
}

long ColemanFn::perturbation_valuation() const { return residual(one(f_, prec_)); }

ColemanFn coleman_g(const RationalK& x, const Poly& f, const FDual& fam, long prec) {
  const Poly a0 = numerator_at(x, f);
  std::vector<LaurentNum> c;
  std::vector<BiPoly> b;
  const BiPoly& cs = cyclotomic_cached(f);
  for (std::size_t i = 0; i < fam.a.size(); ++i) {
    c.push_back(-e_star(RationalK(fam.a[i], f), prec));
    b.push_back(div_poly((a0 * fam.b[i]) % f).expand() % cs);
  }
  return ColemanFn::one(f, prec) + ColemanFn::combine(f, c, b, prec);
}

ColemanFn coleman_g(const RationalK& x, const Poly& f, long prec) { return coleman_g(x, f, f_dual(f), prec); }

ColemanFn coleman_g_cycle(const CycleElement& a, long prec) {
  if (!a.is_effective()) throw DomainError("Coleman function of a non-effective cycle");
  if (a.scaled_weight() <= 0) throw DomainError("Coleman function of a weight-zero cycle");
  const Poly& f = a.level();
  ColemanFn g = ColemanFn::one(f, prec);
  for (const auto& [idx, m] : a.terms()) {
    if (idx == 0) continue;  // [0] has weight zero and no Coleman function
    g = g * coleman_g(residue_of(f, idx), f, prec).pow(static_cast<unsigned>(m));
  }
  return g;
}

long verify_zero(const RationalK& x, const Poly& f, const Poly& a, unsigned N, long prec) {
  require_unit(a, f);
  if (bracket_N(RationalK(a) * x, N) != 1)
    throw DomainError("no zero predicted at this point: the bracket of a x at N is not 1");
  const GaloisField& F = f.field();
  const long long m = q_power(F.q(), N);
  const long loss = static_cast<long>((F.q() - 1) * q_power(F.q(), N));
  const LaurentNum v = at_precision(prec, 2 * prec + 4 * loss, [&](long wp) {
    const ColemanFn g = coleman_g(x, f, wp);
    const LaurentNum z0 = e_torsion(RationalK(a, f), wp).twist(static_cast<int>(N), wp);
    return g.eval_at_t_power(m, z0);
  });
  return v.valuation();
}

long verify_interp(const RationalK& x, const Poly& f, const Poly& a, unsigned N, long prec) {
  require_unit(a, f);
  const GaloisField& F = f.field();
  const RationalK y = (RationalK(a) * x).frac();
  const LaurentNum v = at_precision(prec, prec + 64, [&](long wp) {
    const ColemanFn g = coleman_g(x, f, twist_down(wp, F.q(), N + 1)).twist(static_cast<int>(N + 1), wp);
    const LaurentNum lhs = g.eval_at_t_power(1, e_torsion(RationalK(a, f), wp));
    return lhs - (LaurentNum::one(F, wp) + psi_value(y, N, wp));
  });
  return v.valuation();
}

long interp_sum_i(const Poly& f, const Poly& a, unsigned N, long prec) {
  require_unit(a, f);
  const GaloisField& F = f.field();
  const FDual fam = f_dual(f);
  const Poly ar = a % f;
  const LaurentNum v = at_precision(prec, prec + 64, [&](long wp) {
    LaurentNum s = psi_value(RationalK(ar, f), N, wp);
    for (std::size_t i = 0; i < fam.a.size(); ++i) {
      const LaurentNum es = e_star(RationalK(fam.a[i], f), twist_down(wp, F.q(), N + 1)).twist(static_cast<int>(N + 1), wp);
      s += es * e_torsion(RationalK(fam.b[i] * ar, f), wp);
    }
    return s;
  });
  return v.valuation();
}

long interp_sum_ii(const Poly& f, const Poly& a, long prec) {
  if (!a.is_monic() || a.degree() >= f.degree())
    throw DomainError("second interpolation identity needs a monic of degree below deg f");
  const GaloisField& F = f.field();
  const FDual fam = f_dual(f);
  const int d = f.degree() - a.degree() - 1;
  const LaurentNum v = at_precision(prec, prec + 64, [&](long wp) {
    LaurentNum s = -LaurentNum::one(F, wp);
    for (std::size_t i = 0; i < fam.a.size(); ++i) {
      const LaurentNum e = e_torsion(RationalK(fam.b[i] * a, f), twist_down(wp, F.q(), static_cast<unsigned>(d)) + wp / 4);
      s += e_star(RationalK(fam.a[i], f), wp) * e.twist(d, wp);
    }
    return s;
  });
  return v.valuation();
}

ProductResult pi_from_product(const CycleElement& a, const Poly& u, long prec, unsigned max_n) {
  const Poly& f = a.level();
  require_unit(u, f);
  if (!a.is_effective() || a.scaled_weight() <= 0)
    throw DomainError("Coleman product needs an effective cycle of positive weight");
  const GaloisField& F = f.field();
  unsigned used = 0;
  const LaurentNum v = at_precision(prec, prec + 64, [&](long wp) {
    const ColemanFn g = coleman_g_cycle(a, twist_down(wp, F.q(), 1));
    const LaurentNum z0 = e_torsion(RationalK(u, f), wp);
    LaurentNum prod = LaurentNum::one(F, wp);
    for (unsigned N = 1; N <= max_n; ++N) {
      const LaurentNum factor = g.twist(static_cast<int>(N), wp).eval_at_t_power(1, z0);
      prod *= factor;
      const LaurentNum dev = factor - LaurentNum::one(F, wp);
      if (dev.is_zero() && dev.prec() >= prec) {
        used = N;
        return prod;
      }
    }
    throw PrecisionError("Coleman product did not stabilize within " + std::to_string(max_n) + " factors");
  });
  return {v, used};
}

}  // namespace ffgamma
