#include "ffgamma/motive.hpp"

#include <bit>

#include "ffgamma/carlitz.hpp"
#include "ffgamma/coleman.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/gammaeval.hpp"

namespace ffgamma {
namespace {

// Laplace expansion along the last row, memoized over column subsets.
template <class R>
R det_subsets(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  std::vector<R> d(std::size_t{1} << n, zero);
  d[0] = one;
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    R acc = zero;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      const R term = m[k - 1][c] * d[mask & ~(std::size_t{1} << c)];
      const int above = std::popcount(mask >> (c + 1));
      acc = above % 2 ? acc - term : acc + term;
    }
    d[mask] = acc;
  }
  return d.back();
}

long min_prec(const LMatrix& m) {
  long p = kExactPrec;
  for (const auto& row : m)
    for (const auto& x : row) p = std::min(p, x.prec());
  return p;
}

TSeries series_of(const GaloisField& F, const std::vector<LaurentNum>& c, int trunc_t, long prec) {
  if (c.empty()) return TSeries(F, trunc_t, prec);
  if (static_cast<int>(c.size()) > trunc_t + 1)
    throw DomainError("entry has t-degree " + std::to_string(c.size() - 1) + " beyond trunc_t " +
                      std::to_string(trunc_t));
  std::vector<LaurentNum> v;
  for (const LaurentNum& x : c) v.push_back(x.truncated(prec));
  return TSeries(v, trunc_t, prec);
}

}  // namespace

PolyMatrix mult_matrix_Z(const Poly& f) {
  const BiPoly cs = cyclotomic(f);
  const GaloisField& F = f.field();
  const std::size_t ell = static_cast<std::size_t>(cs.z_degree());
  PolyMatrix z(ell, std::vector<Poly>(ell, Poly(F)));
  for (std::size_t r = 0; r + 1 < ell; ++r) z[r][r + 1] = Poly::constant(F, 1);
  // z^ell = -sum_j C*_j z^j.
  for (std::size_t j = 0; j < ell; ++j) z[ell - 1][j] = -cs.coeff(j);
  return z;
}

BiPoly charpoly_Z(const Poly& f) {
  const GaloisField& F = f.field();
  const PolyMatrix z = mult_matrix_Z(f);
  const std::size_t n = z.size();
  std::vector<std::vector<BiPoly>> m(n, std::vector<BiPoly>(n, BiPoly(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = BiPoly(F, {-z[i][j]});
      if (i == j) m[i][j] = m[i][j] + BiPoly::z_power(F, 1, Poly::constant(F, 1));
    }
  return det_subsets(m, BiPoly(F), BiPoly::z_power(F, 0, Poly::constant(F, 1)));
}

long z_eigen_residual(const Poly& f, long prec) {
  const GaloisField& F = f.field();
  const PolyMatrix z = mult_matrix_Z(f);
  const std::size_t n = z.size();
  const long wp = prec + 16 * static_cast<long>((F.q() - 1) * n);
  const LaurentNum T = LaurentNum::T(F, wp);
  long r = kExactPrec;
  for (const Poly& a : units_mod(f)) {
    const LaurentNum e = e_torsion(RationalK(a, f), wp);
    std::vector<LaurentNum> v{LaurentNum::one(F, wp)};
    for (std::size_t j = 1; j < n; ++j) v.push_back(v.back() * e);
    for (std::size_t i = 0; i < n; ++i) {
      LaurentNum s = -(e * v[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (!z[i][j].is_zero()) s += poly_at(z[i][j], T, wp) * v[j];
      r = std::min(r, s.truncated(prec).valuation());
    }
  }
  return r;
}

TMatrix phi_matrix(const CycleElement& a, int trunc_t, long prec) {
  const Poly& f = a.level();
  const GaloisField& F = f.field();
  ColemanFn h = coleman_g_cycle(a, prec);
  const std::size_t ell = h.ell();
  if (ell > kMaxEll) throw DomainError("ell = " + std::to_string(ell) + " exceeds the matrix cap");
  if (h.perturbation_valuation() < 1) throw DomainError("coefficient of Phi - 1 is not below 1 in absolute value");
  TMatrix m(F, ell, ell, trunc_t, prec);
  for (std::size_t r = 0; r < ell; ++r) {
    for (std::size_t j = 0; j < ell; ++j) m(r, j) = series_of(F, h.coeffs()[j], trunc_t, prec);
    h = h.times_z();
  }
  return m;
}

TMatrix phi_twist(const CycleElement& a, int N, int trunc_t, long prec) {
  if (N == 0) return phi_matrix(a, trunc_t, prec);
  const long long s = q_power(a.level().field().q(), static_cast<unsigned>(N));
  return phi_matrix(a, trunc_t, static_cast<long>((prec + s - 1) / s) + 4).twist(N, prec);
}

ConvergentProduct psi_matrix(const CycleElement& a, int trunc_t, long prec) {
  const unsigned q = a.level().field().q();
  const TMatrix phi = phi_matrix(a, trunc_t, prec / static_cast<long>(q) + 8);
  return tm_product_convergent([&](int N) { return phi.twist(N, prec); }, 1, prec);
}

LMatrix lm_mul(const LMatrix& a, const LMatrix& b) {
  const GaloisField& F = a.at(0).at(0).field();
  LMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.at(0).size(); ++j) {
      LaurentNum s = LaurentNum::zero(F, kExactPrec);
      for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
      out[i].push_back(s);
    }
  return out;
}

LMatrix lm_inverse(const LMatrix& input) {
  const std::size_t n = input.size();
  const GaloisField& F = input.at(0).at(0).field();
  LMatrix m = input, inv(n);
  // The identity is exact; twice the input precision never binds.
  const long ip = 2 * min_prec(input);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i].push_back(i == j ? LaurentNum::one(F, ip) : LaurentNum::zero(F, kExactPrec));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m[i][c].is_zero() && (p == n || m[i][c].valuation() < m[p][c].valuation())) p = i;
    if (p == n) throw DomainError("matrix is singular to precision");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const LaurentNum s = m[c][c].inv();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const LaurentNum k = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= k * m[c][j];
        inv[i][j] -= k * inv[c][j];
      }
    }
  }
  return inv;
}

LaurentNum lm_det(const LMatrix& a) {
  const GaloisField& F = a.at(0).at(0).field();
  return det_subsets(a, LaurentNum::zero(F, kExactPrec), LaurentNum::one(F, min_prec(a)));
}

TSeries tm_det(const TMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<TSeries>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(a(i, j));
  const long p = a.min_prec();
  return det_subsets(m, TSeries(a.field(), a.trunc_t(), kExactPrec), TSeries::one(a.field(), a.trunc_t(), p));
}

SpecializeReport specialize_check(const CycleElement& a, int trunc_t, long prec) {
  const Poly& f = a.level();
  const GaloisField& F = f.field();
  SpecializeReport rep;
  rep.units = units_mod(f);
  LMatrix d;
  // Evaluating t^k at T costs (q-1) k u-coefficients.
  const long loss = static_cast<long>(F.q() - 1) * (trunc_t + 1);
  for (long wp = prec + loss + 64;; wp *= 2) {
    if (wp > 64 * (prec + loss)) throw PrecisionError("specialization did not reach the target precision");
    const ConvergentProduct psi = psi_matrix(a, trunc_t, wp);
    const LMatrix psi_t = psi.value.eval(LaurentNum::T(F, wp), wp - loss);
    const std::size_t n = psi_t.size();
    // Columns of W^T are the eigenvectors (1, e, ..., e^{n-1}) of Z(T).
    LMatrix wt(n);
    std::vector<LaurentNum> es;
    for (const Poly& u : rep.units) es.push_back(e_torsion(RationalK(u, f), wp));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) wt[r].push_back(es[i].pow(r));
    d = lm_mul(lm_mul(lm_inverse(wt), psi_t), wt);
    if (min_prec(d) >= prec) break;
  }
  rep.offdiag = prec;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j) rep.offdiag = std::min(rep.offdiag, d[i][j].truncated(prec).valuation());
    rep.diag.push_back(d[i][i].truncated(prec));
    const Poly& u = rep.units[i];
    rep.pi_residual.push_back(rep.diag[i].residual(pi_monomial(star(u, a), prec + 8).inv()));
    rep.coleman_residual.push_back(rep.diag[i].residual(pi_from_product(a, u, prec).value));
  }
  return rep;
}

DetShape det_shape(const TSeries& d, long tol) {
  const GaloisField& F = d.field();
  DetShape out;
  std::vector<LaurentNum> c = d.coeffs();
  auto negligible = [&](const LaurentNum& x) { return x.valuation() >= tol; };
  while (!c.empty() && negligible(c.back())) c.pop_back();
  if (c.empty()) return out;
  const long step = static_cast<long>(F.q() - 1);
  while (c.size() > 1) {
    // c(t) = (t - T) quo(t) + c(T).
    std::vector<LaurentNum> quo(c.size() - 1, LaurentNum::zero(F, kExactPrec));
    LaurentNum acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      quo[k] = acc;
      acc = -acc.shifted(-step) + c[k];  // T = -u^{-(q-1)}
    }
    if (!negligible(acc)) return out;
    c = std::move(quo);
    ++out.s;
  }
  out.ok = !negligible(c[0]);
  if (out.ok) out.c = c[0];
  return out;
}

RelationReport verify_relation(const TMatrix& phi, const TMatrix& psi, const std::vector<TSeries>& p,
                               const std::vector<LaurentNum>& rho, long tol) {
  const std::size_t n = phi.rows();
  if (phi.cols() != n || psi.rows() != n || psi.cols() != 1 || p.size() != n || rho.size() != n)
    throw DomainError("relation shapes do not match");
  const GaloisField& F = phi.field();
  RelationReport r;
  r.fe_residual = psi.twist(-1).residual(phi * psi);
  if (r.fe_residual < tol) throw DomainError("psi^{(-1)} = Phi psi fails (residual " + std::to_string(r.fe_residual) + ")");
  r.shape = det_shape(tm_det(phi), tol);
  if (!r.shape.ok) throw DomainError("det Phi is not of the form c (t - T)^s");
  const long wp = tol + 64;
  const LaurentNum T = LaurentNum::T(F, wp);
  r.p_at_t_residual = kExactPrec;
  TSeries ppsi(F, psi.trunc_t(), kExactPrec);
  LaurentNum rp = LaurentNum::zero(F, kExactPrec);
  for (std::size_t i = 0; i < n; ++i) {
    r.p_at_t_residual = std::min(r.p_at_t_residual, ts_eval(p[i], T, tol).residual(rho[i]));
    ppsi = ppsi + p[i] * psi(i, 0);
    rp += rho[i] * ts_eval(psi(i, 0), T, tol);
  }
  r.p_at_t_residual = std::min(r.p_at_t_residual, tol);
  r.p_psi_valuation = std::min(ppsi.valuation(), tol);
  r.rho_psi_valuation = std::min(rp.truncated(tol).valuation(), tol);
  r.accepted = r.p_at_t_residual >= tol && r.p_psi_valuation >= tol;
  return r;
}

}  // namespace ffgamma
