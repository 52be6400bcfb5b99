#pragma once

#include <optional>
#include <vector>

#include "ffgamma/bipoly.hpp"
#include "ffgamma/cycle.hpp"
#include "ffgamma/tseries.hpp"

namespace ffgamma {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Largest ell = #(A/f)^x handled by the matrix layer.
constexpr std::size_t kMaxEll = 8;

/// Multiplication by z on L = F_q[t, z]/(C_f*) in the basis 1, z, ...,
/// z^{ell-1}: z z^r = sum_j Z_rj z^j.
PolyMatrix mult_matrix_Z(const Poly& f);
/// det(z - Z(t)) as a polynomial in (t, z).
BiPoly charpoly_Z(const Poly& f);
/// Smallest valuation of Z(T) v_a - e(a/f) v_a over units a, where
/// v_a = (1, e(a/f), ..., e(a/f)^{ell-1}).
long z_eigen_residual(const Poly& f, long prec);

/// Rows of g_a z^r mod C_f* for r < ell.  DomainError when a is not
/// effective of positive weight, when ell exceeds kMaxEll, or when a
/// coefficient of Phi - 1 fails |c| < 1.
TMatrix phi_matrix(const CycleElement& a, int trunc_t, long prec);
/// Phi^{(N)}, coefficients known mod u^prec.
TMatrix phi_twist(const CycleElement& a, int N, int trunc_t, long prec);
/// Psi = Phi^{(1)} Phi^{(2)} ..., converged to u^prec.
ConvergentProduct psi_matrix(const CycleElement& a, int trunc_t, long prec);

LMatrix lm_mul(const LMatrix& a, const LMatrix& b);
/// Gauss-Jordan with valuation pivoting.  DomainError if singular to
/// precision.
LMatrix lm_inverse(const LMatrix& a);
LaurentNum lm_det(const LMatrix& a);
/// Determinant of a square TMatrix, truncated at its trunc_t.
TSeries tm_det(const TMatrix& a);

struct SpecializeReport {
  std::vector<Poly> units;
  /// Diagonal of (W^T)^{-1} Psi(T) W^T, W the torsion Vandermonde.
  std::vector<LaurentNum> diag;
  /// Residual of diag[i] against Pi(units[i] * a)^{-1}.
  std::vector<long> pi_residual;
  /// Residual of diag[i] against the Coleman product at units[i].
  std::vector<long> coleman_residual;
  /// Smallest off-diagonal valuation.
  long offdiag = 0;
};
SpecializeReport specialize_check(const CycleElement& a, int trunc_t, long prec);

struct DetShape {
  bool ok = false;
  int s = 0;
  /// The constant c in det = c (t - T)^s, when the shape fits.
  std::optional<LaurentNum> c;
};
/// Repeated synthetic division of a polynomial in t by (t - T); remainders
/// and higher coefficients count as zero from valuation tol on.
DetShape det_shape(const TSeries& d, long tol);

struct RelationReport {
  long fe_residual = 0;
  DetShape shape;
  long p_at_t_residual = 0;
  long p_psi_valuation = 0;
  long rho_psi_valuation = 0;
  bool accepted = false;
};
/// Given psi^{(-1)} = Phi psi and det Phi = c (t - T)^s (both checked,
/// DomainError otherwise), tests P(T) = rho and P psi = 0.
RelationReport verify_relation(const TMatrix& phi, const TMatrix& psi, const std::vector<TSeries>& p,
                               const std::vector<LaurentNum>& rho, long tol);

}  // namespace ffgamma
