#pragma once

#include <vector>

#include "ffgamma/bipoly.hpp"
#include "ffgamma/cycle.hpp"
#include "ffgamma/laurent.hpp"

namespace ffgamma {

/// Families {a_i}, {b_j} in A with Res(a_i b_j / f) = delta_ij.
struct FDual {
  std::vector<Poly> a, b;
};

/// The residue Gram matrix Res(a_i T^j / f), i, j < deg f.
std::vector<std::vector<GaloisField::Raw>> residue_gram(const Poly& f, const std::vector<Poly>& a);
/// Dual family for a_i = T^i.
FDual f_dual(const Poly& f);
/// Dual family for a given basis {a_i} of A/f.  DomainError if the a_i are
/// not a basis.
FDual f_dual_for(const Poly& f, const std::vector<Poly>& a);

/// Element of L = F_q[t, z]/(C_f*) with coefficients in F_q((u)), stored as
/// sum_{j < ell} c_j(t) z^j where each c_j is a list of t-coefficients.
class ColemanFn {
 public:
  using TPoly = std::vector<LaurentNum>;

  static ColemanFn one(const Poly& f, long prec);
  /// sum_i c_i * B_i for bivariate B_i over F_q[t], reduced.
  static ColemanFn combine(const Poly& f, const std::vector<LaurentNum>& c, const std::vector<BiPoly>& b,
                           long prec);

  const Poly& level() const noexcept { return f_; }
  const BiPoly& modulus() const noexcept { return cstar_; }
  std::size_t ell() const noexcept { return ell_; }
  long prec() const noexcept { return prec_; }
  const std::vector<TPoly>& coeffs() const noexcept { return c_; }
  /// Coefficient of t^k z^j (zero if absent).
  LaurentNum coeff(std::size_t j, std::size_t k) const;

  ColemanFn operator+(const ColemanFn& o) const;
  ColemanFn operator-(const ColemanFn& o) const;
  ColemanFn operator*(const ColemanFn& o) const;
  ColemanFn times_z() const;
  ColemanFn pow(unsigned n) const;
  /// Twist of the coefficients (the F_q[t, z] part is Frobenius-fixed).
  ColemanFn twist(int n, long cap) const;

  /// Value at (t0, z0).
  LaurentNum eval(const LaurentNum& t0, const LaurentNum& z0) const;
  /// Value at (T^m, z0); multiplying by T^m is an exact shift.
  LaurentNum eval_at_t_power(long long m, const LaurentNum& z0) const;
  /// Smallest coefficient residual against o.
  long residual(const ColemanFn& o) const;
  /// Smallest valuation among the coefficients of this - 1.
  long perturbation_valuation() const;

 private:
  ColemanFn(const Poly& f, BiPoly cstar, long prec);
  void reduce(std::vector<TPoly>& raw) const;

  Poly f_;
  BiPoly cstar_;
  std::size_t ell_;
  long prec_;
  std::vector<TPoly> c_;
};

/// g_x = 1 - sum_i e*(a_i/f) C_{a0 b_i}(t, z) mod C_f*, x = a0/f not in A.
ColemanFn coleman_g(const RationalK& x, const Poly& f, long prec);
ColemanFn coleman_g(const RationalK& x, const Poly& f, const FDual& fam, long prec);
/// g_a = prod_x g_x^{m_x} for effective a of positive weight.
ColemanFn coleman_g_cycle(const CycleElement& a, long prec);

/// Valuation of g_x at (T^{q^N}, e(a/f)^{q^N}); requires <a x>_N = 1.
long verify_zero(const RationalK& x, const Poly& f, const Poly& a, unsigned N, long prec);
/// Valuation of g_x^{(N+1)}(T, e(a/f)) - (1 + Psi_N(frac(a x))).
long verify_interp(const RationalK& x, const Poly& f, const Poly& a, unsigned N, long prec);
/// Valuation of sum_i e*(a_i/f)^{q^{N+1}} e(b_i a/f) + Psi_N(a/f).
long interp_sum_i(const Poly& f, const Poly& a, unsigned N, long prec);
/// Valuation of sum_i e*(a_i/f) e(b_i a/f)^{q^{deg f - deg a - 1}} - 1, a monic.
long interp_sum_ii(const Poly& f, const Poly& a, long prec);

struct ProductResult {
  LaurentNum value;
  unsigned factors_used = 0;
};
/// prod_{N >= 1} g_a^{(N)}(T, e(u/f)), which equals Pi(u * a)^{-1}.
ProductResult pi_from_product(const CycleElement& a, const Poly& u, long prec, unsigned max_n = 12);

}  // namespace ffgamma
