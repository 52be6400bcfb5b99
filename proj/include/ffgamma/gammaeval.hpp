#pragma once

#include <string>
#include <vector>

#include "ffgamma/cycle.hpp"
#include "ffgamma/laurent.hpp"
#include "ffgamma/rational.hpp"

namespace ffgamma {

/// x^q for x in k (coefficients in F_q are Frobenius-fixed).
RationalK rational_frobenius(const RationalK& x);

/// F_q-linear polynomial sum_i c_i z^{q^i} with coefficients in k.
class LinPoly {
 public:
  explicit LinPoly(const GaloisField& f) : f_(&f) {}
  LinPoly(const GaloisField& f, std::vector<RationalK> coeffs);

  const GaloisField& field() const noexcept { return *f_; }
  /// Largest i with c_i != 0, or -1.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  RationalK coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RationalK(*f_); }
  const std::vector<RationalK>& coeffs() const noexcept { return c_; }

  LinPoly operator+(const LinPoly& o) const;
  LinPoly operator-(const LinPoly& o) const;
  LinPoly scaled(const RationalK& c) const;
  /// The q-th power sum_i c_i^q z^{q^{i+1}}.
  LinPoly frobenius() const;
  RationalK eval(const RationalK& z) const;

  bool operator==(const LinPoly& o) const noexcept { return f_ == o.f_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  void trim();

  const GaloisField* f_;
  std::vector<RationalK> c_;
};

/// Psi_N from the recursion Psi_N = (Psi_{N-1}^q - Psi_{N-1}) / (T^{q^N} - T).
LinPoly psi_poly(const GaloisField& f, unsigned N);

/// det_{i,j} x_j^{q^{n-1-i}}, by cofactor expansion.  `frob` raises to the
/// q-th power; R needs +, -, *.
template <class R, class Frob>
R moore_det(const std::vector<R>& xs, Frob frob) {
  const std::size_t n = xs.size();
  std::vector<std::vector<R>> rows(n);
  rows[n - 1] = xs;
  for (std::size_t i = n - 1; i-- > 0;) {
    for (const R& x : rows[i + 1]) rows[i].push_back(frob(x));
  }
  // Expansion along the first row over a shrinking column set.
  struct Rec {
    const std::vector<std::vector<R>>& m;
    R go(std::size_t row, std::vector<std::size_t>& cols) const {
      if (cols.size() == 1) return m[row][cols[0]];
      R acc = m[row][cols[0]] - m[row][cols[0]];
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        const R minor = go(row + 1, cols);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        acc = (k % 2 == 0) ? acc + m[row][c] * minor : acc - m[row][c] * minor;
      }
      return acc;
    }
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return Rec{rows}.go(0, cols);
}

/// True for x in -A_+, the poles of Pi.
bool is_pi_pole(const RationalK& x);

/// Psi_0(x), ..., Psi_upto(x) to absolute precision prec, via the value
/// form of the fundamental recursion.
std::vector<LaurentNum> psi_values(const RationalK& x, unsigned upto, long prec);
LaurentNum psi_value(const RationalK& x, unsigned N, long prec);

/// Pi(x) = prod_N (1 + Psi_N(x))^{-1}.  DomainError on x in -A_+.
LaurentNum pi_value(const RationalK& x, long prec);
/// Gamma(x) = Pi(x)/x.  DomainError on poles and at 0.
LaurentNum gamma_value(const RationalK& x, long prec);
/// prod_{a monic, deg a <= max_deg} (1 + x/a)^{-1}, straight from the definition.
LaurentNum pi_direct_partial(const RationalK& x, unsigned max_deg, long prec);
/// prod_x Pi(x)^{m_x} over the support of the cycle.
LaurentNum pi_monomial(const CycleElement& a, long prec);
/// prod_{i>=1} (1 - T^{1-q^i})^{-1}.
LaurentNum reflection_product(const GaloisField& f, long prec);

/// Residual valuations of the standard functional equations, computed at
/// a working precision adapted so that the difference is known to prec.
long verify_translation(const RationalK& x, const Poly& a0, long prec);
long verify_reflection(const RationalK& x, long prec);
long verify_gauss(const RationalK& x, const Poly& f, long prec);

}  // namespace ffgamma
