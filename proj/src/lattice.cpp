#include "ffgamma/lattice.hpp"

#include <algorithm>
#include <utility>

#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

bool is_zero_vec(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// row_a -= k * row_b
void axpy(IntVector& a, const mpz_class& k, const IntVector& b) {
  if (k == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= k * b[i];
}

// Echelon form on the first `ncols` columns by gcd elimination.  Returns
// the number of pivot rows; they come first, in column order.  Rows may be
// wider than ncols (extra columns ride along).
std::size_t echelon(IntMatrix& m, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        axpy(m[i], k, m[r]);
        if (m[i][c] != 0) clean = false;
      }
      if (clean) {
        if (pivots) pivots->push_back(c);
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

IntVector to_int_vector(const std::vector<long>& v) {
  IntVector r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

IntMatrix hnf(const IntMatrix& rows, std::size_t ncols) {
  IntMatrix m;
  for (const IntVector& v : rows) {
    if (v.size() != ncols) throw DomainError("row length mismatch in hnf");
    if (!is_zero_vec(v)) m.push_back(v);
  }
  std::vector<std::size_t> piv;
  const std::size_t r = echelon(m, ncols, &piv);
  m.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = piv[i];
    if (m[i][c] < 0) {
      for (auto& x : m[i]) x = -x;
    }
    for (std::size_t j = 0; j < i; ++j) {
      mpz_class k;
      mpz_fdiv_q(k.get_mpz_t(), m[j][c].get_mpz_t(), m[i][c].get_mpz_t());
      axpy(m[j], k, m[i]);
    }
  }
  return m;
}

std::vector<mpz_class> snf(const IntMatrix& input, std::size_t ncols) {
  IntMatrix a = input;
  const std::size_t nr = a.size(), nc = ncols;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j)
          if (a[i][j] != 0 && (bi == nr || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == nr) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        axpy(a[i], k, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (k != 0)
          for (std::size_t i = 0; i < nr; ++i) a[i][j] -= k * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      for (std::size_t j = 0; j < nc; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

IntMatrix right_kernel(const IntMatrix& m, std::size_t ncols) {
  const std::size_t mr = m.size();
  IntMatrix aug(ncols, IntVector(mr + ncols));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < mr; ++i) aug[j][i] = m[i].at(j);
    aug[j][mr + j] = 1;
  }
  const std::size_t r = echelon(aug, mr);
  IntMatrix ker;
  for (std::size_t j = r; j < ncols; ++j) ker.emplace_back(aug[j].begin() + static_cast<long>(mr), aug[j].end());
  return hnf(ker, ncols);
}

IntLattice::IntLattice(const IntMatrix& generators, std::size_t n) : n_(n), basis_(hnf(generators, n)) {}

std::optional<IntVector> IntLattice::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw DomainError("vector length mismatch in lattice membership");
  IntVector rem = v, coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t c = 0;
    while (basis_[i][c] == 0) ++c;
    for (std::size_t k = 0; k < c; ++k)
      if (rem[k] != 0) return std::nullopt;
    if (rem[c] % basis_[i][c] != 0) return std::nullopt;
    coords[i] = rem[c] / basis_[i][c];
    axpy(rem, coords[i], basis_[i]);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

bool IntLattice::member(const IntVector& v) const { return coordinates(v).has_value(); }

IntLattice IntLattice::saturate() const {
  IntLattice r(n_);
  r.basis_ = right_kernel(right_kernel(basis_, n_), n_);
  return r;
}

IntLattice IntLattice::intersect_kernel(const IntVector& w) const {
  // v = B^T c with w.v = 0: kernel of the form c -> w.(B^T c).
  IntVector wb(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t k = 0; k < n_; ++k) wb[i] += w[k] * basis_[i][k];
  const IntMatrix cs = right_kernel(IntMatrix{wb}, basis_.size());
  IntMatrix gens;
  for (const IntVector& c : cs) {
    IntVector v(n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t k = 0; k < n_; ++k) v[k] += c[i] * basis_[i][k];
    gens.push_back(std::move(v));
  }
  return IntLattice(gens, n_);
}

bool IntLattice::contains(const IntLattice& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const IntVector& v) { return member(v); });
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

}  // namespace ffgamma
