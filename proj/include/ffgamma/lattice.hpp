#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ffgamma {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

IntVector to_int_vector(const std::vector<long>& v);

/// Row Hermite normal form of the lattice spanned by the rows: nonzero
/// rows only, positive pivots in strictly increasing columns, entries
/// above each pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& rows, std::size_t ncols);
/// Nonzero Smith invariants d_1 | d_2 | ... (all positive).
std::vector<mpz_class> snf(const IntMatrix& m, std::size_t ncols);
/// Z-basis (in Hermite form) of {v in Z^ncols : m v = 0}.
IntMatrix right_kernel(const IntMatrix& m, std::size_t ncols);

/// Subgroup of Z^n, kept as a Hermite basis.
class IntLattice {
 public:
  explicit IntLattice(std::size_t n) : n_(n) {}
  IntLattice(const IntMatrix& generators, std::size_t n);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  bool member(const IntVector& v) const;
  /// Coordinates of v in basis(), if v is a member.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  /// Q-span intersected with Z^n.
  IntLattice saturate() const;
  /// Intersection with the kernel of the linear form w.
  IntLattice intersect_kernel(const IntVector& w) const;
  bool contains(const IntLattice& o) const;

  bool operator==(const IntLattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  std::size_t n_;
  IntMatrix basis_;
};

std::string to_string(const IntVector& v);

}  // namespace ffgamma
