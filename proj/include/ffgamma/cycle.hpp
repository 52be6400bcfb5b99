#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffgamma/laurent.hpp"
#include "ffgamma/rational.hpp"

namespace ffgamma {

/// Index of the residue class of x in f^{-1}A/A: the base-q index of the
/// numerator b of frac(x) = b/f.  Throws DomainError unless f x lies in A.
std::uint64_t residue_index(const Poly& f, const RationalK& x);
/// The class with index idx, as b/f with deg b < deg f.
RationalK residue_of(const Poly& f, std::uint64_t idx);
/// Representatives a of (A/f)^x with deg a < deg f, ascending by index.
std::vector<Poly> units_mod(const Poly& f);

/// Element of the free abelian group A_f on symbols [x], x in f^{-1}A mod A.
class CycleElement {
 public:
  /// The zero element at level f (monic, positive degree).
  explicit CycleElement(const Poly& f);
  static CycleElement symbol(const Poly& f, const RationalK& x, long m = 1);
  static CycleElement from_vector(const Poly& f, const std::vector<long>& v);

  const Poly& level() const noexcept { return f_; }
  /// Rank of A_f, q^{deg f}.
  std::uint64_t dim() const noexcept { return dim_; }
  const std::map<std::uint64_t, long>& terms() const noexcept { return m_; }
  bool is_zero() const noexcept { return m_.empty(); }
  bool is_effective() const noexcept;
  long coeff(const RationalK& x) const;

  void add(const RationalK& x, long m);
  void add_index(std::uint64_t idx, long m);

  CycleElement operator+(const CycleElement& o) const;
  CycleElement operator-(const CycleElement& o) const;
  CycleElement operator*(long k) const;
  bool operator==(const CycleElement& o) const noexcept { return f_ == o.f_ && m_ == o.m_; }
  bool operator!=(const CycleElement& o) const noexcept { return !(*this == o); }
  bool operator<(const CycleElement& o) const noexcept { return m_ < o.m_; }

  /// Dense coordinates in the residue basis.
  std::vector<long> to_vector() const;
  /// (q-1) * weight: every nonzero class has weight 1/(q-1), [0] has 0.
  long scaled_weight() const;
  QFrac weight() const;

  std::string to_string() const;

 private:
  void check_level(const CycleElement& o) const;

  Poly f_;
  std::uint64_t dim_;
  std::map<std::uint64_t, long> m_;
};

/// a * [x] = [a x], extended linearly.  Throws DomainError unless (a, f) = 1.
CycleElement star(const Poly& a, const CycleElement& c);

}  // namespace ffgamma
