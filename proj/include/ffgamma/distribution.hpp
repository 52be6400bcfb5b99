#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffgamma/cycle.hpp"
#include "ffgamma/lattice.hpp"

namespace ffgamma {

/// [x] - sum_{deg a < deg g} [(x + a)/g] over monic g | f and x in (g/f)A
/// mod A.  The g = 1 entries are zero and are kept, so the list has
/// sum_g q^{deg f - deg g} entries.
std::vector<CycleElement> gens_D(const Poly& f);
/// gens_D(f) followed by sum_eps [eps x] for every x in f^{-1}A mod A.
std::vector<CycleElement> gens_R(const Poly& f);

/// (q-1) * weight as an integer form on A_f.
IntVector weight_form(const Poly& f);

/// Lattice spanned by cycles at level f.
IntLattice lattice_of(const std::vector<CycleElement>& gens, const Poly& f);

/// R~_f = {a : weight a = 0 and N a in R_f for some N > 0}.  Memoized per
/// (q, f).
const IntLattice& rtilde(const Poly& f);
/// rank A_f / R~_f.
std::size_t quotient_rank(const Poly& f);
/// 1 + (q-2)/(q-1) #(A/f)^x.
std::uint64_t nu_f(const Poly& f);

/// a - b in R~_f.  DomainError on level mismatch.
bool equiv_lattice(const CycleElement& a, const CycleElement& b);

/// For a pair found equivalent: the difference, its coordinates in the
/// Hermite basis of R~_f, and the least N > 0 with N (a - b) in R_f.
struct DependenceWitness {
  std::size_t i = 0, j = 0;
  std::vector<long> diff;
  IntVector coords;
  long multiplier = 0;
  bool lattice_agrees = false;
};

struct DependenceReport {
  /// ~_f classes as index lists, each sorted, ordered by first index.
  std::vector<std::vector<std::size_t>> classes;
  bool independent = true;
  std::vector<DependenceWitness> witnesses;
};

/// Partition by ~_f (bracket oracle); every pair inside a class gets a
/// lattice witness.
DependenceReport decide_dependence(const std::vector<CycleElement>& family);

/// For f a power of an irreducible: {a/f : a not monic, deg a < deg f,
/// (a, f) = 1}, plus one slot for the period.  DomainError otherwise.
struct BasisBf {
  std::vector<RationalK> residues;
  bool period_slot = true;
  std::size_t size() const noexcept { return residues.size() + (period_slot ? 1 : 0); }
};
BasisBf basis_Bf(const Poly& f);

}  // namespace ffgamma
