#pragma once

#include <vector>

#include "ffgamma/cycle.hpp"
#include "ffgamma/rational.hpp"

namespace ffgamma {

/// Generalized diamond bracket: 1 iff |frac(x) - T^{-N-1}| < q^{-N-1},
/// i.e. frac(x) = r/d with deg d - deg r = N + 1 and r of leading
/// coefficient 1.
int bracket_N(const RationalK& x, unsigned N);
/// Sum over N of bracket_N(x); 1 iff frac(x) != 0 has leading coefficient 1.
int bracket(const RationalK& x);

/// Linear extensions to A_f.
long bracket_of_cycle(const CycleElement& a);
long bracket_of_cycle_N(const CycleElement& a, unsigned N);
/// Entries <u * a> for u in units_mod(level), in that order.
std::vector<long> bracket_vector(const CycleElement& a);

/// a ~_f b: equal bracket vectors.  DomainError on level mismatch.
bool equiv_f(const CycleElement& a, const CycleElement& b);

}  // namespace ffgamma
