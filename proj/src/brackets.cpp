#include "ffgamma/brackets.hpp"

#include "ffgamma/errors.hpp"

namespace ffgamma {

int bracket_N(const RationalK& x, unsigned N) {
  const RationalK y = x.frac();
  if (y.is_zero()) return 0;
  return (y.den().degree() - y.num().degree() == static_cast<int>(N) + 1 && y.num().lead() == 1) ? 1 : 0;
}

int bracket(const RationalK& x) {
  const RationalK y = x.frac();
  return (!y.is_zero() && y.num().lead() == 1) ? 1 : 0;
}

long bracket_of_cycle(const CycleElement& a) {
  long s = 0;
  for (const auto& [idx, m] : a.terms()) s += m * bracket(residue_of(a.level(), idx));
  return s;
}

long bracket_of_cycle_N(const CycleElement& a, unsigned N) {
  long s = 0;
  for (const auto& [idx, m] : a.terms()) s += m * bracket_N(residue_of(a.level(), idx), N);
  return s;
}

std::vector<long> bracket_vector(const CycleElement& a) {
  std::vector<long> v;
  for (const Poly& u : units_mod(a.level())) v.push_back(bracket_of_cycle(star(u, a)));
  return v;
}

bool equiv_f(const CycleElement& a, const CycleElement& b) {
  if (a.level() != b.level()) throw DomainError("level mismatch in ~_f");
  return bracket_vector(a) == bracket_vector(b);
}

}  // namespace ffgamma
