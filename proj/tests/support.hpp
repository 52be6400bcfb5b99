#pragma once

// Random generators shared by the unit tests.

#include <random>

#include "ffgamma/cycle.hpp"
#include "ffgamma/laurent.hpp"

namespace test {

using ffgamma::GaloisField;
using ffgamma::LaurentNum;
using ffgamma::Poly;
using ffgamma::RationalK;

inline GaloisField::Raw random_elem(const GaloisField& f, std::mt19937_64& rng, bool nonzero = false) {
  if (nonzero) return static_cast<GaloisField::Raw>(1 + rng() % (f.q() - 1));
  return static_cast<GaloisField::Raw>(rng() % f.q());
}

// Degree < max_deg (possibly zero).
inline Poly random_poly(const GaloisField& f, std::mt19937_64& rng, int max_deg) {
  std::vector<GaloisField::Raw> c(static_cast<std::size_t>(rng() % (max_deg + 1)));
  for (auto& x : c) x = random_elem(f, rng);
  return Poly(f, c);
}

inline Poly random_monic(const GaloisField& f, std::mt19937_64& rng, int deg) {
  std::vector<GaloisField::Raw> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = random_elem(f, rng);
  c.back() = 1;
  return Poly(f, c);
}

inline RationalK random_rational(const GaloisField& f, std::mt19937_64& rng, int max_deg) {
  Poly den = random_monic(f, rng, static_cast<int>(rng() % (max_deg + 1)));
  return RationalK(random_poly(f, rng, max_deg), den);
}

// Nonzero element of k_inf with val in [-20, 20] and the given relative
// precision.
inline LaurentNum random_laurent(const GaloisField& f, std::mt19937_64& rng, long rel) {
  const long step = static_cast<long>(f.q() - 1);
  const long val = (static_cast<long>(rng() % 41) - 20) * step;
  std::vector<GaloisField::Raw> c(static_cast<std::size_t>(rel), 0);
  for (std::size_t i = 0; i < c.size(); i += static_cast<std::size_t>(step)) c[i] = random_elem(f, rng);
  c[0] = random_elem(f, rng, true);
  return LaurentNum(f, val, val + rel, c);
}

// Up to `terms` symbols at level f with multiplicities in [-max_m, max_m].
inline ffgamma::CycleElement random_cycle(const Poly& f, std::mt19937_64& rng, int terms, long max_m) {
  ffgamma::CycleElement c(f);
  for (int i = 0; i < terms; ++i) {
    const long m = static_cast<long>(rng() % static_cast<unsigned long>(2 * max_m + 1)) - max_m;
    c.add_index(rng() % c.dim(), m);
  }
  return c;
}

}  // namespace test
