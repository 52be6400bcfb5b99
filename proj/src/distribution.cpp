#include "ffgamma/distribution.hpp"

#include <map>
#include <mutex>

#include "ffgamma/brackets.hpp"
#include "ffgamma/errors.hpp"

namespace ffgamma {
namespace {

struct LevelData {
  IntLattice r;
  IntLattice rt;
  mpz_class exponent;  // largest Smith invariant of the R_f generators
};

const LevelData& level_data(const Poly& f) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::vector<GaloisField::Raw>>, LevelData> cache;
  const auto key = std::make_pair(f.field().q(), f.coeffs());
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto gens = gens_R(f);
  IntMatrix rows;
  for (const auto& g : gens) rows.push_back(to_int_vector(g.to_vector()));
  const std::size_t n = CycleElement(f).dim();
  IntLattice r(rows, n);
  IntLattice rt = r.saturate().intersect_kernel(weight_form(f));
  const auto inv = snf(r.basis(), n);
  mpz_class e = inv.empty() ? mpz_class(1) : inv.back();
  return cache.emplace(key, LevelData{std::move(r), std::move(rt), e}).first->second;
}

}  // namespace

std::vector<CycleElement> gens_D(const Poly& f) {
  const GaloisField& F = f.field();
  std::vector<CycleElement> out;
  for (const Poly& g : monic_divisors(f)) {
    const Poly h = f / g;
    const RationalK ginv(Poly::constant(F, 1), g);
    for (const Poly& c : polys_below_degree(F, static_cast<unsigned>(h.degree()))) {
      const RationalK x(c, h);
      CycleElement e = CycleElement::symbol(f, x);
      for (const Poly& a : polys_below_degree(F, static_cast<unsigned>(g.degree())))
        e.add((x + RationalK(a)) * ginv, -1);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<CycleElement> gens_R(const Poly& f) {
  std::vector<CycleElement> out = gens_D(f);
  const GaloisField& F = f.field();
  const std::uint64_t n = CycleElement(f).dim();
  for (std::uint64_t i = 0; i < n; ++i) {
    const RationalK x = residue_of(f, i);
    CycleElement e(f);
    for (GaloisField::Raw eps = 1; eps < F.q(); ++eps) e.add(x.scaled(eps), 1);
    out.push_back(std::move(e));
  }
  return out;
}

IntVector weight_form(const Poly& f) {
  const std::uint64_t n = CycleElement(f).dim();
  IntVector w(n, 1);
  w[0] = 0;
  return w;
}

IntLattice lattice_of(const std::vector<CycleElement>& gens, const Poly& f) {
  IntMatrix rows;
  for (const auto& g : gens) {
    if (g.level() != f) throw DomainError("generator at the wrong level");
    rows.push_back(to_int_vector(g.to_vector()));
  }
  return IntLattice(rows, CycleElement(f).dim());
}

const IntLattice& rtilde(const Poly& f) { return level_data(f).rt; }

std::size_t quotient_rank(const Poly& f) { return CycleElement(f).dim() - rtilde(f).rank(); }

std::uint64_t nu_f(const Poly& f) {
  const std::uint64_t q = f.field().q();
  return 1 + (q - 2) * units_mod(f).size() / (q - 1);
}

bool equiv_lattice(const CycleElement& a, const CycleElement& b) {
  if (a.level() != b.level()) throw DomainError("level mismatch in lattice equivalence");
  return rtilde(a.level()).member(to_int_vector((a - b).to_vector()));
}

DependenceReport decide_dependence(const std::vector<CycleElement>& family) {
  DependenceReport rep;
  if (family.empty()) return rep;
  const Poly& f = family.front().level();
  std::vector<std::vector<long>> vecs;
  for (const auto& c : family) {
    if (c.level() != f) throw DomainError("family members at different levels");
    vecs.push_back(bracket_vector(c));
  }
  std::vector<bool> placed(family.size(), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> cls{i};
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!placed[j] && vecs[j] == vecs[i]) {
        placed[j] = true;
        cls.push_back(j);
      }
    }
    rep.classes.push_back(cls);
  }
  const LevelData& ld = level_data(f);
  for (const auto& cls : rep.classes) {
    if (cls.size() > 1) rep.independent = false;
    for (std::size_t s = 0; s < cls.size(); ++s) {
      for (std::size_t t = s + 1; t < cls.size(); ++t) {
        DependenceWitness w;
        w.i = cls[s];
        w.j = cls[t];
        const CycleElement d = family[w.i] - family[w.j];
        w.diff = d.to_vector();
        const IntVector v = to_int_vector(w.diff);
        if (auto c = ld.rt.coordinates(v)) {
          w.lattice_agrees = true;
          w.coords = *c;
          for (long N = 1; N <= ld.exponent; ++N) {
            IntVector nv = v;
            for (auto& x : nv) x *= N;
            if (ld.r.member(nv)) {
              w.multiplier = N;
              break;
            }
          }
        }
        rep.witnesses.push_back(std::move(w));
      }
    }
  }
  return rep;
}

BasisBf basis_Bf(const Poly& f) {
  if (factor_monic(f).size() != 1) throw DomainError(f.to_string() + " is not a power of an irreducible");
  BasisBf b;
  for (const Poly& a : units_mod(f)) {
    if (a.lead() != 1) b.residues.emplace_back(a, f);
  }
  return b;
}

}  // namespace ffgamma
