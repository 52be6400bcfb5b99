#include <random>
#include <set>

#include "doctest.h"
#include "ffgamma/brackets.hpp"
#include "ffgamma/distribution.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/parse.hpp"
#include "support.hpp"

using namespace ffgamma;

namespace {

RationalK R(const char* s, const GaloisField& f) { return parse_elem(s, f); }

// Random element of R~_f: small combination of its Hermite basis.
CycleElement random_rtilde(const Poly& f, std::mt19937_64& rng) {
  const IntLattice& L = rtilde(f);
  std::vector<long> v(CycleElement(f).dim(), 0);
  for (const IntVector& row : L.basis()) {
    const long k = static_cast<long>(rng() % 5) - 2;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * row[i].get_si();
  }
  return CycleElement::from_vector(f, v);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, IntVector(c));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST_CASE("star action") {
  const GaloisField& F = GaloisField::get(3);
  const Poly f = parse_poly("T^2-T", F);
  const auto units = units_mod(f);
  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    const CycleElement c = test::random_cycle(f, rng, 5, 3);
    CHECK(star(Poly::constant(F, 1), c) == c);
    const Poly a = units[rng() % units.size()], b = units[rng() % units.size()];
    CHECK(star(a, star(b, c)) == star(a * b, c));
  }
  for (const Poly& a : units) {
    std::set<std::uint64_t> images;
    for (std::uint64_t i = 0; i < 9; ++i) {
      const CycleElement img = star(a, CycleElement::symbol(f, residue_of(f, i)));
      REQUIRE(img.terms().size() == 1);
      images.insert(img.terms().begin()->first);
    }
    CHECK(images.size() == 9);
  }
  CHECK_THROWS_AS(star(parse_poly("T", F), CycleElement(f)), DomainError);
}

TEST_CASE("generators of D_f and R_f") {
  for (unsigned q : {2u, 3u}) {
    const GaloisField& F = GaloisField::get(q);
    for (const char* fs : {"T", "T^2", "T^2-T", "T^3"}) {
      const Poly f = parse_poly(fs, F);
      const auto D = gens_D(f), Rg = gens_R(f);
      std::size_t expect = 0;
      for (const Poly& g : monic_divisors(f))
        expect += static_cast<std::size_t>(q_power(q, static_cast<unsigned>(f.degree() - g.degree())));
      CHECK(D.size() == expect);
      CHECK(Rg.size() == expect + CycleElement(f).dim());
      CHECK(D.front().is_zero());  // g = 1
      for (const auto& g : Rg) CHECK(bracket_of_cycle(g) * static_cast<long>(q - 1) == g.scaled_weight());
    }
  }
}

TEST_CASE("lattice normal forms") {
  {
    const IntLattice L(IntMatrix{{2, 0}}, 2);
    const IntLattice S = L.saturate();
    CHECK(S.basis() == IntMatrix{{1, 0}});
    CHECK(!L.member(IntVector{1, 0}));
    CHECK(S.member(IntVector{1, 0}));
    CHECK(L.member(IntVector{0, 0}));
  }
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}, 2) == std::vector<mpz_class>{1, 6});
  CHECK(snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3) == std::vector<mpz_class>{2, 6, 12});
  std::mt19937_64 rng(42);
  for (int it = 0; it < 20; ++it) {
    const IntMatrix m = random_matrix(rng, 6, 6, 9);
    const auto d = snf(m, 6);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
    const IntLattice L(m, 6);
    CHECK(L.rank() == d.size());
    CHECK(L.member(IntVector(6)));
    for (const auto& row : m) CHECK(L.member(row));
    // Kernel vectors are killed and the kernel is saturated.
    const IntMatrix low = random_matrix(rng, 3, 6, 5);
    for (const IntVector& k : right_kernel(low, 6)) {
      for (const IntVector& row : low) {
        mpz_class dot = 0;
        for (std::size_t i = 0; i < 6; ++i) dot += row[i] * k[i];
        CHECK(dot == 0);
      }
    }
    const IntLattice K(right_kernel(low, 6), 6);
    CHECK(K.saturate() == K);
    CHECK(L.saturate().contains(L));
  }
}

TEST_CASE("rank of A_f / R~_f") {
  for (unsigned q : {2u, 3u}) {
    const GaloisField& F = GaloisField::get(q);
    std::vector<const char*> fs{"T", "T^2", "T^2-T", "T^3"};
    if (q == 2) fs.push_back("T^3+T+1");
    for (const char* s : fs) {
      const Poly f = parse_poly(s, F);
      CHECK(CycleElement(f).dim() == q_power(q, static_cast<unsigned>(f.degree())));
      CHECK(quotient_rank(f) == nu_f(f));
    }
  }
  CHECK(quotient_rank(parse_poly("T^2-T", GaloisField::get(3))) == 3);
}

TEST_CASE("subgroup chain and stability") {
  const GaloisField& F = GaloisField::get(3);
  for (const char* s : {"T^2", "T^2-T"}) {
    const Poly f = parse_poly(s, F);
    const IntLattice D = lattice_of(gens_D(f), f), Rl = lattice_of(gens_R(f), f);
    CHECK(Rl.contains(D));
    CHECK(Rl.saturate().contains(Rl));
    const IntLattice& Rt = rtilde(f);
    const IntVector w = weight_form(f);
    for (const IntVector& v : Rt.basis()) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * w[i];
      CHECK(dot == 0);
      std::vector<long> lv;
      for (const auto& x : v) lv.push_back(x.get_si());
      const CycleElement c = CycleElement::from_vector(f, lv);
      for (const Poly& u : units_mod(f)) CHECK(Rt.member(to_int_vector(star(u, c).to_vector())));
    }
  }
}

TEST_CASE("two oracles for ~_f agree") {
  std::mt19937_64 rng(99);
  for (unsigned q : {2u, 3u}) {
    const GaloisField& F = GaloisField::get(q);
    for (const char* s : {"T", "T^2", "T^2-T", "T^2+1"}) {
      const Poly f = parse_poly(s, F);
      int agree = 0, same = 0;
      for (int it = 0; it < 100; ++it) {
        const CycleElement a = test::random_cycle(f, rng, 3, 2);
        const CycleElement b = it % 2 ? a + random_rtilde(f, rng) : test::random_cycle(f, rng, 3, 2);
        const bool e1 = equiv_f(a, b), e2 = equiv_lattice(a, b);
        agree += e1 == e2;
        same += e1;
      }
      CHECK(agree == 100);
      CHECK(same >= 50);
    }
  }
  const GaloisField& F = GaloisField::get(3);
  const Poly f = parse_poly("T^2-T", F);
  CHECK(equiv_lattice(CycleElement::symbol(f, R("1/(T^2-T)", F)), CycleElement::symbol(f, R("1/T", F))));
}

TEST_CASE("dependence decision") {
  const GaloisField& F = GaloisField::get(3);
  const Poly f = parse_poly("T^2-T", F);
  const CycleElement a = CycleElement::symbol(f, R("1/(T^2-T)", F));
  const CycleElement b = CycleElement::symbol(f, R("(T+1)/(T^2-T)", F));
  const CycleElement c = CycleElement::symbol(f, R("1/T", F));
  CHECK(decide_dependence({a}).independent);
  const auto rep = decide_dependence({a, c});
  CHECK(!rep.independent);
  CHECK(rep.classes.size() == 1);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].lattice_agrees);
  CHECK(rep.witnesses[0].multiplier >= 1);
  const auto rep3 = decide_dependence({a, b, c});
  CHECK(rep3.classes == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(rep3.witnesses.size() == 3);

  std::mt19937_64 rng(5);
  std::vector<CycleElement> fam;
  for (int i = 0; i < 6; ++i) fam.push_back(test::random_cycle(f, rng, 3, 2));
  fam.push_back(fam[1] + random_rtilde(f, rng));
  fam.push_back(fam[4] + random_rtilde(f, rng));
  const auto r = decide_dependence(fam);
  auto class_of = [&](std::size_t i) {
    for (std::size_t k = 0; k < r.classes.size(); ++k)
      for (std::size_t j : r.classes[k])
        if (j == i) return k;
    return r.classes.size();
  };
  CHECK(class_of(1) == class_of(6));
  CHECK(class_of(4) == class_of(7));
  for (const auto& w : r.witnesses) CHECK(w.lattice_agrees);
}

TEST_CASE("basis B_f") {
  const GaloisField& F = GaloisField::get(3);
  const BasisBf b = basis_Bf(parse_poly("T", F));
  CHECK(b.size() == 2);
  REQUIRE(b.residues.size() == 1);
  CHECK(b.residues[0] == R("2/T", F));
  CHECK(b.size() == nu_f(parse_poly("T", F)));
  CHECK(basis_Bf(parse_poly("T^2", F)).size() == nu_f(parse_poly("T^2", F)));
  CHECK(basis_Bf(parse_poly("T^2+1", F)).size() == nu_f(parse_poly("T^2+1", F)));
  CHECK_THROWS_AS(basis_Bf(parse_poly("T^2-T", F)), DomainError);
}
