#include <random>

#include "doctest.h"
#include "ffgamma/errors.hpp"
#include "ffgamma/kernels.hpp"
#include "ffgamma/laurent.hpp"
#include "ffgamma/parse.hpp"
#include "support.hpp"

using namespace ffgamma;

TEST_CASE("field axioms hold exhaustively for small q") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const GaloisField& F = GaloisField::get(q);
    for (unsigned a = 0; a < q; ++a) {
      const auto A = static_cast<GaloisField::Raw>(a);
      CHECK(F.pow(A, q) == A);
      CHECK(F.add(A, F.neg(A)) == 0);
      if (a) CHECK(F.mul(A, F.inv(A)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        const auto B = static_cast<GaloisField::Raw>(b);
        CHECK(F.add(A, B) == F.add(B, A));
        CHECK(F.mul(A, B) == F.mul(B, A));
        for (unsigned c = 0; c < q; ++c) {
          const auto C = static_cast<GaloisField::Raw>(c);
          CHECK(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
          CHECK(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
        }
      }
    }
  }
}

TEST_CASE("non prime powers are rejected") {
  CHECK_THROWS_AS(GaloisField::get(6), DomainError);
  CHECK_THROWS_AS(GaloisField::get(1), DomainError);
  CHECK_THROWS_AS(GaloisField::get(1024), DomainError);
  CHECK(GaloisField::get(9).degree() == 2);
}

TEST_CASE("polynomial division and gcd") {
  const GaloisField& F = GaloisField::get(3);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Poly a = test::random_poly(F, rng, 6), b = test::random_poly(F, rng, 4);
    if (b.is_zero()) continue;
    auto [quo, rem] = Poly::divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
    Poly g = Poly::gcd(a, b);
    if (!a.is_zero()) {
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
    }
  }
}

TEST_CASE("factorization and divisors") {
  const GaloisField& F = GaloisField::get(3);
  Poly f = parse_poly("T^2-T", F);
  auto divs = monic_divisors(f);
  CHECK(divs.size() == 4);
  CHECK(divs.front() == Poly::constant(F, 1));
  CHECK(divs.back() == f);
  CHECK(is_irreducible(parse_poly("T^2+1", F)));
  CHECK_FALSE(is_irreducible(parse_poly("T^2+2", F)));
  auto fac = factor_monic(parse_poly("T^3", F));
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].second == 3);
  CHECK(monic_of_degree(F, 2).size() == 9);
}

TEST_CASE("parse_elem examples") {
  const GaloisField& F = GaloisField::get(3);
  RationalK a = parse_elem("T^2+2*T+1", F);
  REQUIRE(a.is_poly());
  CHECK(a.num() == Poly::from_ints(F, {1, 2, 1}));
  RationalK b = parse_elem("1/(T^2-T)", F);
  CHECK(b.num() == Poly::constant(F, 1));
  CHECK(b.den() == Poly::from_ints(F, {0, 2, 1}));
  CHECK_THROWS_AS(parse_elem("1/0", F), DomainError);
  CHECK_THROWS_AS(parse_elem("T^", F), ParseError);
  CHECK_THROWS_AS(parse_elem("(T+1", F), ParseError);
  try {
    parse_elem("T + $", F);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  // Non-monic denominators are normalized.
  RationalK c = parse_elem("1/(2*T)", F);
  CHECK(c.den() == Poly::variable(F));
  CHECK(c.num() == Poly::constant(F, 2));
}

TEST_CASE("exact residue") {
  const GaloisField& F = GaloisField::get(3);
  CHECK(parse_elem("1/T", F).residue() == 1);
  CHECK(parse_elem("1/T^2", F).residue() == 0);
  CHECK(parse_elem("T^3+T", F).residue() == 0);
  CHECK(parse_elem("T/(T^2-T)", F).residue() == 1);
  // coefficients of 1/(T-1) = sum_{n>=1} T^{-n}
  RationalK x = parse_elem("1/(T-1)", F);
  for (unsigned n = 1; n < 8; ++n) CHECK(x.coeff_neg(n) == 1);
}

TEST_CASE("Laurent residue agrees with the exact residue") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const GaloisField& F = GaloisField::get(q);
    std::mt19937_64 rng(q);
    for (int it = 0; it < 40; ++it) {
      RationalK x = test::random_rational(F, rng, 3);
      LaurentNum L = LaurentNum::from_rational(x, 64);
      CHECK(L.in_k_inf());
      CHECK(L.residue() == x.residue());
    }
    if (q > 2) CHECK_THROWS_AS(LaurentNum::T_tilde(F, 20).residue(), DomainError);
  }
}

TEST_CASE("residue needs the slot in precision") {
  const GaloisField& F = GaloisField::get(5);
  CHECK_THROWS_AS(LaurentNum::from_rational(parse_elem("1/T", F), 3).residue(), PrecisionError);
}

TEST_CASE("defining relation and monomials") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const GaloisField& F = GaloisField::get(q);
    LaurentNum tt = LaurentNum::T_tilde(F, 50);
    CHECK((tt.pow(q - 1) + LaurentNum::T(F, 50)).is_zero());
    LaurentNum inv_t = LaurentNum::T(F, 50).inv();
    CHECK(inv_t.val() == static_cast<long>(q - 1));
    CHECK(inv_t.coeffs()[0] == F.neg(1));
    for (std::size_t i = 1; i < inv_t.coeffs().size(); ++i) CHECK(inv_t.coeffs()[i] == 0);
    CHECK(LaurentNum::T(F, 50).abs_val() == QFrac{1, 1});
    CHECK(tt.abs_val() == QFrac::make(1, q - 1));
    CHECK(LaurentNum::t_power(F, -2, 50).abs_val() == QFrac{-2, 1});
  }
}

TEST_CASE("absolute value is multiplicative and ultrametric") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const GaloisField& F = GaloisField::get(q);
    std::mt19937_64 rng(100 + q);
    for (int it = 0; it < 100; ++it) {
      LaurentNum a = test::random_laurent(F, rng, 40), b = test::random_laurent(F, rng, 40);
      CHECK((a * b).abs_val() == a.abs_val() + b.abs_val());
      LaurentNum s = a + b;
      if (a.val() != b.val()) {
        CHECK(s.val() == std::min(a.val(), b.val()));
      } else {
        CHECK(s.valuation() >= a.val());
      }
    }
  }
}

TEST_CASE("inverse and division") {
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const GaloisField& F = GaloisField::get(q);
    std::mt19937_64 rng(200 + q);
    for (int it = 0; it < 30; ++it) {
      LaurentNum a = test::random_laurent(F, rng, 60);
      LaurentNum one = a * a.inv();
      CHECK(one.residual(LaurentNum::one(F, one.prec())) >= one.prec());
      CHECK(one.prec() == a.rel_prec());
    }
    CHECK_THROWS_AS(LaurentNum::zero(F, 10).inv(), DomainError);
  }
}

TEST_CASE("from_rational matches exact arithmetic") {
  const GaloisField& F = GaloisField::get(3);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    RationalK x = test::random_rational(F, rng, 3), y = test::random_rational(F, rng, 3);
    LaurentNum lx = LaurentNum::from_rational(x, 80), ly = LaurentNum::from_rational(y, 80);
    CHECK((lx * ly).residual(LaurentNum::from_rational(x * y, 200)) >= (lx * ly).prec());
    CHECK((lx + ly).residual(LaurentNum::from_rational(x + y, 200)) >= 80);
  }
}

TEST_CASE("twist is a ring homomorphism with an inverse") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const GaloisField& F = GaloisField::get(q);
    std::mt19937_64 rng(300 + q);
    LaurentNum t = LaurentNum::T(F, 40);
    CHECK(t.twist(1).residual(LaurentNum::t_power(F, q, 40 * q)) >= 40 * static_cast<long>(q));
    for (int it = 0; it < 30; ++it) {
      LaurentNum a = test::random_laurent(F, rng, 30), b = test::random_laurent(F, rng, 30);
      CHECK(a.twist(0).residual(a) >= a.prec());
      LaurentNum back = a.twist(1).twist(-1);
      CHECK(back.prec() == a.prec());
      CHECK(back.residual(a) >= a.prec());
      LaurentNum lhs = (a * b).twist(2), rhs = a.twist(2) * b.twist(2);
      CHECK(lhs.residual(rhs) >= std::min(lhs.prec(), rhs.prec()));
      CHECK(a.twist(1).residual(a.pow(q)) >= a.pow(q).prec());
    }
    if (q > 2) CHECK_THROWS_AS(LaurentNum::T_tilde(F, 20).twist(-1), DomainError);
  }
}

TEST_CASE("residue is linear") {
  const GaloisField& F = GaloisField::get(4);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    RationalK x = test::random_rational(F, rng, 3), y = test::random_rational(F, rng, 3);
    const auto c = static_cast<GaloisField::Raw>(rng() % 4);
    CHECK((x.scaled(c) + y).residue() == F.add(F.mul(c, x.residue()), y.residue()));
  }
}

TEST_CASE("parallel convolution matches the serial reference") {
  std::mt19937_64 rng(99);
  for (unsigned q : {2u, 3u, 9u}) {
    const GaloisField& F = GaloisField::get(q);
    for (std::size_t n : {std::size_t{1}, std::size_t{37}, std::size_t{700}, std::size_t{2100}}) {
      std::vector<GaloisField::Raw> a(n), b(n / 2 + 1), s(n + 5), p(n + 5), d(n + 5);
      for (auto& x : a) x = test::random_elem(F, rng);
      for (auto& x : b) x = test::random_elem(F, rng);
      kernels::convolve_serial(F, a.data(), a.size(), b.data(), b.size(), s.data(), s.size());
      kernels::convolve_parallel(F, a.data(), a.size(), b.data(), b.size(), p.data(), p.size());
      kernels::convolve(F, a.data(), a.size(), b.data(), b.size(), d.data(), d.size());
      CHECK(s == p);
      CHECK(s == d);
    }
  }
}
