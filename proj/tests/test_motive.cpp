#include "doctest.h"
#include "ffgamma/carlitz.hpp"
#include "ffgamma/coleman.hpp"
#include "ffgamma/errors.hpp"
#include "ffgamma/gammaeval.hpp"
#include "ffgamma/motive.hpp"
#include "ffgamma/parse.hpp"

using namespace ffgamma;

namespace {

constexpr long P = 160;
constexpr int TR = 32;

RationalK R(const char* s, const GaloisField& f) { return parse_elem(s, f); }
Poly A(const char* s, const GaloisField& f) { return parse_poly(s, f); }

LaurentNum U(const GaloisField& f, GaloisField::Raw c, long prec) { return LaurentNum::monomial(f, c, 1, prec); }

// t - T as a polynomial in t.
TSeries t_minus_T(const GaloisField& f, int trunc_t, long prec) {
  return TSeries({-LaurentNum::T(f, prec), LaurentNum::one(f, prec)}, trunc_t, kExactPrec);
}

}  // namespace

TEST_CASE("multiplication matrix Z") {
  const GaloisField& F = GaloisField::get(3);
  const PolyMatrix z = mult_matrix_Z(A("T", F));
  REQUIRE(z.size() == 2);
  CHECK(z[0][0].is_zero());
  CHECK(z[0][1] == A("1", F));
  CHECK(z[1][0] == A("-T", F));
  CHECK(z[1][1].is_zero());
  for (unsigned q : {2u, 3u}) {
    const GaloisField& G = GaloisField::get(q);
    for (const char* fs : {"T", "T+1", "T^2", "T^2-T", "T^2+1"}) {
      const Poly f = A(fs, G);
      CHECK(charpoly_Z(f) == cyclotomic(f));
      CHECK(z_eigen_residual(f, P) >= P);
    }
  }
}

TEST_CASE("Phi for the symbol 1/T") {
  const GaloisField& F = GaloisField::get(3);
  const CycleElement a = CycleElement::symbol(A("T", F), R("1/T", F));
  const TMatrix phi = phi_matrix(a, TR, P);
  CHECK(phi(0, 0).residual(TSeries::one(F, TR, P)) >= P);
  CHECK(phi(1, 1).residual(TSeries::one(F, TR, P)) >= P);
  CHECK(phi(0, 1)[0].residual(-U(F, 1, P)) >= P);
  CHECK(phi(1, 0)[1].residual(U(F, 1, P)) >= P);
  CHECK(phi(1, 0)[0].valuation() >= P);
  CHECK(phi_twist(a, 0, TR, P).residual(phi) >= P);
  CHECK(phi_twist(a, 2, TR, P).residual(phi.twist(2, P)) >= P);

  LMatrix at0(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) at0[i].push_back(phi(i, j)[0]);
  CHECK(!lm_det(at0).is_zero());

  const DetShape sh = det_shape(tm_det(phi), P - 8);
  CHECK(sh.ok);
  CHECK(sh.s == 1);
}

TEST_CASE("Phi perturbation bound and contract") {
  const GaloisField& F = GaloisField::get(3);
  const Poly f = A("T^2", F);
  const TMatrix phi = phi_matrix(CycleElement::symbol(f, R("1/T^2", F)), TR, P);
  CHECK(phi.rows() == 6);
  CHECK((phi - TMatrix::identity(F, 6, TR, P)).valuation() >= 1);
  CHECK_THROWS_AS(phi_matrix(CycleElement::symbol(f, R("1/T^2", F), -1), TR, P), DomainError);
  CHECK_THROWS_AS(phi_matrix(CycleElement::symbol(f, R("0", F)), TR, P), DomainError);
}

TEST_CASE("Psi satisfies its functional equation") {
  const GaloisField& F = GaloisField::get(3);
  const CycleElement a = CycleElement::symbol(A("T", F), R("1/T", F));
  const long W = 3 * P + 10;
  const ConvergentProduct psi = psi_matrix(a, TR, W);
  CHECK(psi.factors_used >= 2);
  const TMatrix phi = phi_matrix(a, TR, W);
  CHECK(psi.value.twist(-1).residual(phi * psi.value) >= P);
  // Entire in t: coefficient valuations outgrow any linear bound.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (int k = 1; k <= 5; ++k) CHECK(psi.value(i, j)[k].valuation() >= (k * (k + 1)) / 2 * 3 - 3);
}

TEST_CASE("specialization recovers Pi-monomials") {
  const GaloisField& F = GaloisField::get(3);
  const Poly f = A("T", F);
  const CycleElement a = CycleElement::symbol(f, R("1/T", F));
  const SpecializeReport rep = specialize_check(a, TR, P);
  REQUIRE(rep.diag.size() == 2);
  CHECK(rep.offdiag >= P);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(rep.pi_residual[i] >= P - 2);
    CHECK(rep.coleman_residual[i] >= P - 2);
  }
  CHECK(rep.diag[0].residual(pi_value(R("1/T", F), P + 8).inv()) >= P - 2);
  CHECK(rep.diag[1].residual(pi_value(R("2/T", F), P + 8).inv()) >= P - 2);

  const SpecializeReport rep2 = specialize_check(star(A("2", F), a), TR, P);
  CHECK(rep2.diag[0].residual(rep.diag[1]) >= P - 2);
  CHECK(rep2.diag[1].residual(rep.diag[0]) >= P - 2);
}

TEST_CASE("determinant shape") {
  const GaloisField& F = GaloisField::get(3);
  const TSeries l = t_minus_T(F, 8, P);
  const DetShape s3 = det_shape((l * l * l).scaled(U(F, 2, P)), P - 16);
  CHECK(s3.ok);
  CHECK(s3.s == 3);
  CHECK(s3.c->residual(U(F, 2, P)) >= P - 16);
  const TSeries bad({-LaurentNum::T(F, P).pow(2), LaurentNum::one(F, P)}, 8, kExactPrec);
  CHECK(!det_shape(bad, P - 16).ok);
  CHECK(!det_shape(TSeries(F, 8, P), P - 16).ok);
}

TEST_CASE("relation verifier") {
  const GaloisField& F = GaloisField::get(3);
  const long W = 3 * P + 10;
  const TSeries om = omega(F, TR, W);
  const TSeries l = t_minus_T(F, TR, W);
  const TSeries h({LaurentNum::one(F, W), LaurentNum::one(F, W)}, TR, kExactPrec);  // 1 + t
  const TSeries zero(F, TR, W);

  TMatrix phi(F, 2, 2, TR, W);
  phi(0, 0) = l;
  phi(1, 1) = l;
  TMatrix psi(F, 2, 1, TR, W);
  psi(0, 0) = h * om;
  psi(1, 0) = om;
  const LaurentNum hT = ts_eval(h, LaurentNum::T(F, W), W - 8);

  const RelationReport ok = verify_relation(phi, psi, {TSeries::one(F, TR, W), -h}, {LaurentNum::one(F, W), -hT}, P);
  CHECK(ok.accepted);
  CHECK(ok.shape.s == 2);
  CHECK(ok.rho_psi_valuation >= P);

  const RelationReport trivial = verify_relation(phi, psi, {zero, zero}, {LaurentNum::zero(F, W), LaurentNum::zero(F, W)}, P);
  CHECK(trivial.accepted);

  // Omega(T) = -1/period is nonzero, so P = 1 cannot annihilate it.
  TMatrix phi1(F, 1, 1, TR, W), psi1(F, 1, 1, TR, W);
  phi1(0, 0) = l;
  psi1(0, 0) = om;
  const RelationReport no = verify_relation(phi1, psi1, {TSeries::one(F, TR, W)}, {LaurentNum::one(F, W)}, P);
  CHECK(!no.accepted);
  CHECK(no.p_at_t_residual >= P);
  CHECK(no.p_psi_valuation < P);

  TMatrix phi2 = phi1;
  phi2(0, 0) = l.scaled(LaurentNum::constant(F, 2, W));
  CHECK_THROWS_AS(verify_relation(phi2, psi1, {TSeries::one(F, TR, W)}, {LaurentNum::one(F, W)}, P), DomainError);

  // A column of Psi_a with its Phi_a also passes the preconditions.
  const CycleElement a = CycleElement::symbol(A("T", F), R("1/T", F));
  const ConvergentProduct ps = psi_matrix(a, TR, W);
  TMatrix col(F, 2, 1, TR, W);
  col(0, 0) = ps.value(0, 0);
  col(1, 0) = ps.value(1, 0);
  const RelationReport z = verify_relation(phi_matrix(a, TR, W), col, {zero, zero}, {LaurentNum::zero(F, W), LaurentNum::zero(F, W)}, P);
  CHECK(z.accepted);
  CHECK(z.shape.s == 1);
}
