#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/reslie.hpp"
#include "witt/wittalg.hpp"

using namespace witt;

TEST_CASE("sl2 structure constants come from matrices") {
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra g = sl(f3, 2);  // basis (h, x, y)
  // [e, f] = h with e = E12, f = E21
  CHECK(bracket(g.basis(1), g.basis(2)) == g.basis(0));
  // [h, x] = 2x (from matrices, not the displayed relation list)
  CHECK(bracket(g.basis(0), g.basis(1)) == g.basis(1).scaled(f3->from_int(2)));
  // [h, y] = -2y
  CHECK(bracket(g.basis(0), g.basis(2)) == g.basis(2).scaled(f3->from_int(-2)));
  // h^[3] = h, x^[3] = y^[3] = 0
  CHECK(p_map(g.basis(0)) == g.basis(0));
  CHECK(p_map(g.basis(1)).is_zero());
  CHECK(p_map(g.basis(2)).is_zero());
}

TEST_CASE("[x, x] = 0 always") {
  FieldRef f5 = Field::prime(5);
  ResLieAlgebra g = gl(f5, 2);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<FElem> c;
    for (int i = 0; i < 4; ++i) c.push_back(rng.element(f5));
    LieVector x = g.vector(c);
    CHECK(bracket(x, x).is_zero());
  }
}

TEST_CASE("semidirect special formulas") {
  FieldRef f5 = Field::prime(5);
  ResLieAlgebra g = semidirect_kn_gl1(f5, 2);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    LieVector v = g.vector({rng.element(f5), rng.element(f5), f5->zero()});
    LieVector vp = g.vector({rng.element(f5), rng.element(f5), f5->zero()});
    FElem lam = rng.element(f5), lamp = rng.element(f5);
    LieVector e = g.basis(2);
    // [v + le, v' + l'e] = l v' - l' v
    CHECK(bracket(v + e.scaled(lam), vp + e.scaled(lamp)) == vp.scaled(lam) - v.scaled(lamp));
    // (v + le)^[p] = l^(p-1) (v + le)
    LieVector x = v + e.scaled(lam);
    CHECK(p_map(x) == x.scaled(lam.pow(4)));
  }
}

TEST_CASE("s_r instances") {
  // p = 2: s_1(x, y) = [x, y]
  FieldRef f2 = Field::prime(2);
  ResLieAlgebra g2 = gl(f2, 2);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<FElem> a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back(rng.element(f2));
      b.push_back(rng.element(f2));
    }
    LieVector x = g2.vector(a), y = g2.vector(b);
    CHECK(s_r(x, y, 1) == bracket(x, y));
    CHECK(s_r(x, g2.zero(), 1).is_zero());
  }
  // p = 3 in gl2(F_3) with x = e, y = f: s1 + s2 = (e+f)^3 - e^3 - f^3 = e + f
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra g3 = gl(f3, 2);
  LieVector e = g3.vector({f3->zero(), f3->one(), f3->zero(), f3->zero()});
  LieVector f = g3.vector({f3->zero(), f3->zero(), f3->one(), f3->zero()});
  CHECK(s_r(e, f, 1) + s_r(e, f, 2) == e + f);
  CHECK_THROWS_AS(s_r(e, f, 3), Error);
}

TEST_CASE("p_map instances") {
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra g = gl1(f3);
  CHECK(p_map(g.basis(0)) == g.basis(0));
  // fold well-definedness
  WittAlgebra wa(Field::prime(5), Field::prime(5)->one());
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    std::vector<FElem> c;
    for (int i = 0; i < 5; ++i) c.push_back(rng.element(Field::prime(5)));
    LieVector x = wa.lie().vector(c);
    std::vector<int> asc = {0, 1, 2, 3, 4}, desc = {4, 3, 2, 1, 0}, shuffled = {2, 0, 4, 1, 3};
    LieVector ref = p_map_with_order(x, asc);
    CHECK(ref == p_map_with_order(x, desc));
    CHECK(ref == p_map_with_order(x, shuffled));
  }
}

TEST_CASE("verify_axioms and deliberate fault injection") {
  Rng rng(5);
  for (i64 p : {2, 3, 5}) {
    AxiomReport rep = verify_axioms(gl(Field::prime(p), 2), rng);
    CHECK(rep.passed);
  }
  // tampering with a bracket constant must be caught at construction
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra good = sl(f3, 2);
  std::vector<std::vector<std::vector<FElem>>> c(
      3, std::vector<std::vector<FElem>>(3, std::vector<FElem>(3, f3->zero())));
  std::vector<std::vector<FElem>> m(3, std::vector<FElem>(3, f3->zero()));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j][k] = good.bracket_const(i, j)[k];
    for (int k = 0; k < 3; ++k) m[i][k] = good.pmap_const(i)[k];
  }
  c[0][1][1] = f3->one();  // [h,x] = x instead of 2x
  c[1][0][1] = -f3->one();
  CHECK_THROWS_AS(ResLieAlgebra(f3, c, m, "tampered"), Error);
}

TEST_CASE("center, derived subalgebra, ideals") {
  FieldRef f2 = Field::prime(2);
  ResLieAlgebra s2 = sl(f2, 2);
  Subspace z = center(s2);
  CHECK(z.dim() == 1);
  CHECK(z.contains(s2.basis(0)));  // the scalar line (h = identity at p=2)
  CHECK(center(sl(Field::prime(3), 2)).dim() == 0);
  CHECK(derived_subalgebra(sl(Field::prime(3), 2)).dim() == 3);
  CHECK(derived_subalgebra(semidirect_kn_gl1(Field::prime(3), 1)).dim() == 1);

  // the reduced part of witt(3,0) is a subalgebra but not an ideal
  FieldRef f3 = Field::prime(3);
  WittAlgebra wa(f3, f3->zero());
  Subspace red = Subspace::span(&wa.lie(), {wa.lie().basis(1), wa.lie().basis(2)});
  CHECK(is_subalgebra(wa.lie(), red));
  std::pair<LieVector, LieVector> witness{wa.lie().zero(), wa.lie().zero()};
  CHECK(!is_ideal(wa.lie(), red, &witness));
  // the witness bracket leaves the subspace
  CHECK(!red.contains(bracket(witness.first, witness.second)));
  // the center is always an ideal
  CHECK(is_ideal(s2, z));
}

TEST_CASE("restricted derivations") {
  Rng rng(6);
  FieldRef f3 = Field::prime(3);
  // trivial(n): every linear map qualifies
  ResLieAlgebra t2 = trivial_algebra(f3, 2);
  Subspace full2(&t2, Mat::identity(f3, 2));
  Mat any(f3, 2, 2);
  any.at(0, 1) = f3->from_int(2);
  any.at(1, 0) = f3->one();
  CHECK(is_restricted_derivation(t2, any, full2, rng));
  // gl1: only D = 0
  ResLieAlgebra g1 = gl1(f3);
  Subspace full1(&g1, Mat::identity(f3, 1));
  Mat zero1(f3, 1, 1), one1(f3, 1, 1);
  one1.at(0, 0) = f3->one();
  CHECK(is_restricted_derivation(g1, zero1, full1, rng));
  CHECK(!is_restricted_derivation(g1, one1, full1, rng));
  // inner derivations always qualify
  ResLieAlgebra s3 = sl(f3, 2);
  Subspace full3(&s3, Mat::identity(f3, 3));
  for (int i = 0; i < 3; ++i) CHECK(is_restricted_derivation(s3, s3.ad_matrix(i), full3, rng));
}

TEST_CASE("semidirect product construction and guard rails") {
  Rng rng(7);
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra a = trivial_algebra(f3, 2), h = gl1(f3);
  ResLieAlgebra built = semidirect_product(a, h, {Mat::identity(f3, 2)}, rng);
  AxiomReport rep = verify_axioms(built, rng);
  CHECK(rep.passed);
  // phi that is not a homomorphism of restricted algebras: phi(e)^p != phi(e^[p])
  Mat nilp(f3, 2, 2);
  nilp.at(0, 1) = f3->one();
  CHECK_THROWS_AS(semidirect_product(a, h, {nilp}, rng), Error);
}

TEST_CASE("p-closedness classification") {
  FieldRef f3 = Field::prime(3);
  ResLieAlgebra g = semidirect_kn_gl1(f3, 2);
  for (const auto& v : enumerate_vectors(g)) {
    auto res = is_p_closed(v);
    CHECK(res.kind != PClosedKind::not_closed);  // every vector is p-closed here
    if (res.kind == PClosedKind::multiplicative) CHECK(p_map(v) == v.scaled(res.scalar));
  }
  // gl2 at p=2: e + f squares to the identity, not closed
  FieldRef f2 = Field::prime(2);
  ResLieAlgebra g2 = gl(f2, 2);
  LieVector x = g2.vector({f2->zero(), f2->one(), f2->one(), f2->zero()});
  CHECK(is_p_closed(x).kind == PClosedKind::not_closed);
}

TEST_CASE("toral rank lower bounds and unipotence") {
  FieldRef f3 = Field::prime(3);
  CHECK(toral_rank_lower_bound(trivial_algebra(f3, 2)) == 0);
  CHECK(toral_rank_lower_bound(gl1(f3)) == 1);
  CHECK(toral_rank_lower_bound(semidirect_kn_gl1(f3, 2)) == 1);
  // stabilization under extension
  CHECK(toral_rank_lower_bound(semidirect_kn_gl1(f3, 2), 2) == 1);
  CHECK(is_unipotent(trivial_algebra(f3, 3)));
  CHECK(!is_unipotent(gl1(f3)));
}

TEST_CASE("fingerprints distinguish and are stable") {
  FieldRef f2 = Field::prime(2);
  Fingerprint a = fingerprint(trivial_algebra(f2, 2));
  Rng rng(8);
  ResLieAlgebra tori = semidirect_product(gl1(f2), gl1(f2), {Mat(f2, 1, 1)}, rng);
  Fingerprint b = fingerprint(tori);
  CHECK(a != b);
  CHECK(a.additive == 4);
  CHECK(b.toral_lb == 2);
}

TEST_CASE("structure constant JSON round trip preserves the fingerprint") {
  FieldRef f3 = Field::prime(3);
  WittAlgebra wa(f3, f3->from_int(2));
  json j = wa.lie().to_json();
  ResLieAlgebra back = ResLieAlgebra::from_json(j);
  CHECK(fingerprint(back) == fingerprint(wa.lie()));
  CHECK(back.to_json() == j);
}

TEST_CASE("subalgebra enumeration at desk scale") {
  FieldRef f2 = Field::prime(2);
  ResLieAlgebra t2 = trivial_algebra(f2, 2);
  CHECK(subalgebra_enumeration(t2).size() == 5);
  // witt(2,0): all 5 subspaces; the line on td is a gl1
  WittAlgebra w2(f2, f2->zero());
  auto recs = subalgebra_enumeration(w2.lie());
  CHECK(recs.size() == 5);
}

TEST_CASE("automorphism point counts") {
  // gl1 over F_q: gcd(p-1, q-1) points of mu_(p-1)
  CHECK(automorphism_points(gl1(Field::prime(3)), Field::prime(3)).count == 2);
  CHECK(automorphism_points(gl1(Field::prime(2)), Field::extension(2, 2)).count == 1);
  CHECK(automorphism_points(gl1(Field::prime(5)), Field::prime(5)).count == 4);
  // trivial(1) over F_q: all of GL_1
  CHECK(automorphism_points(trivial_algebra(Field::prime(5), 1), Field::prime(5)).count == 4);
  // k x| gl1 over F_2: q(q-1) = 2
  CHECK(automorphism_points(semidirect_kn_gl1(Field::prime(2), 1), Field::prime(2)).count == 2);
}

TEST_CASE("(R1) exhaustively over F_2 and F_3 for the constructed algebras") {
  for (i64 p : {2, 3}) {
    FieldRef f = Field::prime(p);
    std::vector<ResLieAlgebra> algebras;
    algebras.push_back(trivial_algebra(f, 2));
    algebras.push_back(gl1(f));
    algebras.push_back(sl(f, 2));
    algebras.push_back(semidirect_kn_gl1(f, 1));
    for (const auto& g : algebras)
      for (const auto& x : enumerate_vectors(g)) CHECK(g.ad(p_map(x)) == g.ad(x).pow(p));
  }
}
