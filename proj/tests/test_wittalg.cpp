#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/wittalg.hpp"

using namespace witt;

TEST_CASE("witt bracket instances") {
  FieldRef f5 = Field::prime(5);
  FElem omega = f5->from_int(2);
  WittAlgebra wa(f5, omega);
  const ResLieAlgebra& g = wa.lie();
  CHECK(bracket(g.basis(0), g.basis(2)) == g.basis(1).scaled(f5->from_int(2)));  // [d, t^2 d] = 2td
  // [t^4 d, t^2 d] = -2 t^5 d = 3 w d
  CHECK(bracket(g.basis(4), g.basis(2)) == g.basis(0).scaled(f5->from_int(3) * omega));
}

TEST_CASE("basis p-map images are independent of omega: only t d is toral") {
  for (i64 p : {2, 3, 5}) {
    FieldRef f = Field::prime(p);
    for (i64 om = 0; om < p; ++om) {
      WittAlgebra wa(f, f->from_int(om));
      const ResLieAlgebra& g = wa.lie();
      for (int i = 0; i < g.dim(); ++i) {
        LieVector img = p_map(g.basis(i));
        if (i == 1)
          CHECK(img == g.basis(1));
        else
          CHECK(img.is_zero());
      }
    }
  }
}

TEST_CASE("three-way p-map agreement at p=3, exhaustive") {
  FieldRef f3 = Field::prime(3);
  for (i64 om = 0; om < 3; ++om) {
    WittAlgebra wa(f3, f3->from_int(om));
    for (const auto& v : enumerate_vectors(wa.lie())) {
      TruncElement f = wa.poly_of(v);
      LieVector via_c = witt_p_map(wa, f);
      LieVector via_fold = p_map(v);
      LieVector via_op = wa.vector_of(wa.derivation_of(v).p_power().value_on_variable(0));
      CHECK(via_c == via_fold);
      CHECK(via_fold == via_op);
    }
  }
}

TEST_CASE("p=5 three-way spot check with omega = 1") {
  FieldRef f5 = Field::prime(5);
  WittAlgebra wa(f5, f5->one());
  TruncAlgebraRef alg = wa.trunc();
  TruncElement f = alg->one() + alg->variable(0) + alg->variable(0).pow(2);
  LieVector v = wa.vector_of(f);
  CHECK(witt_p_map(wa, f) == p_map(v));
  CHECK(p_map(v) == wa.vector_of(wa.derivation_of(v).p_power().value_on_variable(0)));
}

TEST_CASE("p-closed sweeps") {
  FieldRef f2 = Field::prime(2);
  WittAlgebra w2(f2, f2->zero());
  PClosedSweep s2 = p_closed_sweep(w2);
  CHECK(s2.all_closed);
  CHECK(s2.additive == 2);  // l1 = 0
  CHECK(s2.multiplicative == 2);
  // extension sweep over F_4
  PClosedSweep s4 = p_closed_sweep(w2, 2);
  CHECK(s4.all_closed);
  CHECK(s4.total == 16);
  FieldRef f5 = Field::prime(5);
  WittAlgebra w5(f5, f5->one());
  PClosedSweep s5 = p_closed_sweep(w5);
  CHECK(s5.all_closed);
  CHECK(s5.total == 3125);
  CHECK(s5.additive_matches_operator_route);
}

TEST_CASE("simplicity: p >= 3 simple over F_p, p = 2 has the 1-dimensional ideal") {
  for (i64 p : {3, 5}) {
    FieldRef f = Field::prime(p);
    for (i64 om = 0; om < 2; ++om) {
      WittAlgebra wa(f, f->from_int(om));
      CHECK(is_simple(wa).simple);
    }
  }
  FieldRef f2 = Field::prime(2);
  WittAlgebra w2(f2, f2->zero());
  SimplicityResult res = is_simple(w2);
  CHECK(!res.simple);
  REQUIRE(res.proper_ideal.dim() == 1);
  CHECK(res.proper_ideal.contains(w2.lie().basis(0)));  // the line k d
  CHECK(is_ideal(w2.lie(), res.proper_ideal));
}

TEST_CASE("small prime isomorphisms") {
  FieldRef f2 = Field::prime(2);
  WittAlgebra w2(f2, f2->zero());
  IsoCheck iso2 = small_prime_isomorphism(w2);
  CHECK(iso2.verified);
  CHECK(iso2.codomain == "k x| gl1");
  FieldRef f3 = Field::prime(3);
  WittAlgebra w3(f3, f3->zero());
  IsoCheck iso3 = small_prime_isomorphism(w3);
  CHECK(iso3.verified);
  CHECK(iso3.codomain == "sl2");
  // t d maps to h with h^[3] = h
  ResLieAlgebra t3 = sl(f3, 2);
  LieVector h = t3.vector(iso3.map.apply(w3.lie().basis(1).c));
  CHECK(h == t3.basis(0));
  CHECK(p_map(h) == h);
  // d maps to x with x^[3] = 0
  LieVector x = t3.vector(iso3.map.apply(w3.lie().basis(0).c));
  CHECK(x == t3.basis(1));
  CHECK(p_map(x).is_zero());
  CHECK_THROWS_AS(small_prime_isomorphism(WittAlgebra(Field::prime(5), Field::prime(5)->zero())), Error);
}

TEST_CASE("reduced subalgebra and transitivity") {
  for (i64 p : {2, 3, 5}) {
    FieldRef f = Field::prime(p);
    WittAlgebra wa(f, f->zero());
    ReducedPart red = reduced_subalgebra(wa);
    CHECK(red.space.dim() == p - 1);
    CHECK(red.subalgebra);
    CHECK(!red.ideal);
    // the witness pair genuinely escapes
    CHECK(!red.space.contains(bracket(red.non_ideal_witness.first, red.non_ideal_witness.second)));
    CHECK(transitivity_test(wa, Subspace::span(&wa.lie(), {wa.lie().basis(0)})));
    CHECK(!transitivity_test(wa, Subspace::span(&wa.lie(), {wa.lie().basis(1)})));
  }
  // omega != 0 is rejected
  FieldRef f3 = Field::prime(3);
  WittAlgebra w1(f3, f3->one());
  CHECK_THROWS_AS(reduced_subalgebra(w1), Error);
}

TEST_CASE("witt fingerprints agree across omega over F_p") {
  FieldRef f3 = Field::prime(3);
  Fingerprint base = fingerprint(WittAlgebra(f3, f3->zero()).lie());
  for (i64 om = 1; om < 3; ++om)
    CHECK(fingerprint(WittAlgebra(f3, f3->from_int(om)).lie()) == base);
  // and witt(3, 0) is isomorphic to sl2, so the fingerprints match
  CHECK(base == fingerprint(sl(f3, 2)));
}

TEST_CASE("verify_axioms passes for witt algebras incl. the ratfunc coefficient field") {
  Rng rng(12);
  FieldRef e = Field::ratfunc(3);
  WittAlgebra wa(e, e->gen());  // omega = theta over F_3(theta)
  AxiomReport rep = verify_axioms(wa.lie(), rng, 25);
  CHECK(rep.passed);
}
