#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/autgroup.hpp"

using namespace witt;

TEST_CASE("coefficient ring arithmetic: dual numbers") {
  FieldRef f5 = Field::prime(5);
  RingRef r = Ring::dual(f5);
  RElem x = r->from_int(2) + r->eps() * r->from_int(3);
  CHECK((r->eps() * r->eps()).is_zero());
  auto inv = x.unit_inverse();
  REQUIRE(inv);
  CHECK(x * *inv == r->one());
  CHECK(!r->eps().is_unit());
  // (a + b eps)^p = a^p
  CHECK(x.pow(5) == r->from_int(2).pow(5));
}

TEST_CASE("coefficient ring arithmetic: truncated F_p[u]/(u^p)") {
  FieldRef f3 = Field::prime(3);
  RingRef r = Ring::trunc(f3);
  RElem u = r->u();
  CHECK((u * u * u).is_zero());
  RElem x = r->one() + u + u * u;
  auto inv = x.unit_inverse();
  REQUIRE(inv);
  CHECK(x * *inv == r->one());
  CHECK(!u.is_unit());
  CHECK(r->order() == 27);
  // enumeration hits every element once
  auto all = r->enumerate();
  CHECK(all.size() == 27);
}

TEST_CASE("coefficient ring arithmetic: laurent-eps") {
  FieldRef f3 = Field::prime(3);
  RingRef r = Ring::laurent_eps(f3);
  RElem x = r->u(2).pow(3);
  CHECK(x == r->u(6));
  CHECK(r->u(1) * r->u(-1) == r->one());
  // units: monomial eps-free part
  RElem y = r->u(-2) + r->eps() * r->u(5);
  auto inv = y.unit_inverse();
  REQUIRE(inv);
  CHECK(y * *inv == r->one());
  RElem z = r->one() + r->u();  // not a monomial: not a unit
  CHECK(!z.is_unit());
}

TEST_CASE("membership: neutral element, diagnostics") {
  for (i64 p : {2, 3, 5}) {
    FieldRef f = Field::prime(p);
    RingRef r = Ring::field(f);
    for (i64 om = 0; om < p; ++om) {
      GroupElement e = neutral_element(r, r->from_int(om), p);
      Membership m = membership(e);
      CHECK(m.member);
      CHECK(m.fermat_ok);
      CHECK(m.alpha_invertible);
    }
  }
  // a non-member: phi = t^2 at p=3, w=0 (alpha matrix singular)
  FieldRef f3 = Field::prime(3);
  RingRef r3 = Ring::field(f3);
  RPoly lam = rpoly_zero(r3, 3);
  lam[2] = r3->one();
  Membership m = membership(make_element(r3, r3->zero(), lam));
  CHECK(!m.member);
}

TEST_CASE("composition formula at p=2 and associativity") {
  FieldRef f4 = Field::extension(2, 2);
  for (i64 oi = 0; oi < 4; ++oi) {
    FElem omega = f4->nth(oi);
    auto group = enumerate_group(f4, omega);
    GroupElement e = neutral_element(Ring::field(f4), Ring::field(f4)->from_base(omega), 2);
    for (const auto& g : group) {
      CHECK(compose(g, e) == g);
      CHECK(compose(e, g) == g);
      for (const auto& h : group) {
        GroupElement gh = compose(g, h);
        // phi_gh = (m0 + m1 l0) + m1 l1 t
        CHECK(gh.lam[0] == h.lam[0] + h.lam[1] * g.lam[0]);
        CHECK(gh.lam[1] == h.lam[1] * g.lam[1]);
      }
    }
  }
}

TEST_CASE("inversion: e, eps + t, u t") {
  FieldRef f5 = Field::prime(5);
  RingRef r = Ring::laurent_eps(f5);
  RElem omega = r->zero();
  GroupElement e = neutral_element(r, omega, 5);
  CHECK(invert(e) == e);
  RPoly lam = rpoly_zero(r, 5);
  lam[0] = r->eps();
  lam[1] = r->one();
  GroupElement g = make_element(r, omega, lam);
  GroupElement gi = invert(g);
  CHECK(gi.lam[0] == -r->eps());
  CHECK(gi.lam[1] == r->one());
  RPoly lam2 = rpoly_zero(r, 5);
  lam2[1] = r->u();
  GroupElement h = make_element(r, omega, lam2);
  CHECK(invert(h).lam[1] == r->u(-1));
}

TEST_CASE("non-normality witness") {
  for (i64 p : {2, 3}) {
    NonNormalityWitness nw = non_normality_witness(p, Field::prime(p));
    CHECK(nw.matches_display);
    CHECK(nw.leaves_reduced_part);
    CHECK(nw.rendered == "eps*(u-1) + u*t");
    // the inverse of eps + t is -eps + t
    RingRef r = Ring::laurent_eps(Field::prime(p));
    CHECK(nw.inverse_of_g[0] == -r->eps());
    CHECK(nw.inverse_of_g[1] == r->one());
  }
}

TEST_CASE("borel membership") {
  FieldRef k = Field::ratfunc(2);
  RingRef r = Ring::field(k);
  RElem theta = r->from_base(k->gen());
  CHECK(borel_membership(r->zero(), r->one(), theta, r, 2));
  CHECK(!borel_membership(r->from_base(k->gen()), r->one(), theta, r, 2));
  // split case over a perfect field
  FieldRef f8 = Field::extension(2, 3);
  RingRef r8 = Ring::field(f8);
  FElem w = f8->gen();
  FElem rho = *w.p_root();
  for (i64 i = 1; i < 8; ++i) {
    FElem l1 = f8->nth(i);
    FElem l0 = rho * (f8->one() + l1);
    CHECK(borel_membership(r8->from_base(l0), r8->from_base(l1), r8->from_base(w), r8, 2));
  }
}

TEST_CASE("frobenius kernel membership") {
  FieldRef f5 = Field::prime(5);
  RingRef dual = Ring::dual(f5);
  RElem omega = dual->zero();
  CHECK(frobenius_kernel_membership(neutral_element(dual, omega, 5)));
  RPoly lam = rpoly_zero(dual, 5);
  lam[0] = dual->eps();
  lam[1] = dual->one();
  CHECK(frobenius_kernel_membership(make_element(dual, omega, lam)));
  // phi = 2t over F_5: 2^5 = 2 != 1
  RingRef rf = Ring::field(f5);
  RPoly lam2 = rpoly_zero(rf, 5);
  lam2[1] = rf->from_int(2);
  CHECK(!frobenius_kernel_membership(make_element(rf, rf->zero(), lam2)));
}

TEST_CASE("adjoint: neutral is the identity, additive shift, ut fixes td") {
  FieldRef f3 = Field::prime(3);
  RingRef trunc = Ring::trunc(f3);
  RElem omega = trunc->zero();
  // additive adjoint: phi_h = t + u gives Ad_h(f d) = f(t - u) d
  RPoly glam = rpoly_zero(trunc, 3);
  glam[0] = trunc->u();
  glam[1] = trunc->one();
  GroupElement g = make_element(trunc, omega, glam);
  REQUIRE(membership(g).member);
  RPoly f = rpoly_zero(trunc, 3);
  f[0] = trunc->from_int(2);
  f[1] = trunc->one();
  f[2] = trunc->from_int(1);
  RPoly shift = rpoly_zero(trunc, 3);
  shift[0] = -trunc->u();
  shift[1] = trunc->one();
  CHECK(adjoint(g, f) == rpoly_substitute(f, shift, omega));
  // ut fixes t d
  RingRef laurent = Ring::laurent_eps(f3);
  RPoly hlam = rpoly_zero(laurent, 3);
  hlam[1] = laurent->u();
  GroupElement h = make_element(laurent, laurent->zero(), hlam);
  RPoly td = rpoly_zero(laurent, 3);
  td[1] = laurent->one();
  CHECK(adjoint(h, td) == td);
}

TEST_CASE("group axioms on an exhaustive G_w(F_8)") {
  FieldRef f8 = Field::extension(2, 3);
  FElem omega = f8->gen();
  auto group = enumerate_group(f8, omega);
  CHECK(group.size() == 7);  // q - 1 members
  for (const auto& g : group) {
    GroupElement gi = invert(g);
    CHECK(membership(gi).member);
    for (const auto& h : group) {
      CHECK(membership(compose(g, h)).member);
      for (const auto& x : group)
        CHECK(compose(compose(g, h), x) == compose(g, compose(h, x)));
    }
  }
}

TEST_CASE("rational points rigidity over F_2(theta)") {
  FieldRef k = Field::ratfunc(2);
  RationalPointsReport rp = rational_points_unique(k, k->gen(), 2);
  CHECK(rp.unique);
  // and the p-power case is not rigid
  RationalPointsReport rp2 = rational_points_unique(k, k->gen().pow(2), 2);
  CHECK(!rp2.unique);
  CHECK(rp2.omega_is_p_power);
}
