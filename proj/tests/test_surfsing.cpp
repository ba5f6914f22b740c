#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/surfsing.hpp"

using namespace witt;

TEST_CASE("example 1 invariants") {
  Example1Invariants a = example1_invariants(5, 4);
  CHECK(a.n == 15);
  CHECK(a.c1sq == 845);  // 5 * 13^2
  CHECK(a.c2 == 1375);   // 15 + 4*5*4*17
  CHECK(a.chi == 185);
  CHECK(a.chi_routes_agree);
  Example1Invariants b = example1_invariants(2, 4);
  CHECK(b.c1sq == 2);  // 2 * (8-4-3)^2
  // consistency sweep
  for (i64 p : {2, 5, 7})
    for (i64 d = 4; d <= 8; ++d) {
      Example1Invariants inv = example1_invariants(p, d);
      CHECK((inv.c1sq + inv.c2) % 12 == 0);
      CHECK(inv.chi_routes_agree);
    }
}

TEST_CASE("Phi, Psi, and Ekedahl's bound") {
  CHECK(psi_bound(2) == Frac(255));  // 169 + 78 + 8
  CHECK(phi_bound({845, 1375}) == Frac(27615024));
  long long h0 = ekedahl_h0(4, 185, 845);
  CHECK(h0 == 5255);
  CHECK(phi_bound({845, 1375}) == Frac(h0 * h0 - 1));
  // the c1sq = 1 case switches to m = 5
  long long h1 = ekedahl_h0(5, 2, 1);
  CHECK(phi_bound({1, 23}) == Frac(h1 * h1 - 1));
  CHECK_THROWS_AS(phi_bound({0, 7}), Error);
}

TEST_CASE("noether checks") {
  NoetherReport ok = noether_checks({845, 1375}, 3);
  CHECK(ok.c2_bound);  // 1375 <= 5*845 + 36
  CHECK(ok.chi_integral);
  NoetherReport bad = noether_checks({1, 100}, 0);
  CHECK(!bad.c2_bound);  // 100 > 41
  NoetherReport boundary = noether_checks({2, 10}, 3);
  CHECK(boundary.h0_omega_bound);  // 3 <= (2+4)/2
}

TEST_CASE("example 1 singular locus") {
  for (int k : {1, 2, 3}) {
    SingularLocusReport rep = example1_singular_locus(5, 4, k);
    CHECK(rep.unique_power_solution);
    REQUIRE(rep.interior.size() == 1);
    CHECK(rep.interior[0].first.is_one());
    CHECK(rep.interior[0].second.is_one());
    CHECK(rep.minus27_mod_p == 3);  // -27 = 3 mod 5
    CHECK(rep.minus27_nonzero);
  }
  SingularLocusReport rep2 = example1_singular_locus(2, 4, 2);
  CHECK(rep2.interior.size() == 1);  // gcd(5, 3) = 1
  CHECK_THROWS_AS(example1_singular_locus(3, 4, 1), Error);
}

TEST_CASE("power series arithmetic and substitution") {
  FieldRef f5 = Field::prime(5);
  PowerSeries3 x(f5, 6), y(f5, 6);
  x.add_term(1, 0, 0, f5->one());
  y.add_term(0, 1, 0, f5->one());
  PowerSeries3 q = x * y;
  CHECK(q.coeff(1, 1, 0) == f5->one());
  CHECK(q.order() == 2);
  CHECK(q.in_maximal_ideal_square());
  // linear substitution: swap x and y
  Mat swap(f5, 3, 3);
  swap.at(0, 1) = f5->one();
  swap.at(1, 0) = f5->one();
  swap.at(2, 2) = f5->one();
  CHECK(q.substitute_linear(swap) == q);
  // derivative
  CHECK(q.derivative(0) == y);
  // JSON round trip
  CHECK(PowerSeries3::from_json(q.to_json()) == q);
}

TEST_CASE("hessian criterion instances") {
  FieldRef f5 = Field::prime(5);
  PowerSeries3 a(f5, 8);
  a.add_term(1, 1, 0, f5->one());
  a.add_term(0, 0, 2, f5->one());
  HessianResult ha = hessian_criterion(a);
  REQUIRE(ha.ok);
  CHECK(ha.lambda.is_one());
  CHECK(ha.pair_first == 0);
  CHECK(ha.pair_second == 1);
  // x^2 + yz succeeds on the (y, z) pair
  PowerSeries3 b(f5, 8);
  b.add_term(2, 0, 0, f5->one());
  b.add_term(0, 1, 1, f5->one());
  HessianResult hb = hessian_criterion(b);
  REQUIRE(hb.ok);
  CHECK(hb.pair_first == 1);
  CHECK(hb.pair_second == 2);
  // x^2 + y^2 + z^2 over F_3 needs the quadratic extension
  FieldRef f3 = Field::prime(3);
  PowerSeries3 c(f3, 8);
  c.add_term(2, 0, 0, f3->one());
  c.add_term(0, 2, 0, f3->one());
  c.add_term(0, 0, 2, f3->one());
  HessianResult hc = hessian_criterion(c);
  REQUIRE(hc.ok);
  CHECK(hc.extended_field);
  CHECK(hc.field == Field::extension(3, 2));
  // cubes: every pair fails
  PowerSeries3 d(f5, 8);
  d.add_term(3, 0, 0, f5->one());
  d.add_term(0, 3, 0, f5->one());
  d.add_term(0, 0, 3, f5->one());
  CHECK(!hessian_criterion(d).ok);
  // constant/linear parts are rejected
  PowerSeries3 e(f5, 8);
  e.add_term(1, 0, 0, f5->one());
  CHECK_THROWS_AS(hessian_criterion(e), Error);
}

TEST_CASE("A-type recognition instances") {
  FieldRef f5 = Field::prime(5);
  PowerSeries3 a(f5, 10);
  a.add_term(1, 1, 0, f5->one());
  a.add_term(0, 0, 3, f5->one());
  ATypeResult ra = a_type_recognition(a, 10);
  REQUIRE(ra.ok);
  CHECK(ra.n == 3);  // A_2
  CHECK(ra.verified);
  // xy + z^3 + x^2 y^2 resolves in one iteration (x1 = x, y1 = y + x y^2)
  PowerSeries3 b = a;
  b.add_term(2, 2, 0, f5->one());
  ATypeResult rb = a_type_recognition(b, 10);
  REQUIRE(rb.ok);
  CHECK(rb.n == 3);
  CHECK(rb.verified);
  // xy + lambda z^2 with lambda != 0 is an A_1
  PowerSeries3 c(f5, 10);
  c.add_term(1, 1, 0, f5->one());
  c.add_term(0, 0, 2, f5->from_int(2));
  ATypeResult rc = recognize_a_type(c, 10);
  REQUIRE(rc.ok);
  CHECK(rc.n == 2);
  // xy alone: the z-series vanishes at every precision
  PowerSeries3 d(f5, 10);
  d.add_term(1, 1, 0, f5->one());
  ATypeResult rd = a_type_recognition(d, 10);
  CHECK(!rd.ok);
  CHECK(rd.precision_exhausted);
}

TEST_CASE("the (5,4) singular point is A_4 = A_(p-1)") {
  FieldRef f5 = Field::prime(5);
  PowerSeries3 local = example1_local_equation(5, 4, f5, 12);
  // the local equation is singular at the origin
  CHECK(local.in_maximal_ideal_square());
  ATypeResult res = recognize_a_type(local, 12);
  REQUIRE(res.ok);
  CHECK(res.n == 5);
  CHECK(res.verified);
}

TEST_CASE("raynaud invariants") {
  RaynaudInvariants a = raynaud_invariants(3, 2, 1);
  CHECK(a.Gsq == -24);  // 1*2*3*(2-6)
  CHECK(a.c1sq == 132);
  CHECK(a.c2 == -30);
  CHECK(a.routes_agree);
  CHECK(!a.chi_integral);  // flagged downstream, not suppressed
  // D^2 = -p^2 d via the lattice for a sweep
  for (i64 p : {3, 5, 7})
    for (i64 n = 2; n <= 4; ++n)
      for (i64 d = 1; d <= 5; ++d) {
        RaynaudInvariants inv = raynaud_invariants(p, n, d);
        CHECK(inv.routes_agree);
        CHECK(inv.Dsq == -p * p * d);
      }
  CHECK_THROWS_AS(raynaud_invariants(2, 2, 1), Error);
}

TEST_CASE("divisor lattice arithmetic") {
  DivisorClass F(1, 0, 4), S(0, 1, 4);
  CHECK(F.dot(F) == 0);
  CHECK(F.dot(S) == 1);
  CHECK(S.dot(S) == 4);
  DivisorClass D = F.scaled(-3 * 4) + S.scaled(3);  // -pd F + p S at p=3, d=4
  CHECK(D.dot(D) == -9 * 4);
}
