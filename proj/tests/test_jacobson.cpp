#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/jacobson.hpp"

using namespace witt;

TEST_CASE("field-ness criteria") {
  FieldRef e = Field::ratfunc(3);
  FElem theta = e->gen();
  CHECK(make_insep_extension(e, {theta}).is_field);
  CHECK(make_insep_extension(e, {theta + e->one()}).is_field);
  CHECK(make_insep_extension(e, {theta * (theta + e->one())}).is_field);
  CHECK(!make_insep_extension(e, {theta.pow(3)}).is_field);
  // r = 2 over a p-degree-1 base can never be a field
  CHECK(!make_insep_extension(e, {theta, theta + e->one()}).is_field);
  // perfect base fields never give fields
  CHECK(!make_insep_extension(Field::prime(3), {Field::prime(3)->one()}).is_field);
}

TEST_CASE("in_frobenius_span is exact") {
  FieldRef e = Field::ratfunc(3);
  FElem theta = e->gen();
  // E^p[theta] = E for the p-degree-1 field E
  CHECK(in_frobenius_span(theta + e->one(), theta));
  CHECK(in_frobenius_span(theta.pow(2), theta));
  // E^p[theta^3] = E^p: only p-th powers
  CHECK(in_frobenius_span(theta.pow(3), theta.pow(3)));
  CHECK(!in_frobenius_span(theta, theta.pow(3)));
}

TEST_CASE("derivation set parsing") {
  FieldRef e = Field::ratfunc(3);
  InsepExtension ext = make_insep_extension(e, {e->gen(), e->gen() + e->one()});
  DerivationSet h = parse_derivation_set(ext, "d1; T1*d1 + 2*T2^2*d2");
  REQUIRE(h.gens.size() == 2);
  CHECK(h.gens[0].value_on_variable(0) == ext.algebra->one());
  CHECK(h.gens[0].value_on_variable(1).is_zero());
  CHECK(h.gens[1].value_on_variable(0) == ext.algebra->variable(0));
  CHECK(h.gens[1].value_on_variable(1) ==
        ext.algebra->variable(1).pow(2).scaled(e->from_int(2)));
  CHECK_THROWS_AS(parse_derivation_set(ext, "T1"), Error);
}

TEST_CASE("fixed subrings") {
  FieldRef e = Field::ratfunc(3);
  FElem theta = e->gen();
  InsepExtension r1 = make_insep_extension(e, {theta});
  FixedSubring fs1 = fixed_subring(parse_derivation_set(r1, "d1"));
  CHECK(fs1.dim == 1);
  CHECK(fs1.multiplicatively_closed);
  CHECK(fs1.contains_unity);
  CHECK(fixed_subring(parse_derivation_set(r1, "T1*d1")).dim == 1);
  InsepExtension r2 = make_insep_extension(e, {theta, theta + e->one()});
  // kernel of d1 alone is E[T2], of dimension p
  CHECK(fixed_subring(parse_derivation_set(r2, "d1")).dim == 3);
}

TEST_CASE("foliation rank") {
  FieldRef e = Field::ratfunc(5);
  FElem theta = e->gen();
  InsepExtension r2 = make_insep_extension(e, {theta, theta + e->one()});
  CHECK(foliation_rank(parse_derivation_set(r2, "d1")) == 1);
  CHECK(foliation_rank(parse_derivation_set(r2, "d1; T1*d1")) == 1);  // F-dependent
  CHECK(foliation_rank(parse_derivation_set(r2, "d1; d2")) == 2);
}

TEST_CASE("degree identity battery") {
  for (i64 p : {2, 3, 5}) {
    FieldRef e = Field::ratfunc(p);
    FElem theta = e->gen();
    InsepExtension r1 = make_insep_extension(e, {theta});
    DegreeReport a = degree_identity_check(parse_derivation_set(r1, "d1"));
    CHECK(a.identity_holds);
    CHECK(a.fixed_dim == 1);
    CHECK(a.rank == 1);
    InsepExtension r1b = make_insep_extension(e, {theta * (theta + e->one())});
    CHECK(degree_identity_check(parse_derivation_set(r1b, "T1*d1")).identity_holds);
    InsepExtension r2 = make_insep_extension(e, {theta, theta + e->one()});
    DegreeReport b = degree_identity_check(parse_derivation_set(r2, "d1; d2"));
    CHECK(b.identity_holds);
    CHECK(b.rank == 2);
    CHECK(b.extension_dim == p * p);
    DegreeReport c = degree_identity_check(parse_derivation_set(r2, "d1; T1*d1"));
    CHECK(c.identity_holds);
    CHECK(c.fixed_dim == p);
    CHECK(c.rank == 1);
  }
}

TEST_CASE("inertia kernels") {
  FieldRef e = Field::ratfunc(5);
  FElem theta = e->gen();
  InsepExtension r1 = make_insep_extension(e, {theta});
  InertiaKernel a = inertia_kernel(parse_derivation_set(r1, "d1; T1*d1"));
  CHECK(a.codim == 1);
  REQUIRE(a.kernel_dim == 1);
  // the kernel vector is proportional to (T1, -1)
  const auto& v = a.kernel_basis[0];
  CHECK(v[0] * r1.algebra->scalar(-e->one()) == v[1] * r1.algebra->variable(0));
  CHECK(inertia_kernel(parse_derivation_set(r1, "d1")).kernel_dim == 0);
  InsepExtension r2 = make_insep_extension(e, {theta, theta + e->one()});
  InertiaKernel b = inertia_kernel(parse_derivation_set(r2, "d1; d2; T1*d1 + T2*d2"));
  CHECK(b.codim == 2);
  CHECK(b.kernel_dim == 1);
  // inertia codimension equals the foliation rank in every tested case
  for (const char* ders : {"d1", "d1; d2", "d1; T1*d1", "T2*d1; d2"}) {
    DerivationSet h = parse_derivation_set(r2, ders);
    CHECK(inertia_kernel(h).codim == foliation_rank(h));
  }
}

TEST_CASE("closure checks") {
  FieldRef e = Field::ratfunc(3);
  FElem theta = e->gen();
  InsepExtension r1 = make_insep_extension(e, {theta});
  ClosureReport a = closure_check(parse_derivation_set(r1, "d1"));
  CHECK(a.bracket_closed);
  CHECK(a.p_power_closed);
  CHECK(a.der_fixed_dim == 1);
  CHECK(a.round_trip);
  ClosureReport b = closure_check(parse_derivation_set(r1, "d1; T1*d1"));
  CHECK(b.bracket_closed);
  CHECK(b.p_power_closed);
  InsepExtension r2 = make_insep_extension(e, {theta, theta + e->one()});
  ClosureReport c = closure_check(parse_derivation_set(r2, "d1; d2"));
  CHECK(c.round_trip);
  CHECK(c.der_fixed_dim == 2);
  // the F-line on d1 + T2 d2 is bracket-closed but not p-power closed:
  // (d1 + T2 d2)^p = T2 d2 falls outside the line
  ClosureReport d = closure_check(parse_derivation_set(r2, "d1 + T2*d2"));
  CHECK(d.bracket_closed);
  CHECK(!d.p_power_closed);
}

TEST_CASE("no-subspace kernels") {
  // p = 2 hand solve: the u-coefficient forces a + bs + bt = 0, so a = b = 0
  FieldRef e2 = Field::ratfunc(2);
  CHECK(no_subspace_kernel(2, e2->gen()) == 0);
  FieldRef e3 = Field::ratfunc(3);
  CHECK(no_subspace_kernel(3, e3->gen()) == 0);
  FieldRef e5 = Field::ratfunc(5);
  CHECK(no_subspace_kernel(5, e5->gen()) == 0);
  CHECK_THROWS_AS(no_subspace_kernel(7, Field::ratfunc(7)->gen()), Error);
}
