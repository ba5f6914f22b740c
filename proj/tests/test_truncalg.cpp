#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "witt/truncalg.hpp"

using namespace witt;

namespace {

TruncElement univariate(TruncAlgebraRef alg, const std::vector<i64>& coeffs) {
  TruncElement f = alg->zero();
  for (size_t i = 0; i < coeffs.size(); ++i)
    f += alg->monomial({static_cast<int>(i), 0, 0}, alg->coeffs()->from_int(coeffs[i]));
  return f;
}

}  // namespace

TEST_CASE("truncated multiplication with the t^p = w rewrite") {
  FieldRef f5 = Field::prime(5);
  FElem omega = f5->from_int(3);
  TruncAlgebraRef alg = TruncAlgebra::make(f5, {omega});
  TruncElement t = alg->variable(0);
  CHECK(t.pow(4) * t.pow(2) == t.scaled(omega));  // t^6 = w t
  // f * 1 = f
  TruncElement f = univariate(alg, {1, 2, 0, 4});
  CHECK(f * alg->one() == f);
  // nilpotence at w = 0
  FieldRef f2 = Field::prime(2);
  TruncAlgebraRef a2 = TruncAlgebra::make(f2, {f2->zero()});
  CHECK((a2->variable(0) * a2->variable(0)).is_zero());
}

TEST_CASE("substitution: binomial, identity, and the reduced-part ingredient") {
  FieldRef f3 = Field::prime(3);
  TruncAlgebraRef alg = TruncAlgebra::make(f3, {f3->zero()});
  TruncElement t = alg->variable(0);
  CHECK(substitute(t * t, t + alg->one()) == t * t + t.scaled(f3->from_int(2)) + alg->one());
  TruncElement any = univariate(alg, {2, 1, 2});
  CHECK(substitute(t, any) == any);
}

TEST_CASE("partial derivatives") {
  FieldRef f5 = Field::prime(5);
  TruncAlgebraRef alg = TruncAlgebra::make(f5, {f5->one()});
  TruncElement t = alg->variable(0);
  CHECK(partial_derivative(t * t, 0) == t.scaled(f5->from_int(2)));
  CHECK(partial_derivative(alg->scalar(f5->from_int(3)), 0).is_zero());
  CHECK(partial_derivative(t.pow(4), 0) == t.pow(3).scaled(f5->from_int(4)));
}

TEST_CASE("units and inverses in the truncated algebra") {
  FieldRef f3 = Field::prime(3);
  TruncAlgebraRef alg = TruncAlgebra::make(f3, {f3->zero()});
  TruncElement t = alg->variable(0);
  auto inv = unit_inverse(alg->one() + t);
  REQUIRE(inv);
  CHECK(*inv == alg->one() - t + t * t);  // geometric series
  CHECK((alg->one() + t) * *inv == alg->one());
  CHECK(!is_unit(t));  // nilpotent
  // t over w = theta is a unit with inverse t^(p-1)/theta
  FieldRef e = Field::ratfunc(3);
  TruncAlgebraRef ae = TruncAlgebra::make(e, {e->gen()});
  auto tinv = unit_inverse(ae->variable(0));
  REQUIRE(tinv);
  CHECK(*tinv == ae->variable(0).pow(2).scaled(e->gen().inv()));
}

TEST_CASE("C coefficient instances from the displays") {
  // p = 2: C(l0 + l1 t) = l1
  FieldRef f2 = Field::prime(2);
  TruncAlgebraRef a2 = TruncAlgebra::make(f2, {f2->one()});
  CHECK(c_coefficient(univariate(a2, {1, 1})) == f2->one());
  CHECK(c_coefficient(univariate(a2, {1, 0})) == f2->zero());
  // p = 3: C = l1^2 - l0 l2 on all 27 inputs
  FieldRef f3 = Field::prime(3);
  for (i64 om = 0; om < 3; ++om) {
    TruncAlgebraRef a3 = TruncAlgebra::make(f3, {f3->from_int(om)});
    for (i64 l0 = 0; l0 < 3; ++l0)
      for (i64 l1 = 0; l1 < 3; ++l1)
        for (i64 l2 = 0; l2 < 3; ++l2) {
          FElem expect = f3->from_int(l1 * l1 - l0 * l2);
          CHECK(c_coefficient(univariate(a3, {l0, l1, l2})) == expect);
        }
  }
  // p = 5, f = t: C = 1
  FieldRef f5 = Field::prime(5);
  TruncAlgebraRef a5 = TruncAlgebra::make(f5, {f5->from_int(2)});
  CHECK(c_coefficient(univariate(a5, {0, 1})) == f5->one());
}

TEST_CASE("the two C routes and the Evans-Fuchs identity agree") {
  FieldRef f3 = Field::prime(3);
  for (i64 om = 0; om < 3; ++om) {
    TruncAlgebraRef alg = TruncAlgebra::make(f3, {f3->from_int(om)});
    for (i64 idx = 0; idx < 27; ++idx) {
      TruncElement f = univariate(alg, {idx % 3, (idx / 3) % 3, idx / 9});
      FElem c = c_coefficient(f);
      CHECK(c == c_coefficient_reduced_route(f));
      CHECK(c == c_coefficient_evans_fuchs(f));
    }
  }
  Rng rng(2);
  FieldRef f5 = Field::prime(5);
  for (int t = 0; t < 500; ++t) {
    TruncAlgebraRef alg = TruncAlgebra::make(f5, {rng.element(f5)});
    TruncElement f = univariate(alg, {rng.below(5), rng.below(5), rng.below(5), rng.below(5), rng.below(5)});
    FElem c = c_coefficient(f);
    CHECK(c == c_coefficient_reduced_route(f));
    CHECK(c == c_coefficient_evans_fuchs(f));
  }
}

TEST_CASE("symbolic C polynomials") {
  CHECK(c_polynomial_symbolic(2).str() == "l1");
  CHECK(c_polynomial_symbolic(3).str() == "l1^2 - l0*l2");
  CHECK_THROWS_AS(c_polynomial_symbolic(11), Error);
  for (i64 p : {2, 3, 5, 7}) {
    int deg = -1;
    CHECK(c_polynomial_symbolic(p).homogeneous_in_lambda(&deg));
    CHECK(deg == p - 1);
  }
}

TEST_CASE("golden file: the p=5 C polynomial byte-exactly") {
  std::ifstream in(std::string(GOLDEN_DIR) + "/c_poly_p5.txt");
  REQUIRE(in.good());
  std::string expected;
  std::getline(in, expected);
  CHECK(c_polynomial_symbolic(5).str() == expected);
}

TEST_CASE("derivations from values") {
  FieldRef f3 = Field::prime(3);
  FElem omega = f3->from_int(2);
  TruncAlgebraRef alg = TruncAlgebra::make(f3, {omega});
  // values = (1): the matrix of d/dt
  DerivationMatrix d = DerivationMatrix::from_values(alg, {alg->one()});
  CHECK(d.apply(alg->variable(0)) == alg->one());
  CHECK(d.apply(alg->one()).is_zero());
  // values = (t): diagonal i on t^i
  DerivationMatrix td = DerivationMatrix::from_values(alg, {alg->variable(0)});
  for (int i = 0; i < 3; ++i)
    CHECK(td.apply(alg->variable(0).pow(i)) == alg->variable(0).pow(i).scaled(f3->from_int(i)));
  // m = 2: values (x2, 0) is x2 d1
  TruncAlgebraRef alg2 = TruncAlgebra::make(f3, {f3->one(), f3->one()});
  DerivationMatrix m = DerivationMatrix::from_values(alg2, {alg2->variable(1), alg2->zero()});
  CHECK(m.apply(alg2->variable(0)) == alg2->variable(1));
  CHECK(m.apply(alg2->variable(1)).is_zero());
}

TEST_CASE("a non-derivation matrix is rejected") {
  FieldRef f3 = Field::prime(3);
  TruncAlgebraRef alg = TruncAlgebra::make(f3, {f3->zero()});
  Mat bad = Mat::identity(f3, alg->dim());  // the identity is not a derivation
  CHECK_THROWS_AS(DerivationMatrix::from_matrix(alg, bad), Error);
}

TEST_CASE("operator p-powers") {
  FieldRef f5 = Field::prime(5);
  for (i64 om : {0, 2}) {
    TruncAlgebraRef alg = TruncAlgebra::make(f5, {f5->from_int(om)});
    DerivationMatrix d = DerivationMatrix::from_values(alg, {alg->one()});
    CHECK(d.p_power().is_zero());  // d^p = 0
    DerivationMatrix td = DerivationMatrix::from_values(alg, {alg->variable(0)});
    CHECK(td.p_power() == td);  // (t d)^p = t d
  }
  // (f d)^p = C(f) f d on 200 random f over F_5
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    TruncAlgebraRef alg = TruncAlgebra::make(f5, {rng.element(f5)});
    TruncElement f = univariate(alg, {rng.below(5), rng.below(5), rng.below(5), rng.below(5), rng.below(5)});
    DerivationMatrix d = DerivationMatrix::from_values(alg, {f});
    DerivationMatrix expect = DerivationMatrix::from_values(alg, {f.scaled(c_coefficient(f))});
    CHECK(d.p_power() == expect);
  }
}

TEST_CASE("trunc element JSON round trip") {
  FieldRef f5 = Field::prime(5);
  TruncAlgebraRef alg = TruncAlgebra::make(f5, {f5->from_int(2)});
  TruncElement f = univariate(alg, {1, 0, 3, 0, 4});
  CHECK(TruncElement::from_json(alg, f.to_json()) == f);
}

TEST_CASE("multivariate input is rejected by the C machinery") {
  FieldRef f3 = Field::prime(3);
  TruncAlgebraRef alg2 = TruncAlgebra::make(f3, {f3->one(), f3->one()});
  CHECK_THROWS_AS(c_coefficient(alg2->variable(0)), Error);
}
