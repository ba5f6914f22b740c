#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/fields.hpp"

using namespace witt;

TEST_CASE("prime field arithmetic instances") {
  FieldRef f5 = Field::prime(5);
  CHECK(f5->from_int(3) * f5->from_int(4) == f5->from_int(2));  // 12 mod 5
  CHECK(f5->from_int(3) + f5->from_int(4) == f5->from_int(2));
  CHECK(f5->from_int(1) / f5->from_int(3) == f5->from_int(2));  // 3 * 2 = 6 = 1
  CHECK_THROWS_AS(f5->one() / f5->zero(), Error);
}

TEST_CASE("mixed-field operations are rejected") {
  FieldRef f3 = Field::prime(3), f5 = Field::prime(5);
  CHECK_THROWS_AS(f3->one() + f5->one(), Error);
}

TEST_CASE("rational function arithmetic with the unreduced-fraction oracle") {
  FieldRef k = Field::ratfunc(2);
  FElem theta = k->gen();
  // (theta+1)/theta + 1/theta = theta/theta = 1
  FElem a = (theta + k->one()) / theta;
  FElem b = k->one() / theta;
  CHECK(a + b == k->one());

  // oracle: cross-multiplied unreduced arithmetic, then gcd reduction
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    FElem x = rng.element(k), y = rng.element(k);
    if (y.is_zero()) continue;
    // x + y via the field vs via raw polynomial cross multiplication
    fp::Poly num = fp::add(2, fp::mul(2, x.num(), y.den()), fp::mul(2, y.num(), x.den()));
    fp::Poly den = fp::mul(2, x.den(), y.den());
    CHECK(x + y == k->fraction(num, den));
    fp::Poly pn = fp::mul(2, x.num(), y.num());
    fp::Poly pd = fp::mul(2, x.den(), y.den());
    CHECK(x * y == k->fraction(pn, pd));
  }
}

TEST_CASE("canonical form: reduced fractions with monic denominators") {
  FieldRef k = Field::ratfunc(3);
  FElem theta = k->gen();
  FElem x = k->fraction({0, 2}, {0, 0, 2});  // 2theta / 2theta^2 = 1/theta
  CHECK(x == k->one() / theta);
  CHECK(x.den().back() == 1);  // monic
}

TEST_CASE("extension field F_9 with modulus a^2 + 1") {
  FieldRef f9 = Field::extension(3, 2);
  CHECK(f9->modulus() == fp::Poly{1, 0, 1});  // first irreducible in index order
  FElem alpha = f9->gen();
  CHECK(alpha * alpha == f9->from_int(-1));  // a^2 = -1 = 2
  CHECK(alpha.pow(3) == -alpha);             // frobenius via the modulus relation
  CHECK(alpha.frobenius() == -alpha);
}

TEST_CASE("user modulus validation") {
  CHECK_THROWS_AS(Field::extension(2, fp::Poly{1, 0, 1}), Error);  // x^2+1 = (x+1)^2
  CHECK(Field::extension(2, fp::Poly{1, 1, 1}) == Field::extension(2, 2));
}

TEST_CASE("frobenius instances and the homomorphism property") {
  FieldRef f5 = Field::prime(5);
  CHECK(f5->from_int(2).frobenius() == f5->from_int(2));  // Fermat
  FieldRef k3 = Field::ratfunc(3);
  FElem theta = k3->gen();
  CHECK((theta + k3->one()).frobenius() == theta.pow(3) + k3->one());
  // pow oracle
  CHECK((theta + k3->one()).frobenius() == (theta + k3->one()).pow(3));
  // ring homomorphism on 1000 random pairs
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    FElem a = rng.element(k3), b = rng.element(k3);
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
  }
}

TEST_CASE("is_p_power with witnesses") {
  FieldRef k = Field::ratfunc(5);
  FElem theta = k->gen();
  CHECK(!theta.is_p_power());  // degree 1 not divisible by 5
  auto root = theta.pow(5).p_root();
  REQUIRE(root);
  CHECK(*root == theta);
  // finite fields are perfect
  FieldRef f4 = Field::extension(2, 2);
  for (const auto& a : f4->enumerate()) {
    auto r = a.p_root();
    REQUIRE(r);
    CHECK(r->pow(2) == a);
  }
  // witness check over ratfunc: is_p_power(a) iff some b has b^p = a
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    FElem a = rng.element(k);
    auto r = a.p_root();
    if (r) CHECK(r->pow(5) == a);
    FElem b = rng.element(k);
    auto rp = b.pow(5).p_root();
    REQUIRE(rp);
    CHECK(*rp == b);
  }
}

TEST_CASE("field axioms exhaustively for F_2, F_3, F_4, F_8, F_9") {
  std::vector<FieldRef> fields = {Field::prime(2), Field::prime(3), Field::extension(2, 2),
                                  Field::extension(2, 3), Field::extension(3, 2)};
  for (FieldRef f : fields) {
    auto elems = f->enumerate();
    CHECK(static_cast<i64>(elems.size()) == f->order());
    for (const auto& a : elems) {
      if (!a.is_zero()) CHECK(a * a.inv() == f->one());
      for (const auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("enumeration: F_2 order, F_4 count, ratfunc error") {
  auto f2 = Field::prime(2)->enumerate();
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].is_zero());
  CHECK(f2[1].is_one());
  CHECK(Field::extension(2, 2)->enumerate().size() == 4);
  CHECK_THROWS_AS(Field::ratfunc(3)->enumerate(), Error);
}

TEST_CASE("solve_linear: identity system, zero matrix kernel, verification") {
  FieldRef f3 = Field::prime(3);
  Mat id = Mat::identity(f3, 3);
  Mat rhs(f3, 3, 1);
  rhs.at(0, 0) = f3->from_int(2);
  rhs.at(1, 0) = f3->one();
  LinSolve sol = solve_linear(id, rhs);
  REQUIRE(sol.consistent);
  CHECK(sol.particular == rhs);
  CHECK(sol.kernel.rows() == 0);

  Mat zero(f3, 1, 2);
  LinSolve sol2 = solve_linear(zero, Mat(f3, 1, 1));
  REQUIRE(sol2.consistent);
  CHECK(sol2.kernel.rows() == 2);

  // random systems: re-multiplication equals rhs; kernel annihilates M
  Rng rng(5);
  FieldRef k = Field::ratfunc(2);
  for (int t = 0; t < 30; ++t) {
    Mat m(k, 3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = rng.element(k, 1);
    Mat x(k, 4, 1);
    for (int j = 0; j < 4; ++j) x.at(j, 0) = rng.element(k, 1);
    Mat b = m * x;
    LinSolve sol3 = solve_linear(m, b);
    REQUIRE(sol3.consistent);
    CHECK(m * sol3.particular == b);
    Mat kt = sol3.kernel.transpose();
    CHECK((m * kt).is_zero());
  }
}

TEST_CASE("kernel basis is canonical echelon") {
  FieldRef f5 = Field::prime(5);
  Mat m(f5, 1, 3);
  m.at(0, 0) = f5->one();
  m.at(0, 1) = f5->from_int(2);
  m.at(0, 2) = f5->from_int(3);
  Mat k = kernel_basis(m);
  REQUIRE(k.rows() == 2);
  // rows are already in reduced echelon form: re-reducing changes nothing
  Mat k2 = k;
  k2.rref();
  CHECK(k == k2);
}

TEST_CASE("matrix determinant and inverse") {
  FieldRef f7 = Field::prime(7);
  Mat m(f7, 2, 2);
  m.at(0, 0) = f7->from_int(2);
  m.at(0, 1) = f7->from_int(3);
  m.at(1, 0) = f7->one();
  m.at(1, 1) = f7->from_int(4);
  CHECK(m.det() == f7->from_int(5));  // 8 - 3
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(m * *inv == Mat::identity(f7, 2));
}

TEST_CASE("field and element JSON round trips") {
  for (FieldRef f : {Field::prime(5), Field::extension(3, 2), Field::ratfunc(2)}) {
    CHECK(Field::from_json(f->to_json()) == f);
    Rng rng(9);
    FElem a = rng.element(f);
    CHECK(FElem::from_json(f, a.to_json()) == a);
  }
  // serialized forms per the interface: {"kind":"prime","p":5}
  CHECK(Field::prime(5)->to_json()["kind"] == "prime");
  json ext = Field::extension(3, 2)->to_json();
  CHECK(ext["kind"] == "ext");
  CHECK(ext["modulus"] == json::array({1, 0, 1}));
}

TEST_CASE("degree cap fails loudly") {
  FieldRef k = Field::ratfunc(2, 8);
  FElem theta = k->gen();
  CHECK_THROWS_AS(theta.pow(9), Error);
}

TEST_CASE("embeddings: prime into extension, F_4 into F_16") {
  FieldRef f2 = Field::prime(2), f4 = Field::extension(2, 2), f16 = Field::extension(2, 4);
  CHECK(embed(f2->one(), f4) == f4->one());
  FElem a = f4->gen();
  FElem img = embed(a, f16);
  // the image satisfies the F_4 modulus x^2 + x + 1
  CHECK((img * img + img + f16->one()).is_zero());
  // embedding is a homomorphism on all of F_4
  for (const auto& x : f4->enumerate())
    for (const auto& y : f4->enumerate()) {
      CHECK(embed(x + y, f16) == embed(x, f16) + embed(y, f16));
      CHECK(embed(x * y, f16) == embed(x, f16) * embed(y, f16));
    }
}
