#pragma once

// Truncated commutative algebras R[x_1..x_m]/(x_i^p - w_i) over a coefficient
// field, their derivations as matrices, and the Witt C-coefficient machinery
// (numeric and fully symbolic).

#include <array>
#include <map>

#include "witt/fields.hpp"

namespace witt {

// exponent vector, componentwise < p; unused variables are 0
using Expo = std::array<int, 3>;

class TruncAlgebra;
using TruncAlgebraRef = const TruncAlgebra*;

class TruncElement;

class TruncAlgebra {
 public:
  // omegas.size() = m <= 3
  static TruncAlgebraRef make(FieldRef coeffs, const std::vector<FElem>& omegas);

  FieldRef coeffs() const { return coeffs_; }
  int vars() const { return m_; }
  i64 p() const { return coeffs_->p(); }
  const FElem& omega(int i) const { return omegas_[static_cast<size_t>(i)]; }
  int dim() const { return dim_; }  // p^m

  // monomial basis in index order: index digits base p, exponent of x_i = digit i
  int monomial_index(const Expo& e) const;
  Expo monomial_exponent(int index) const;

  TruncElement zero() const;
  TruncElement one() const;
  TruncElement scalar(const FElem& c) const;
  TruncElement variable(int i) const;
  TruncElement monomial(const Expo& e, const FElem& c) const;
  TruncElement from_coords(const std::vector<FElem>& coords) const;

 private:
  TruncAlgebra() = default;
  FieldRef coeffs_ = nullptr;
  int m_ = 1;
  std::vector<FElem> omegas_;
  int dim_ = 0;
};

class TruncElement {
 public:
  TruncElement() = default;
  TruncAlgebraRef algebra() const { return alg_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, FElem>& terms() const { return terms_; }
  FElem coeff(const Expo& e) const;  // zero if absent

  TruncElement operator+(const TruncElement& o) const;
  TruncElement operator-(const TruncElement& o) const;
  TruncElement operator-() const;
  TruncElement operator*(const TruncElement& o) const;  // with x_i^p -> w_i
  TruncElement scaled(const FElem& c) const;
  TruncElement pow(i64 e) const;
  TruncElement& operator+=(const TruncElement& o) { return *this = *this + o; }
  TruncElement& operator-=(const TruncElement& o) { return *this = *this - o; }

  bool operator==(const TruncElement& o) const;
  bool operator!=(const TruncElement& o) const { return !(*this == o); }

  std::vector<FElem> coords() const;  // dense, monomial index order

  std::string str() const;
  json to_json() const;
  static TruncElement from_json(TruncAlgebraRef alg, const json& j);

 private:
  friend class TruncAlgebra;
  friend TruncElement substitute(const TruncElement&, const TruncElement&);
  TruncAlgebraRef alg_ = nullptr;
  std::map<Expo, FElem> terms_;  // no zero coefficients stored
  void set(const Expo& e, const FElem& c);
};

// formal partial derivative d/dx_i (well defined since d(x_i^p - w_i) = 0)
TruncElement partial_derivative(const TruncElement& f, int var);

// f univariate over R, a in any algebra over the same coefficients: sum f_i a^i
TruncElement substitute(const TruncElement& f, const TruncElement& a);

// multiplication-by-f matrix on the monomial basis
Mat multiplication_matrix(const TruncElement& f);

// unit test via invertibility of the multiplication matrix; inverse when a unit
std::optional<TruncElement> unit_inverse(const TruncElement& f);
bool is_unit(const TruncElement& f);

// C(f) = coefficient of t^(p-1) in f^(p-1), for univariate f: expansion happens
// unreduced in R[t] first, then t^(p+s) -> w t^s
FElem c_coefficient(const TruncElement& f);
// same value computed with reduction during expansion (cross-check route)
FElem c_coefficient_reduced_route(const TruncElement& f);
// Evans-Fuchs route: -d^(p-1)(f^(p-1)) read off as a constant
FElem c_coefficient_evans_fuchs(const TruncElement& f);

// ---------------------------------------------------------------------------
// Derivations as matrices
// ---------------------------------------------------------------------------

class DerivationMatrix {
 public:
  // matrix of sum_i values[i] * d/dx_i on the monomial basis (Leibniz verified)
  static DerivationMatrix from_values(TruncAlgebraRef alg, const std::vector<TruncElement>& values);
  // wrap an arbitrary coefficient-linear map, verifying the Leibniz rule
  static DerivationMatrix from_matrix(TruncAlgebraRef alg, const Mat& m);

  TruncAlgebraRef algebra() const { return alg_; }
  const Mat& matrix() const { return m_; }
  TruncElement apply(const TruncElement& f) const;
  TruncElement value_on_variable(int i) const;  // D(x_i)

  DerivationMatrix p_power() const;  // D^p, certified to satisfy Leibniz
  DerivationMatrix bracket(const DerivationMatrix& o) const;
  DerivationMatrix operator+(const DerivationMatrix& o) const;
  DerivationMatrix scaled(const FElem& c) const;
  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const DerivationMatrix& o) const { return alg_ == o.alg_ && m_ == o.m_; }

 private:
  DerivationMatrix(TruncAlgebraRef alg, Mat m) : alg_(alg), m_(std::move(m)) {}
  TruncAlgebraRef alg_;
  Mat m_;
};

// Leibniz check on all monomial basis pairs
bool satisfies_leibniz(TruncAlgebraRef alg, const Mat& m);

// ---------------------------------------------------------------------------
// Symbolic multivariate polynomials over F_p (for the C polynomial)
// ---------------------------------------------------------------------------

// variables l0..l_{p-1}, w; terms ordered by w-degree ascending, then lambda
// exponents lexicographically descending (the conventional display layout)
class MultiPoly {
 public:
  using Mono = std::vector<int>;  // length nvars = p + 1, last entry = w-degree

  MultiPoly() = default;
  MultiPoly(i64 p, int nlambda);
  static MultiPoly lambda(i64 p, int nlambda, int i);
  static MultiPoly omega(i64 p, int nlambda);
  static MultiPoly constant(i64 p, int nlambda, i64 c);

  i64 p() const { return p_; }
  int nlambda() const { return nlambda_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const;

  // true when every term has the same total degree in the lambda variables
  bool homogeneous_in_lambda(int* degree = nullptr) const;

  FElem eval(const std::vector<FElem>& lambdas, const FElem& omega) const;

  struct TermCmp {
    bool operator()(const Mono& a, const Mono& b) const;
  };
  const std::map<Mono, i64, TermCmp>& terms() const { return terms_; }
  void add_term(const Mono& m, i64 c);

  // ASCII rendering; small primes print with signs (l1^2 - l0*l2), p >= 5
  // keeps plain residues, matching the usual convention
  std::string str() const;
  json to_json() const;

 private:
  i64 p_ = 2;
  int nlambda_ = 2;
  std::map<Mono, i64, TermCmp> terms_;
};

// the symbolic C polynomial in l0..l_{p-1} and w; p <= 7
MultiPoly c_polynomial_symbolic(i64 p);

}  // namespace witt
