#pragma once

// Exact arithmetic for prime fields F_p, extension fields F_{p^k}, and the
// univariate rational function field F_p(theta), plus dense linear algebra
// over any of them.  All values are immutable and in canonical form, so
// equality is structural and elements can live in ordered containers.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace witt {

using i64 = long long;
using json = nlohmann::json;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

bool is_prime(i64 n);

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, little-endian coefficient vectors.
// The zero polynomial is the empty vector.
// ---------------------------------------------------------------------------
namespace fp {

using Poly = std::vector<i64>;

i64 norm(i64 a, i64 p);
i64 inv(i64 a, i64 p);
i64 pow_mod(i64 a, i64 e, i64 p);

int deg(const Poly& a);  // -1 for zero
void trim(Poly& a);
Poly add(i64 p, const Poly& a, const Poly& b);
Poly sub(i64 p, const Poly& a, const Poly& b);
Poly mul(i64 p, const Poly& a, const Poly& b);
Poly scale(i64 p, const Poly& a, i64 c);
// division with remainder; b must be nonzero
std::pair<Poly, Poly> divmod(i64 p, const Poly& a, const Poly& b);
Poly mod(i64 p, const Poly& a, const Poly& b);
Poly gcd(i64 p, Poly a, Poly b);  // monic (or zero)
Poly monic(i64 p, const Poly& a);
i64 eval(i64 p, const Poly& a, i64 x);
bool is_irreducible(i64 p, const Poly& a);
std::string to_string(const Poly& a, const std::string& var);

}  // namespace fp

// ---------------------------------------------------------------------------
// Field descriptors (interned; FieldRef pointers are stable and comparable)
// ---------------------------------------------------------------------------

enum class FieldKind { prime, extension, ratfunc };

class Field;
using FieldRef = const Field*;

class FElem;

class Field {
 public:
  static FieldRef prime(i64 p);
  // canonical modulus: first monic irreducible of degree k in enumeration order
  static FieldRef extension(i64 p, int k);
  // user modulus, validated for irreducibility; coefficients little-endian, monic
  static FieldRef extension(i64 p, const fp::Poly& modulus);
  static FieldRef ratfunc(i64 p, int degree_cap = 64);

  FieldKind kind() const { return kind_; }
  i64 p() const { return p_; }
  int degree() const { return k_; }  // extension degree; 1 for prime
  const fp::Poly& modulus() const { return modulus_; }
  int degree_cap() const { return degree_cap_; }
  bool finite() const { return kind_ != FieldKind::ratfunc; }
  i64 order() const;  // p^k; InfiniteField for ratfunc
  std::string name() const;

  FElem zero() const;
  FElem one() const;
  FElem from_int(i64 n) const;
  // alpha for extensions, theta for ratfunc; from_int(1) for prime fields
  FElem gen() const;
  FElem element(const fp::Poly& coeffs) const;              // extension payload
  FElem fraction(const fp::Poly& num, const fp::Poly& den) const;  // ratfunc

  // deterministic order; InfiniteField for ratfunc
  std::vector<FElem> enumerate() const;
  FElem nth(i64 index) const;  // finite fields, 0 <= index < order()

  json to_json() const;
  static FieldRef from_json(const json& j);

 private:
  Field() = default;
  FieldKind kind_ = FieldKind::prime;
  i64 p_ = 2;
  int k_ = 1;
  fp::Poly modulus_;
  int degree_cap_ = 64;
  friend class FElem;
};

// embedding along a root of the source modulus in the target field;
// supports prime -> anything with same p, and extension -> extension
FElem embed(const FElem& a, FieldRef target);

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

class FElem {
 public:
  FElem() = default;  // invalid; field() == nullptr
  FieldRef field() const { return f_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FElem operator+(const FElem& o) const;
  FElem operator-(const FElem& o) const;
  FElem operator*(const FElem& o) const;
  FElem operator/(const FElem& o) const;  // DivisionByZero
  FElem operator-() const;
  FElem& operator+=(const FElem& o) { return *this = *this + o; }
  FElem& operator-=(const FElem& o) { return *this = *this - o; }
  FElem& operator*=(const FElem& o) { return *this = *this * o; }

  FElem inv() const;
  FElem pow(i64 e) const;
  FElem frobenius() const;                 // a^p
  std::optional<FElem> p_root() const;     // b with b^p = a, if any
  bool is_p_power() const { return p_root().has_value(); }

  bool operator==(const FElem& o) const;
  bool operator!=(const FElem& o) const { return !(*this == o); }
  bool operator<(const FElem& o) const;  // canonical order, same field only

  // payload accessors
  i64 residue() const;                  // prime
  const fp::Poly& coeffs() const;       // extension
  const fp::Poly& num() const;          // ratfunc
  const fp::Poly& den() const;          // ratfunc

  std::string str() const;
  json to_json() const;
  static FElem from_json(FieldRef f, const json& j);

 private:
  friend class Field;
  FieldRef f_ = nullptr;
  i64 r_ = 0;        // prime payload
  fp::Poly a_, b_;   // extension: a_ (len k); ratfunc: a_ = num, b_ = den
  void canonicalize_ratfunc();
  static void check_same(const FElem& x, const FElem& y);
};

// ---------------------------------------------------------------------------
// Dense matrices over a field
// ---------------------------------------------------------------------------

class Mat {
 public:
  Mat() = default;
  Mat(FieldRef f, int rows, int cols);
  static Mat identity(FieldRef f, int n);
  static Mat from_rows(FieldRef f, const std::vector<std::vector<FElem>>& rows);

  FieldRef field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const FElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const FElem& c) const;
  Mat pow(i64 e) const;
  Mat transpose() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::vector<FElem> apply(const std::vector<FElem>& v) const;  // M * v

  // in-place reduced row echelon form; returns pivot columns
  std::vector<int> rref();
  int rank() const;
  std::optional<Mat> inverse() const;
  FElem det() const;

  std::string str() const;

 private:
  FieldRef f_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<FElem> a_;
};

struct LinSolve {
  bool consistent = false;
  // one particular solution per rhs column (cols(M) x cols(rhs))
  Mat particular;
  // canonical kernel basis of M, one row per basis vector
  Mat kernel;
};

// exact solve M x = rhs (rhs may have several columns); MixedFields / BadShape
LinSolve solve_linear(const Mat& M, const Mat& rhs);
Mat kernel_basis(const Mat& M);  // canonical (reduced echelon rows)

// ---------------------------------------------------------------------------
// Seeded randomness (all randomness in the library flows through this)
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(unsigned long long seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  unsigned long long next();
  i64 below(i64 n);  // uniform in [0, n)
  FElem element(FieldRef f, int ratfunc_degree = 2);
  FElem nonzero(FieldRef f, int ratfunc_degree = 2);

 private:
  unsigned long long state_;
};

}  // namespace witt
