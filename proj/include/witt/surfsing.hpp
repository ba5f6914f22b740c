#pragma once

// Surface-example numerics and singularity recognition: Chern invariants,
// the Phi/Psi dimension bounds, the singular locus of the first example
// family over finite fields, rational-double-point criteria, and the
// Raynaud-surface divisor lattice.

#include "witt/fields.hpp"

namespace witt {

struct ChernPair {
  long long c1sq = 0;
  long long c2 = 0;
};

// tiny exact rational (the bounds are quadratics over Z/144)
struct Frac {
  long long num = 0;
  long long den = 1;
  Frac() = default;
  Frac(long long n, long long d = 1);
  Frac operator+(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool is_integer() const { return den == 1; }
  std::string str() const;
};

struct Example1Invariants {
  long long n = 0;      // (d+1)(d+2)/2
  long long c1sq = 0;   // p (pd - d - 3)^2
  long long c2 = 0;     // 3p + d p (p-1)(pd-3)
  long long chi = 0;    // (c1sq + c2)/12
  long long chi_alt = 0;  // (12p - 9d(p-1)p + d^2(p-1)p(2p-1))/12
  bool hypotheses_ok = true;  // p != 3 prime, d >= 4
  bool chi_routes_agree = false;
};
Example1Invariants example1_invariants(i64 p, i64 d);

Frac phi_bound(const ChernPair& c);       // case split on c1sq >= 2 vs = 1
Frac psi_bound(long long c1sq);
long long ekedahl_h0(int m, long long chi, long long c1sq);  // chi + (m^2-m)c1sq/2

struct NoetherReport {
  bool c2_bound = false;        // c2 <= 5 c1^2 + 36
  bool h0_omega_bound = false;  // h0 <= (c1^2 + 4)/2
  bool chi_integral = false;    // (c1^2 + c2) % 12 == 0
};
NoetherReport noether_checks(const ChernPair& c, long long h0_omega);

struct SingularLocusReport {
  // interior solutions x, y != 0 of the simplified derivative system
  std::vector<std::pair<FElem, FElem>> interior;
  // boundary solutions with x = 0 or y = 0 of the full derivative system
  std::vector<std::pair<FElem, FElem>> boundary;
  bool unique_power_solution = false;  // X = Y = 1 is the only solution
  i64 minus27_mod_p = 0;               // double-partials value at X = Y = 1
  bool minus27_nonzero = false;
};
SingularLocusReport example1_singular_locus(i64 p, i64 d, int ext_degree);

// ---------------------------------------------------------------------------
// truncated power series in three variables
// ---------------------------------------------------------------------------

class PowerSeries3 {
 public:
  PowerSeries3() = default;
  PowerSeries3(FieldRef f, int precision);  // keeps total degree < precision

  FieldRef field() const { return f_; }
  int precision() const { return prec_; }
  bool is_zero() const { return terms_.empty(); }

  FElem coeff(int a, int b, int c) const;
  void add_term(int a, int b, int c, const FElem& coef);
  const std::map<std::array<int, 3>, FElem>& terms() const { return terms_; }

  PowerSeries3 operator+(const PowerSeries3& o) const;
  PowerSeries3 operator-(const PowerSeries3& o) const;
  PowerSeries3 operator-() const;
  PowerSeries3 operator*(const PowerSeries3& o) const;
  PowerSeries3 scaled(const FElem& c) const;
  PowerSeries3 pow(i64 e) const;
  bool operator==(const PowerSeries3& o) const;

  PowerSeries3 derivative(int var) const;
  // linear change of coordinates: new variable i = sum_j m(i,j) old_j is
  // substituted for variable i, i.e. result(x) = (*this)(m * x)
  PowerSeries3 substitute_linear(const Mat& m) const;
  // map all coefficients into an extension of the coefficient field
  PowerSeries3 embedded(FieldRef target) const;

  int order() const;  // lowest total degree of a nonzero term; -1 if zero
  bool in_maximal_ideal_square() const;

  std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;
  json to_json() const;
  static PowerSeries3 from_json(const json& j);

 private:
  FieldRef f_ = nullptr;
  int prec_ = 0;
  std::map<std::array<int, 3>, FElem> terms_;
};

struct HessianResult {
  bool ok = false;
  int pair_first = -1, pair_second = -1, zvar = -1;
  bool extended_field = false;
  FieldRef field = nullptr;     // possibly a quadratic extension
  Mat change;                   // new coords = change * old coords
  PowerSeries3 transformed;     // f in the new coordinates: xy + lambda z^2 + ...
  FElem lambda;
  std::string reason;
};
// tries the variable pairs (0,1), (0,2), (1,2); a pair succeeds when
// (d2f/du dv)^2 - (d2f/du^2)(d2f/dv^2) has a unit constant term
HessianResult hessian_criterion(const PowerSeries3& f);

struct ATypeResult {
  bool ok = false;
  int n = 0;  // (f) = (xy + z^n), type A_{n-1}
  int certified_precision = 0;
  bool precision_exhausted = false;
  bool verified = false;  // u^-1 f == X Y + z^n checked as series
};
// f must already be in the shape xy + lambda z^2 + (higher order)
ATypeResult a_type_recognition(const PowerSeries3& f, int precision);
// convenience: hessian normalization followed by recognition
ATypeResult recognize_a_type(const PowerSeries3& f, int precision);

// local equation of the first example family at the interior singular point,
// recentred so the singular point is the origin; variables (X, Y, T)
PowerSeries3 example1_local_equation(i64 p, i64 d, FieldRef k, int precision);

struct RaynaudInvariants {
  long long c1sq = 0, c2 = 0;
  long long Gsq = 0, Gsq_lattice = 0;
  long long Gprime_sq = 0, Gprime_sq_lattice = 0;
  long long Dsq = 0, Dsq_lattice = 0;
  bool routes_agree = false;
  bool chi_integral = false;  // flagged, not assumed
};
RaynaudInvariants raynaud_invariants(i64 p, i64 n, i64 d);

// rank-2 lattice Z F + Z S with F^2 = 0, F.S = 1, S^2 = d
struct DivisorClass {
  long long a = 0, b = 0;  // a F + b S
  long long d = 0;
  DivisorClass(long long a_, long long b_, long long d_) : a(a_), b(b_), d(d_) {}
  long long dot(const DivisorClass& o) const;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass scaled(long long c) const;
};

}  // namespace witt
