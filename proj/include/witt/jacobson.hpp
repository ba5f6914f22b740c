#pragma once

// The Jacobson correspondence at desk scale: fixed fields of derivation sets
// on purely inseparable extensions F = E[T_1..T_r]/(T_i^p - mu_i), foliation
// rank, inertia kernels, and the invariant-subspace linear system.

#include "witt/truncalg.hpp"

namespace witt {

struct InsepExtension {
  FieldRef base = nullptr;       // E
  std::vector<FElem> mu;         // mu_1..mu_r in E
  TruncAlgebraRef algebra = nullptr;  // F as a truncated algebra over E
  bool is_field = false;
  int r() const { return static_cast<int>(mu.size()); }
  i64 p() const { return base->p(); }
  int dim() const { return algebra->dim(); }  // p^r
};

// r <= 2; field-ness decided exactly: r = 1 needs mu_1 not in E^p, r = 2
// additionally needs mu_2 outside (E[T_1]/(T_1^p - mu_1))^p = E^p[mu_1]
InsepExtension make_insep_extension(FieldRef base, const std::vector<FElem>& mu);

// exact test mu in E^p[mu1] (used for the r = 2 field criterion)
bool in_frobenius_span(const FElem& mu, const FElem& mu1);

struct DerivationSet {
  InsepExtension ext;
  std::vector<DerivationMatrix> gens;  // images of an F_p-basis of h
  std::vector<std::string> labels;
};

// parse "d1; T1*d1 + T2*d2; ..." into a derivation set (dI, TI tokens,
// integer coefficients, products by *)
DerivationSet parse_derivation_set(const InsepExtension& ext, const std::string& text);

struct FixedSubring {
  Mat basis;        // rows: E-coordinates of a basis of the joint kernel
  int dim = 0;      // E-dimension
  bool multiplicatively_closed = false;
  bool contains_unity = false;
};
FixedSubring fixed_subring(const DerivationSet& h);

// F-rank of the matrix with rows (D_i(T_1), ..., D_i(T_r)); requires F a field
int foliation_rank(const DerivationSet& h);

struct InertiaKernel {
  int codim = 0;                       // = foliation rank
  int kernel_dim = 0;                  // n - rank
  std::vector<std::vector<TruncElement>> kernel_basis;  // vectors in F^n
};
InertiaKernel inertia_kernel(const DerivationSet& h);

struct DegreeReport {
  int fixed_dim = 0;
  int rank = 0;
  i64 extension_dim = 0;  // p^r
  bool identity_holds = false;  // p^r / fixed_dim = p^rank
};
DegreeReport degree_identity_check(const DerivationSet& h);

struct ClosureReport {
  bool bracket_closed = false;   // F-span of the D_i closed under bracket
  bool p_power_closed = false;   // ... and under operator p-power
  int der_fixed_dim = 0;         // F-dimension of Der_{F^h}(F)
  bool round_trip = false;       // der_fixed_dim == foliation rank
};
ClosureReport closure_check(const DerivationSet& h);

// Unknowns lam_{ij} (1 <= i <= p-1, 0 <= j <= p-1) over E = F_p(theta); the
// full invariance identity sum lam_{ij} (s+u)^j (t+u)^i = sum lam_{ij} s^j t^i
// is imposed in E[t,s,u]/(t^p, s^p - w, u^p) by matching every monomial.
// Returns the kernel dimension (expected 0).
int no_subspace_kernel(i64 p, const FElem& omega);

}  // namespace witt
