#pragma once

// Witt algebras g_w = Der_k(k[t]/(t^p - w)): construction, closed-form p-map,
// simplicity, p-closedness sweeps, the distinguished subalgebra spanned by
// t d/dt .. t^(p-1) d/dt, and the small-prime exceptional isomorphisms.

#include "witt/reslie.hpp"
#include "witt/truncalg.hpp"

namespace witt {

class WittAlgebra {
 public:
  // basis labels t^0 d, t^1 d, ..., t^(p-1) d in this order
  WittAlgebra(FieldRef k, const FElem& omega);

  const ResLieAlgebra& lie() const { return *lie_; }
  TruncAlgebraRef trunc() const { return trunc_; }
  FieldRef field() const { return k_; }
  const FElem& omega() const { return omega_; }
  i64 p() const { return k_->p(); }

  // f d/dt as a vector (coefficients of f), and back
  LieVector vector_of(const TruncElement& f) const;
  TruncElement poly_of(const LieVector& v) const;
  DerivationMatrix derivation_of(const LieVector& v) const;

 private:
  FieldRef k_;
  FElem omega_;
  TruncAlgebraRef trunc_;
  std::unique_ptr<ResLieAlgebra> lie_;
};

// p-map via the closed form (f d)^[p] = C(f) f d
LieVector witt_p_map(const WittAlgebra& w, const TruncElement& f);

struct PClosedSweep {
  i64 additive = 0;        // includes the zero vector
  i64 multiplicative = 0;
  i64 total = 0;
  bool all_closed = false;
  bool additive_matches_operator_route = false;  // additive <=> D^p = 0 as matrix
};
// exhaustive over F_{p^k}; requires p^(k p) <= 10^7
PClosedSweep p_closed_sweep(const WittAlgebra& w, int ext_degree = 1);

struct SimplicityResult {
  bool simple = false;
  Subspace proper_ideal;  // valid when not simple
};
// exhaustive ad-closure over the prime field; p <= 7
SimplicityResult is_simple(const WittAlgebra& w);

struct IsoCheck {
  bool verified = false;
  Mat map;                 // columns: images of the Witt basis
  std::string codomain;    // "k x| gl1" or "sl2"
  std::string failing_pair;
};
// p = 2: (a+bt)d -> (a,b) in k x| gl1;  p = 3: (a+bt+ct^2)d -> (b,a;-c,-b) in sl2.
// Intertwining of bracket and p-map is checked exhaustively over F_p and F_{p^2}.
IsoCheck small_prime_isomorphism(const WittAlgebra& w);

// span of t d, ..., t^(p-1) d for w = 0; certified a subalgebra and NOT an
// ideal (witness pair reported)
struct ReducedPart {
  Subspace space;
  bool subalgebra = false;
  bool ideal = true;
  std::pair<LieVector, LieVector> non_ideal_witness;
};
ReducedPart reduced_subalgebra(const WittAlgebra& w);

// S transitive iff S is not contained in the reduced part (w = 0 only)
bool transitivity_test(const WittAlgebra& w, const Subspace& s);

}  // namespace witt
