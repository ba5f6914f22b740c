#pragma once

// Core restricted-Lie-algebra engine: structure constants, brackets, the s_r
// universal expressions, p-map extension to arbitrary vectors, axiom
// verification, ideals/center, restricted derivations, semidirect products,
// standard algebras, toral rank, and brute-force classification tools.

#include "witt/fields.hpp"

namespace witt {

class ResLieAlgebra;
using LieAlgRef = const ResLieAlgebra*;

struct LieVector {
  LieAlgRef alg = nullptr;
  std::vector<FElem> c;

  bool is_zero() const;
  LieVector operator+(const LieVector& o) const;
  LieVector operator-(const LieVector& o) const;
  LieVector operator-() const;
  LieVector scaled(const FElem& s) const;
  bool operator==(const LieVector& o) const;
  bool operator!=(const LieVector& o) const { return !(*this == o); }
  std::string str() const;
};

class Subspace {
 public:
  Subspace() = default;
  // rows of `basis` span the subspace; reduced to canonical echelon form
  Subspace(LieAlgRef alg, const Mat& basis);
  static Subspace span(LieAlgRef alg, const std::vector<LieVector>& vecs);

  LieAlgRef algebra() const { return alg_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  LieVector basis_vector(int i) const;
  bool contains(const LieVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return alg_ == o.alg_ && basis_ == o.basis_; }

 private:
  LieAlgRef alg_ = nullptr;
  Mat basis_;
};

struct AxiomReport {
  bool passed = true;
  std::vector<std::string> failures;  // human-readable counterexamples
  long long vectors_checked = 0;
  bool exhaustive = false;
  std::string str() const;
};

class ResLieAlgebra {
 public:
  // bracket[i][j] = coefficient vector of [e_i, e_j]; pmap[i] = e_i^[p].
  // Antisymmetry, Jacobi, and the basis compatibility ad(e_i)^p = ad(m_i)
  // are verified at construction unless `verify` is false.
  ResLieAlgebra(FieldRef field, std::vector<std::vector<std::vector<FElem>>> bracket,
                std::vector<std::vector<FElem>> pmap, std::string name = "",
                bool verify = true);

  FieldRef field() const { return field_; }
  int dim() const { return n_; }
  i64 p() const { return field_->p(); }
  const std::string& name() const { return name_; }

  LieVector zero() const;
  LieVector basis(int i) const;
  LieVector vector(std::vector<FElem> coords) const;
  const Mat& ad_matrix(int i) const { return ad_[static_cast<size_t>(i)]; }
  Mat ad(const LieVector& x) const;

  const std::vector<FElem>& bracket_const(int i, int j) const {
    return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const std::vector<FElem>& pmap_const(int i) const { return m_[static_cast<size_t>(i)]; }

  json to_json() const;
  static ResLieAlgebra from_json(const json& j);

 private:
  FieldRef field_;
  int n_;
  std::vector<std::vector<std::vector<FElem>>> c_;
  std::vector<std::vector<FElem>> m_;
  std::vector<Mat> ad_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

LieVector bracket(const LieVector& x, const LieVector& y);

// s_r(x,y) = -(1/r) sum over u:{1..p-1}->{0,1} with exactly r zeros of
// ad_{t_u(1)} ... ad_{t_u(p-1)} (t_1), where t_0 = x, t_1 = y
LieVector s_r(const LieVector& x, const LieVector& y, int r);

// p-map of an arbitrary vector, folded over the basis terms via (R3)
LieVector p_map(const LieVector& x);
LieVector p_map_iterate(const LieVector& x, int times);  // x^[p^times]
// same fold over a caller-chosen basis order (well-definedness property)
LieVector p_map_with_order(const LieVector& x, const std::vector<int>& order);

AxiomReport verify_axioms(const ResLieAlgebra& g, Rng& rng, long long sample_budget = 200);

// standard algebras
ResLieAlgebra trivial_algebra(FieldRef f, int n);
ResLieAlgebra gl1(FieldRef f);
ResLieAlgebra gl(FieldRef f, int n);
ResLieAlgebra sl(FieldRef f, int n);  // n = 2: basis (h, x, y) from matrices
ResLieAlgebra semidirect_kn_gl1(FieldRef f, int n);

Subspace center(const ResLieAlgebra& g);
Subspace derived_subalgebra(const ResLieAlgebra& g);
bool is_subalgebra(const ResLieAlgebra& g, const Subspace& s);
// when the field is finite and the span is small, double-checks p-map
// stability by enumerating the span
bool is_ideal(const ResLieAlgebra& g, const Subspace& s,
              std::pair<LieVector, LieVector>* witness = nullptr);

// D as a matrix acting on g, restricted-derivation test on `domain`
bool is_restricted_derivation(const ResLieAlgebra& g, const Mat& d, const Subspace& domain,
                              Rng& rng, long long sample_budget = 100);

// semidirect product a x| h along phi (one matrix per h-basis vector acting on a)
ResLieAlgebra semidirect_product(const ResLieAlgebra& a, const ResLieAlgebra& h,
                                 const std::vector<Mat>& phi, Rng& rng);

enum class PClosedKind { additive, multiplicative, not_closed };
struct PClosedResult {
  PClosedKind kind;
  FElem scalar;  // x^[p] = scalar * x when closed
};
PClosedResult is_p_closed(const LieVector& x);

int toral_rank_lower_bound(const ResLieAlgebra& g, int ext_degree = 1);
bool is_unipotent(const ResLieAlgebra& g, int nu_max = -1);

struct Fingerprint {
  i64 p = 0;
  int ext_degree = 1;
  int dim = 0;
  int center_dim = 0;
  int derived_dim = 0;
  int toral_lb = 0;
  i64 additive = 0;        // counts over F_{p^k}, zero vector included
  i64 multiplicative = 0;
  i64 not_closed = 0;
  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string str() const;
  json to_json() const;
};
Fingerprint fingerprint(const ResLieAlgebra& g, int ext_degree = 1);

// base-change an algebra with prime base field to F_{p^k}
ResLieAlgebra base_change(const ResLieAlgebra& g, FieldRef target);

// materialize a subalgebra as an algebra in its own basis
ResLieAlgebra restrict_to(const ResLieAlgebra& g, const Subspace& s);

struct SubalgebraRecord {
  Subspace space;
  Fingerprint fp;
  bool transitive = false;  // not contained in the designated subspace
};
// all subspaces closed under bracket and p-map, echelon-lex order; records
// are fingerprinted over F_{p^fingerprint_ext} (twisted forms of gl1 occur
// over F_p itself and trivialize over the quadratic extension)
std::vector<SubalgebraRecord> subalgebra_enumeration(const ResLieAlgebra& g,
                                                     const Subspace* designated = nullptr,
                                                     int fingerprint_ext = 1);

struct AutomorphismCount {
  i64 count = 0;
  std::vector<Mat> sample;  // first few automorphisms in scan order
};
AutomorphismCount automorphism_points(const ResLieAlgebra& g, FieldRef r);

// all vectors of g over its own (finite) field, deterministic order
std::vector<LieVector> enumerate_vectors(const ResLieAlgebra& g);

}  // namespace witt
