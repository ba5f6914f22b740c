#pragma once

// R-valued points of the automorphism group functor G_w of Spec k[t]/(t^p - w)
// over small coefficient rings: membership, group law, inversion, the Borel
// subgroup, Frobenius-kernel points, the adjoint representation, and the
// explicit non-normality witness.

#include "witt/wittalg.hpp"

namespace witt {

enum class RingKind { field, dual, trunc, laurent_eps };

class Ring;
using RingRef = const Ring*;

// sparse (u-exponent, eps-degree) -> base field coefficient
class RElem {
 public:
  RElem() = default;
  RingRef ring() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  RElem operator+(const RElem& o) const;
  RElem operator-(const RElem& o) const;
  RElem operator-() const;
  RElem operator*(const RElem& o) const;
  RElem& operator+=(const RElem& o) { return *this = *this + o; }
  RElem& operator-=(const RElem& o) { return *this = *this - o; }
  RElem pow(i64 e) const;  // e >= 0
  std::optional<RElem> unit_inverse() const;
  bool is_unit() const { return unit_inverse().has_value(); }

  bool operator==(const RElem& o) const;
  bool operator!=(const RElem& o) const { return !(*this == o); }
  bool operator<(const RElem& o) const;

  const std::map<std::pair<int, int>, FElem>& terms() const { return terms_; }
  // a(u) + eps b(u): parts by eps-degree
  std::map<int, FElem> part(int eps_degree) const;

  std::string str() const;

 private:
  friend class Ring;
  RingRef r_ = nullptr;
  std::map<std::pair<int, int>, FElem> terms_;
  void set(int uexp, int epsdeg, const FElem& c);
};

class Ring {
 public:
  static RingRef field(FieldRef f);
  static RingRef dual(FieldRef f);         // F[eps]/(eps^2)
  static RingRef trunc(FieldRef f);        // F[u]/(u^p)
  static RingRef laurent_eps(FieldRef f);  // F[u,u^-1,eps]/(eps^2)

  RingKind kind() const { return kind_; }
  FieldRef base() const { return base_; }
  i64 p() const { return base_->p(); }
  std::string name() const;

  RElem zero() const;
  RElem one() const;
  RElem from_base(const FElem& c) const;
  RElem from_int(i64 n) const;
  RElem eps() const;  // dual / laurent_eps
  RElem u(int exponent = 1) const;  // trunc (exponent >= 0) / laurent_eps
  RElem monomial(int uexp, int epsdeg, const FElem& c) const;

  bool finite() const;
  i64 order() const;
  RElem nth(i64 index) const;
  std::vector<RElem> enumerate() const;

 private:
  Ring() = default;
  static RingRef intern(RingKind kind, FieldRef base);
  RingKind kind_ = RingKind::field;
  FieldRef base_ = nullptr;
  friend class RElem;
};

// truncated polynomials over a ring: length-p coefficient vectors mod t^p = w
using RPoly = std::vector<RElem>;

RPoly rpoly_zero(RingRef r, i64 p);
RPoly rpoly_mul(const RPoly& a, const RPoly& b, const RElem& omega);
RPoly rpoly_substitute(const RPoly& f, const RPoly& g, const RElem& omega);  // f(g(t))
RPoly rpoly_derivative(const RPoly& f);
std::string rpoly_str(const RPoly& f);
// inverse of f in R[t]/(t^p - w) via the multiplication matrix
std::optional<RPoly> rpoly_unit_inverse(const RPoly& f, const RElem& omega);

struct GroupElement {
  RingRef ring = nullptr;
  RElem omega;
  RPoly lam;  // lambda_0 .. lambda_{p-1}
  i64 p() const { return static_cast<i64>(lam.size()); }
  bool operator==(const GroupElement& o) const;
  std::string str() const { return rpoly_str(lam); }
};

GroupElement neutral_element(RingRef r, const RElem& omega, i64 p);
GroupElement make_element(RingRef r, const RElem& omega, RPoly lam);

struct Membership {
  bool member = false;
  bool fermat_ok = false;   // lam_0^p + (lam_1 - 1)^p w + ... = 0
  bool alpha_invertible = false;
  std::string reason;
};
Membership membership(const GroupElement& g);

// alpha matrix: column j = coefficients of phi_g(t)^j
std::vector<RPoly> alpha_columns(const GroupElement& g);

GroupElement compose(const GroupElement& g, const GroupElement& h);  // phi_h(phi_g(t))
GroupElement invert(const GroupElement& g);
GroupElement conjugate(const GroupElement& g, const GroupElement& x);  // g x g^-1

bool borel_membership(const RElem& lam0, const RElem& lam1, const RElem& omega, RingRef r, i64 p);
bool frobenius_kernel_membership(const GroupElement& g);

// Ad_g(f d) = f(phi(t)) / phi'(t) d with phi = phi_{g^-1}
RPoly adjoint(const GroupElement& g, const RPoly& f);

struct NonNormalityWitness {
  RPoly conjugated;       // phi_{g^-1}(phi_h(phi_g(t)))
  RPoly inverse_of_g;     // phi_{g^-1}
  std::string rendered;   // canonical ASCII, e.g. "eps*(u - 1) + u*t"
  bool leaves_reduced_part = false;  // nonzero constant term
  bool matches_display = false;
};
// over k[u,u^-1,eps]/(eps^2) with phi_g = eps + t and phi_h = u t, w = 0
NonNormalityWitness non_normality_witness(i64 p, FieldRef base);

// exhaustive rational points of G_w(F_q) (all tuples tested for membership)
std::vector<GroupElement> enumerate_group(FieldRef fq, const FElem& omega);

// G_w(k) = {e} for w not a p-th power in k: the Fermat form is anisotropic
// because 1, w, .., w^(p-1) are independent over k^p
struct RationalPointsReport {
  bool omega_is_p_power = false;
  bool neutral_is_member = false;
  bool unique = false;  // certified via the p-power independence test
};
RationalPointsReport rational_points_unique(FieldRef k, const FElem& omega, i64 p);

}  // namespace witt
