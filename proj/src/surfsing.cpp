#include "witt/surfsing.hpp"

#include <numeric>
#include <sstream>

namespace witt {

// ---------------------------------------------------------------------------
// exact fractions
// ---------------------------------------------------------------------------

Frac::Frac(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail("DivisionByZero", "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Frac Frac::operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
Frac Frac::operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }

std::string Frac::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------
// example 1 numerics
// ---------------------------------------------------------------------------

Example1Invariants example1_invariants(i64 p, i64 d) {
  Example1Invariants out;
  out.hypotheses_ok = is_prime(p) && p != 3 && d >= 4;
  out.n = (d + 1) * (d + 2) / 2;
  long long base = p * d - d - 3;
  out.c1sq = p * base * base;
  out.c2 = 3 * p + d * p * (p - 1) * (p * d - 3);
  long long twelve_chi = out.c1sq + out.c2;
  if (twelve_chi % 12 != 0) fail("NonIntegralChi", "c1^2 + c2 not divisible by 12");
  out.chi = twelve_chi / 12;
  long long alt_num = 12 * p - 9 * d * (p - 1) * p + d * d * (p - 1) * p * (2 * p - 1);
  if (alt_num % 12 != 0) fail("NonIntegralChi", "summation formula for chi not divisible by 12");
  out.chi_alt = alt_num / 12;
  out.chi_routes_agree = out.chi == out.chi_alt;
  return out;
}

Frac phi_bound(const ChernPair& c) {
  if (c.c1sq < 1) fail("BadC1", "Phi requires c1^2 >= 1");
  long long m = c.c1sq >= 2 ? 73 : 121;
  long long t = m * c.c1sq + c.c2;
  return Frac(t * t, 144) + Frac(-1);
}

Frac psi_bound(long long c1sq) {
  if (c1sq < 1) fail("BadC1", "Psi requires c1^2 >= 1");
  if (c1sq >= 2) return Frac(169 * c1sq * c1sq, 4) + Frac(39 * c1sq + 8);
  return Frac(441 * c1sq * c1sq, 4) + Frac(63 * c1sq + 8);
}

long long ekedahl_h0(int m, long long chi, long long c1sq) {
  long long twice = static_cast<long long>(m) * m - m;  // even
  return chi + twice / 2 * c1sq;
}

NoetherReport noether_checks(const ChernPair& c, long long h0_omega) {
  NoetherReport out;
  out.c2_bound = c.c2 <= 5 * c.c1sq + 36;
  out.h0_omega_bound = 2 * h0_omega <= c.c1sq + 4;
  out.chi_integral = (c.c1sq + c.c2) % 12 == 0;
  return out;
}

SingularLocusReport example1_singular_locus(i64 p, i64 d, int ext_degree) {
  if (p == 3) fail("CharThree", "the linear system degenerates at p = 3");
  SingularLocusReport out;
  // the system -1 + 2X - Y = 0, -1 - X + 2Y = 0 over F_p
  FieldRef fp_field = Field::prime(p);
  Mat sys(fp_field, 2, 2);
  sys.at(0, 0) = fp_field->from_int(2);
  sys.at(0, 1) = fp_field->from_int(-1);
  sys.at(1, 0) = fp_field->from_int(-1);
  sys.at(1, 1) = fp_field->from_int(2);
  Mat rhs(fp_field, 2, 1);
  rhs.at(0, 0) = fp_field->one();
  rhs.at(1, 0) = fp_field->one();
  LinSolve sol = solve_linear(sys, rhs);
  out.unique_power_solution = sol.consistent && sol.kernel.rows() == 0 &&
                              sol.particular.at(0, 0).is_one() && sol.particular.at(1, 0).is_one();
  // double partials at X = Y = 1: 1 + 4 + 4 - 4 - 4 - 28 = -27
  out.minus27_mod_p = fp::norm(-27, p);
  out.minus27_nonzero = out.minus27_mod_p != 0;
  // enumerate the actual locus over F_{p^k}
  FieldRef k = ext_degree == 1 ? fp_field : Field::extension(p, ext_degree);
  if (k->order() > 10000) fail("SearchSpaceTooLarge", "singular locus enumeration above 10^4");
  i64 e = p * d - 3;
  auto elems = k->enumerate();
  auto dfdx = [&](const FElem& x, const FElem& y) {
    // -y + 2 x^(pd-3) y - y^(pd-2)
    return -y + k->from_int(2) * x.pow(e) * y - y.pow(e + 1);
  };
  auto dfdy = [&](const FElem& x, const FElem& y) {
    // -x - x^(pd-2) + 2 x y^(pd-3)
    return -x - x.pow(e + 1) + k->from_int(2) * x * y.pow(e);
  };
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (!dfdx(x, y).is_zero() || !dfdy(x, y).is_zero()) continue;
      if (x.is_zero() || y.is_zero())
        out.boundary.push_back({x, y});
      else
        out.interior.push_back({x, y});
    }
  return out;
}

// ---------------------------------------------------------------------------
// PowerSeries3
// ---------------------------------------------------------------------------

PowerSeries3::PowerSeries3(FieldRef f, int precision) : f_(f), prec_(precision) {
  if (precision < 1) fail("BadParams", "precision must be positive");
}

FElem PowerSeries3::coeff(int a, int b, int c) const {
  auto it = terms_.find({a, b, c});
  return it == terms_.end() ? f_->zero() : it->second;
}

void PowerSeries3::add_term(int a, int b, int c, const FElem& coef) {
  if (a < 0 || b < 0 || c < 0) fail("BadParams", "negative exponent");
  if (a + b + c >= prec_) return;  // truncated away
  if (coef.field() != f_) fail("MixedFields", "coefficient from wrong field");
  std::array<int, 3> key{a, b, c};
  auto it = terms_.find(key);
  FElem v = (it == terms_.end() ? f_->zero() : it->second) + coef;
  if (v.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[key] = v;
  }
}

PowerSeries3 PowerSeries3::operator+(const PowerSeries3& o) const {
  if (f_ != o.f_) fail("MixedFields", "series addition");
  PowerSeries3 r(f_, std::min(prec_, o.prec_));
  for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], e[2], c);
  for (const auto& [e, c] : o.terms_) r.add_term(e[0], e[1], e[2], c);
  return r;
}

PowerSeries3 PowerSeries3::operator-() const {
  PowerSeries3 r(f_, prec_);
  for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], e[2], -c);
  return r;
}

PowerSeries3 PowerSeries3::operator-(const PowerSeries3& o) const { return *this + (-o); }

PowerSeries3 PowerSeries3::operator*(const PowerSeries3& o) const {
  if (f_ != o.f_) fail("MixedFields", "series multiplication");
  PowerSeries3 r(f_, std::min(prec_, o.prec_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      int a = e1[0] + e2[0], b = e1[1] + e2[1], c = e1[2] + e2[2];
      if (a + b + c >= r.prec_) continue;
      r.add_term(a, b, c, c1 * c2);
    }
  return r;
}

PowerSeries3 PowerSeries3::scaled(const FElem& c) const {
  PowerSeries3 r(f_, prec_);
  for (const auto& [e, x] : terms_) r.add_term(e[0], e[1], e[2], x * c);
  return r;
}

PowerSeries3 PowerSeries3::pow(i64 e) const {
  PowerSeries3 r(f_, prec_);
  r.add_term(0, 0, 0, f_->one());
  PowerSeries3 base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool PowerSeries3::operator==(const PowerSeries3& o) const {
  return f_ == o.f_ && terms_ == o.terms_;
}

PowerSeries3 PowerSeries3::derivative(int var) const {
  PowerSeries3 r(f_, prec_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    std::array<int, 3> e2 = e;
    e2[static_cast<size_t>(var)] = k - 1;
    FElem v = c * f_->from_int(k);
    if (!v.is_zero()) r.add_term(e2[0], e2[1], e2[2], v);
  }
  return r;
}

PowerSeries3 PowerSeries3::substitute_linear(const Mat& m) const {
  if (m.rows() != 3 || m.cols() != 3) fail("BadShape", "linear substitution needs a 3x3 matrix");
  if (m.field() != f_) fail("MixedFields", "substitution matrix field");
  // precompute powers of the three linear forms
  std::array<PowerSeries3, 3> forms;
  for (int i = 0; i < 3; ++i) {
    forms[static_cast<size_t>(i)] = PowerSeries3(f_, prec_);
    for (int j = 0; j < 3; ++j) {
      int e[3] = {0, 0, 0};
      e[j] = 1;
      if (!m.at(i, j).is_zero()) forms[static_cast<size_t>(i)].add_term(e[0], e[1], e[2], m.at(i, j));
    }
  }
  std::array<std::vector<PowerSeries3>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[static_cast<size_t>(i)].resize(static_cast<size_t>(prec_) + 1, PowerSeries3(f_, prec_));
    powers[static_cast<size_t>(i)][0].add_term(0, 0, 0, f_->one());
    for (int k = 1; k <= prec_; ++k)
      powers[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          powers[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] * forms[static_cast<size_t>(i)];
  }
  PowerSeries3 r(f_, prec_);
  for (const auto& [e, c] : terms_) {
    PowerSeries3 term = powers[0][static_cast<size_t>(e[0])] * powers[1][static_cast<size_t>(e[1])];
    term = term * powers[2][static_cast<size_t>(e[2])];
    r = r + term.scaled(c);
  }
  return r;
}

PowerSeries3 PowerSeries3::embedded(FieldRef target) const {
  PowerSeries3 r(target, prec_);
  for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], e[2], embed(c, target));
  return r;
}

int PowerSeries3::order() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int deg = e[0] + e[1] + e[2];
    if (best < 0 || deg < best) best = deg;
  }
  return best;
}

bool PowerSeries3::in_maximal_ideal_square() const {
  int o = order();
  return o < 0 || o >= 2;
}

std::string PowerSeries3::str(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool has_var = e[0] || e[1] || e[2];
    if (!has_var || cs != "1") {
      bool paren = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
      os << (paren ? "(" + cs + ")" : cs);
      if (has_var) os << "*";
    }
    bool started = false;
    for (int i = 0; i < 3; ++i) {
      if (!e[static_cast<size_t>(i)]) continue;
      if (started) os << "*";
      started = true;
      os << names[static_cast<size_t>(i)];
      if (e[static_cast<size_t>(i)] > 1) os << "^" << e[static_cast<size_t>(i)];
    }
  }
  return os.str();
}

json PowerSeries3::to_json() const {
  json terms = json::array();
  for (const auto& [e, c] : terms_)
    terms.push_back(json{{"exp", json::array({e[0], e[1], e[2]})}, {"coef", c.to_json()}});
  return json{{"field", f_->to_json()}, {"precision", prec_}, {"terms", terms}};
}

PowerSeries3 PowerSeries3::from_json(const json& j) {
  FieldRef f = Field::from_json(j.at("field"));
  PowerSeries3 out(f, j.at("precision").get<int>());
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp");
    out.add_term(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                 FElem::from_json(f, t.at("coef")));
  }
  return out;
}

// ---------------------------------------------------------------------------
// hessian criterion
// ---------------------------------------------------------------------------

namespace {

std::vector<FElem> quadratic_roots(FieldRef k, const FElem& a, const FElem& b, const FElem& c) {
  // roots of a r^2 + b r + c by enumeration (desk scale)
  std::vector<FElem> out;
  for (const auto& r : k->enumerate())
    if ((a * r * r + b * r + c).is_zero()) out.push_back(r);
  return out;
}

FieldRef quadratic_extension(FieldRef k) {
  if (k->kind() == FieldKind::prime) return Field::extension(k->p(), 2);
  if (k->kind() == FieldKind::extension) return Field::extension(k->p(), 2 * k->degree());
  fail("BadParams", "no quadratic extension of " + k->name());
}

}  // namespace

HessianResult hessian_criterion(const PowerSeries3& f) {
  HessianResult out;
  if (!f.in_maximal_ideal_square())
    fail("NotInSquareOfMaximalIdeal", "input has constant or linear terms");
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [i, j] : pairs) {
    PowerSeries3 mixed = f.derivative(i).derivative(j);
    PowerSeries3 pure_i = f.derivative(i).derivative(i);
    PowerSeries3 pure_j = f.derivative(j).derivative(j);
    PowerSeries3 expr = mixed * mixed - pure_i * pure_j;
    FElem c0 = expr.coeff(0, 0, 0);
    if (c0.is_zero()) continue;
    out.pair_first = i;
    out.pair_second = j;
    out.zvar = 3 - i - j;
    int k = out.zvar;
    // quadratic part restricted to the pair: a u_i^2 + b u_i u_j + c u_j^2
    auto expo = [&](int vi, int vj2) {
      std::array<int, 3> e{0, 0, 0};
      e[static_cast<size_t>(vi)] += 1;
      e[static_cast<size_t>(vj2)] += 1;
      return e;
    };
    FElem a = f.coeff(expo(i, i)[0], expo(i, i)[1], expo(i, i)[2]);
    FElem b = f.coeff(expo(i, j)[0], expo(i, j)[1], expo(i, j)[2]);
    FElem c = f.coeff(expo(j, j)[0], expo(j, j)[1], expo(j, j)[2]);
    FieldRef base = f.field();
    FieldRef work = base;
    PowerSeries3 fw = f;
    FElem aw = a, bw = b, cw = c;
    // factor q1 = L1 L2 into independent linear forms, extending the field
    // by one quadratic extension when the roots are missing
    std::vector<std::pair<std::vector<FElem>, std::vector<FElem>>> factors;  // (L1, L2) coeffs on (u_i, u_j)
    auto try_factor = [&](FieldRef kk, const FElem& A, const FElem& B, const FElem& C)
        -> std::optional<std::pair<std::vector<FElem>, std::vector<FElem>>> {
      if (A.is_zero() && C.is_zero()) {
        if (B.is_zero()) return std::nullopt;
        return std::make_pair(std::vector<FElem>{kk->one(), kk->zero()},
                              std::vector<FElem>{kk->zero(), B});
      }
      if (A.is_zero()) {
        // q1 = v (B u + C v)
        return std::make_pair(std::vector<FElem>{kk->zero(), kk->one()},
                              std::vector<FElem>{B, C});
      }
      auto roots = quadratic_roots(kk, A, B, C);
      if (roots.size() < 1) return std::nullopt;
      FElem r1 = roots[0];
      // second root from Vieta (handles double roots uniformly)
      FElem r2 = roots.size() > 1 ? roots[1] : (-B / A) - r1;
      if (r1 == r2) return std::nullopt;  // square: not independent
      return std::make_pair(std::vector<FElem>{A, -(A * r1)},
                            std::vector<FElem>{kk->one(), -r2});
    };
    auto fac = try_factor(work, aw, bw, cw);
    if (!fac) {
      work = quadratic_extension(base);
      out.extended_field = true;
      fw = f.embedded(work);
      aw = embed(a, work);
      bw = embed(b, work);
      cw = embed(c, work);
      fac = try_factor(work, aw, bw, cw);
      if (!fac) continue;  // degenerate despite unit expression: try next pair
    }
    // change of coordinates: w1 = L1, w2 = L2, w3 = u_k
    Mat m(work, 3, 3);
    m.at(0, i) = fac->first[0];
    m.at(0, j) = fac->first[1];
    m.at(1, i) = fac->second[0];
    m.at(1, j) = fac->second[1];
    m.at(2, k) = work->one();
    auto minv = m.inverse();
    if (!minv) continue;
    PowerSeries3 fw2 = fw.substitute_linear(*minv);
    // now quadratic part = w1 w2 + w3 (a' w1 + b' w2 + c' w3)
    FElem ap = fw2.coeff(1, 0, 1);
    FElem bp = fw2.coeff(0, 1, 1);
    FElem cp = fw2.coeff(0, 0, 2);
    Mat shift = Mat::identity(work, 3);
    shift.at(0, 2) = bp;
    shift.at(1, 2) = ap;
    auto shift_inv = shift.inverse();
    PowerSeries3 final = fw2.substitute_linear(*shift_inv);
    out.ok = true;
    out.field = work;
    out.change = shift * m;
    out.transformed = final;
    out.lambda = cp - ap * bp;
    // sanity: quadratic part is exactly xy + lambda z^2
    if (!final.coeff(1, 1, 0).is_one() || !final.coeff(2, 0, 0).is_zero() ||
        !final.coeff(0, 2, 0).is_zero() || !final.coeff(1, 0, 1).is_zero() ||
        !final.coeff(0, 1, 1).is_zero() || final.coeff(0, 0, 2) != out.lambda)
      fail("BadParams", "hessian normalization produced an unexpected quadric");
    return out;
  }
  out.reason = "no variable pair has a unit hessian expression";
  return out;
}

// ---------------------------------------------------------------------------
// A-type recognition
// ---------------------------------------------------------------------------

ATypeResult a_type_recognition(const PowerSeries3& f, int precision) {
  FieldRef k = f.field();
  PowerSeries3 work = f;
  if (f.precision() > precision) {
    // truncate to the requested precision
    PowerSeries3 t(k, precision);
    for (const auto& [e, c] : f.terms()) t.add_term(e[0], e[1], e[2], c);
    work = t;
  }
  int N = work.precision();
  // the quadratic part must be exactly xy + lambda z^2
  if (!work.coeff(1, 1, 0).is_one() || !work.coeff(2, 0, 0).is_zero() ||
      !work.coeff(0, 2, 0).is_zero() || !work.coeff(1, 0, 1).is_zero() ||
      !work.coeff(0, 1, 1).is_zero() || work.order() < 2)
    fail("BadParams", "a_type_recognition expects the hessian-normalized shape");
  PowerSeries3 X(k, N), Y(k, N), H(k, N);
  X.add_term(1, 0, 0, k->one());
  Y.add_term(0, 1, 0, k->one());
  for (int iter = 0; iter <= N + 2; ++iter) {
    PowerSeries3 R = work - X * Y - H;
    if (R.is_zero()) break;
    PowerSeries3 A(k, N), B(k, N), C(k, N);
    for (const auto& [e, c] : R.terms()) {
      if (e[0] >= 1)
        A.add_term(e[0] - 1, e[1], e[2], c);
      else if (e[1] >= 1)
        B.add_term(e[0], e[1] - 1, e[2], c);
      else
        C.add_term(0, 0, e[2], c);
    }
    X = X + B;
    Y = Y + A;
    H = H + C;
    if (iter == N + 2) fail("BadParams", "normal form iteration failed to stabilize");
  }
  ATypeResult out;
  out.certified_precision = N;
  // n = lowest z-order of H
  int n = -1;
  for (const auto& [e, c] : H.terms()) {
    (void)c;
    if (n < 0 || e[2] < n) n = e[2];
  }
  if (n < 0) {
    out.precision_exhausted = true;
    return out;
  }
  out.ok = true;
  out.n = n;
  // verification: u^-1 f == (u^-1 X) Y + z^n with u = H / z^n (a unit in k[[z]])
  std::vector<FElem> u(static_cast<size_t>(N), k->zero());
  for (const auto& [e, c] : H.terms()) u[static_cast<size_t>(e[2] - n)] = c;
  std::vector<FElem> uinv(static_cast<size_t>(N), k->zero());
  FElem lead = u[0].inv();
  uinv[0] = lead;
  for (int m = 1; m < N; ++m) {
    FElem s = k->zero();
    for (int t = 1; t <= m; ++t) s += u[static_cast<size_t>(t)] * uinv[static_cast<size_t>(m - t)];
    uinv[static_cast<size_t>(m)] = -(lead * s);
  }
  PowerSeries3 uinv_series(k, N);
  for (int m = 0; m < N; ++m)
    if (!uinv[static_cast<size_t>(m)].is_zero()) uinv_series.add_term(0, 0, m, uinv[static_cast<size_t>(m)]);
  PowerSeries3 zn(k, N);
  if (n < N) zn.add_term(0, 0, n, k->one());
  PowerSeries3 lhs = uinv_series * work;
  PowerSeries3 rhs = (uinv_series * X) * Y + zn;
  out.verified = lhs == rhs;
  return out;
}

ATypeResult recognize_a_type(const PowerSeries3& f, int precision) {
  HessianResult h = hessian_criterion(f);
  if (!h.ok) {
    ATypeResult out;
    out.certified_precision = precision;
    return out;
  }
  return a_type_recognition(h.transformed, precision);
}

PowerSeries3 example1_local_equation(i64 p, i64 d, FieldRef k, int precision) {
  if (k->p() != p) fail("MixedFields", "field characteristic mismatch");
  int N = precision;
  auto series_one_plus = [&](int var) {
    PowerSeries3 s(k, N);
    s.add_term(0, 0, 0, k->one());
    int e[3] = {0, 0, 0};
    e[var] = 1;
    s.add_term(e[0], e[1], e[2], k->one());
    return s;
  };
  PowerSeries3 x = series_one_plus(0), y = series_one_plus(1);
  // g(x, y) = xy + x^(pd-2) y + x y^(pd-2), recentred at (1,1)
  PowerSeries3 g = x * y + x.pow(p * d - 2) * y + x * y.pow(p * d - 2);
  PowerSeries3 f(k, N);
  // t0^p = g(1,1) = 3; (t0 + T)^p = t0^p + T^p
  FElem g11 = k->from_int(3);
  auto root = g11.p_root();
  if (!root) fail("BadParams", "no p-th root of g(1,1)");
  if (static_cast<i64>(p) < N) f.add_term(0, 0, static_cast<int>(p), k->one());
  f = f - g;
  f.add_term(0, 0, 0, g11);  // cancel the constant: t0^p - g(1,1)
  return f;
}

// ---------------------------------------------------------------------------
// Raynaud invariants
// ---------------------------------------------------------------------------

long long DivisorClass::dot(const DivisorClass& o) const {
  // (aF + bS).(a'F + b'S) = a b' + a' b + d b b'
  return a * o.b + o.a * b + d * b * o.b;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  return DivisorClass(a + o.a, b + o.b, d);
}

DivisorClass DivisorClass::scaled(long long c) const { return DivisorClass(a * c, b * c, d); }

RaynaudInvariants raynaud_invariants(i64 p, i64 n, i64 d) {
  if (p < 3 || n < 2 || d < 1) fail("BadHypotheses", "need p >= 3, n >= 2, d >= 1");
  RaynaudInvariants out;
  out.c1sq = d * (p * p * p * p * n * n + 4 * p + 2 * n * p - n * n * p * p - 4 * n * p * p -
                  2 * n * p * p * p);
  out.c2 = 2 * p * d * (1 - n * p);
  out.Gsq = d * n * p * (2 - n * p);
  out.Gprime_sq = p * d * (n - 1) * (2 - (n - 1) * p);
  out.Dsq = -p * p * d;
  // lattice route: D = -pd F + p S, G = d F + n D, G' = d F + (n-1) D
  DivisorClass F(1, 0, d), S(0, 1, d);
  DivisorClass D = F.scaled(-p * d) + S.scaled(p);
  DivisorClass G = F.scaled(d) + D.scaled(n);
  DivisorClass Gp = F.scaled(d) + D.scaled(n - 1);
  out.Dsq_lattice = D.dot(D);
  out.Gsq_lattice = G.dot(G);
  out.Gprime_sq_lattice = Gp.dot(Gp);
  out.routes_agree = out.Dsq == out.Dsq_lattice && out.Gsq == out.Gsq_lattice &&
                     out.Gprime_sq == out.Gprime_sq_lattice;
  out.chi_integral = (out.c1sq + out.c2) % 12 == 0;
  return out;
}

}  // namespace witt
