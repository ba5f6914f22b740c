#include "witt/truncalg.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace witt {

namespace {

std::vector<std::unique_ptr<TruncAlgebra>>& talg_registry() {
  static std::vector<std::unique_ptr<TruncAlgebra>> reg;
  return reg;
}

std::mutex& talg_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

TruncAlgebraRef TruncAlgebra::make(FieldRef coeffs, const std::vector<FElem>& omegas) {
  int m = static_cast<int>(omegas.size());
  if (m < 1 || m > 3) fail("BadParams", "truncated algebra needs 1..3 variables");
  for (const auto& w : omegas)
    if (w.field() != coeffs) fail("MixedFields", "omega constants must lie in the coefficient field");
  std::lock_guard<std::mutex> lock(talg_mutex());
  for (const auto& existing : talg_registry()) {
    if (existing->coeffs_ == coeffs && existing->m_ == m && existing->omegas_ == omegas)
      return existing.get();
  }
  auto alg = std::unique_ptr<TruncAlgebra>(new TruncAlgebra());
  alg->coeffs_ = coeffs;
  alg->m_ = m;
  alg->omegas_ = omegas;
  i64 d = 1;
  for (int i = 0; i < m; ++i) d *= coeffs->p();
  if (d > 20000) fail("BadParams", "truncated algebra dimension above desk-scale cap");
  alg->dim_ = static_cast<int>(d);
  talg_registry().push_back(std::move(alg));
  return talg_registry().back().get();
}

int TruncAlgebra::monomial_index(const Expo& e) const {
  int idx = 0;
  i64 p = coeffs_->p();
  for (int i = m_ - 1; i >= 0; --i) {
    if (e[static_cast<size_t>(i)] < 0 || e[static_cast<size_t>(i)] >= p)
      fail("BadParams", "exponent out of range");
    idx = static_cast<int>(idx * p) + e[static_cast<size_t>(i)];
  }
  return idx;
}

Expo TruncAlgebra::monomial_exponent(int index) const {
  Expo e{0, 0, 0};
  i64 p = coeffs_->p();
  for (int i = 0; i < m_; ++i) {
    e[static_cast<size_t>(i)] = static_cast<int>(index % p);
    index = static_cast<int>(index / p);
  }
  return e;
}

TruncElement TruncAlgebra::zero() const {
  TruncElement t;
  t.alg_ = this;
  return t;
}

TruncElement TruncAlgebra::one() const { return scalar(coeffs_->one()); }

TruncElement TruncAlgebra::scalar(const FElem& c) const { return monomial({0, 0, 0}, c); }

TruncElement TruncAlgebra::variable(int i) const {
  if (i < 0 || i >= m_) fail("BadParams", "variable index out of range");
  Expo e{0, 0, 0};
  e[static_cast<size_t>(i)] = 1;
  return monomial(e, coeffs_->one());
}

TruncElement TruncAlgebra::monomial(const Expo& e, const FElem& c) const {
  if (c.field() != coeffs_) fail("MixedFields", "coefficient from wrong field");
  for (int i = 0; i < 3; ++i) {
    int x = e[static_cast<size_t>(i)];
    if (x < 0 || (i < m_ ? x >= coeffs_->p() : x != 0)) fail("BadParams", "bad exponent vector");
  }
  TruncElement t;
  t.alg_ = this;
  t.set(e, c);
  return t;
}

TruncElement TruncAlgebra::from_coords(const std::vector<FElem>& coords) const {
  if (static_cast<int>(coords.size()) != dim_) fail("BadShape", "coordinate vector length");
  TruncElement t;
  t.alg_ = this;
  for (int i = 0; i < dim_; ++i) t.set(monomial_exponent(i), coords[static_cast<size_t>(i)]);
  return t;
}

void TruncElement::set(const Expo& e, const FElem& c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

FElem TruncElement::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? alg_->coeffs()->zero() : it->second;
}

namespace {
void check_same_alg(const TruncElement& a, const TruncElement& b) {
  if (a.algebra() != b.algebra()) fail("MixedAlgebras", "operands from different truncated algebras");
}
}  // namespace

TruncElement TruncElement::operator+(const TruncElement& o) const {
  check_same_alg(*this, o);
  TruncElement r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
  return r;
}

TruncElement TruncElement::operator-() const {
  TruncElement r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TruncElement TruncElement::operator-(const TruncElement& o) const { return *this + (-o); }

TruncElement TruncElement::operator*(const TruncElement& o) const {
  check_same_alg(*this, o);
  TruncElement r = alg_->zero();
  i64 p = alg_->p();
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      FElem c = c1 * c2;
      Expo e{0, 0, 0};
      for (int i = 0; i < alg_->vars(); ++i) {
        int s = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
        if (s >= p) {  // x_i^(p+t) = w_i x_i^t
          s -= static_cast<int>(p);
          c = c * alg_->omega(i);
        }
        e[static_cast<size_t>(i)] = s;
      }
      if (!c.is_zero()) r.set(e, r.coeff(e) + c);
    }
  }
  return r;
}

TruncElement TruncElement::scaled(const FElem& c) const {
  TruncElement r = alg_->zero();
  for (const auto& [e, x] : terms_) r.set(e, x * c);
  return r;
}

TruncElement TruncElement::pow(i64 e) const {
  TruncElement r = alg_->one(), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool TruncElement::operator==(const TruncElement& o) const {
  check_same_alg(*this, o);
  return terms_ == o.terms_;
}

std::vector<FElem> TruncElement::coords() const {
  std::vector<FElem> out(static_cast<size_t>(alg_->dim()), alg_->coeffs()->zero());
  for (const auto& [e, c] : terms_) out[static_cast<size_t>(alg_->monomial_index(e))] = c;
  return out;
}

std::string TruncElement::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"t", "s", "u"};
  const char** var = names;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = e[0] || e[1] || e[2];
    std::string cs = c.str();
    if (!has_var || cs != "1") {
      bool paren = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
      os << (paren ? "(" + cs + ")" : cs);
      if (has_var) os << "*";
    }
    bool started = false;
    for (int i = 0; i < 3; ++i) {
      if (!e[static_cast<size_t>(i)]) continue;
      if (started) os << "*";
      started = true;
      os << var[i];
      if (e[static_cast<size_t>(i)] > 1) os << "^" << e[static_cast<size_t>(i)];
    }
  }
  return os.str();
}

json TruncElement::to_json() const {
  json terms = json::array();
  for (const auto& [e, c] : terms_) {
    json ex = json::array();
    for (int i = 0; i < alg_->vars(); ++i) ex.push_back(e[static_cast<size_t>(i)]);
    terms.push_back(json{{"exp", ex}, {"coef", c.to_json()}});
  }
  json omegas = json::array();
  for (int i = 0; i < alg_->vars(); ++i) omegas.push_back(alg_->omega(i).to_json());
  return json{{"alg", json{{"field", alg_->coeffs()->to_json()}, {"omega", omegas}}}, {"terms", terms}};
}

TruncElement TruncElement::from_json(TruncAlgebraRef alg, const json& j) {
  TruncElement t = alg->zero();
  for (const auto& term : j.at("terms")) {
    Expo e{0, 0, 0};
    auto ex = term.at("exp");
    for (size_t i = 0; i < ex.size(); ++i) e[i] = ex[i].get<int>();
    t.set(e, t.coeff(e) + FElem::from_json(alg->coeffs(), term.at("coef")));
  }
  return t;
}

TruncElement partial_derivative(const TruncElement& f, int var) {
  TruncAlgebraRef alg = f.algebra();
  if (var < 0 || var >= alg->vars()) fail("BadParams", "variable index out of range");
  TruncElement r = alg->zero();
  for (const auto& [e, c] : f.terms()) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Expo e2 = e;
    e2[static_cast<size_t>(var)] = k - 1;
    FElem coef = c * alg->coeffs()->from_int(k);
    if (!coef.is_zero()) r += alg->monomial(e2, coef);
  }
  return r;
}

TruncElement substitute(const TruncElement& f, const TruncElement& a) {
  TruncAlgebraRef src = f.algebra();
  if (src->vars() != 1) fail("BadParams", "substitute requires univariate f");
  if (src->coeffs() != a.algebra()->coeffs()) fail("MixedCoefficients", "coefficient fields differ");
  TruncAlgebraRef dst = a.algebra();
  TruncElement r = dst->zero();
  TruncElement apow = dst->one();
  i64 p = src->p();
  for (int i = 0; i < p; ++i) {
    FElem c = f.coeff({i, 0, 0});
    if (!c.is_zero()) r += apow.scaled(c);
    if (i + 1 < p) apow = apow * a;
  }
  return r;
}

Mat multiplication_matrix(const TruncElement& f) {
  TruncAlgebraRef alg = f.algebra();
  Mat m(alg->coeffs(), alg->dim(), alg->dim());
  for (int j = 0; j < alg->dim(); ++j) {
    TruncElement col = f * alg->monomial(alg->monomial_exponent(j), alg->coeffs()->one());
    for (const auto& [e, c] : col.terms()) m.at(alg->monomial_index(e), j) = c;
  }
  return m;
}

std::optional<TruncElement> unit_inverse(const TruncElement& f) {
  TruncAlgebraRef alg = f.algebra();
  if (!alg->coeffs()) fail("NotAField", "unit test requires field coefficients");
  Mat m = multiplication_matrix(f);
  Mat rhs(alg->coeffs(), alg->dim(), 1);
  rhs.at(0, 0) = alg->coeffs()->one();  // index of the monomial 1
  if (m.rank() != alg->dim()) return std::nullopt;
  LinSolve sol = solve_linear(m, rhs);
  std::vector<FElem> coords;
  coords.reserve(static_cast<size_t>(alg->dim()));
  for (int i = 0; i < alg->dim(); ++i) coords.push_back(sol.particular.at(i, 0));
  return alg->from_coords(coords);
}

bool is_unit(const TruncElement& f) { return unit_inverse(f).has_value(); }

FElem c_coefficient(const TruncElement& f) {
  TruncAlgebraRef alg = f.algebra();
  if (alg->vars() != 1) fail("Multivariate", "C coefficient requires univariate input");
  i64 p = alg->p();
  FieldRef k = alg->coeffs();
  // expand f^(p-1) in R[t] without reduction (degree <= (p-1)^2)
  std::vector<FElem> cur = {k->one()};
  std::vector<FElem> base(static_cast<size_t>(p), k->zero());
  for (int i = 0; i < p; ++i) base[static_cast<size_t>(i)] = f.coeff({i, 0, 0});
  for (i64 rep = 0; rep < p - 1; ++rep) {
    std::vector<FElem> next(cur.size() + base.size() - 1, k->zero());
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].is_zero()) continue;
      for (size_t j = 0; j < base.size(); ++j) next[i + j] += cur[i] * base[j];
    }
    cur = std::move(next);
  }
  // now reduce t^(p+s) -> w t^s and read off the coefficient of t^(p-1)
  const FElem& w = alg->omega(0);
  FElem c = k->zero();
  for (size_t d = 0; d < cur.size(); ++d) {
    if (cur[d].is_zero()) continue;
    size_t q = d / static_cast<size_t>(p), s = d % static_cast<size_t>(p);
    if (static_cast<i64>(s) == p - 1) c += cur[d] * w.pow(static_cast<i64>(q));
  }
  return c;
}

FElem c_coefficient_reduced_route(const TruncElement& f) {
  TruncAlgebraRef alg = f.algebra();
  if (alg->vars() != 1) fail("Multivariate", "C coefficient requires univariate input");
  TruncElement q = f.pow(alg->p() - 1);
  return q.coeff({static_cast<int>(alg->p()) - 1, 0, 0});
}

FElem c_coefficient_evans_fuchs(const TruncElement& f) {
  TruncAlgebraRef alg = f.algebra();
  if (alg->vars() != 1) fail("Multivariate", "C coefficient requires univariate input");
  TruncElement q = f.pow(alg->p() - 1);
  for (i64 i = 0; i < alg->p() - 1; ++i) q = partial_derivative(q, 0);
  // q is now the constant -C . (p-1)! = C modulo sign bookkeeping:
  // d^(p-1)(t^(p-1)) = (p-1)! = -1, so q = -C_{p-1} * 1; return -q.
  for (const auto& [e, c] : q.terms())
    if (e[0] != 0 || e[1] != 0 || e[2] != 0) fail("BadParams", "Evans-Fuchs route left non-constant terms");
  return -q.coeff({0, 0, 0});
}

// ---------------------------------------------------------------------------
// DerivationMatrix
// ---------------------------------------------------------------------------

bool satisfies_leibniz(TruncAlgebraRef alg, const Mat& m) {
  auto apply = [&](const TruncElement& f) {
    return alg->from_coords(m.apply(f.coords()));
  };
  for (int i = 0; i < alg->dim(); ++i) {
    TruncElement u = alg->monomial(alg->monomial_exponent(i), alg->coeffs()->one());
    TruncElement du = apply(u);
    for (int j = i; j < alg->dim(); ++j) {
      TruncElement v = alg->monomial(alg->monomial_exponent(j), alg->coeffs()->one());
      TruncElement lhs = apply(u * v);
      TruncElement rhs = du * v + u * apply(v);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivationMatrix DerivationMatrix::from_values(TruncAlgebraRef alg, const std::vector<TruncElement>& values) {
  if (static_cast<int>(values.size()) != alg->vars()) fail("BadParams", "one value per variable required");
  for (const auto& v : values)
    if (v.algebra() != alg) fail("MixedAlgebras", "derivation values from wrong algebra");
  Mat m(alg->coeffs(), alg->dim(), alg->dim());
  for (int j = 0; j < alg->dim(); ++j) {
    TruncElement mono = alg->monomial(alg->monomial_exponent(j), alg->coeffs()->one());
    TruncElement img = alg->zero();
    for (int v = 0; v < alg->vars(); ++v) img += values[static_cast<size_t>(v)] * partial_derivative(mono, v);
    for (const auto& [e, c] : img.terms()) m.at(alg->monomial_index(e), j) = c;
  }
  DerivationMatrix d(alg, std::move(m));
  if (!satisfies_leibniz(alg, d.m_)) fail("LeibnizViolation", "constructed derivation fails Leibniz");
  return d;
}

DerivationMatrix DerivationMatrix::from_matrix(TruncAlgebraRef alg, const Mat& m) {
  if (m.rows() != alg->dim() || m.cols() != alg->dim()) fail("BadShape", "derivation matrix shape");
  if (m.field() != alg->coeffs()) fail("MixedFields", "derivation matrix field");
  if (!satisfies_leibniz(alg, m)) fail("LeibnizViolation", "matrix is not a derivation");
  return DerivationMatrix(alg, m);
}

TruncElement DerivationMatrix::apply(const TruncElement& f) const {
  if (f.algebra() != alg_) fail("MixedAlgebras", "derivation applied to wrong algebra");
  return alg_->from_coords(m_.apply(f.coords()));
}

TruncElement DerivationMatrix::value_on_variable(int i) const {
  return apply(alg_->variable(i));
}

DerivationMatrix DerivationMatrix::p_power() const {
  Mat powered = m_.pow(alg_->p());
  if (!satisfies_leibniz(alg_, powered)) fail("LeibnizViolation", "p-power is not a derivation");
  return DerivationMatrix(alg_, powered);
}

DerivationMatrix DerivationMatrix::bracket(const DerivationMatrix& o) const {
  if (alg_ != o.alg_) fail("MixedAlgebras", "bracket of derivations on different algebras");
  return DerivationMatrix(alg_, m_ * o.m_ - o.m_ * m_);
}

DerivationMatrix DerivationMatrix::operator+(const DerivationMatrix& o) const {
  if (alg_ != o.alg_) fail("MixedAlgebras", "sum of derivations on different algebras");
  return DerivationMatrix(alg_, m_ + o.m_);
}

DerivationMatrix DerivationMatrix::scaled(const FElem& c) const {
  return DerivationMatrix(alg_, m_.scaled(c));
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

bool MultiPoly::TermCmp::operator()(const Mono& a, const Mono& b) const {
  // w-degree ascending first
  int wa = a.back(), wb = b.back();
  if (wa != wb) return wa < wb;
  // then lambda exponents lexicographically descending
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MultiPoly::MultiPoly(i64 p, int nlambda) : p_(p), nlambda_(nlambda) {}

MultiPoly MultiPoly::lambda(i64 p, int nlambda, int i) {
  MultiPoly q(p, nlambda);
  Mono m(static_cast<size_t>(nlambda) + 1, 0);
  m[static_cast<size_t>(i)] = 1;
  q.terms_[m] = 1;
  return q;
}

MultiPoly MultiPoly::omega(i64 p, int nlambda) {
  MultiPoly q(p, nlambda);
  Mono m(static_cast<size_t>(nlambda) + 1, 0);
  m.back() = 1;
  q.terms_[m] = 1;
  return q;
}

MultiPoly MultiPoly::constant(i64 p, int nlambda, i64 c) {
  MultiPoly q(p, nlambda);
  c = fp::norm(c, p);
  if (c) q.terms_[Mono(static_cast<size_t>(nlambda) + 1, 0)] = c;
  return q;
}

void MultiPoly::add_term(const Mono& m, i64 c) {
  auto it = terms_.find(m);
  i64 v = fp::norm((it == terms_.end() ? 0 : it->second) + c, p_);
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[m] = v;
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, p_ - c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(p_, nlambda_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m(m1.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2 % p_);
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return p_ == o.p_ && nlambda_ == o.nlambda_ &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

bool MultiPoly::homogeneous_in_lambda(int* degree) const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int d = 0;
    for (size_t i = 0; i + 1 < m.size(); ++i) d += m[i];
    if (deg < 0)
      deg = d;
    else if (d != deg)
      return false;
  }
  if (degree) *degree = deg;
  return true;
}

FElem MultiPoly::eval(const std::vector<FElem>& lambdas, const FElem& omega) const {
  if (static_cast<int>(lambdas.size()) != nlambda_) fail("BadShape", "lambda vector length");
  FieldRef f = omega.field();
  FElem out = f->zero();
  for (const auto& [m, c] : terms_) {
    FElem t = f->from_int(c);
    for (int i = 0; i < nlambda_; ++i)
      if (m[static_cast<size_t>(i)]) t = t * lambdas[static_cast<size_t>(i)].pow(m[static_cast<size_t>(i)]);
    if (m.back()) t = t * omega.pow(m.back());
    out += t;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  bool signed_coeffs = p_ <= 3;
  // bucket terms by w-degree, preserving the in-bucket order
  std::map<int, std::vector<std::pair<Mono, i64>>> buckets;
  for (const auto& [m, c] : terms_) buckets[m.back()].push_back({m, c});
  if (signed_coeffs) {
    // positive-rendered terms ahead of negative ones (stable within classes)
    for (auto& [wdeg, terms] : buckets) {
      (void)wdeg;
      std::stable_sort(terms.begin(), terms.end(),
                       [&](const auto& a, const auto& b) { return (a.second <= p_ / 2) && (b.second > p_ / 2); });
    }
  }
  std::ostringstream os;
  bool first_bucket = true;
  for (const auto& [wdeg, terms] : buckets) {
    std::ostringstream group;
    bool first = true;
    for (const auto& [m, craw] : terms) {
      i64 c = craw;
      bool negative = false;
      if (signed_coeffs && c > p_ / 2) {
        negative = true;
        c = p_ - c;
      }
      if (first)
        group << (negative ? "-" : "");
      else
        group << (negative ? " - " : " + ");
      first = false;
      std::ostringstream mono;
      bool started = false;
      for (int i = 0; i < nlambda_; ++i) {
        int e = m[static_cast<size_t>(i)];
        if (!e) continue;
        if (started) mono << "*";
        started = true;
        mono << "l" << i;
        if (e > 1) mono << "^" << e;
      }
      if (!started)
        group << c;
      else if (c != 1)
        group << c << "*" << mono.str();
      else
        group << mono.str();
    }
    std::string body = group.str();
    if (!first_bucket) os << " + ";
    first_bucket = false;
    if (wdeg == 0) {
      os << body;
    } else {
      os << "w";
      if (wdeg > 1) os << "^" << wdeg;
      os << "*(" << body << ")";
    }
  }
  return os.str();
}

json MultiPoly::to_json() const {
  json terms = json::array();
  for (const auto& [m, c] : terms_) {
    json lambda_exp = json::array();
    for (int i = 0; i < nlambda_; ++i) lambda_exp.push_back(m[static_cast<size_t>(i)]);
    terms.push_back(json{{"lambda", lambda_exp}, {"w", m.back()}, {"coef", c}});
  }
  return json{{"p", p_}, {"terms", terms}};
}

MultiPoly c_polynomial_symbolic(i64 p) {
  if (!is_prime(p)) fail("BadParams", "p must be prime");
  if (p > 7) fail("PTooLarge", "symbolic C capped at p <= 7");
  int n = static_cast<int>(p);
  // f = sum l_i t^i with symbolic coefficients; expand f^(p-1) in t unreduced
  std::vector<MultiPoly> f(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f[static_cast<size_t>(i)] = MultiPoly::lambda(p, n, i);
  std::vector<MultiPoly> cur = {MultiPoly::constant(p, n, 1)};
  for (i64 rep = 0; rep < p - 1; ++rep) {
    std::vector<MultiPoly> next(cur.size() + f.size() - 1, MultiPoly(p, n));
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].is_zero()) continue;
      for (size_t j = 0; j < f.size(); ++j) {
        if (f[j].is_zero()) continue;
        next[i + j] = next[i + j] + cur[i] * f[j];
      }
    }
    cur = std::move(next);
  }
  // reduce t^(qp+s) -> w^q t^s; C = coefficient of t^(p-1)
  MultiPoly w = MultiPoly::omega(p, n);
  MultiPoly c(p, n);
  for (size_t d = 0; d < cur.size(); ++d) {
    if (cur[d].is_zero()) continue;
    size_t q = d / static_cast<size_t>(p), s = d % static_cast<size_t>(p);
    if (static_cast<i64>(s) != p - 1) continue;
    MultiPoly term = cur[d];
    for (size_t i = 0; i < q; ++i) term = term * w;
    c = c + term;
  }
  return c;
}

}  // namespace witt
