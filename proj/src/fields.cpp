#include "witt/fields.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace witt {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace fp {

i64 norm(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 pow_mod(i64 a, i64 e, i64 p) {
  a = norm(a, p);
  i64 r = 1 % p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

i64 inv(i64 a, i64 p) {
  a = norm(a, p);
  if (a == 0) fail("DivisionByZero", "inverse of 0 mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(i64 p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    i64 s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = norm(s, p);
  }
  trim(r);
  return r;
}

Poly sub(i64 p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    i64 s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = norm(s, p);
  }
  trim(r);
  return r;
}

Poly mul(i64 p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(i64 p, const Poly& a, i64 c) {
  c = norm(c, p);
  if (c == 0) return {};
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(i64 p, const Poly& a, const Poly& b) {
  if (b.empty()) fail("DivisionByZero", "polynomial division by zero");
  Poly rem = a, quot;
  int db = deg(b);
  i64 lead_inv = inv(b.back(), p);
  if (deg(rem) >= db) quot.assign(static_cast<size_t>(deg(rem) - db + 1), 0);
  while (deg(rem) >= db) {
    int shift = deg(rem) - db;
    i64 c = rem.back() * lead_inv % p;
    quot[static_cast<size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(i + shift)] = norm(rem[static_cast<size_t>(i + shift)] - c * b[static_cast<size_t>(i)], p);
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

Poly mod(i64 p, const Poly& a, const Poly& b) { return divmod(p, a, b).second; }

Poly monic(i64 p, const Poly& a) {
  if (a.empty()) return a;
  return scale(p, a, inv(a.back(), p));
}

Poly gcd(i64 p, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(p, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(p, a);
}

i64 eval(i64 p, const Poly& a, i64 x) {
  i64 r = 0;
  for (size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
  return norm(r, p);
}

namespace {
// enumerate monic polynomials of given degree in index order (coefficients
// little-endian, index digits base p)
Poly nth_monic(i64 p, int degree, i64 index) {
  Poly a(static_cast<size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    a[static_cast<size_t>(i)] = index % p;
    index /= p;
  }
  a[static_cast<size_t>(degree)] = 1;
  return a;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

bool is_irreducible(i64 p, const Poly& a) {
  int d = deg(a);
  if (d <= 0) return false;
  if (d == 1) return true;
  // trial division by all monic polynomials of degree 1..d/2 (desk scale)
  for (int e = 1; 2 * e <= d; ++e) {
    i64 count = ipow(p, e);
    for (i64 idx = 0; idx < count; ++idx) {
      Poly b = nth_monic(p, e, idx);
      if (mod(p, a, b).empty()) return false;
    }
  }
  return true;
}

std::string to_string(const Poly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0) {
      if (a[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Field interning
// ---------------------------------------------------------------------------

namespace {

struct FieldKey {
  FieldKind kind;
  i64 p;
  fp::Poly modulus;
  int cap;
  bool operator<(const FieldKey& o) const {
    return std::tie(kind, p, modulus, cap) < std::tie(o.kind, o.p, o.modulus, o.cap);
  }
};

std::map<FieldKey, std::unique_ptr<Field>>& registry() {
  static std::map<FieldKey, std::unique_ptr<Field>> reg;
  return reg;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

void check_p(i64 p) {
  if (!is_prime(p)) fail("BadParams", "characteristic must be prime, got " + std::to_string(p));
  if (p > 13) fail("BadParams", "characteristic cap is 13 (desk scale), got " + std::to_string(p));
}

}  // namespace

FieldRef Field::prime(i64 p) {
  check_p(p);
  FieldKey key{FieldKind::prime, p, {}, 0};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();
  auto f = std::unique_ptr<Field>(new Field());
  f->kind_ = FieldKind::prime;
  f->p_ = p;
  f->k_ = 1;
  auto res = registry().emplace(std::move(key), std::move(f));
  return res.first->second.get();
}

FieldRef Field::extension(i64 p, int k) {
  check_p(p);
  if (k < 2) fail("BadParams", "extension degree must be >= 2");
  // built-in table cap: p^k <= 13^3
  i64 order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > 13 * 13 * 13) fail("BadParams", "extension order above desk-scale cap 13^3");
  }
  // first monic irreducible of degree k in index order
  i64 count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (i64 idx = 0; idx < count; ++idx) {
    fp::Poly m(static_cast<size_t>(k) + 1, 0);
    i64 v = idx;
    for (int i = 0; i < k; ++i) {
      m[static_cast<size_t>(i)] = v % p;
      v /= p;
    }
    m[static_cast<size_t>(k)] = 1;
    if (fp::is_irreducible(p, m)) return extension(p, m);
  }
  fail("BadParams", "no irreducible modulus found (impossible)");
}

FieldRef Field::extension(i64 p, const fp::Poly& modulus) {
  check_p(p);
  fp::Poly m = modulus;
  fp::trim(m);
  if (fp::deg(m) < 2) fail("BadParams", "modulus must have degree >= 2");
  if (m.back() != 1) fail("BadParams", "modulus must be monic");
  for (i64 c : m)
    if (c < 0 || c >= p) fail("BadParams", "modulus coefficients must be reduced mod p");
  if (!fp::is_irreducible(p, m)) fail("BadParams", "modulus is reducible over F_" + std::to_string(p));
  FieldKey key{FieldKind::extension, p, m, 0};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();
  auto f = std::unique_ptr<Field>(new Field());
  f->kind_ = FieldKind::extension;
  f->p_ = p;
  f->k_ = fp::deg(m);
  f->modulus_ = m;
  auto res = registry().emplace(std::move(key), std::move(f));
  return res.first->second.get();
}

FieldRef Field::ratfunc(i64 p, int degree_cap) {
  check_p(p);
  if (degree_cap < 1) fail("BadParams", "degree cap must be positive");
  FieldKey key{FieldKind::ratfunc, p, {}, degree_cap};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();
  auto f = std::unique_ptr<Field>(new Field());
  f->kind_ = FieldKind::ratfunc;
  f->p_ = p;
  f->k_ = 1;
  f->degree_cap_ = degree_cap;
  auto res = registry().emplace(std::move(key), std::move(f));
  return res.first->second.get();
}

i64 Field::order() const {
  if (!finite()) fail("InfiniteField", "rational function fields are infinite");
  i64 r = 1;
  for (int i = 0; i < k_; ++i) r *= p_;
  return r;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::prime:
      return "F_" + std::to_string(p_);
    case FieldKind::extension:
      return "F_" + std::to_string(order());
    case FieldKind::ratfunc:
      return "F_" + std::to_string(p_) + "(theta)";
  }
  return "?";
}

FElem Field::zero() const { return from_int(0); }
FElem Field::one() const { return from_int(1); }

FElem Field::from_int(i64 n) const {
  FElem e;
  e.f_ = this;
  i64 r = fp::norm(n, p_);
  switch (kind_) {
    case FieldKind::prime:
      e.r_ = r;
      break;
    case FieldKind::extension:
      e.a_.assign(static_cast<size_t>(k_), 0);
      e.a_[0] = r;
      break;
    case FieldKind::ratfunc:
      if (r != 0) e.a_ = {r};
      e.b_ = {1};
      break;
  }
  return e;
}

FElem Field::gen() const {
  FElem e;
  e.f_ = this;
  switch (kind_) {
    case FieldKind::prime:
      e.r_ = 1 % p_;
      break;
    case FieldKind::extension:
      e.a_.assign(static_cast<size_t>(k_), 0);
      e.a_[1] = 1;
      break;
    case FieldKind::ratfunc:
      e.a_ = {0, 1};
      e.b_ = {1};
      break;
  }
  return e;
}

FElem Field::element(const fp::Poly& coeffs) const {
  if (kind_ != FieldKind::extension) fail("BadParams", "element(coeffs) requires an extension field");
  fp::Poly c = coeffs;
  fp::trim(c);
  if (fp::deg(c) >= k_) c = fp::mod(p_, c, modulus_);
  FElem e;
  e.f_ = this;
  e.a_.assign(static_cast<size_t>(k_), 0);
  for (size_t i = 0; i < c.size(); ++i) e.a_[i] = fp::norm(c[i], p_);
  return e;
}

FElem Field::fraction(const fp::Poly& num, const fp::Poly& den) const {
  if (kind_ != FieldKind::ratfunc) fail("BadParams", "fraction() requires a rational function field");
  FElem e;
  e.f_ = this;
  e.a_ = num;
  e.b_ = den;
  for (i64& c : e.a_) c = fp::norm(c, p_);
  for (i64& c : e.b_) c = fp::norm(c, p_);
  fp::trim(e.a_);
  fp::trim(e.b_);
  e.canonicalize_ratfunc();
  return e;
}

std::vector<FElem> Field::enumerate() const {
  if (!finite()) fail("InfiniteField", "cannot enumerate " + name());
  std::vector<FElem> out;
  i64 n = order();
  out.reserve(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) out.push_back(nth(i));
  return out;
}

FElem Field::nth(i64 index) const {
  if (!finite()) fail("InfiniteField", "cannot index " + name());
  if (index < 0 || index >= order()) fail("BadParams", "field index out of range");
  if (kind_ == FieldKind::prime) return from_int(index);
  fp::Poly c(static_cast<size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    c[static_cast<size_t>(i)] = index % p_;
    index /= p_;
  }
  return element(c);
}

json Field::to_json() const {
  switch (kind_) {
    case FieldKind::prime:
      return json{{"kind", "prime"}, {"p", p_}};
    case FieldKind::extension:
      return json{{"kind", "ext"}, {"p", p_}, {"k", k_}, {"modulus", modulus_}};
    case FieldKind::ratfunc:
      return json{{"kind", "ratfunc"}, {"p", p_}};
  }
  return {};
}

FieldRef Field::from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  i64 p = j.at("p").get<i64>();
  if (kind == "prime") return prime(p);
  if (kind == "ext") return extension(p, j.at("modulus").get<fp::Poly>());
  if (kind == "ratfunc") return ratfunc(p);
  fail("BadParams", "unknown field kind " + kind);
}

// ---------------------------------------------------------------------------
// FElem
// ---------------------------------------------------------------------------

void FElem::check_same(const FElem& x, const FElem& y) {
  if (!x.f_ || !y.f_) fail("MixedFields", "operation on invalid element");
  if (x.f_ != y.f_) fail("MixedFields", x.f_->name() + " vs " + y.f_->name());
}

void FElem::canonicalize_ratfunc() {
  i64 p = f_->p();
  if (b_.empty()) fail("DivisionByZero", "zero denominator in " + f_->name());
  if (a_.empty()) {
    b_ = {1};
    return;
  }
  fp::Poly g = fp::gcd(p, a_, b_);
  if (fp::deg(g) > 0) {
    a_ = fp::divmod(p, a_, g).first;
    b_ = fp::divmod(p, b_, g).first;
  }
  i64 lead = fp::inv(b_.back(), p);
  a_ = fp::scale(p, a_, lead);
  b_ = fp::scale(p, b_, lead);
  int cap = f_->degree_cap();
  if (fp::deg(a_) > cap || fp::deg(b_) > cap)
    fail("DegreeOverflow", "rational function degree exceeds cap " + std::to_string(cap));
}

bool FElem::is_zero() const {
  switch (f_->kind()) {
    case FieldKind::prime:
      return r_ == 0;
    case FieldKind::extension: {
      for (i64 c : a_)
        if (c != 0) return false;
      return true;
    }
    case FieldKind::ratfunc:
      return a_.empty();
  }
  return false;
}

bool FElem::is_one() const { return *this == f_->one(); }

FElem FElem::operator+(const FElem& o) const {
  check_same(*this, o);
  FElem r;
  r.f_ = f_;
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      r.r_ = fp::norm(r_ + o.r_, p);
      break;
    case FieldKind::extension: {
      r.a_.resize(a_.size());
      for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::norm(a_[i] + o.a_[i], p);
      break;
    }
    case FieldKind::ratfunc: {
      r.a_ = fp::add(p, fp::mul(p, a_, o.b_), fp::mul(p, o.a_, b_));
      r.b_ = fp::mul(p, b_, o.b_);
      r.canonicalize_ratfunc();
      break;
    }
  }
  return r;
}

FElem FElem::operator-() const {
  FElem r;
  r.f_ = f_;
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      r.r_ = fp::norm(-r_, p);
      break;
    case FieldKind::extension: {
      r.a_.resize(a_.size());
      for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::norm(-a_[i], p);
      break;
    }
    case FieldKind::ratfunc: {
      r.a_ = fp::scale(p, a_, p - 1);
      r.b_ = b_;
      break;
    }
  }
  return r;
}

FElem FElem::operator-(const FElem& o) const { return *this + (-o); }

FElem FElem::operator*(const FElem& o) const {
  check_same(*this, o);
  FElem r;
  r.f_ = f_;
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      r.r_ = r_ * o.r_ % p;
      break;
    case FieldKind::extension: {
      fp::Poly prod = fp::mul(p, a_, o.a_);
      prod = fp::mod(p, prod, f_->modulus());
      r.a_.assign(a_.size(), 0);
      for (size_t i = 0; i < prod.size(); ++i) r.a_[i] = prod[i];
      break;
    }
    case FieldKind::ratfunc: {
      r.a_ = fp::mul(p, a_, o.a_);
      r.b_ = fp::mul(p, b_, o.b_);
      r.canonicalize_ratfunc();
      break;
    }
  }
  return r;
}

FElem FElem::inv() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero in " + f_->name());
  FElem r;
  r.f_ = f_;
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      r.r_ = fp::inv(r_, p);
      break;
    case FieldKind::extension: {
      // extended Euclid on (payload, modulus)
      fp::Poly a = a_;
      fp::trim(a);
      fp::Poly b = f_->modulus();
      fp::Poly s0 = {1}, s1 = {};
      while (!b.empty()) {
        auto [q, rem] = fp::divmod(p, a, b);
        a = std::move(b);
        b = std::move(rem);
        fp::Poly s2 = fp::sub(p, s0, fp::mul(p, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // a = gcd (a nonzero constant since modulus is irreducible)
      i64 c = fp::inv(a[0], p);
      fp::Poly res = fp::scale(p, s0, c);
      res = fp::mod(p, res, f_->modulus());
      r.a_.assign(a_.size(), 0);
      for (size_t i = 0; i < res.size(); ++i) r.a_[i] = res[i];
      break;
    }
    case FieldKind::ratfunc: {
      r.a_ = b_;
      r.b_ = a_;
      r.canonicalize_ratfunc();
      break;
    }
  }
  return r;
}

FElem FElem::operator/(const FElem& o) const {
  check_same(*this, o);
  return *this * o.inv();
}

FElem FElem::pow(i64 e) const {
  if (e < 0) return inv().pow(-e);
  FElem base = *this, r = f_->one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FElem FElem::frobenius() const {
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      return *this;  // Fermat
    case FieldKind::extension:
      return pow(p);
    case FieldKind::ratfunc: {
      // (sum a_i theta^i)^p = sum a_i theta^(i p) since a_i^p = a_i in F_p
      auto spread = [&](const fp::Poly& q) {
        fp::Poly out;
        if (q.empty()) return out;
        out.assign(q.size() * static_cast<size_t>(p) - (p - 1), 0);
        for (size_t i = 0; i < q.size(); ++i) out[i * static_cast<size_t>(p)] = q[i];
        return out;
      };
      return f_->fraction(spread(a_), spread(b_));
    }
  }
  return *this;
}

std::optional<FElem> FElem::p_root() const {
  i64 p = f_->p();
  switch (f_->kind()) {
    case FieldKind::prime:
      return *this;  // a^p = a
    case FieldKind::extension: {
      // Frobenius has order k, so the inverse is p^(k-1)-th power
      FElem b = *this;
      for (int i = 0; i + 1 < f_->degree(); ++i) b = b.pow(p);
      return b;
    }
    case FieldKind::ratfunc: {
      auto contract = [&](const fp::Poly& q) -> std::optional<fp::Poly> {
        fp::Poly out;
        if (q.empty()) return out;
        out.assign((q.size() - 1) / static_cast<size_t>(p) + 1, 0);
        for (size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          if (i % static_cast<size_t>(p) != 0) return std::nullopt;
          out[i / static_cast<size_t>(p)] = q[i];  // c^p = c in F_p
        }
        return out;
      };
      auto n = contract(a_), d = contract(b_);
      if (!n || !d) return std::nullopt;
      return f_->fraction(*n, *d);
    }
  }
  return std::nullopt;
}

bool FElem::operator==(const FElem& o) const {
  check_same(*this, o);
  return r_ == o.r_ && a_ == o.a_ && b_ == o.b_;
}

bool FElem::operator<(const FElem& o) const {
  check_same(*this, o);
  return std::tie(r_, a_, b_) < std::tie(o.r_, o.a_, o.b_);
}

i64 FElem::residue() const {
  if (f_->kind() != FieldKind::prime) fail("BadParams", "residue() on non-prime element");
  return r_;
}

const fp::Poly& FElem::coeffs() const {
  if (f_->kind() != FieldKind::extension) fail("BadParams", "coeffs() on non-extension element");
  return a_;
}

const fp::Poly& FElem::num() const {
  if (f_->kind() != FieldKind::ratfunc) fail("BadParams", "num() on non-ratfunc element");
  return a_;
}

const fp::Poly& FElem::den() const {
  if (f_->kind() != FieldKind::ratfunc) fail("BadParams", "den() on non-ratfunc element");
  return b_;
}

std::string FElem::str() const {
  switch (f_->kind()) {
    case FieldKind::prime:
      return std::to_string(r_);
    case FieldKind::extension: {
      fp::Poly t = a_;
      fp::trim(t);
      return fp::to_string(t, "a");
    }
    case FieldKind::ratfunc: {
      std::string n = fp::to_string(a_, "theta");
      if (b_ == fp::Poly{1}) return n;
      bool paren_n = a_.size() > 1 || fp::to_string(a_, "theta").find('+') != std::string::npos;
      std::string d = fp::to_string(b_, "theta");
      bool paren_d = b_.size() > 1;
      std::string out = paren_n ? "(" + n + ")" : n;
      out += "/";
      out += paren_d ? "(" + d + ")" : d;
      return out;
    }
  }
  return "?";
}

json FElem::to_json() const {
  switch (f_->kind()) {
    case FieldKind::prime:
      return r_;
    case FieldKind::extension:
      return a_;
    case FieldKind::ratfunc:
      return json{{"num", a_}, {"den", b_}};
  }
  return {};
}

FElem FElem::from_json(FieldRef f, const json& j) {
  switch (f->kind()) {
    case FieldKind::prime:
      return f->from_int(j.get<i64>());
    case FieldKind::extension:
      return f->element(j.get<fp::Poly>());
    case FieldKind::ratfunc:
      return f->fraction(j.at("num").get<fp::Poly>(), j.at("den").get<fp::Poly>());
  }
  fail("BadParams", "bad element json");
}

FElem embed(const FElem& a, FieldRef target) {
  FieldRef src = a.field();
  if (src == target) return a;
  if (src->p() != target->p()) fail("MixedFields", "embedding across characteristics");
  if (src->kind() == FieldKind::prime) {
    if (target->kind() == FieldKind::ratfunc) return target->from_int(a.residue());
    return target->from_int(a.residue());
  }
  if (src->kind() != FieldKind::extension || target->kind() != FieldKind::extension)
    fail("BadParams", "unsupported embedding " + src->name() + " -> " + target->name());
  if (target->degree() % src->degree() != 0)
    fail("BadParams", "no embedding " + src->name() + " -> " + target->name());
  // cached root of the source modulus in the target field
  static std::map<std::pair<FieldRef, FieldRef>, FElem> cache;
  static std::mutex m;
  FElem root;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({src, target});
    if (it != cache.end()) root = it->second;
  }
  if (!root.valid()) {
    const fp::Poly& mod = src->modulus();
    for (i64 i = 0; i < target->order(); ++i) {
      FElem cand = target->nth(i);
      FElem v = target->zero();
      for (size_t d = mod.size(); d-- > 0;) v = v * cand + target->from_int(mod[d]);
      if (v.is_zero()) {
        root = cand;
        break;
      }
    }
    if (!root.valid()) fail("BadParams", "no root of modulus in target (impossible for compatible degrees)");
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::make_pair(src, target), root);
  }
  FElem out = target->zero();
  const fp::Poly& c = a.coeffs();
  for (size_t d = c.size(); d-- > 0;) out = out * root + target->from_int(c[d]);
  return out;
}

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

Mat::Mat(FieldRef f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  a_.assign(static_cast<size_t>(rows) * cols, f->zero());
}

Mat Mat::identity(FieldRef f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Mat Mat::from_rows(FieldRef f, const std::vector<std::vector<FElem>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c) fail("BadShape", "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (f_ != o.f_) fail("MixedFields", "matrix add");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail("BadShape", "matrix add");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (f_ != o.f_) fail("MixedFields", "matrix sub");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail("BadShape", "matrix sub");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (f_ != o.f_) fail("MixedFields", "matrix mul");
  if (cols_ != o.rows_) fail("BadShape", "matrix mul shapes");
  Mat r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::scaled(const FElem& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = x * c;
  return r;
}

Mat Mat::pow(i64 e) const {
  if (rows_ != cols_) fail("BadShape", "matrix pow");
  Mat r = identity(f_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<FElem> Mat::apply(const std::vector<FElem>& v) const {
  if (static_cast<int>(v.size()) != cols_) fail("BadShape", "matrix apply");
  std::vector<FElem> out(static_cast<size_t>(rows_), f_->zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    FElem piv_inv = at(row, col).inv();
    for (int j = col; j < cols_; ++j) at(row, j) = at(row, j) * piv_inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      FElem c = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= c * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref().size());
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) fail("BadShape", "inverse of non-square");
  Mat aug(f_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = f_->one();
  }
  auto piv = aug.rref();
  if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
  Mat inv(f_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

FElem Mat::det() const {
  if (rows_ != cols_) fail("BadShape", "det of non-square");
  Mat m = *this;
  FElem d = f_->one();
  int row = 0;
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return f_->zero();
    if (sel != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(row, j));
      d = -d;
    }
    d = d * m.at(row, col);
    FElem piv_inv = m.at(row, col).inv();
    for (int i = row + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FElem c = m.at(i, col) * piv_inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= c * m.at(row, j);
    }
    ++row;
  }
  return d;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

LinSolve solve_linear(const Mat& M, const Mat& rhs) {
  if (M.field() != rhs.field()) fail("MixedFields", "solve_linear");
  if (M.rows() != rhs.rows()) fail("BadShape", "solve_linear shapes");
  FieldRef f = M.field();
  int n = M.rows(), m = M.cols(), w = rhs.cols();
  Mat aug(f, n, m + w);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = M.at(i, j);
    for (int j = 0; j < w; ++j) aug.at(i, m + j) = rhs.at(i, j);
  }
  auto piv = aug.rref();
  LinSolve out;
  // pivots inside the rhs block mean inconsistency
  for (int c : piv)
    if (c >= m) {
      out.consistent = false;
      out.kernel = kernel_basis(M);
      return out;
    }
  out.consistent = true;
  out.particular = Mat(f, m, w);
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < w; ++j) out.particular.at(piv[r], j) = aug.at(static_cast<int>(r), m + j);
  out.kernel = kernel_basis(M);
  return out;
}

Mat kernel_basis(const Mat& M) {
  Mat R = M;
  auto piv = R.rref();
  FieldRef f = M.field();
  int m = M.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(m), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Mat K(f, static_cast<int>(free_cols.size()), m);
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    K.at(static_cast<int>(fi), fc) = f->one();
    for (size_t r = 0; r < piv.size(); ++r)
      K.at(static_cast<int>(fi), piv[r]) = -R.at(static_cast<int>(r), fc);
  }
  K.rref();  // canonical form: the reduced echelon basis of the null space
  return K;
}

// ---------------------------------------------------------------------------
// Rng (splitmix64; platform-independent for reproducible reports)
// ---------------------------------------------------------------------------

unsigned long long Rng::next() {
  unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

i64 Rng::below(i64 n) {
  if (n <= 0) fail("BadParams", "Rng::below(n) requires n > 0");
  return static_cast<i64>(next() % static_cast<unsigned long long>(n));
}

FElem Rng::element(FieldRef f, int ratfunc_degree) {
  if (f->finite()) return f->nth(below(f->order()));
  fp::Poly num(static_cast<size_t>(ratfunc_degree) + 1), den(static_cast<size_t>(ratfunc_degree) + 1);
  for (auto& c : num) c = below(f->p());
  for (auto& c : den) c = below(f->p());
  fp::trim(num);
  fp::trim(den);
  if (den.empty()) den = {1};
  return f->fraction(num, den);
}

FElem Rng::nonzero(FieldRef f, int ratfunc_degree) {
  for (;;) {
    FElem e = element(f, ratfunc_degree);
    if (!e.is_zero()) return e;
  }
}

}  // namespace witt
