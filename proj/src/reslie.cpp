#include "witt/reslie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace witt {

// ---------------------------------------------------------------------------
// LieVector
// ---------------------------------------------------------------------------

bool LieVector::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

namespace {
void check_same(const LieVector& x, const LieVector& y) {
  if (x.alg != y.alg) fail("MixedAlgebras", "vectors from different algebras");
}
}  // namespace

LieVector LieVector::operator+(const LieVector& o) const {
  check_same(*this, o);
  LieVector r{alg, c};
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

LieVector LieVector::operator-(const LieVector& o) const {
  check_same(*this, o);
  LieVector r{alg, c};
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

LieVector LieVector::operator-() const {
  LieVector r{alg, c};
  for (auto& x : r.c) x = -x;
  return r;
}

LieVector LieVector::scaled(const FElem& s) const {
  LieVector r{alg, c};
  for (auto& x : r.c) x = x * s;
  return r;
}

bool LieVector::operator==(const LieVector& o) const {
  check_same(*this, o);
  return c == o.c;
}

std::string LieVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].str();
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace::Subspace(LieAlgRef alg, const Mat& basis) : alg_(alg) {
  Mat b = basis;
  auto piv = b.rref();
  Mat reduced(b.field(), static_cast<int>(piv.size()), b.cols());
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) reduced.at(static_cast<int>(r), j) = b.at(static_cast<int>(r), j);
  basis_ = reduced;
}

Subspace Subspace::span(LieAlgRef alg, const std::vector<LieVector>& vecs) {
  if (vecs.empty()) return Subspace(alg, Mat(alg->field(), 0, alg->dim()));
  Mat m(alg->field(), static_cast<int>(vecs.size()), alg->dim());
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].alg != alg) fail("MixedAlgebras", "span of vectors from another algebra");
    for (int j = 0; j < alg->dim(); ++j) m.at(static_cast<int>(i), j) = vecs[i].c[static_cast<size_t>(j)];
  }
  return Subspace(alg, m);
}

LieVector Subspace::basis_vector(int i) const {
  std::vector<FElem> c;
  c.reserve(static_cast<size_t>(basis_.cols()));
  for (int j = 0; j < basis_.cols(); ++j) c.push_back(basis_.at(i, j));
  return LieVector{alg_, std::move(c)};
}

bool Subspace::contains(const LieVector& v) const {
  if (v.alg != alg_) fail("MixedAlgebras", "containment across algebras");
  // reduce v against the echelon basis
  std::vector<FElem> w = v.c;
  for (int r = 0; r < basis_.rows(); ++r) {
    int pivot = -1;
    for (int j = 0; j < basis_.cols(); ++j)
      if (!basis_.at(r, j).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    FElem factor = w[static_cast<size_t>(pivot)];  // pivot entry is 1
    if (factor.is_zero()) continue;
    for (int j = 0; j < basis_.cols(); ++j) w[static_cast<size_t>(j)] -= factor * basis_.at(r, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ResLieAlgebra
// ---------------------------------------------------------------------------

ResLieAlgebra::ResLieAlgebra(FieldRef field, std::vector<std::vector<std::vector<FElem>>> bracket,
                             std::vector<std::vector<FElem>> pmap, std::string name, bool verify)
    : field_(field),
      n_(static_cast<int>(pmap.size())),
      c_(std::move(bracket)),
      m_(std::move(pmap)),
      name_(std::move(name)) {
  if (static_cast<int>(c_.size()) != n_) fail("BadShape", "bracket tensor size");
  for (const auto& row : c_) {
    if (static_cast<int>(row.size()) != n_) fail("BadShape", "bracket tensor size");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != n_) fail("BadShape", "bracket coefficient length");
  }
  ad_.reserve(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Mat a(field_, n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) a.at(k, j) = c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
    ad_.push_back(std::move(a));
  }
  if (!verify) return;
  // antisymmetry
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        FElem lhs = c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        FElem rhs = -c_[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (lhs != rhs || (i == j && !lhs.is_zero()))
          fail("BadParams", "bracket tensor is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  // Jacobi on basis triples
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        LieVector ei = basis(i), ej = basis(j), ek = basis(k);
        LieVector s = witt::bracket(ei, witt::bracket(ej, ek)) +
                      witt::bracket(ej, witt::bracket(ek, ei)) +
                      witt::bracket(ek, witt::bracket(ei, ej));
        if (!s.is_zero())
          fail("BadParams", "Jacobi fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  // restricted compatibility (R1) on the basis: ad(e_i)^p = ad(m_i)
  for (int i = 0; i < n_; ++i) {
    Mat lhs = ad_[static_cast<size_t>(i)].pow(p());
    Mat rhs = ad(vector(m_[static_cast<size_t>(i)]));
    if (lhs != rhs) fail("BadParams", "(R1) fails on basis vector " + std::to_string(i));
  }
}

LieVector ResLieAlgebra::zero() const {
  return LieVector{this, std::vector<FElem>(static_cast<size_t>(n_), field_->zero())};
}

LieVector ResLieAlgebra::basis(int i) const {
  LieVector v = zero();
  v.c[static_cast<size_t>(i)] = field_->one();
  return v;
}

LieVector ResLieAlgebra::vector(std::vector<FElem> coords) const {
  if (static_cast<int>(coords.size()) != n_) fail("BadShape", "coordinate length");
  return LieVector{this, std::move(coords)};
}

Mat ResLieAlgebra::ad(const LieVector& x) const {
  if (x.alg != this) fail("MixedAlgebras", "ad of foreign vector");
  Mat a(field_, n_, n_);
  for (int i = 0; i < n_; ++i)
    if (!x.c[static_cast<size_t>(i)].is_zero()) a = a + ad_[static_cast<size_t>(i)].scaled(x.c[static_cast<size_t>(i)]);
  return a;
}

json ResLieAlgebra::to_json() const {
  json br = json::array();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      json coeffs = json::array();
      for (const auto& x : c_[static_cast<size_t>(i)][static_cast<size_t>(j)]) coeffs.push_back(x.to_json());
      br.push_back(json::array({i, j, coeffs}));
    }
  json pm = json::array();
  for (int i = 0; i < n_; ++i) {
    json coeffs = json::array();
    for (const auto& x : m_[static_cast<size_t>(i)]) coeffs.push_back(x.to_json());
    pm.push_back(json::array({i, coeffs}));
  }
  return json{{"field", field_->to_json()}, {"dim", n_}, {"bracket", br}, {"pmap", pm}, {"name", name_}};
}

ResLieAlgebra ResLieAlgebra::from_json(const json& j) {
  FieldRef f = Field::from_json(j.at("field"));
  int n = j.at("dim").get<int>();
  std::vector<std::vector<std::vector<FElem>>> c(
      static_cast<size_t>(n),
      std::vector<std::vector<FElem>>(static_cast<size_t>(n),
                                      std::vector<FElem>(static_cast<size_t>(n), f->zero())));
  for (const auto& entry : j.at("bracket")) {
    int a = entry[0].get<int>(), b = entry[1].get<int>();
    for (int k = 0; k < n; ++k) {
      FElem x = FElem::from_json(f, entry[2][static_cast<size_t>(k)]);
      c[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(k)] = x;
      c[static_cast<size_t>(b)][static_cast<size_t>(a)][static_cast<size_t>(k)] = -x;
    }
  }
  std::vector<std::vector<FElem>> m(static_cast<size_t>(n), std::vector<FElem>(static_cast<size_t>(n), f->zero()));
  for (const auto& entry : j.at("pmap")) {
    int a = entry[0].get<int>();
    for (int k = 0; k < n; ++k)
      m[static_cast<size_t>(a)][static_cast<size_t>(k)] = FElem::from_json(f, entry[1][static_cast<size_t>(k)]);
  }
  std::string name = j.value("name", "");
  return ResLieAlgebra(f, std::move(c), std::move(m), name);
}

// ---------------------------------------------------------------------------
// bracket / s_r / p-map
// ---------------------------------------------------------------------------

LieVector bracket(const LieVector& x, const LieVector& y) {
  check_same(x, y);
  const ResLieAlgebra* g = x.alg;
  LieVector r = g->zero();
  for (int i = 0; i < g->dim(); ++i) {
    if (x.c[static_cast<size_t>(i)].is_zero()) continue;
    auto img = g->ad_matrix(i).apply(y.c);
    for (int k = 0; k < g->dim(); ++k)
      r.c[static_cast<size_t>(k)] += x.c[static_cast<size_t>(i)] * img[static_cast<size_t>(k)];
  }
  return r;
}

LieVector s_r(const LieVector& x, const LieVector& y, int r) {
  check_same(x, y);
  const ResLieAlgebra* g = x.alg;
  i64 p = g->p();
  if (r < 1 || r > p - 1) fail("BadR", "s_r requires 1 <= r <= p-1");
  int slots = static_cast<int>(p) - 1;
  Mat adx = g->ad(x), ady = g->ad(y);
  LieVector sum = g->zero();
  // iterate over all u:{1..p-1} -> {0,1} with exactly r zeros
  for (unsigned mask = 0; mask < (1u << slots); ++mask) {
    int zeros = slots - __builtin_popcount(mask);
    if (zeros != r) continue;
    // rightmost factor ad_{t_u(p-1)} applies first
    std::vector<FElem> v = y.c;
    for (int pos = slots - 1; pos >= 0; --pos) {
      bool one = (mask >> pos) & 1u;
      v = (one ? ady : adx).apply(v);
    }
    for (size_t k = 0; k < v.size(); ++k) sum.c[k] += v[k];
  }
  FElem coeff = -(g->field()->from_int(r).inv());
  return sum.scaled(coeff);
}

LieVector p_map_with_order(const LieVector& x, const std::vector<int>& order) {
  const ResLieAlgebra* g = x.alg;
  i64 p = g->p();
  LieVector acc = g->zero();     // running partial sum of basis terms
  LieVector power = g->zero();   // acc^[p]
  bool first = true;
  for (int i : order) {
    const FElem& lam = x.c[static_cast<size_t>(i)];
    if (lam.is_zero()) continue;
    // (lam e_i)^[p] = lam^p m_i  by (R2)
    LieVector term_pow = g->vector(std::vector<FElem>(g->pmap_const(i))).scaled(lam.pow(p));
    LieVector term = g->basis(i).scaled(lam);
    if (first) {
      acc = term;
      power = term_pow;
      first = false;
      continue;
    }
    LieVector next = power + term_pow;
    for (int r = 1; r <= p - 1; ++r) next = next + s_r(acc, term, r);
    power = next;
    acc = acc + term;
  }
  return first ? g->zero() : power;
}

LieVector p_map(const LieVector& x) {
  std::vector<int> order(static_cast<size_t>(x.alg->dim()));
  for (int i = 0; i < x.alg->dim(); ++i) order[static_cast<size_t>(i)] = i;
  return p_map_with_order(x, order);
}

LieVector p_map_iterate(const LieVector& x, int times) {
  LieVector v = x;
  for (int i = 0; i < times; ++i) v = p_map(v);
  return v;
}

// ---------------------------------------------------------------------------
// axiom verification
// ---------------------------------------------------------------------------

std::string AxiomReport::str() const {
  std::ostringstream os;
  os << (passed ? "pass" : "FAIL") << " (" << vectors_checked << " vectors, "
     << (exhaustive ? "exhaustive" : "sampled") << ")";
  for (const auto& f : failures) os << "\n  " << f;
  return os.str();
}

std::vector<LieVector> enumerate_vectors(const ResLieAlgebra& g) {
  if (!g.field()->finite()) fail("InfiniteField", "cannot enumerate vectors over " + g.field()->name());
  i64 q = g.field()->order();
  i64 total = 1;
  for (int i = 0; i < g.dim(); ++i) {
    total *= q;
    if (total > 20000000) fail("SearchSpaceTooLarge", "vector enumeration above cap");
  }
  std::vector<LieVector> out;
  out.reserve(static_cast<size_t>(total));
  for (i64 idx = 0; idx < total; ++idx) {
    i64 v = idx;
    std::vector<FElem> coords;
    coords.reserve(static_cast<size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) {
      coords.push_back(g.field()->nth(v % q));
      v /= q;
    }
    out.push_back(g.vector(std::move(coords)));
  }
  return out;
}

AxiomReport verify_axioms(const ResLieAlgebra& g, Rng& rng, long long sample_budget) {
  AxiomReport rep;
  int n = g.dim();
  // antisymmetry + Jacobi on all basis triples
  for (int i = 0; i < n && rep.passed; ++i)
    for (int j = 0; j < n && rep.passed; ++j) {
      LieVector lhs = bracket(g.basis(i), g.basis(j));
      LieVector rhs = -bracket(g.basis(j), g.basis(i));
      if (lhs != rhs) {
        rep.passed = false;
        rep.failures.push_back("antisymmetry fails at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        LieVector s = bracket(g.basis(i), bracket(g.basis(j), g.basis(k))) +
                      bracket(g.basis(j), bracket(g.basis(k), g.basis(i))) +
                      bracket(g.basis(k), bracket(g.basis(i), g.basis(j)));
        if (!s.is_zero()) {
          rep.passed = false;
          rep.failures.push_back("Jacobi fails at basis triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
  // (R1) and (R3) on vectors: exhaustive when the space is small
  bool exhaustive = false;
  std::vector<LieVector> pool;
  if (g.field()->finite()) {
    long double size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<long double>(g.field()->order());
    if (size <= 100000.0L) {
      pool = enumerate_vectors(g);
      exhaustive = true;
    }
  }
  if (!exhaustive) {
    for (long long i = 0; i < sample_budget; ++i) {
      std::vector<FElem> coords;
      for (int j = 0; j < n; ++j) coords.push_back(rng.element(g.field()));
      pool.push_back(g.vector(std::move(coords)));
    }
  }
  rep.exhaustive = exhaustive;
  // (R1): ad(x^[p]) = ad(x)^p
  for (const auto& x : pool) {
    ++rep.vectors_checked;
    Mat lhs = g.ad(p_map(x));
    Mat rhs = g.ad(x).pow(g.p());
    if (!(lhs == rhs)) {
      rep.passed = false;
      rep.failures.push_back("(R1) fails at x = " + x.str());
      break;
    }
  }
  // (R3): (x+y)^[p] = x^[p] + y^[p] + sum s_r(x,y), on pairs drawn from the pool
  size_t pair_budget = exhaustive ? std::min<size_t>(pool.size(), 60) : pool.size();
  for (size_t a = 0; a < pair_budget && rep.passed; ++a) {
    const LieVector& x = pool[exhaustive ? a : rng.below(static_cast<i64>(pool.size()))];
    const LieVector& y = pool[exhaustive ? (a * 7 + 3) % pool.size() : rng.below(static_cast<i64>(pool.size()))];
    LieVector lhs = p_map(x + y);
    LieVector rhs = p_map(x) + p_map(y);
    for (int r = 1; r <= g.p() - 1; ++r) rhs = rhs + s_r(x, y, r);
    if (lhs != rhs) {
      rep.passed = false;
      rep.failures.push_back("(R3) fails at x = " + x.str() + ", y = " + y.str());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// standard algebras
// ---------------------------------------------------------------------------

namespace {

using Tensor = std::vector<std::vector<std::vector<FElem>>>;

Tensor zero_tensor(FieldRef f, int n) {
  return Tensor(static_cast<size_t>(n),
                std::vector<std::vector<FElem>>(static_cast<size_t>(n),
                                                std::vector<FElem>(static_cast<size_t>(n), f->zero())));
}

std::vector<std::vector<FElem>> zero_pmap(FieldRef f, int n) {
  return std::vector<std::vector<FElem>>(static_cast<size_t>(n),
                                         std::vector<FElem>(static_cast<size_t>(n), f->zero()));
}

// express a matrix in a given basis of a matrix subspace (solves exactly)
std::vector<FElem> in_basis(FieldRef f, const std::vector<Mat>& basis, const Mat& target) {
  int n = basis[0].rows();
  Mat sys(f, n * n, static_cast<int>(basis.size()));
  Mat rhs(f, n * n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (size_t b = 0; b < basis.size(); ++b) sys.at(i * n + j, static_cast<int>(b)) = basis[b].at(i, j);
      rhs.at(i * n + j, 0) = target.at(i, j);
    }
  LinSolve sol = solve_linear(sys, rhs);
  if (!sol.consistent) fail("BadParams", "matrix outside the spanned subspace");
  std::vector<FElem> out;
  out.reserve(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) out.push_back(sol.particular.at(static_cast<int>(b), 0));
  return out;
}

ResLieAlgebra from_matrix_basis(FieldRef f, const std::vector<Mat>& basis, const std::string& name) {
  int dim = static_cast<int>(basis.size());
  Tensor c = zero_tensor(f, dim);
  auto m = zero_pmap(f, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Mat commutator = basis[static_cast<size_t>(i)] * basis[static_cast<size_t>(j)] -
                       basis[static_cast<size_t>(j)] * basis[static_cast<size_t>(i)];
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] = in_basis(f, basis, commutator);
    }
    m[static_cast<size_t>(i)] = in_basis(f, basis, basis[static_cast<size_t>(i)].pow(f->p()));
  }
  return ResLieAlgebra(f, std::move(c), std::move(m), name);
}

}  // namespace

ResLieAlgebra trivial_algebra(FieldRef f, int n) {
  return ResLieAlgebra(f, zero_tensor(f, n), zero_pmap(f, n), "trivial(" + std::to_string(n) + ")");
}

ResLieAlgebra gl1(FieldRef f) {
  Tensor c = zero_tensor(f, 1);
  auto m = zero_pmap(f, 1);
  m[0][0] = f->one();
  return ResLieAlgebra(f, std::move(c), std::move(m), "gl1");
}

ResLieAlgebra gl(FieldRef f, int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat e(f, n, n);
      e.at(i, j) = f->one();
      basis.push_back(std::move(e));
    }
  return from_matrix_basis(f, basis, "gl(" + std::to_string(n) + ")");
}

ResLieAlgebra sl(FieldRef f, int n) {
  std::vector<Mat> basis;
  if (n == 2) {
    // (h, x, y) with h = diag(1,-1), x = E12, y = E21; the displayed relations
    // in the literature are taken from these matrices, not vice versa
    Mat h(f, 2, 2), x(f, 2, 2), y(f, 2, 2);
    h.at(0, 0) = f->one();
    h.at(1, 1) = -f->one();
    x.at(0, 1) = f->one();
    y.at(1, 0) = f->one();
    basis = {h, x, y};
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      Mat h(f, n, n);
      h.at(i, i) = f->one();
      h.at(i + 1, i + 1) = -f->one();
      basis.push_back(std::move(h));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Mat e(f, n, n);
        e.at(i, j) = f->one();
        basis.push_back(std::move(e));
      }
  }
  return from_matrix_basis(f, basis, "sl(" + std::to_string(n) + ")");
}

ResLieAlgebra semidirect_kn_gl1(FieldRef f, int n) {
  // basis v_1..v_n, e with [v, e] = -v, v^[p] = 0, e^[p] = e
  int dim = n + 1;
  Tensor c = zero_tensor(f, dim);
  auto m = zero_pmap(f, dim);
  for (int i = 0; i < n; ++i) {
    c[static_cast<size_t>(i)][static_cast<size_t>(n)][static_cast<size_t>(i)] = -f->one();
    c[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(i)] = f->one();
  }
  m[static_cast<size_t>(n)][static_cast<size_t>(n)] = f->one();
  return ResLieAlgebra(f, std::move(c), std::move(m), "k^" + std::to_string(n) + " x| gl1");
}

// ---------------------------------------------------------------------------
// subspace operations
// ---------------------------------------------------------------------------

Subspace center(const ResLieAlgebra& g) {
  // joint kernel of all ad(e_i)
  int n = g.dim();
  Mat stacked(g.field(), n * n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) stacked.at(i * n + r, j) = g.ad_matrix(i).at(r, j);
  return Subspace(&g, kernel_basis(stacked));
}

Subspace derived_subalgebra(const ResLieAlgebra& g) {
  std::vector<LieVector> brackets;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) brackets.push_back(bracket(g.basis(i), g.basis(j)));
  return Subspace::span(&g, brackets);
}

bool is_subalgebra(const ResLieAlgebra& g, const Subspace& s) {
  (void)g;
  // bracket closure on basis pairs + p-images of the basis; sufficient by
  // (R2)/(R3) since the s_r corrections are iterated brackets
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = i + 1; j < s.dim(); ++j)
      if (!s.contains(bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
    if (!s.contains(p_map(s.basis_vector(i)))) return false;
  }
  return true;
}

bool is_ideal(const ResLieAlgebra& g, const Subspace& s, std::pair<LieVector, LieVector>* witness) {
  for (int i = 0; i < s.dim(); ++i) {
    LieVector x = s.basis_vector(i);
    for (int j = 0; j < g.dim(); ++j) {
      LieVector b = bracket(x, g.basis(j));
      if (!s.contains(b)) {
        if (witness) *witness = {x, g.basis(j)};
        return false;
      }
    }
    if (!s.contains(p_map(x))) {
      if (witness) *witness = {x, x};
      return false;
    }
  }
  // double-check p-map stability by enumerating the span when cheap
  if (g.field()->finite() && s.dim() > 0) {
    long double size = 1;
    for (int i = 0; i < s.dim(); ++i) size *= static_cast<long double>(g.field()->order());
    if (size <= 4096.0L) {
      i64 q = g.field()->order();
      i64 total = 1;
      for (int i = 0; i < s.dim(); ++i) total *= q;
      for (i64 idx = 0; idx < total; ++idx) {
        i64 v = idx;
        LieVector x = g.zero();
        for (int i = 0; i < s.dim(); ++i) {
          x = x + s.basis_vector(i).scaled(g.field()->nth(v % q));
          v /= q;
        }
        if (!s.contains(p_map(x))) {
          if (witness) *witness = {x, x};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_restricted_derivation(const ResLieAlgebra& g, const Mat& d, const Subspace& domain, Rng& rng,
                              long long sample_budget) {
  if (d.rows() != g.dim() || d.cols() != g.dim()) fail("BadShape", "derivation matrix shape");
  auto apply = [&](const LieVector& v) { return g.vector(d.apply(v.c)); };
  // D maps domain into domain
  for (int i = 0; i < domain.dim(); ++i)
    if (!domain.contains(apply(domain.basis_vector(i)))) return false;
  // Leibniz on domain basis pairs
  for (int i = 0; i < domain.dim(); ++i)
    for (int j = 0; j < domain.dim(); ++j) {
      LieVector a = domain.basis_vector(i), b = domain.basis_vector(j);
      LieVector lhs = apply(bracket(a, b));
      LieVector rhs = bracket(apply(a), b) + bracket(a, apply(b));
      if (lhs != rhs) fail("NotADerivation", "Leibniz fails on domain basis pair");
    }
  // D(a^[p]) = ad_a^(p-1)(D(a)) for a in the domain
  auto restricted_at = [&](const LieVector& a) {
    LieVector lhs = apply(p_map(a));
    LieVector rhs = g.vector(g.ad(a).pow(g.p() - 1).apply(apply(a).c));
    return lhs == rhs;
  };
  if (g.field()->finite()) {
    long double size = 1;
    for (int i = 0; i < domain.dim(); ++i) size *= static_cast<long double>(g.field()->order());
    if (size <= 100000.0L) {
      i64 q = g.field()->order();
      i64 total = 1;
      for (int i = 0; i < domain.dim(); ++i) total *= q;
      for (i64 idx = 0; idx < total; ++idx) {
        i64 v = idx;
        LieVector a = g.zero();
        for (int i = 0; i < domain.dim(); ++i) {
          a = a + domain.basis_vector(i).scaled(g.field()->nth(v % q));
          v /= q;
        }
        if (!restricted_at(a)) return false;
      }
      return true;
    }
  }
  for (long long t = 0; t < sample_budget; ++t) {
    LieVector a = g.zero();
    for (int i = 0; i < domain.dim(); ++i) a = a + domain.basis_vector(i).scaled(rng.element(g.field()));
    if (!restricted_at(a)) return false;
  }
  return true;
}

ResLieAlgebra semidirect_product(const ResLieAlgebra& a, const ResLieAlgebra& h,
                                 const std::vector<Mat>& phi, Rng& rng) {
  if (a.field() != h.field()) fail("MixedFields", "semidirect product over different fields");
  FieldRef f = a.field();
  int na = a.dim(), nh = h.dim();
  if (static_cast<int>(phi.size()) != nh) fail("BadParams", "one phi matrix per h basis vector");
  Subspace full(&a, Mat::identity(f, na));
  for (const auto& m : phi)
    if (!is_restricted_derivation(a, m, full, rng)) fail("PhiNotRestricted", "phi image is not a restricted derivation");
  auto phi_of = [&](const std::vector<FElem>& hcoords) {
    Mat m(f, na, na);
    for (int j = 0; j < nh; ++j)
      if (!hcoords[static_cast<size_t>(j)].is_zero()) m = m + phi[static_cast<size_t>(j)].scaled(hcoords[static_cast<size_t>(j)]);
    return m;
  };
  // phi must be a homomorphism of restricted Lie algebras
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nh; ++j) {
      Mat lhs = phi_of(h.bracket_const(i, j));
      Mat rhs = phi[static_cast<size_t>(i)] * phi[static_cast<size_t>(j)] - phi[static_cast<size_t>(j)] * phi[static_cast<size_t>(i)];
      if (!(lhs == rhs)) fail("PhiNotHomomorphism", "phi does not respect the bracket");
    }
  for (int i = 0; i < nh; ++i) {
    Mat lhs = phi_of(h.pmap_const(i));
    Mat rhs = phi[static_cast<size_t>(i)].pow(f->p());
    if (!(lhs == rhs)) fail("PhiNotHomomorphism", "phi does not respect the p-map");
  }
  int dim = na + nh;
  Tensor c = zero_tensor(f, dim);
  auto m = zero_pmap(f, dim);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = a.bracket_const(i, j)[static_cast<size_t>(k)];
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nh; ++j)
      for (int k = 0; k < nh; ++k)
        c[static_cast<size_t>(na + i)][static_cast<size_t>(na + j)][static_cast<size_t>(na + k)] = h.bracket_const(i, j)[static_cast<size_t>(k)];
  for (int j = 0; j < nh; ++j)
    for (int i = 0; i < na; ++i)
      for (int k = 0; k < na; ++k) {
        // [h_j, a_i] = phi_j(a_i), [a_i, h_j] = -phi_j(a_i)
        FElem v = phi[static_cast<size_t>(j)].at(k, i);
        c[static_cast<size_t>(na + j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = v;
        c[static_cast<size_t>(i)][static_cast<size_t>(na + j)][static_cast<size_t>(k)] = -v;
      }
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < na; ++k) m[static_cast<size_t>(i)][static_cast<size_t>(k)] = a.pmap_const(i)[static_cast<size_t>(k)];
  for (int j = 0; j < nh; ++j)
    for (int k = 0; k < nh; ++k) m[static_cast<size_t>(na + j)][static_cast<size_t>(na + k)] = h.pmap_const(j)[static_cast<size_t>(k)];
  return ResLieAlgebra(f, std::move(c), std::move(m), a.name() + " x| " + h.name());
}

// ---------------------------------------------------------------------------
// p-closedness, toral rank, unipotence, fingerprints
// ---------------------------------------------------------------------------

PClosedResult is_p_closed(const LieVector& x) {
  const ResLieAlgebra* g = x.alg;
  LieVector xp = p_map(x);
  if (xp.is_zero()) return {PClosedKind::additive, g->field()->zero()};
  // find scalar with xp = scalar * x
  int lead = -1;
  for (int i = 0; i < g->dim(); ++i)
    if (!x.c[static_cast<size_t>(i)].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return {PClosedKind::not_closed, g->field()->zero()};  // x = 0 but xp != 0 cannot happen
  FElem scalar = xp.c[static_cast<size_t>(lead)] / x.c[static_cast<size_t>(lead)];
  if (x.scaled(scalar) == xp) return {PClosedKind::multiplicative, scalar};
  return {PClosedKind::not_closed, g->field()->zero()};
}

ResLieAlgebra base_change(const ResLieAlgebra& g, FieldRef target) {
  if (g.field() == target) return g;
  auto lift = [&](const FElem& x) { return embed(x, target); };
  Tensor c = zero_tensor(target, g.dim());
  auto m = zero_pmap(target, g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k)
        c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = lift(g.bracket_const(i, j)[static_cast<size_t>(k)]);
    for (int k = 0; k < g.dim(); ++k) m[static_cast<size_t>(i)][static_cast<size_t>(k)] = lift(g.pmap_const(i)[static_cast<size_t>(k)]);
  }
  return ResLieAlgebra(target, std::move(c), std::move(m), g.name() + " over " + target->name(), false);
}

namespace {

FieldRef extend_base(FieldRef f, int ext_degree) {
  if (ext_degree == 1) return f;
  if (f->kind() != FieldKind::prime) fail("BadParams", "extension of scalars only from prime base fields");
  return Field::extension(f->p(), ext_degree);
}

}  // namespace

int toral_rank_lower_bound(const ResLieAlgebra& g0, int ext_degree) {
  FieldRef target = extend_base(g0.field(), ext_degree);
  ResLieAlgebra gx = base_change(g0, target);
  const ResLieAlgebra& g = ext_degree == 1 ? g0 : gx;
  if (!g.field()->finite()) fail("SearchSpaceTooLarge", "toral search needs a finite field");
  long double size = 1;
  for (int i = 0; i < g.dim(); ++i) size *= static_cast<long double>(g.field()->order());
  if (size > 10000000.0L) fail("SearchSpaceTooLarge", "toral search space above 10^7");
  // collect toral vectors x^[p] = x
  std::vector<LieVector> torals;
  for (const auto& v : enumerate_vectors(g)) {
    if (v.is_zero()) continue;
    if (p_map(v) == v) torals.push_back(v);
  }
  // max independent pairwise-commuting subset (DFS with pruning)
  int best = 0;
  std::vector<const LieVector*> chosen;
  std::function<void(size_t, Mat&)> dfs = [&](size_t start, Mat& span) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (chosen.size() + (torals.size() - start) <= static_cast<size_t>(best)) return;
    for (size_t i = start; i < torals.size(); ++i) {
      const LieVector& cand = torals[i];
      bool commutes = true;
      for (const auto* x : chosen)
        if (!bracket(*x, cand).is_zero()) {
          commutes = false;
          break;
        }
      if (!commutes) continue;
      // independence check via rank growth
      Mat next(g.field(), span.rows() + 1, g.dim());
      for (int r = 0; r < span.rows(); ++r)
        for (int j = 0; j < g.dim(); ++j) next.at(r, j) = span.at(r, j);
      for (int j = 0; j < g.dim(); ++j) next.at(span.rows(), j) = cand.c[static_cast<size_t>(j)];
      if (next.rank() != span.rows() + 1) continue;
      chosen.push_back(&cand);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  Mat empty(g.field(), 0, g.dim());
  dfs(0, empty);
  return best;
}

bool is_unipotent(const ResLieAlgebra& g, int nu_max) {
  if (nu_max < 0) nu_max = g.dim();
  for (const auto& v : enumerate_vectors(g)) {
    LieVector x = v;
    bool vanished = false;
    for (int nu = 0; nu <= nu_max; ++nu) {
      if (x.is_zero()) {
        vanished = true;
        break;
      }
      x = p_map(x);
    }
    if (!vanished) return false;
  }
  return true;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return p == o.p && ext_degree == o.ext_degree && dim == o.dim && center_dim == o.center_dim &&
         derived_dim == o.derived_dim && toral_lb == o.toral_lb && additive == o.additive &&
         multiplicative == o.multiplicative && not_closed == o.not_closed;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " center=" << center_dim << " derived=" << derived_dim
     << " toral>=" << toral_lb << " add=" << additive << " mult=" << multiplicative
     << " open=" << not_closed;
  return os.str();
}

json Fingerprint::to_json() const {
  // the corresponding height-one group scheme has order p^dim
  i64 group_order = 1;
  for (int i = 0; i < dim; ++i) group_order *= p;
  return json{{"p", p},          {"ext_degree", ext_degree}, {"dim", dim},
              {"center", center_dim}, {"derived", derived_dim},   {"toral_lb", toral_lb},
              {"additive", additive}, {"multiplicative", multiplicative}, {"not_closed", not_closed},
              {"group_order", group_order}};
}

Fingerprint fingerprint(const ResLieAlgebra& g, int ext_degree) {
  Fingerprint fp;
  fp.p = g.p();
  fp.ext_degree = ext_degree;
  fp.dim = g.dim();
  fp.center_dim = center(g).dim();
  fp.derived_dim = derived_subalgebra(g).dim();
  fp.toral_lb = toral_rank_lower_bound(g, ext_degree);
  FieldRef target = extend_base(g.field(), ext_degree);
  ResLieAlgebra gx = base_change(g, target);
  const ResLieAlgebra& h = ext_degree == 1 ? g : gx;
  for (const auto& v : enumerate_vectors(h)) {
    switch (is_p_closed(v).kind) {
      case PClosedKind::additive:
        ++fp.additive;
        break;
      case PClosedKind::multiplicative:
        ++fp.multiplicative;
        break;
      case PClosedKind::not_closed:
        ++fp.not_closed;
        break;
    }
  }
  return fp;
}

ResLieAlgebra restrict_to(const ResLieAlgebra& g, const Subspace& s) {
  FieldRef f = g.field();
  int d = s.dim();
  // coordinates of a vector of g inside the subspace basis
  Mat basis_t(f, g.dim(), d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < g.dim(); ++j) basis_t.at(j, i) = s.basis().at(i, j);
  auto coords_in = [&](const LieVector& v) {
    Mat rhs(f, g.dim(), 1);
    for (int j = 0; j < g.dim(); ++j) rhs.at(j, 0) = v.c[static_cast<size_t>(j)];
    LinSolve sol = solve_linear(basis_t, rhs);
    if (!sol.consistent) fail("BadParams", "subspace is not closed (restrict_to)");
    std::vector<FElem> out;
    for (int i = 0; i < d; ++i) out.push_back(sol.particular.at(i, 0));
    return out;
  };
  Tensor c = zero_tensor(f, d);
  auto m = zero_pmap(f, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) c[static_cast<size_t>(i)][static_cast<size_t>(j)] = coords_in(bracket(s.basis_vector(i), s.basis_vector(j)));
    m[static_cast<size_t>(i)] = coords_in(p_map(s.basis_vector(i)));
  }
  return ResLieAlgebra(f, std::move(c), std::move(m), g.name() + "|sub");
}

// ---------------------------------------------------------------------------
// subalgebra enumeration
// ---------------------------------------------------------------------------

namespace {

// enumerate all reduced-row-echelon bases of d-dimensional subspaces of F_q^n
void enumerate_rref(FieldRef f, int n, int d, const std::function<void(const Mat&)>& visit) {
  if (d == 0) {
    visit(Mat(f, 0, n));
    return;
  }
  std::vector<int> pivots(static_cast<size_t>(d));
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == d) {
      // free entries: row r, column c where c > pivots[r], c not a pivot
      std::vector<std::pair<int, int>> free_slots;
      std::vector<bool> is_pivot(static_cast<size_t>(n), false);
      for (int r = 0; r < d; ++r) is_pivot[static_cast<size_t>(pivots[static_cast<size_t>(r)])] = true;
      for (int r = 0; r < d; ++r)
        for (int c2 = pivots[static_cast<size_t>(r)] + 1; c2 < n; ++c2)
          if (!is_pivot[static_cast<size_t>(c2)]) free_slots.push_back({r, c2});
      i64 q = f->order();
      i64 total = 1;
      for (size_t i = 0; i < free_slots.size(); ++i) {
        total *= q;
        if (total > 50000000) fail("SearchSpaceTooLarge", "too many echelon forms");
      }
      for (i64 code = 0; code < total; ++code) {
        Mat m(f, d, n);
        for (int r = 0; r < d; ++r) m.at(r, pivots[static_cast<size_t>(r)]) = f->one();
        i64 v = code;
        for (const auto& [r, c2] : free_slots) {
          m.at(r, c2) = f->nth(v % q);
          v /= q;
        }
        visit(m);
      }
      return;
    }
    for (int c2 = start; c2 < n; ++c2) {
      pivots[static_cast<size_t>(idx)] = c2;
      choose(idx + 1, c2 + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

std::vector<SubalgebraRecord> subalgebra_enumeration(const ResLieAlgebra& g, const Subspace* designated,
                                                     int fingerprint_ext) {
  if (g.dim() > 5 || g.p() > 5) fail("SearchSpaceTooLarge", "subalgebra enumeration capped at dim <= 5, p <= 5");
  if (!g.field()->finite()) fail("InfiniteField", "subalgebra enumeration needs a finite field");
  std::vector<SubalgebraRecord> out;
  for (int d = 0; d <= g.dim(); ++d) {
    enumerate_rref(g.field(), g.dim(), d, [&](const Mat& basis) {
      Subspace s(&g, basis);
      if (!is_subalgebra(g, s)) return;
      SubalgebraRecord rec;
      rec.space = s;
      rec.transitive = designated ? !designated->contains(s) : true;
      if (d > 0) {
        ResLieAlgebra sub = restrict_to(g, s);
        rec.fp = fingerprint(sub, fingerprint_ext);
      } else {
        rec.fp.p = g.p();
      }
      out.push_back(std::move(rec));
    });
  }
  return out;
}

AutomorphismCount automorphism_points(const ResLieAlgebra& g, FieldRef r) {
  if (!r->finite()) fail("InfiniteField", "automorphism point count needs a finite field");
  if (g.dim() > 3) fail("SearchSpaceTooLarge", "automorphism enumeration capped at dim <= 3");
  long double size = 1;
  for (int i = 0; i < g.dim() * g.dim(); ++i) size *= static_cast<long double>(r->order());
  if (size > 100000000.0L) fail("SearchSpaceTooLarge", "automorphism search space above 10^8");
  ResLieAlgebra gx = base_change(g, r);
  const ResLieAlgebra& h = (g.field() == r) ? g : gx;
  int n = h.dim();
  i64 q = r->order();
  i64 total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  AutomorphismCount result;
  for (i64 code = 0; code < total; ++code) {
    Mat a(r, n, n);
    i64 v = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = r->nth(v % q);
        v /= q;
      }
    if (a.rank() != n) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      // p-map condition: A(m_i) = p_map(A e_i)
      std::vector<FElem> img;
      for (int k2 = 0; k2 < n; ++k2) img.push_back(a.at(k2, i));
      LieVector ai = h.vector(img);
      LieVector lhs = h.vector(a.apply(h.pmap_const(i)));
      if (p_map(ai) != lhs) ok = false;
      for (int j = i + 1; j < n && ok; ++j) {
        std::vector<FElem> img2;
        for (int k2 = 0; k2 < n; ++k2) img2.push_back(a.at(k2, j));
        LieVector aj = h.vector(img2);
        LieVector lhs2 = h.vector(a.apply(h.bracket_const(i, j)));
        if (bracket(ai, aj) != lhs2) ok = false;
      }
    }
    if (!ok) continue;
    ++result.count;
    if (result.sample.size() < 16) result.sample.push_back(a);
  }
  return result;
}

}  // namespace witt
