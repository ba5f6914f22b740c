#include "witt/wittalg.hpp"

#include <functional>

namespace witt {

WittAlgebra::WittAlgebra(FieldRef k, const FElem& omega) : k_(k), omega_(omega) {
  if (omega.field() != k) fail("MixedFields", "omega must lie in the coefficient field");
  trunc_ = TruncAlgebra::make(k, {omega});
  int n = static_cast<int>(k->p());
  std::vector<std::vector<std::vector<FElem>>> c(
      static_cast<size_t>(n),
      std::vector<std::vector<FElem>>(static_cast<size_t>(n),
                                      std::vector<FElem>(static_cast<size_t>(n), k->zero())));
  // [t^i d, t^j d] = (j-i) t^(i+j-1) d, with t^(p+s) rewritten as w t^s
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = i + j - 1;
      FElem coef = k->from_int(j - i);
      if (e < 0 || coef.is_zero()) continue;
      if (e >= n) {
        e -= n;
        coef = coef * omega;
      }
      c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(e)] = coef;
    }
  // basis p-map images from the operator route (d/dt matrices)
  std::vector<std::vector<FElem>> m(static_cast<size_t>(n), std::vector<FElem>(static_cast<size_t>(n), k->zero()));
  for (int i = 0; i < n; ++i) {
    TruncElement f = trunc_->monomial({i, 0, 0}, k->one());
    DerivationMatrix d = DerivationMatrix::from_values(trunc_, {f});
    DerivationMatrix dp = d.p_power();
    // read off as g d/dt: g = D^p(t)
    TruncElement g = dp.value_on_variable(0);
    for (const auto& [e, cc] : g.terms()) m[static_cast<size_t>(i)][static_cast<size_t>(e[0])] = cc;
    // cross-check: the operator p-power must be multiplication by g then d/dt
    DerivationMatrix expected = DerivationMatrix::from_values(trunc_, {g});
    if (!(expected == dp)) fail("BadParams", "operator p-power is not of the form g d/dt");
  }
  lie_ = std::make_unique<ResLieAlgebra>(k, std::move(c), std::move(m),
                                         "witt(p=" + std::to_string(k->p()) + ", w=" + omega.str() + ")");
}

LieVector WittAlgebra::vector_of(const TruncElement& f) const {
  if (f.algebra() != trunc_) fail("MixedAlgebras", "polynomial from another algebra");
  std::vector<FElem> cs(static_cast<size_t>(p()), k_->zero());
  for (const auto& [e, c] : f.terms()) cs[static_cast<size_t>(e[0])] = c;
  return lie_->vector(std::move(cs));
}

TruncElement WittAlgebra::poly_of(const LieVector& v) const {
  if (v.alg != lie_.get()) fail("MixedAlgebras", "vector from another algebra");
  TruncElement f = trunc_->zero();
  for (int i = 0; i < lie_->dim(); ++i)
    if (!v.c[static_cast<size_t>(i)].is_zero()) f += trunc_->monomial({i, 0, 0}, v.c[static_cast<size_t>(i)]);
  return f;
}

DerivationMatrix WittAlgebra::derivation_of(const LieVector& v) const {
  return DerivationMatrix::from_values(trunc_, {poly_of(v)});
}

LieVector witt_p_map(const WittAlgebra& w, const TruncElement& f) {
  FElem c = c_coefficient(f);
  return w.vector_of(f).scaled(c);
}

PClosedSweep p_closed_sweep(const WittAlgebra& w, int ext_degree) {
  FieldRef base = w.field();
  if (base->kind() != FieldKind::prime && ext_degree != 1)
    fail("BadParams", "extension sweep needs a prime base field");
  FieldRef k = ext_degree == 1 ? base : Field::extension(base->p(), ext_degree);
  long double size = 1;
  for (i64 i = 0; i < w.p(); ++i) size *= static_cast<long double>(k->order());
  if (size > 10000000.0L) fail("SearchSpaceTooLarge", "p-closed sweep above 10^7 vectors");
  // rebuild over the extension
  WittAlgebra wx(k, embed(w.omega(), k));
  const WittAlgebra& ww = (k == base) ? w : wx;
  PClosedSweep sweep;
  sweep.additive_matches_operator_route = true;
  for (const auto& v : enumerate_vectors(ww.lie())) {
    ++sweep.total;
    auto res = is_p_closed(v);
    if (res.kind == PClosedKind::not_closed) return sweep;  // all_closed stays false
    if (res.kind == PClosedKind::additive) {
      ++sweep.additive;
      DerivationMatrix d = ww.derivation_of(v);
      if (!d.p_power().is_zero()) sweep.additive_matches_operator_route = false;
    } else {
      ++sweep.multiplicative;
      DerivationMatrix d = ww.derivation_of(v);
      if (d.p_power().is_zero()) sweep.additive_matches_operator_route = false;
    }
  }
  sweep.all_closed = true;
  return sweep;
}

SimplicityResult is_simple(const WittAlgebra& w) {
  const ResLieAlgebra& g = w.lie();
  if (g.field()->kind() != FieldKind::prime || g.p() > 7)
    fail("SearchSpaceTooLarge", "simplicity sweep restricted to F_p, p <= 7");
  i64 p = g.p();
  int n = g.dim();
  // fast lane on raw residues: ad matrices as int tables
  std::vector<std::vector<i64>> ad(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(n * n), 0));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int jj = 0; jj < n; ++jj)
        ad[static_cast<size_t>(i)][static_cast<size_t>(r * n + jj)] = g.ad_matrix(i).at(r, jj).residue();
  i64 total = 1;
  for (int i = 0; i < n; ++i) total *= p;

  auto closure_is_full = [&](const std::vector<i64>& seed) {
    // echelon basis rows over F_p with pivot bookkeeping
    std::vector<std::vector<i64>> rows;
    std::vector<int> pivots;
    std::vector<std::vector<i64>> queue = {seed};
    auto reduce_insert = [&](std::vector<i64> v) -> bool {
      for (size_t r = 0; r < rows.size(); ++r) {
        i64 c = v[static_cast<size_t>(pivots[r])];
        if (c == 0) continue;
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = fp::norm(v[static_cast<size_t>(j)] - c * rows[r][static_cast<size_t>(j)], p);
      }
      int piv = -1;
      for (int j = 0; j < n; ++j)
        if (v[static_cast<size_t>(j)] != 0) {
          piv = j;
          break;
        }
      if (piv < 0) return false;
      i64 inv = fp::inv(v[static_cast<size_t>(piv)], p);
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * inv % p;
      rows.push_back(v);
      pivots.push_back(piv);
      return true;
    };
    while (!queue.empty() && static_cast<int>(rows.size()) < n) {
      std::vector<i64> v = std::move(queue.back());
      queue.pop_back();
      if (!reduce_insert(std::move(v))) continue;
      const std::vector<i64>& nv = rows.back();
      for (int i = 0; i < n; ++i) {
        std::vector<i64> img(static_cast<size_t>(n), 0);
        bool nonzero = false;
        for (int r = 0; r < n; ++r) {
          i64 acc = 0;
          for (int jj = 0; jj < n; ++jj) acc += ad[static_cast<size_t>(i)][static_cast<size_t>(r * n + jj)] * nv[static_cast<size_t>(jj)];
          img[static_cast<size_t>(r)] = acc % p;
          nonzero |= img[static_cast<size_t>(r)] != 0;
        }
        if (nonzero) queue.push_back(std::move(img));
      }
    }
    return static_cast<int>(rows.size()) == n;
  };

  for (i64 idx = 1; idx < total; ++idx) {
    i64 v = idx;
    std::vector<i64> seed(static_cast<size_t>(n));
    int lead = -1;
    for (int i = 0; i < n; ++i) {
      seed[static_cast<size_t>(i)] = v % p;
      v /= p;
      if (lead < 0 && seed[static_cast<size_t>(i)] != 0) lead = i;
    }
    if (seed[static_cast<size_t>(lead)] != 1) continue;  // one representative per line
    if (!closure_is_full(seed)) {
      // materialize the ad-closure of the seed as a proper ideal...
      std::vector<LieVector> gens;
      std::vector<FElem> coords;
      for (int i = 0; i < n; ++i) coords.push_back(g.field()->from_int(seed[static_cast<size_t>(i)]));
      LieVector x = g.vector(coords);
      gens.push_back(x);
      bool grew = true;
      while (grew) {
        grew = false;
        Subspace cur = Subspace::span(&g, gens);
        for (size_t a = 0; a < gens.size(); ++a) {
          std::vector<LieVector> imgs;
          for (int i = 0; i < n; ++i) imgs.push_back(bracket(g.basis(i), gens[a]));
          imgs.push_back(p_map(gens[a]));
          for (auto& b : imgs)
            if (!b.is_zero() && !cur.contains(b)) {
              gens.push_back(b);
              grew = true;
              cur = Subspace::span(&g, gens);
            }
        }
      }
      SimplicityResult res;
      res.simple = false;
      res.proper_ideal = Subspace::span(&g, gens);
      return res;
    }
  }
  SimplicityResult res;
  res.simple = true;
  return res;
}

IsoCheck small_prime_isomorphism(const WittAlgebra& w) {
  i64 p = w.p();
  if (p != 2 && p != 3) fail("BadParams", "exceptional isomorphisms exist for p = 2, 3 only");
  FieldRef k = w.field();
  IsoCheck out;
  ResLieAlgebra target = (p == 2) ? semidirect_kn_gl1(k, 1) : sl(k, 2);
  out.codomain = (p == 2) ? "k x| gl1" : "sl2";
  // column i = image of the basis vector t^i d
  Mat map(k, static_cast<int>(p), static_cast<int>(p));
  if (p == 2) {
    // (a + b t) d -> (a, b): basis v_1, e of k x| gl1
    map.at(0, 0) = k->one();  // d -> v
    map.at(1, 1) = k->one();  // t d -> e
  } else {
    // (a + b t + c t^2) d -> (b, a; -c, -b) = b h + a x - c y in basis (h,x,y)
    map.at(1, 0) = k->one();   // d -> x
    map.at(0, 1) = k->one();   // t d -> h
    map.at(2, 2) = -k->one();  // t^2 d -> -y
  }
  out.map = map;
  // exhaustive intertwining over the coefficient field
  auto check_over = [&](const WittAlgebra& ww, const ResLieAlgebra& tt, const Mat& mm) -> bool {
    auto imgx = [&](const LieVector& v) { return tt.vector(mm.apply(v.c)); };
    auto vecs = enumerate_vectors(ww.lie());
    for (const auto& x : vecs) {
      if (p_map(imgx(x)) != imgx(p_map(x))) {
        out.failing_pair = "p-map at " + x.str();
        return false;
      }
      for (const auto& y : vecs)
        if (bracket(imgx(x), imgx(y)) != imgx(bracket(x, y))) {
          out.failing_pair = "bracket at (" + x.str() + ", " + y.str() + ")";
          return false;
        }
    }
    return true;
  };
  if (!check_over(w, target, map)) return out;
  // and over F_{p^2} when the base field is prime
  if (k->kind() == FieldKind::prime) {
    FieldRef k2 = Field::extension(k->p(), 2);
    WittAlgebra w2(k2, embed(w.omega(), k2));
    ResLieAlgebra t2 = (p == 2) ? semidirect_kn_gl1(k2, 1) : sl(k2, 2);
    Mat m2(k2, static_cast<int>(p), static_cast<int>(p));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) m2.at(i, j) = embed(map.at(i, j), k2);
    if (!check_over(w2, t2, m2)) return out;
  }
  out.verified = true;
  return out;
}

ReducedPart reduced_subalgebra(const WittAlgebra& w) {
  if (!w.omega().is_zero()) fail("OmegaNonzero", "reduced part defined for w = 0");
  const ResLieAlgebra& g = w.lie();
  int n = g.dim();
  Mat basis(g.field(), n - 1, n);
  for (int i = 1; i < n; ++i) basis.at(i - 1, i) = g.field()->one();
  ReducedPart out;
  out.space = Subspace(&g, basis);
  out.subalgebra = is_subalgebra(g, out.space);
  out.ideal = is_ideal(g, out.space, &out.non_ideal_witness);
  return out;
}

bool transitivity_test(const WittAlgebra& w, const Subspace& s) {
  if (!w.omega().is_zero()) fail("OmegaNonzero", "transitivity defined against the reduced part of g_0");
  ReducedPart red = reduced_subalgebra(w);
  return !red.space.contains(s);
}

}  // namespace witt
