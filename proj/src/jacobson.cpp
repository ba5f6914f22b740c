#include "witt/jacobson.hpp"

#include <sstream>

namespace witt {

// ---------------------------------------------------------------------------
// Frobenius-span decision for the field criterion
// ---------------------------------------------------------------------------

namespace {

// root_coords(y): coordinates of y in the E^p-basis theta^0..theta^(p-1),
// with the p-th root isomorphism E^p -> E applied to each coordinate
std::vector<FElem> root_coords(const FElem& y) {
  FieldRef e = y.field();
  if (e->kind() != FieldKind::ratfunc) fail("BadParams", "root_coords needs F_p(theta)");
  i64 p = e->p();
  // y = f/g = f g^(p-1) / g^p ; split h = f g^(p-1) by exponent residues
  fp::Poly g = y.den();
  fp::Poly gp1 = {1};
  for (i64 i = 0; i < p - 1; ++i) gp1 = fp::mul(p, gp1, g);
  fp::Poly h = fp::mul(p, y.num(), gp1);
  std::vector<FElem> out;
  out.reserve(static_cast<size_t>(p));
  for (i64 j = 0; j < p; ++j) {
    fp::Poly cj;  // sum_m h[mp+j] theta^m
    for (size_t idx = static_cast<size_t>(j); idx < h.size(); idx += static_cast<size_t>(p)) {
      cj.resize(idx / static_cast<size_t>(p) + 1, 0);
      cj[idx / static_cast<size_t>(p)] = h[idx];
    }
    fp::trim(cj);
    out.push_back(e->fraction(cj, g));
  }
  return out;
}

}  // namespace

bool in_frobenius_span(const FElem& mu, const FElem& mu1) {
  FieldRef e = mu.field();
  if (e != mu1.field()) fail("MixedFields", "in_frobenius_span");
  if (e->finite()) return true;  // finite fields are perfect
  i64 p = e->p();
  if (mu1.is_p_power()) return mu.is_p_power();
  // solve sum_i y_i * root_coords(mu1^i) = root_coords(mu) over E
  Mat sys(e, static_cast<int>(p), static_cast<int>(p));
  FElem pw = e->one();
  for (i64 i = 0; i < p; ++i) {
    auto col = root_coords(pw);
    for (i64 j = 0; j < p; ++j) sys.at(static_cast<int>(j), static_cast<int>(i)) = col[static_cast<size_t>(j)];
    pw = pw * mu1;
  }
  Mat rhs(e, static_cast<int>(p), 1);
  auto target = root_coords(mu);
  for (i64 j = 0; j < p; ++j) rhs.at(static_cast<int>(j), 0) = target[static_cast<size_t>(j)];
  return solve_linear(sys, rhs).consistent;
}

InsepExtension make_insep_extension(FieldRef base, const std::vector<FElem>& mu) {
  if (mu.empty() || mu.size() > 2) fail("BadParams", "r must be 1 or 2");
  InsepExtension ext;
  ext.base = base;
  ext.mu = mu;
  ext.algebra = TruncAlgebra::make(base, mu);
  if (base->finite()) {
    ext.is_field = false;  // perfect base: T^p - mu always splits
  } else if (mu.size() == 1) {
    ext.is_field = !mu[0].is_p_power();
  } else {
    ext.is_field = !mu[0].is_p_power() && !in_frobenius_span(mu[1], mu[0]);
  }
  return ext;
}

// ---------------------------------------------------------------------------
// derivation set parsing: "d1; T1*d1 + 2*T2^3*d2"
// ---------------------------------------------------------------------------

DerivationSet parse_derivation_set(const InsepExtension& ext, const std::string& text) {
  DerivationSet out;
  out.ext = ext;
  TruncAlgebraRef alg = ext.algebra;
  std::stringstream gens(text);
  std::string gen;
  while (std::getline(gens, gen, ';')) {
    // strip blanks
    std::string s;
    for (char ch : gen)
      if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) continue;
    std::vector<TruncElement> values(static_cast<size_t>(ext.r()), alg->zero());
    // terms split on '+' (leading '-' handled as coefficient -1)
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find('+', pos);
      std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      pos = next == std::string::npos ? s.size() : next + 1;
      if (term.empty()) continue;
      i64 sign = 1;
      size_t tp = 0;
      while (tp < term.size() && term[tp] == '-') {
        sign = -sign;
        ++tp;
      }
      TruncElement coef = alg->scalar(ext.base->from_int(sign));
      int dindex = -1;
      // factors split on '*'
      std::stringstream factors(term.substr(tp));
      std::string fac;
      while (std::getline(factors, fac, '*')) {
        if (fac.empty()) continue;
        if (fac[0] == 'd') {
          dindex = std::stoi(fac.substr(1)) - 1;
          if (dindex < 0 || dindex >= ext.r()) fail("BadParams", "bad derivation token " + fac);
        } else if (fac[0] == 'T') {
          size_t caret = fac.find('^');
          int var = std::stoi(fac.substr(1, caret == std::string::npos ? std::string::npos : caret - 1)) - 1;
          int exp = caret == std::string::npos ? 1 : std::stoi(fac.substr(caret + 1));
          if (var < 0 || var >= ext.r()) fail("BadParams", "bad variable token " + fac);
          coef = coef * alg->variable(var).pow(exp);
        } else {
          coef = coef.scaled(ext.base->from_int(std::stoll(fac)));
        }
      }
      if (dindex < 0) fail("BadParams", "term without a derivation token: " + term);
      values[static_cast<size_t>(dindex)] += coef;
    }
    out.gens.push_back(DerivationMatrix::from_values(alg, values));
    out.labels.push_back(gen);
  }
  if (out.gens.empty()) fail("BadParams", "empty derivation set");
  return out;
}

// ---------------------------------------------------------------------------
// fixed subring
// ---------------------------------------------------------------------------

FixedSubring fixed_subring(const DerivationSet& h) {
  const InsepExtension& ext = h.ext;
  int dim = ext.dim();
  FieldRef e = ext.base;
  Mat stacked(e, dim * static_cast<int>(h.gens.size()), dim);
  for (size_t g = 0; g < h.gens.size(); ++g)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        stacked.at(static_cast<int>(g) * dim + i, j) = h.gens[g].matrix().at(i, j);
  FixedSubring out;
  out.basis = kernel_basis(stacked);
  out.dim = out.basis.rows();
  // multiplicative closure and unity via membership in the row span
  TruncAlgebraRef alg = ext.algebra;
  auto row_elem = [&](int r) {
    std::vector<FElem> coords;
    for (int j = 0; j < dim; ++j) coords.push_back(out.basis.at(r, j));
    return alg->from_coords(coords);
  };
  Mat basis_t = out.basis.transpose();
  auto in_span = [&](const TruncElement& x) {
    Mat rhs(e, dim, 1);
    auto coords = x.coords();
    for (int j = 0; j < dim; ++j) rhs.at(j, 0) = coords[static_cast<size_t>(j)];
    return solve_linear(basis_t, rhs).consistent;
  };
  out.multiplicatively_closed = true;
  for (int a = 0; a < out.dim; ++a)
    for (int b = a; b < out.dim; ++b)
      if (!in_span(row_elem(a) * row_elem(b))) out.multiplicatively_closed = false;
  out.contains_unity = in_span(alg->one());
  return out;
}

// ---------------------------------------------------------------------------
// linear algebra over F (the extension itself)
// ---------------------------------------------------------------------------

namespace {

struct FMat {
  const InsepExtension* ext;
  std::vector<std::vector<TruncElement>> rows;

  int ncols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  // Reduced row echelon form over the algebra F with unit-pivot search.
  // For a field this is plain Gauss; otherwise elimination must consume every
  // nonzero entry via unit pivots, and stalls raise NotAField.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int nrows = static_cast<int>(rows.size());
    int row = 0;
    for (int col = 0; col < ncols() && row < nrows; ++col) {
      int sel = -1;
      std::optional<TruncElement> inv;
      for (int i = row; i < nrows; ++i) {
        const TruncElement& entry = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
        if (entry.is_zero()) continue;
        inv = unit_inverse(entry);
        if (inv) {
          sel = i;
          break;
        }
      }
      if (sel < 0) {
        for (int i = row; i < nrows; ++i)
          if (!rows[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero())
            fail("NotAField", "elimination stalled on a non-unit entry (F is not a field)");
        continue;
      }
      std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(row)]);
      for (int j = 0; j < ncols(); ++j)
        rows[static_cast<size_t>(row)][static_cast<size_t>(j)] = rows[static_cast<size_t>(row)][static_cast<size_t>(j)] * *inv;
      for (int i = 0; i < nrows; ++i) {
        if (i == row) continue;
        TruncElement c = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
        if (c.is_zero()) continue;
        for (int j = 0; j < ncols(); ++j)
          rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -= c * rows[static_cast<size_t>(row)][static_cast<size_t>(j)];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }
};

// the n x r matrix with entry (i, j) = D_i(T_j)
std::vector<std::vector<TruncElement>> derivation_value_matrix(const DerivationSet& h) {
  std::vector<std::vector<TruncElement>> rows;
  for (const auto& d : h.gens) {
    std::vector<TruncElement> row;
    for (int j = 0; j < h.ext.r(); ++j) row.push_back(d.value_on_variable(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// membership of target in the F-row-span of rows (solves over F)
bool in_f_row_span(const InsepExtension& ext, const std::vector<std::vector<TruncElement>>& rows,
                   const std::vector<TruncElement>& target) {
  // solve sum_i gamma_i rows[i] = target: transpose to columns
  int n = static_cast<int>(rows.size());
  int r = static_cast<int>(target.size());
  FMat aug;
  aug.ext = &ext;
  for (int j = 0; j < r; ++j) {
    std::vector<TruncElement> row;
    for (int i = 0; i < n; ++i) row.push_back(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    row.push_back(target[static_cast<size_t>(j)]);
    aug.rows.push_back(std::move(row));
  }
  auto piv = aug.rref();
  for (int c : piv)
    if (c == n) return false;  // pivot in the rhs column
  return true;
}

}  // namespace

int foliation_rank(const DerivationSet& h) {
  FMat m;
  m.ext = &h.ext;
  m.rows = derivation_value_matrix(h);
  return static_cast<int>(m.rref().size());
}

InertiaKernel inertia_kernel(const DerivationSet& h) {
  int n = static_cast<int>(h.gens.size());
  int r = h.ext.r();
  // kernel of gamma -> sum gamma_i row_i : null space of the r x n transpose
  FMat m;
  m.ext = &h.ext;
  auto rows = derivation_value_matrix(h);
  for (int j = 0; j < r; ++j) {
    std::vector<TruncElement> row;
    for (int i = 0; i < n; ++i) row.push_back(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    m.rows.push_back(std::move(row));
  }
  auto piv = m.rref();
  InertiaKernel out;
  out.codim = static_cast<int>(piv.size());
  out.kernel_dim = n - out.codim;
  // standard kernel basis from the echelon form
  TruncAlgebraRef alg = h.ext.algebra;
  std::vector<bool> is_piv(static_cast<size_t>(n), false);
  for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
  for (int fc = 0; fc < n; ++fc) {
    if (is_piv[static_cast<size_t>(fc)]) continue;
    std::vector<TruncElement> vec(static_cast<size_t>(n), alg->zero());
    vec[static_cast<size_t>(fc)] = alg->one();
    for (size_t pr = 0; pr < piv.size(); ++pr)
      vec[static_cast<size_t>(piv[pr])] = -m.rows[pr][static_cast<size_t>(fc)];
    out.kernel_basis.push_back(std::move(vec));
  }
  return out;
}

DegreeReport degree_identity_check(const DerivationSet& h) {
  DegreeReport out;
  out.fixed_dim = fixed_subring(h).dim;
  out.rank = foliation_rank(h);
  out.extension_dim = h.ext.dim();
  i64 prank = 1;
  for (int i = 0; i < out.rank; ++i) prank *= h.ext.p();
  out.identity_holds = out.fixed_dim > 0 && out.extension_dim == prank * out.fixed_dim;
  return out;
}

ClosureReport closure_check(const DerivationSet& h) {
  ClosureReport out;
  auto rows = derivation_value_matrix(h);
  out.bracket_closed = true;
  out.p_power_closed = true;
  for (size_t a = 0; a < h.gens.size(); ++a) {
    for (size_t b = a + 1; b < h.gens.size(); ++b) {
      DerivationMatrix br = h.gens[a].bracket(h.gens[b]);
      std::vector<TruncElement> val;
      for (int j = 0; j < h.ext.r(); ++j) val.push_back(br.value_on_variable(j));
      if (!in_f_row_span(h.ext, rows, val)) out.bracket_closed = false;
    }
    DerivationMatrix pw = h.gens[a].p_power();
    std::vector<TruncElement> val;
    for (int j = 0; j < h.ext.r(); ++j) val.push_back(pw.value_on_variable(j));
    if (!in_f_row_span(h.ext, rows, val)) out.p_power_closed = false;
  }
  // Der_{F^h}(F): coefficients (f_1..f_r) with sum_j f_j d_j(u) = 0 for all
  // u in the fixed subring
  FixedSubring fixed = fixed_subring(h);
  TruncAlgebraRef alg = h.ext.algebra;
  FMat sys;
  sys.ext = &h.ext;
  for (int b = 0; b < fixed.dim; ++b) {
    std::vector<FElem> coords;
    for (int j = 0; j < h.ext.dim(); ++j) coords.push_back(fixed.basis.at(b, j));
    TruncElement u = alg->from_coords(coords);
    std::vector<TruncElement> row;
    for (int j = 0; j < h.ext.r(); ++j) row.push_back(partial_derivative(u, j));
    sys.rows.push_back(std::move(row));
  }
  int rank = sys.rows.empty() ? 0 : static_cast<int>(sys.rref().size());
  out.der_fixed_dim = h.ext.r() - rank;
  out.round_trip = out.der_fixed_dim == foliation_rank(h);
  return out;
}

// ---------------------------------------------------------------------------
// the invariant-subspace linear system
// ---------------------------------------------------------------------------

int no_subspace_kernel(i64 p, const FElem& omega) {
  if (p > 5) fail("PTooLarge", "no-subspace system capped at p <= 5");
  FieldRef e = omega.field();
  // E[t, s, u]/(t^p, s^p - w, u^p): variables 0 = t, 1 = s, 2 = u
  TruncAlgebraRef alg = TruncAlgebra::make(e, {e->zero(), omega, e->zero()});
  int n_unknowns = static_cast<int>((p - 1) * p);
  int dim = alg->dim();
  Mat sys(e, dim, n_unknowns);
  TruncElement t = alg->variable(0), s = alg->variable(1), u = alg->variable(2);
  int col = 0;
  for (int i = 1; i <= p - 1; ++i)
    for (int j = 0; j <= p - 1; ++j, ++col) {
      TruncElement delta = (s + u).pow(j) * (t + u).pow(i) - s.pow(j) * t.pow(i);
      auto coords = delta.coords();
      for (int row = 0; row < dim; ++row) sys.at(row, col) = coords[static_cast<size_t>(row)];
    }
  return kernel_basis(sys).rows();
}

}  // namespace witt
