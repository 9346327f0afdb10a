#include "poico/poisson.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace poico {

PoissonStructure::PoissonStructure(std::string name_, std::vector<std::string> coords_,
                                   Multivector biv, WeightVector w, VolumeForm vol)
    : name(std::move(name_)),
      coords(std::move(coords_)),
      n(static_cast<int>(coords.size())),
      bivector(std::move(biv)),
      weights(w.nvars() ? w : WeightVector::ones(n)),
      volume(vol) {
  if (bivector.degree() != 2) throw std::invalid_argument("bivector degree must be 2");
  if (bivector.nvars() != n) throw std::invalid_argument("bivector coordinate-count mismatch");
  if (weights.nvars() != n) throw std::invalid_argument("weight vector length mismatch");
  if (volume.scale <= 0) throw std::invalid_argument("volume scale must be positive");
}

JacobiResult jacobi_check(const PoissonStructure& pi) {
  JacobiResult res;
  res.witness = schouten(pi.bivector, pi.bivector);
  res.ok = res.witness.is_zero();
  return res;
}

JacobiResult jacobi_check(PoissonStructure& pi) {
  JacobiResult res = jacobi_check(static_cast<const PoissonStructure&>(pi));
  if (res.ok) pi.validated = true;
  return res;
}

Multivector anchor(const PoissonStructure& pi, const OneForm& alpha) {
  if (static_cast<int>(alpha.comp.size()) != pi.n)
    throw std::invalid_argument("one-form length mismatch");
  Multivector r(pi.n, 1);
  for (const auto& [mask, p] : pi.bivector.components()) {
    auto idx = mask_to_indices(mask);
    int a = idx[0], b = idx[1];
    // pair (a<b) with coefficient p: anchor_a += p*alpha_b, anchor_b -= p*alpha_a
    if (!alpha.comp[b].is_zero()) r.add_term(IndexMask(1) << a, p * alpha.comp[b]);
    if (!alpha.comp[a].is_zero()) r.add_term(IndexMask(1) << b, -(p * alpha.comp[a]));
  }
  return r;
}

Multivector anchor_dx(const PoissonStructure& pi, int i) {
  OneForm alpha;
  for (int j = 0; j < pi.n; ++j)
    alpha.comp.push_back(Polynomial::constant(pi.n, j == i ? 1 : 0));
  return anchor(pi, alpha);
}

Multivector hamiltonian(const PoissonStructure& pi, const Polynomial& f) {
  if (f.nvars() != pi.n) throw std::invalid_argument("coordinate-count mismatch");
  OneForm df;
  for (int j = 0; j < pi.n; ++j) df.comp.push_back(f.partial(j));
  return anchor(pi, df);
}

std::vector<Polynomial> casimir_basis(const PoissonStructure& pi, long degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  auto monos = monomial_basis(pi.n, degree, pi.weights);
  // columns: hamiltonian field of each monomial, in a shared codomain basis
  std::map<std::pair<IndexMask, Monomial>, int, PairKeyLess> row_of;
  SparseColumns m;
  m.cols.resize(monos.size());
  std::vector<Multivector> images;
  images.reserve(monos.size());
  for (const auto& mono : monos) images.push_back(hamiltonian(pi, Polynomial::term(mono, 1)));
  int next_row = 0;
  for (size_t c = 0; c < images.size(); ++c) {
    for (const auto& [mask, p] : images[c].components()) {
      for (const auto& [mm, coeff] : p.terms()) {
        auto key = std::make_pair(mask, mm);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, next_row++).first;
        m.add_entry(static_cast<int>(c), it->second, coeff);
      }
    }
  }
  m.rows = next_row;
  auto elim = eliminate(m, /*want_kernel=*/true);
  std::vector<Polynomial> basis;
  for (const auto& kv : elim.kernel) {
    Polynomial f(pi.n);
    for (const auto& [c, v] : kv) f.add_term(monos[c], v);
    basis.push_back(f);
  }
  return basis;
}

Multivector modular_field(const PoissonStructure& pi, const VolumeForm& vol) {
  if (vol.scale <= 0) throw std::invalid_argument("volume scale must be positive");
  Multivector r(pi.n, 1);
  for (int j = 0; j < pi.n; ++j) {
    Polynomial div = divergence(anchor_dx(pi, j), vol);
    if (!div.is_zero()) r.add_term(IndexMask(1) << j, -div);
  }
  return r;
}

Multivector wedge_power(const PoissonStructure& pi, int m) {
  if (m <= 0) throw std::invalid_argument("wedge power must be positive");
  if (2 * m > pi.n) throw std::invalid_argument("wedge power exceeds ambient dimension");
  Multivector r = pi.bivector;
  for (int j = 1; j < m; ++j) r = wedge(r, pi.bivector);
  return r;
}

namespace {

std::vector<std::vector<Rational>> coefficient_matrix_at(const PoissonStructure& pi,
                                                         const PointEval& p) {
  if (static_cast<int>(p.x.size()) != pi.n) throw std::invalid_argument("point dimension mismatch");
  std::vector<std::vector<Rational>> m(pi.n, std::vector<Rational>(pi.n, 0));
  for (const auto& [mask, poly] : pi.bivector.components()) {
    auto idx = mask_to_indices(mask);
    Rational v = poly.eval(p.x);
    m[idx[0]][idx[1]] = v;
    m[idx[1]][idx[0]] = -v;
  }
  return m;
}

}  // namespace

int rank_at(const PoissonStructure& pi, const PointEval& p) {
  return static_cast<int>(dense_rank(coefficient_matrix_at(pi, p)));
}

IntrinsicGradient intrinsic_gradient(const PoissonStructure& pi, const PointEval& p) {
  if (static_cast<int>(p.x.size()) != pi.n) throw std::invalid_argument("point dimension mismatch");
  for (const auto& [mask, poly] : pi.bivector.components())
    if (poly.eval(p.x) != 0)
      throw std::domain_error("intrinsic gradient needs a zero of the bivector");
  IntrinsicGradient g;
  g.base = p;
  auto pairs = multi_index_masks(pi.n, 2);
  for (IndexMask mask : pairs) {
    std::vector<Rational> row;
    Polynomial coeff = pi.bivector.component(mask);
    for (int v = 0; v < pi.n; ++v) row.push_back(coeff.partial(v).eval(p.x));
    g.matrix.push_back(std::move(row));
  }
  g.rank = dense_rank(g.matrix);
  return g;
}

namespace {

// Determinant of a square polynomial matrix by Laplace expansion with
// memoization over column subsets.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, int nvars) {
  int n = static_cast<int>(m.size());
  std::map<uint32_t, Polynomial> memo;
  // D(r, S): determinant of rows r.. with column set S, |S| = n - r
  std::function<Polynomial(int, uint32_t)> rec = [&](int r, uint32_t s) -> Polynomial {
    if (r == n) return Polynomial::constant(nvars, 1);
    auto it = memo.find(s | (uint32_t(r) << 16));
    if (it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(s & (uint32_t(1) << c))) continue;
      if (!m[r][c].is_zero()) {
        Polynomial sub = rec(r + 1, s & ~(uint32_t(1) << c));
        Polynomial term = m[r][c] * sub;
        if (pos % 2 == 1) term = -term;
        acc = acc + term;
      }
      ++pos;
    }
    memo.emplace(s | (uint32_t(r) << 16), acc);
    return acc;
  };
  uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  return rec(0, full);
}

// Pfaffian of an antisymmetric polynomial matrix via expansion along the
// first remaining index.
Polynomial poly_pfaffian(const std::vector<std::vector<Polynomial>>& m, int nvars) {
  int n = static_cast<int>(m.size());
  if (n % 2 != 0) return Polynomial::zero(nvars);
  std::map<uint32_t, Polynomial> memo;
  std::function<Polynomial(uint32_t)> rec = [&](uint32_t s) -> Polynomial {
    if (s == 0) return Polynomial::constant(nvars, 1);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (s & (uint32_t(1) << i)) idx.push_back(i);
    int first = idx[0];
    Polynomial acc(nvars);
    for (size_t t = 1; t < idx.size(); ++t) {
      int j = idx[t];
      if (m[first][j].is_zero()) continue;
      uint32_t rest = s & ~(uint32_t(1) << first) & ~(uint32_t(1) << j);
      Polynomial term = m[first][j] * rec(rest);
      if (t % 2 == 0) term = -term;  // (-1)^t relative sign of Pf expansion
      acc = acc + term;
    }
    memo.emplace(s, acc);
    return acc;
  };
  uint32_t full = (uint32_t(1) << n) - 1;
  return rec(full);
}

std::vector<std::vector<Polynomial>> anchor_matrix(const PoissonStructure& pi) {
  // M[j][i] = pi~_{ji}, so anchor(alpha) = M alpha
  std::vector<std::vector<Polynomial>> m(pi.n,
                                         std::vector<Polynomial>(pi.n, Polynomial::zero(pi.n)));
  for (const auto& [mask, p] : pi.bivector.components()) {
    auto idx = mask_to_indices(mask);
    int a = idx[0], b = idx[1];
    m[a][b] = p;
    m[b][a] = -p;
  }
  return m;
}

}  // namespace

RationalOneForm anchor_invert(const PoissonStructure& pi, const Multivector& y) {
  if (y.degree() != 1) throw std::invalid_argument("anchor_invert needs a degree-1 field");
  if (y.nvars() != pi.n) throw std::invalid_argument("coordinate-count mismatch");
  auto m = anchor_matrix(pi);
  Polynomial pf = poly_pfaffian(m, pi.n);
  if (pf.is_zero())
    throw std::domain_error("generically degenerate structure: Pfaffian vanishes identically");

  // Pfaffian-adjugate P with M P = Pf * I, obtained as adj(M)/Pf. Every
  // adjugate entry of an antisymmetric matrix is divisible by its Pfaffian.
  std::vector<std::vector<Polynomial>> padj(pi.n,
                                            std::vector<Polynomial>(pi.n, Polynomial::zero(pi.n)));
  for (int i = 0; i < pi.n; ++i)
    for (int j = 0; j < pi.n; ++j) {
      // adj(M)[i][j] = (-1)^{i+j} det(M with row j, column i removed)
      std::vector<std::vector<Polynomial>> sub;
      for (int r = 0; r < pi.n; ++r) {
        if (r == j) continue;
        std::vector<Polynomial> row;
        for (int c = 0; c < pi.n; ++c) {
          if (c == i) continue;
          row.push_back(m[r][c]);
        }
        sub.push_back(std::move(row));
      }
      Polynomial minor = poly_det(sub, pi.n);
      if ((i + j) % 2 == 1) minor = -minor;
      if (!minor.is_zero()) padj[i][j] = minor.divide_exact(pf);
    }

  RationalOneForm out;
  out.numerators.assign(pi.n, Polynomial::zero(pi.n));
  for (int i = 0; i < pi.n; ++i)
    for (int j = 0; j < pi.n; ++j) {
      Polynomial g = y.component(IndexMask(1) << j);
      if (g.is_zero() || padj[i][j].is_zero()) continue;
      out.numerators[i] = out.numerators[i] + padj[i][j] * g;
    }
  out.denominator = pf;

  // content removal: denominator primitive with positive leading coefficient
  Rational c = pf.content();
  if (pf.leading_term().second < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    out.denominator = out.denominator * inv;
    for (auto& num : out.numerators) num = num * inv;
  }
  return out;
}

PoissonStructure jacobian_bivector(const std::vector<std::string>& coords, const Polynomial& f,
                                   const Polynomial& g, const VolumeForm& vol) {
  int n = static_cast<int>(coords.size());
  if (n != 4) throw std::invalid_argument("jacobian_bivector needs four coordinates");
  if (f.nvars() != 4 || g.nvars() != 4) throw std::invalid_argument("coordinate-count mismatch");
  if (vol.scale <= 0) throw std::invalid_argument("volume scale must be positive");
  Multivector biv(4, 2);
  Rational inv_scale = 1 / vol.scale;
  for (IndexMask mask : multi_index_masks(4, 2)) {
    auto ij = mask_to_indices(mask);
    IndexMask comp_mask = IndexMask(0b1111) & ~mask;
    auto ab = mask_to_indices(comp_mask);
    int a = ab[0], b = ab[1];
    // dx_i^dx_j^dx_a^dx_b = eps * vol
    std::vector<int> perm = {ij[0], ij[1], a, b};
    int inv = 0;
    for (size_t s = 0; s < perm.size(); ++s)
      for (size_t t = s + 1; t < perm.size(); ++t)
        if (perm[s] > perm[t]) ++inv;
    int eps = (inv % 2 == 0) ? 1 : -1;
    Polynomial coeff = f.partial(a) * g.partial(b) - f.partial(b) * g.partial(a);
    coeff = coeff * (inv_scale * eps);
    if (!coeff.is_zero()) biv.add_term(mask, coeff);
  }
  PoissonStructure pi("jacobian", coords, biv, WeightVector::ones(4), vol);
  jacobi_check(pi);
  return pi;
}

std::optional<Multivector> exactness_witness(const PoissonStructure& pi, long max_degree) {
  if (pi.bivector.is_zero()) return Multivector::zero(pi.n, 1);

  // Euler-field candidate first: [pi, c E] = pi has the clean witness c E.
  if (max_degree >= 1) {
    Multivector e = euler_field(pi.n);
    Multivector be = schouten(pi.bivector, e);
    if (!be.is_zero()) {
      // proportionality c * be == pi
      const auto& [mask, p] = *be.components().begin();
      Polynomial target = pi.bivector.component(mask);
      if (!target.is_zero() && !p.is_zero()) {
        const auto& [mono, cv] = *p.terms().begin();
        Rational c = target.coefficient(mono) / cv;
        if (c != 0 && be * c == pi.bivector) return e * c;
      }
    }
  }

  // General graded solve: unknowns are vector fields of coefficient degree
  // 0..max_degree, equations match [pi, Y] = pi in the combined codomain.
  struct Unknown {
    IndexMask mask;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  std::vector<Multivector> images;
  for (long i = 0; i <= max_degree; ++i) {
    for (int v = 0; v < pi.n; ++v) {
      for (const auto& mono : monomial_basis(pi.n, i, pi.weights)) {
        Multivector basis_elt(pi.n, 1);
        basis_elt.add_term(IndexMask(1) << v, Polynomial::term(mono, 1));
        unknowns.push_back({IndexMask(1) << v, mono});
        images.push_back(schouten(pi.bivector, basis_elt));
      }
    }
  }
  std::map<std::pair<IndexMask, Monomial>, int, PairKeyLess> row_of;
  int next_row = 0;
  auto row_index = [&](IndexMask mask, const Monomial& mono) {
    auto key = std::make_pair(mask, mono);
    auto it = row_of.find(key);
    if (it == row_of.end()) it = row_of.emplace(key, next_row++).first;
    return it->second;
  };
  SparseColumns mat;
  mat.cols.resize(unknowns.size());
  for (size_t c = 0; c < images.size(); ++c)
    for (const auto& [mask, p] : images[c].components())
      for (const auto& [mono, coeff] : p.terms())
        mat.add_entry(static_cast<int>(c), row_index(mask, mono), coeff);
  SparseVec rhs;
  for (const auto& [mask, p] : pi.bivector.components())
    for (const auto& [mono, coeff] : p.terms()) rhs.emplace_back(row_index(mask, mono), coeff);
  mat.rows = next_row;
  std::sort(rhs.begin(), rhs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  auto sol = solve_sparse(mat, rhs);
  if (!sol) return std::nullopt;
  Multivector y(pi.n, 1);
  for (size_t c = 0; c < unknowns.size(); ++c)
    if ((*sol)[c] != 0) y.add_term(unknowns[c].mask, Polynomial::term(unknowns[c].mono, (*sol)[c]));
  return y;
}

NearPositivityReport near_positivity_sample(const PoissonStructure& pi,
                                            const std::vector<PointEval>& points) {
  if (pi.n != 4) throw std::invalid_argument("near-positivity sampling needs four coordinates");
  Polynomial top = wedge_power(pi, 2).component(0b1111);
  NearPositivityReport rep;
  for (const auto& p : points) {
    if (static_cast<int>(p.x.size()) != 4)
      throw std::invalid_argument("point dimension mismatch");
    Rational v = top.eval(p.x);
    rep.samples.push_back({p, v});
    if (v < 0 && rep.all_nonnegative) {
      rep.all_nonnegative = false;
      rep.counterexample = p;
    }
  }
  return rep;
}

Multivector euler_field(int n) {
  Multivector e(n, 1);
  for (int i = 0; i < n; ++i) e.add_term(IndexMask(1) << i, Polynomial::variable(n, i));
  return e;
}

Multivector weighted_euler_field(const WeightVector& w) {
  int n = w.nvars();
  Multivector e(n, 1);
  for (int i = 0; i < n; ++i)
    e.add_term(IndexMask(1) << i, Polynomial::variable(n, i) * Rational(w.w[i]));
  return e;
}

}  // namespace poico
