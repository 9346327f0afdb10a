#include "poico/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace poico {

long SliceBasis::index_of(IndexMask m, const Monomial& mono) const {
  auto mi = std::find(masks.begin(), masks.end(), m);
  if (mi == masks.end()) return -1;
  for (size_t j = 0; j < monos.size(); ++j)
    if (monos[j] == mono)
      return static_cast<long>(mi - masks.begin()) * static_cast<long>(monos.size()) +
             static_cast<long>(j);
  return -1;
}

std::pair<IndexMask, Monomial> SliceBasis::label(long idx) const {
  long per = static_cast<long>(monos.size());
  return {masks[idx / per], monos[idx % per]};
}

SliceBasis slice_basis(const PoissonStructure& pi, int k, long degree) {
  SliceBasis b;
  b.k = k;
  b.degree = degree;
  b.masks = multi_index_masks(pi.n, k);
  b.monos = (degree >= 0) ? monomial_basis(pi.n, degree, pi.weights) : std::vector<Monomial>{};
  return b;
}

Multivector from_coords(const PoissonStructure& pi, const SliceBasis& basis, const SparseVec& v) {
  Multivector a(pi.n, basis.k);
  long per = static_cast<long>(basis.monos.size());
  for (const auto& [idx, c] : v)
    a.add_term(basis.masks[idx / per], Polynomial::term(basis.monos[idx % per], c));
  return a;
}

SparseVec to_coords(const SliceBasis& basis, const Multivector& a) {
  std::map<long, Rational> acc;
  long per = static_cast<long>(basis.monos.size());
  std::map<IndexMask, long> mask_pos;
  for (size_t j = 0; j < basis.masks.size(); ++j) mask_pos[basis.masks[j]] = static_cast<long>(j);
  std::map<Monomial, long, GrlexLess> mono_pos;
  for (size_t j = 0; j < basis.monos.size(); ++j) mono_pos[basis.monos[j]] = static_cast<long>(j);
  for (const auto& [mask, p] : a.components()) {
    auto mp = mask_pos.find(mask);
    if (mp == mask_pos.end()) throw std::domain_error("multivector outside slice basis");
    for (const auto& [mono, c] : p.terms()) {
      auto it = mono_pos.find(mono);
      if (it == mono_pos.end()) throw std::domain_error("multivector outside slice basis");
      acc[mp->second * per + it->second] += c;
    }
  }
  SparseVec out;
  for (const auto& [i, c] : acc)
    if (c != 0) out.emplace_back(static_cast<int>(i), c);
  return out;
}

long coboundary_degree_shift(const PoissonStructure& pi) {
  // the block decomposition d^k = sum_i d^k_i by coefficient degree only
  // exists when every coordinate has weight one; otherwise the coboundary
  // of a graded slice spreads over several coefficient degrees
  if (!pi.weights.is_all_ones())
    throw std::domain_error("graded slices require unit coordinate weights");
  long d = 0;
  if (!pi.bivector.coefficients_homogeneous(pi.weights, &d))
    throw std::domain_error("non-weight-homogeneous bivector");
  return d - 1;
}

GradedSliceMatrix build_slice_matrix(const PoissonStructure& pi, int k, long i) {
  if (k < 0 || k > pi.n) throw std::invalid_argument("multivector degree out of range");
  if (i < 0) throw std::invalid_argument("coefficient degree must be nonnegative");
  long shift = coboundary_degree_shift(pi);

  GradedSliceMatrix sm;
  sm.k = k;
  sm.i = i;
  sm.codomain_degree = i + shift;
  sm.domain = slice_basis(pi, k, i);
  sm.codomain = slice_basis(pi, k + 1, sm.codomain_degree);
  sm.mat.rows = static_cast<int>(sm.codomain.dim());
  sm.mat.cols.resize(sm.domain.dim());

  if (k == pi.n || sm.domain.dim() == 0) return sm;

  std::map<IndexMask, long> mask_pos;
  for (size_t j = 0; j < sm.codomain.masks.size(); ++j)
    mask_pos[sm.codomain.masks[j]] = static_cast<long>(j);
  std::map<Monomial, long, GrlexLess> mono_pos;
  for (size_t j = 0; j < sm.codomain.monos.size(); ++j)
    mono_pos[sm.codomain.monos[j]] = static_cast<long>(j);
  long per = static_cast<long>(sm.codomain.monos.size());

  long col = 0;
  for (IndexMask mask : sm.domain.masks) {
    for (const auto& mono : sm.domain.monos) {
      Multivector basis_elt(pi.n, k);
      basis_elt.add_term(mask, Polynomial::term(mono, 1));
      Multivector image = schouten(pi.bivector, basis_elt);
      for (const auto& [im_mask, p] : image.components()) {
        long mrow = mask_pos.at(im_mask) * per;
        for (const auto& [im_mono, c] : p.terms())
          sm.mat.add_entry(static_cast<int>(col), static_cast<int>(mrow + mono_pos.at(im_mono)),
                           c);
      }
      ++col;
    }
  }
  return sm;
}

SliceCache::Entry& SliceCache::compute(int k, long i, bool want_kernel) {
  Entry& e = entries_[{k, i}];
  if (e.rank >= 0 && (!want_kernel || e.have_kernel)) return e;
  if (k >= pi_.n) {  // zero map
    e.rank = 0;
    if (want_kernel) {
      e.kernel.clear();
      SliceBasis b = slice_basis(pi_, k, i);
      for (long c = 0; c < b.dim(); ++c) e.kernel.push_back({{static_cast<int>(c), Rational(1)}});
      e.have_kernel = true;
    }
    return e;
  }
  GradedSliceMatrix sm = build_slice_matrix(pi_, k, i);
  auto res = eliminate(sm.mat, want_kernel);
  e.rank = res.rank;
  if (want_kernel) {
    e.kernel = std::move(res.kernel);
    e.have_kernel = true;
  }
  return e;
}

long SliceCache::rank(int k, long i) {
  if (i < 0) return 0;
  return compute(k, i, false).rank;
}

long SliceCache::domain_dim(int k, long i) {
  if (i < 0) return 0;
  return slice_basis(pi_, k, i).dim();
}

const std::vector<SparseVec>& SliceCache::kernel(int k, long i) {
  return compute(k, i, true).kernel;
}

SliceDim cohomology_dim(const PoissonStructure& pi, int k, long i, bool with_representatives,
                        SliceCache* cache) {
  std::unique_ptr<SliceCache> local;
  if (!cache) {
    local = std::make_unique<SliceCache>(pi);
    cache = local.get();
  }
  long shift = coboundary_degree_shift(pi);
  SliceDim out;
  out.k = k;
  out.i = i;
  out.space_dim = cache->domain_dim(k, i);
  out.nullity = out.space_dim - cache->rank(k, i);
  out.prev_rank = (k == 0) ? 0 : cache->rank(k - 1, i - shift);
  out.dim = out.nullity - out.prev_rank;

  if (with_representatives) {
    out.reps_computed = true;
    SliceBasis basis = slice_basis(pi, k, i);
    IncrementalRref chosen;
    if (k > 0 && i - shift >= 0) {
      GradedSliceMatrix prev = build_slice_matrix(pi, k - 1, i - shift);
      for (const auto& colv : prev.mat.cols) chosen.insert(colv);
    }
    // canonical kernel rows, reduced modulo the coboundary image; the
    // survivors with the smallest leading labels become the representatives
    IncrementalRref kernel_rref;
    for (const auto& kv : cache->kernel(k, i)) kernel_rref.insert(kv);
    for (const auto& row : kernel_rref.rows_by_pivot()) {
      SparseVec residue = chosen.reduce(row);
      if (residue.empty()) continue;
      residue = normalize_sparse(std::move(residue));
      out.representatives.push_back(from_coords(pi, basis, residue));
      chosen.insert(residue);
    }
    if (static_cast<long>(out.representatives.size()) != out.dim)
      throw std::logic_error("representative count does not match cohomology dimension");
  }
  return out;
}

CohomologyReport cohomology_table(const PoissonStructure& pi, int k_min, int k_max, long i_max,
                                  bool with_representatives) {
  if (k_min < 0 || k_max > pi.n || k_min > k_max) throw std::invalid_argument("bad k range");
  if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
  CohomologyReport rep;
  rep.structure_name = pi.name;
  rep.k_min = k_min;
  rep.k_max = k_max;
  rep.i_max = i_max;
  rep.degree_shift = coboundary_degree_shift(pi);
  SliceCache cache(pi);
  for (int k = k_min; k <= k_max; ++k)
    for (long i = 0; i <= i_max; ++i)
      rep.slices.push_back(cohomology_dim(pi, k, i, with_representatives, &cache));
  return rep;
}

void attach_free_module_fits(CohomologyReport& report, const std::vector<long>& casimir_degrees) {
  report.fit_casimir_degrees = casimir_degrees;
  report.fits_by_k.clear();
  for (int k = report.k_min; k <= report.k_max; ++k) {
    std::vector<std::pair<long, long>> dims;
    auto row = report.dims_for_k(k);
    for (long i = 0; i < static_cast<long>(row.size()); ++i) dims.push_back({i, row[i]});
    report.fits_by_k[k] = fit_free_module(dims, casimir_degrees);
  }
}

std::vector<long> CohomologyReport::dims_for_k(int k) const {
  std::vector<long> out(i_max + 1, 0);
  for (const auto& s : slices)
    if (s.k == k && s.i <= i_max) out[s.i] = s.dim;
  return out;
}

const SliceDim* CohomologyReport::slice(int k, long i) const {
  for (const auto& s : slices)
    if (s.k == k && s.i == i) return &s;
  return nullptr;
}

long casimir_hilbert(const std::vector<long>& generator_degrees, long degree) {
  if (degree < 0) return 0;
  std::vector<long> h(degree + 1, 0);
  h[0] = 1;
  for (long g : generator_degrees) {
    if (g <= 0) throw std::invalid_argument("generator degrees must be positive");
    for (long d = g; d <= degree; ++d) h[d] += h[d - g];
  }
  return h[degree];
}

FreeModuleFit fit_free_module(const std::vector<std::pair<long, long>>& dims,
                              const std::vector<long>& casimir_degrees) {
  FreeModuleFit fit;
  fit.casimir_degrees = casimir_degrees;
  if (dims.empty()) {
    fit.exact = true;
    return fit;
  }
  long max_deg = 0;
  for (const auto& [d, v] : dims) max_deg = std::max(max_deg, d);
  std::vector<long> residual(max_deg + 1, 0);
  for (const auto& [d, v] : dims) {
    if (d < 0) throw std::invalid_argument("negative degree in fit input");
    residual[d] = v;
  }
  fit.fitted_through = max_deg;
  for (long j = 0; j <= max_deg; ++j) {
    while (residual[j] > 0) {
      fit.generator_degrees.push_back(j);
      fit.rank++;
      for (long d = j; d <= max_deg; ++d) residual[d] -= casimir_hilbert(casimir_degrees, d - j);
    }
    if (residual[j] < 0) {
      fit.failed = true;
      fit.failure_degree = j;
      return fit;
    }
  }
  fit.exact = std::all_of(residual.begin(), residual.end(), [](long v) { return v == 0; });
  return fit;
}

}  // namespace poico
