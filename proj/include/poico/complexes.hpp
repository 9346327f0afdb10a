#ifndef POICO_COMPLEXES_HPP
#define POICO_COMPLEXES_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "poico/poisson.hpp"

namespace poico {

// Ordered basis of X^k_i: multi-indices in lexicographic order (major),
// monomials of weighted degree i in descending graded-lex order (minor).
struct SliceBasis {
  int k = 0;
  long degree = 0;
  std::vector<IndexMask> masks;
  std::vector<Monomial> monos;

  long dim() const { return static_cast<long>(masks.size()) * static_cast<long>(monos.size()); }
  long index_of(IndexMask m, const Monomial& mono) const;
  std::pair<IndexMask, Monomial> label(long idx) const;
};

SliceBasis slice_basis(const PoissonStructure& pi, int k, long degree);

Multivector from_coords(const PoissonStructure& pi, const SliceBasis& basis, const SparseVec& v);
SparseVec to_coords(const SliceBasis& basis, const Multivector& a);

// Matrix of d^k = [pi, .] restricted to coefficient degree i. Requires a
// weight-homogeneous bivector; the codomain degree is i + deg(pi) - 1.
struct GradedSliceMatrix {
  int k = 0;
  long i = 0;
  long codomain_degree = 0;
  SliceBasis domain, codomain;
  SparseColumns mat;
};

GradedSliceMatrix build_slice_matrix(const PoissonStructure& pi, int k, long i);

// Coefficient degree shift of the coboundary: deg(pi) - 1. Throws when the
// bivector is not weight-homogeneous.
long coboundary_degree_shift(const PoissonStructure& pi);

struct SliceDim {
  int k = 0;
  long i = 0;
  long space_dim = 0;   // dim X^k_i
  long nullity = 0;     // dim ker d^k_i
  long prev_rank = 0;   // rank d^{k-1} into degree i
  long dim = 0;         // dim H^k_i
  bool reps_computed = false;
  std::vector<Multivector> representatives;
};

// Per-slice rank cache so consecutive cohomology queries share eliminations.
class SliceCache {
 public:
  explicit SliceCache(const PoissonStructure& pi) : pi_(pi) {}
  const PoissonStructure& structure() const { return pi_; }
  long rank(int k, long i);        // rank of d^k on domain degree i
  long domain_dim(int k, long i);  // dim X^k_i
  const std::vector<SparseVec>& kernel(int k, long i);

 private:
  struct Entry {
    long rank = -1;
    bool have_kernel = false;
    std::vector<SparseVec> kernel;
  };
  Entry& compute(int k, long i, bool want_kernel);
  const PoissonStructure& pi_;
  std::map<std::pair<int, long>, Entry> entries_;
};

SliceDim cohomology_dim(const PoissonStructure& pi, int k, long i, bool with_representatives,
                        SliceCache* cache = nullptr);

// Finite-range fit of graded dimensions by a free module over the Casimir
// polynomial algebra with the given generator degrees.
struct FreeModuleFit {
  std::vector<long> casimir_degrees;
  long rank = 0;
  std::vector<long> generator_degrees;
  bool exact = false;   // residual identically zero over the fitted range
  bool failed = false;  // negative residual encountered
  long failure_degree = -1;
  long fitted_through = -1;
};

FreeModuleFit fit_free_module(const std::vector<std::pair<long, long>>& dims,
                              const std::vector<long>& casimir_degrees);

struct CohomologyReport {
  std::string structure_name;
  int k_min = 0, k_max = 0;
  long i_max = 0;
  long degree_shift = 0;
  std::vector<SliceDim> slices;  // ordered by (k, i)
  // free-module fits of the dimension rows, present when requested
  std::vector<long> fit_casimir_degrees;
  std::map<int, FreeModuleFit> fits_by_k;

  std::vector<long> dims_for_k(int k) const;  // indexed by i = 0..i_max
  const SliceDim* slice(int k, long i) const;
};

CohomologyReport cohomology_table(const PoissonStructure& pi, int k_min, int k_max, long i_max,
                                  bool with_representatives);

// Fits every dimension row of the report by a free module over Casimir
// generators of the given degrees and stores the results on the report.
void attach_free_module_fits(CohomologyReport& report, const std::vector<long>& casimir_degrees);

// Hilbert function of the free polynomial algebra on generators of the
// given positive degrees.
long casimir_hilbert(const std::vector<long>& generator_degrees, long degree);

}  // namespace poico

#endif
