#ifndef POICO_MULTIVECTOR_HPP
#define POICO_MULTIVECTOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poico/polynomial.hpp"

namespace poico {

// A strictly increasing index set is stored as a bitmask over coordinates.
using IndexMask = uint32_t;

int mask_degree(IndexMask m);
std::vector<int> mask_to_indices(IndexMask m);
IndexMask indices_to_mask(const std::vector<int>& idx);

// All k-element index sets of {0..n-1} in lexicographic order of the
// increasing tuples ({0,1} < {0,2} < ... < {2,3}). Fixes basis layouts.
std::vector<IndexMask> multi_index_masks(int n, int k);

// Sign of sorting the concatenation (a, b); 0 when the sets overlap.
int merge_sign(IndexMask a, IndexMask b);

// Sign of the right derivative d_R(xi_I)/d(xi_r): parity of the number of
// indices of I above r. r must belong to I.
int remove_sign_right(IndexMask I, int r);

// Deterministic order on (multi-index, monomial) basis labels.
struct PairKeyLess {
  bool operator()(const std::pair<IndexMask, Monomial>& a,
                  const std::pair<IndexMask, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return grlex_less(a.second, b.second);
  }
};

// Degree-k alternating multivector field with polynomial coefficients.
class Multivector {
 public:
  Multivector() : nvars_(0), degree_(0) {}
  Multivector(int nvars, int degree);

  static Multivector zero(int nvars, int degree) { return Multivector(nvars, degree); }
  static Multivector from_polynomial(const Polynomial& f);
  static Multivector basis(int nvars, IndexMask m);  // unit coefficient

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IndexMask, Polynomial>& components() const { return comps_; }

  Polynomial component(IndexMask m) const;
  void add_term(IndexMask m, const Polynomial& coeff);

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(const Rational& c) const;
  bool operator==(const Multivector& o) const;
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  Multivector scaled_by(const Polynomial& f) const;

  // Coefficient-degree slice: keeps the part of every component that is
  // weight-homogeneous of the given degree.
  Multivector coefficient_slice(const WeightVector& w, long degree) const;
  std::vector<long> occurring_coefficient_degrees(const WeightVector& w) const;
  bool coefficients_homogeneous(const WeightVector& w, long* degree_out = nullptr) const;

 private:
  int nvars_;
  int degree_;
  std::map<IndexMask, Polynomial> comps_;
};

// Exterior product. Degrees beyond the ambient dimension give the zero
// multivector of that degree.
Multivector wedge(const Multivector& a, const Multivector& b);

// Schouten-Nijenhuis bracket. The sign convention is pinned by two anchors:
// schouten(pi, f) is the Hamiltonian field of f in the convention of the
// displayed Hamiltonian lists, and the graded coboundary formulas of the
// two four-dimensional models are reproduced entry by entry.
Multivector schouten(const Multivector& a, const Multivector& b);

struct VolumeForm {
  Rational scale = 1;  // positive multiple of dx0^...^dx_{n-1}
};

// Divergence of a vector field with respect to the standard volume form;
// constant rescalings of the volume do not change it.
Polynomial divergence(const Multivector& y, const VolumeForm& vol = VolumeForm{});

// Invertible affine point map y = L x + t. A coordinate may additionally
// carry a formal translation symbol (the circle shift of the involution);
// it acts trivially on coefficients free of that coordinate.
struct AffinePointMap {
  std::vector<std::vector<Rational>> linear;         // row i: coefficients of x_j in y_i
  std::vector<Rational> translation;                 // t_i
  std::vector<std::map<std::string, Rational>> formal_shift;  // per output coordinate

  static AffinePointMap identity(int n);
  static AffinePointMap linear_map(std::vector<std::vector<Rational>> m);

  int dim() const { return static_cast<int>(linear.size()); }
  bool has_formal_shift() const;
  AffinePointMap compose(const AffinePointMap& inner) const;  // this after inner
  bool is_pure_translation() const;
};

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& m);

// phi_* A: coefficients composed with phi^{-1}, basis transformed by the
// minors of the linear part. Throws when a formal shift would enter a
// coefficient or the linear part is singular.
Multivector pushforward(const AffinePointMap& phi, const Multivector& a);

}  // namespace poico

#endif
