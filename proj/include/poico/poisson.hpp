#ifndef POICO_POISSON_HPP
#define POICO_POISSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "poico/linalg.hpp"
#include "poico/multivector.hpp"

namespace poico {

struct PoissonStructure {
  std::string name;                 // catalog identifier or "input"
  std::vector<std::string> coords;  // ordered coordinate names
  int n = 0;
  Multivector bivector;  // degree 2
  WeightVector weights;
  VolumeForm volume;
  bool validated = false;  // set once jacobi_check succeeds

  PoissonStructure() = default;
  PoissonStructure(std::string name_, std::vector<std::string> coords_, Multivector biv,
                   WeightVector w = {}, VolumeForm vol = {});
};

struct PointEval {
  std::vector<Rational> x;
};

struct OneForm {
  std::vector<Polynomial> comp;  // f_i dx_i
};

// Numerators over one shared denominator; defined off the denominator's
// zero set.
struct RationalOneForm {
  std::vector<Polynomial> numerators;
  Polynomial denominator;
};

struct IntrinsicGradient {
  PointEval base;
  std::vector<std::vector<Rational>> matrix;  // C(n,2) rows (lex pairs) x n columns
  long rank = 0;
};

struct JacobiResult {
  bool ok = false;
  Multivector witness;  // the trivector [pi,pi] when nonzero
};

JacobiResult jacobi_check(PoissonStructure& pi);
JacobiResult jacobi_check(const PoissonStructure& pi);

// pi-sharp in the convention of the displayed Hamiltonian lists:
// anchor(dx_i)_j = pi~_{ji}.
Multivector anchor(const PoissonStructure& pi, const OneForm& alpha);
Multivector anchor_dx(const PoissonStructure& pi, int i);

Multivector hamiltonian(const PoissonStructure& pi, const Polynomial& f);

// Basis of the homogeneous degree-i Casimirs, integer-normalized,
// deterministic order.
std::vector<Polynomial> casimir_basis(const PoissonStructure& pi, long degree);

// Modular vector field of the (scaled) standard volume form. The global
// sign is fixed so the near-positive model yields 2 d/dx0.
Multivector modular_field(const PoissonStructure& pi, const VolumeForm& vol);

// Raw m-fold wedge power, no combinatorial normalization removed.
Multivector wedge_power(const PoissonStructure& pi, int m);

int rank_at(const PoissonStructure& pi, const PointEval& p);

// First partials of the bivector coefficients at a zero of the bivector.
IntrinsicGradient intrinsic_gradient(const PoissonStructure& pi, const PointEval& p);

// Exact inverse of the anchor on a generically nondegenerate structure;
// the denominator is the Pfaffian of the coefficient matrix.
RationalOneForm anchor_invert(const PoissonStructure& pi, const Multivector& y);

// Bivector with {x_i,x_j} = (dx_i^dx_j^df^dg)/vol on four coordinates;
// f and g are Casimirs of the result and Jacobi holds structurally.
PoissonStructure jacobian_bivector(const std::vector<std::string>& coords, const Polynomial& f,
                                   const Polynomial& g, const VolumeForm& vol = {});

// Searches for Y with [pi, Y] = pi, degree by degree up to max_degree. The
// Euler-field candidate is preferred when it works; otherwise the graded
// linear systems are solved with free variables at zero.
std::optional<Multivector> exactness_witness(const PoissonStructure& pi, long max_degree);

struct NearPositivitySample {
  PointEval point;
  Rational value;  // dx0^dx1^dx2^dx3 coefficient of pi^2 at the point
};

struct NearPositivityReport {
  std::vector<NearPositivitySample> samples;
  bool all_nonnegative = true;
  std::optional<PointEval> counterexample;
};

NearPositivityReport near_positivity_sample(const PoissonStructure& pi,
                                            const std::vector<PointEval>& points);

// Euler vector field sum x_i d_i (unit weights) on n coordinates.
Multivector euler_field(int n);
Multivector weighted_euler_field(const WeightVector& w);

}  // namespace poico

#endif
