#ifndef POICO_MODELS_HPP
#define POICO_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "poico/poisson.hpp"

namespace poico {

struct ModelSpec {
  std::string name;
  int n = 0;  // half-dimension / dimension parameter where applicable
  std::optional<Polynomial> conformal_factor;  // blf-circle only
};

// Catalog identifiers, stable for the CLI:
//   near-positive, near-symplectic-2n, log-2n, blf-circle, blf-point,
//   sl2-dual, symplectic-std, phase-space-example
std::vector<std::string> model_names();
bool is_model_name(const std::string& name);

// Instantiates a catalog structure. Every returned value has passed the
// Jacobi check (validated flag set). Throws on unknown names or invalid
// parameters.
PoissonStructure model(const ModelSpec& spec);
PoissonStructure model(const std::string& name, int n = 0);

// Default integer parameter used when the CLI omits one.
int model_default_parameter(const std::string& name);

// The orientation-reversing circle involution (x0 -> x0 + half period,
// x1 -> -x1, x2 -> x2, x3 -> -x3). The translation is a formal symbol; it
// acts trivially on coefficients free of x0.
AffinePointMap involution_map();

}  // namespace poico

#endif
