#ifndef POICO_DSL_HPP
#define POICO_DSL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poico/poisson.hpp"

namespace poico {

// Parsed form of a ".poisson" document:
//   coords(t,x1,x2,x3) [weights(1,1,1,1)] <bivector expression>
struct StructureDoc {
  std::vector<std::string> coords;
  std::optional<std::vector<int>> weights;
  Multivector bivector;
  Rational volume_scale = 1;
};

struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  std::string token;
  ParseError(const std::string& msg, int line_, int col_, std::string token_);
};

StructureDoc parse_structure(const std::string& text);

// Canonical text; parsing it back yields an identical document.
std::string print_structure(const StructureDoc& doc);

PoissonStructure to_poisson(const StructureDoc& doc, const std::string& name = "input");
StructureDoc to_doc(const PoissonStructure& pi);

// Polynomial sub-grammar entry point, used by the CLI for point-free
// polynomial arguments (Casimir candidates, conformal factors).
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& coords);

std::string print_multivector(const Multivector& a, const std::vector<std::string>& names);
std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace poico

#endif
