#ifndef POICO_ASSEMBLY_HPP
#define POICO_ASSEMBLY_HPP

#include <array>
#include <string>
#include <vector>

#include "poico/complexes.hpp"

namespace poico {

struct BettiVector {
  std::array<long, 5> b{1, 0, 0, 0, 0};

  BettiVector() = default;
  BettiVector(long b0, long b1, long b2, long b3, long b4) : b{b0, b1, b2, b3, b4} {}
};

// Closed-form global table for a near-positive structure with n singular
// circles on a manifold with the given Betti numbers:
//   H0 = 1, H1 = 2n + b1, H2 = n + b2, H3 = b3, H4 = b4.
// n = 0 degenerates to the symplectic case and returns the Betti vector.
struct NearPositiveGlobalTable {
  BettiVector betti;
  long circles = 0;
  bool symplectic_case = false;
  std::array<long, 5> dims{};
  std::vector<std::string> generator_notes;  // one per k
};

NearPositiveGlobalTable near_positive_global(const BettiVector& betti, long circles);

// Per-degree slice of the formal broken-Lefschetz-fibration table. Circle
// components contribute through the Casimir algebra on generators of
// degrees (1,2); point components contribute the engine's own
// blf-point slice dimensions (cached).
struct BlfSliceEntry {
  long i = 0;
  long circle_part = 0;
  long point_part = 0;
  long total = 0;
};

struct BlfGlobalTable {
  long circles = 0, points = 0;
  long i_max = 0;
  std::array<std::vector<BlfSliceEntry>, 5> by_k;
  std::vector<std::string> generator_notes;
};

BlfGlobalTable blf_global_formal(long circles, long points, long i_max);

// Engine-computed slice dimension of the blf-point model, memoized for the
// lifetime of the process.
long blf_point_slice_dim(int k, long i);

// dim R_i[Q1,Q2] with deg Q1 = 1, deg Q2 = 2 (floor(i/2) + 1).
long circle_casimir_dim(long i);

}  // namespace poico

#endif
