#include "poico/assembly.hpp"

#include <stdexcept>

#include "poico/models.hpp"

namespace poico {

NearPositiveGlobalTable near_positive_global(const BettiVector& betti, long circles) {
  if (circles < 0) throw std::invalid_argument("circle count must be nonnegative");
  for (long bi : betti.b)
    if (bi < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
  if (betti.b[0] < 1) throw std::invalid_argument("connected input needs b0 >= 1");
  NearPositiveGlobalTable t;
  t.betti = betti;
  t.circles = circles;
  if (circles == 0) {
    t.symplectic_case = true;
    t.dims = betti.b;
    t.generator_notes = {"constants", "de Rham classes", "de Rham classes", "de Rham classes",
                         "de Rham classes"};
    return t;
  }
  t.dims[0] = 1;
  t.dims[1] = 2 * circles + betti.b[1];
  t.dims[2] = circles + betti.b[2];
  t.dims[3] = betti.b[3];
  t.dims[4] = betti.b[4];
  t.generator_notes = {
      "constants",
      "modular fields Y_k and line-bundle fields d_k per circle, plus de Rham classes",
      "Y_k ^ d_k per circle, plus de Rham classes", "de Rham classes", "de Rham classes"};
  return t;
}

long circle_casimir_dim(long i) { return i < 0 ? 0 : i / 2 + 1; }

namespace {

struct BlfPointCache {
  std::map<std::pair<int, long>, long> dims;
  std::unique_ptr<PoissonStructure> pi;
  std::unique_ptr<SliceCache> cache;
};

BlfPointCache& blf_point_cache() {
  static BlfPointCache c;
  if (!c.pi) {
    c.pi = std::make_unique<PoissonStructure>(model("blf-point"));
    c.cache = std::make_unique<SliceCache>(*c.pi);
  }
  return c;
}

}  // namespace

long blf_point_slice_dim(int k, long i) {
  if (i < 0) return 0;
  auto& c = blf_point_cache();
  auto key = std::make_pair(k, i);
  auto it = c.dims.find(key);
  if (it != c.dims.end()) return it->second;
  SliceDim sd = cohomology_dim(*c.pi, k, i, /*with_representatives=*/false, c.cache.get());
  c.dims[key] = sd.dim;
  return sd.dim;
}

BlfGlobalTable blf_global_formal(long circles, long points, long i_max) {
  if (circles < 0 || points < 0) throw std::invalid_argument("component counts must be nonnegative");
  if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
  BlfGlobalTable t;
  t.circles = circles;
  t.points = points;
  t.i_max = i_max;
  for (int k = 0; k <= 4; ++k) {
    for (long i = 0; i <= i_max; ++i) {
      BlfSliceEntry e;
      e.i = i;
      long circ = 0;
      switch (k) {
        case 0:
          circ = circle_casimir_dim(i);
          break;
        case 1:  // R[Q1,Q2] d/dtheta
          circ = circle_casimir_dim(i);
          break;
        case 2:
          circ = 0;
          break;
        case 3:  // R[Q1,Q2] d1^d2^d3
        case 4:  // R[Q1,Q2] vol
          circ = circle_casimir_dim(i);
          break;
      }
      e.circle_part = circles * circ;
      e.point_part = points == 0 ? 0 : points * blf_point_slice_dim(k, i);
      e.total = e.circle_part + e.point_part;
      t.by_k[k].push_back(e);
    }
  }
  t.generator_notes = {
      "Casimir algebras: R[Q1,Q2] per circle, R[P1,P2] per point",
      "R[Q1,Q2] d/dtheta per circle; engine-computed point block (Euler field and the "
      "rotational symmetries of the quadric pair in degree 1)",
      "engine-computed point block",
      "R[Q1,Q2] dx1^dx2^dx3 per circle; engine-computed point block",
      "R[Q1,Q2] vol per circle; engine-computed point block"};
  return t;
}

}  // namespace poico
