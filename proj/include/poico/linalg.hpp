#ifndef POICO_LINALG_HPP
#define POICO_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poico/rational.hpp"

namespace poico {

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index

// Column-major sparse matrix with exact rational entries.
struct SparseColumns {
  int rows = 0;
  std::vector<SparseVec> cols;

  int ncols() const { return static_cast<int>(cols.size()); }
  void add_entry(int col, int row, const Rational& v);
};

struct EliminationResult {
  long rank = 0;
  std::vector<int> pivot_cols;       // in elimination order
  std::vector<SparseVec> kernel;     // exact kernel basis, integer-normalized
};

// Fraction-free sparse Gaussian elimination over the rationals (rows are
// scaled to coprime integers, pivots chosen by a min-fill heuristic).
// Deterministic. Kernel extraction is optional since rank-only queries
// dominate the cohomology tables.
EliminationResult eliminate(const SparseColumns& m, bool want_kernel);

// One exact solution of A x = b with every free variable set to zero,
// or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_sparse(const SparseColumns& a, const SparseVec& b);

long dense_rank(std::vector<std::vector<Rational>> m);

// Incrementally maintained reduced row echelon basis over Q.
class IncrementalRref {
 public:
  // Inserts v into the span; returns true when the rank grew.
  bool insert(const SparseVec& v);
  // Canonical residue of v modulo the current span.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  long rank() const { return static_cast<long>(rows_.size()); }
  // The reduced echelon rows in ascending pivot order.
  std::vector<SparseVec> rows_by_pivot() const;

 private:
  std::map<int, size_t> pivot_row_;   // pivot column -> index into rows_
  std::vector<SparseVec> rows_;       // pivot coefficient normalized to 1
};

// v as integer-normalized sparse vector: coprime integer entries, first
// nonzero positive. Zero vector stays empty.
SparseVec normalize_sparse(SparseVec v);

}  // namespace poico

#endif
