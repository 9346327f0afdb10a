#include "poico/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace poico {

void SparseColumns::add_entry(int col, int row, const Rational& v) {
  if (v == 0) return;
  if (col >= ncols()) cols.resize(col + 1);
  cols[col].emplace_back(row, v);
}

namespace {

using IRow = std::vector<std::pair<int, Integer>>;  // sorted by column

// a*x + b*y with sorted merge, then content-normalized.
IRow row_axpy(const Integer& a, const IRow& x, const Integer& b, const IRow& y) {
  IRow r;
  r.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second + b * y[j].second;
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

void strip_content(IRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct Eliminator {
  int ncols;
  int pivotable_cols;  // columns beyond this index are never chosen as pivots
  std::vector<IRow> rows;
  std::vector<bool> active;
  std::vector<int> colcount;  // active rows containing the column

  // pivot log
  std::vector<int> piv_row, piv_col;

  Eliminator(const SparseColumns& m, int pivotable) : ncols(m.ncols()), pivotable_cols(pivotable) {
    // transpose to rows and clear denominators row-wise (row scaling keeps
    // the solution set intact)
    std::vector<std::vector<std::pair<int, Rational>>> rr(m.rows);
    for (int c = 0; c < m.ncols(); ++c)
      for (const auto& [r, v] : m.cols[c]) {
        if (r < 0 || r >= m.rows) throw std::out_of_range("row index out of range");
        rr[r].emplace_back(c, v);
      }
    rows.reserve(m.rows);
    colcount.assign(ncols, 0);
    for (auto& entries : rr) {
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      Integer lcm = 1;
      for (const auto& [c, v] : entries)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
      IRow row;
      row.reserve(entries.size());
      int prev = -1;
      for (const auto& [c, v] : entries) {
        if (c == prev) throw std::invalid_argument("duplicate entry in sparse column");
        prev = c;
        Rational scaled = v * Rational(lcm);
        row.emplace_back(c, scaled.get_num());
      }
      strip_content(row);
      rows.push_back(std::move(row));
    }
    active.assign(rows.size(), true);
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) colcount[c]++;
  }

  const Integer* find(const IRow& row, int col) const {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
  }

  void retire_row_counts(const IRow& row) {
    for (const auto& [c, v] : row) colcount[c]--;
  }
  void add_row_counts(const IRow& row) {
    for (const auto& [c, v] : row) colcount[c]++;
  }

  void run() {
    while (true) {
      // min active-count pivot column
      int best_col = -1;
      for (int c = 0; c < pivotable_cols; ++c) {
        if (colcount[c] == 0) continue;
        if (best_col < 0 || colcount[c] < colcount[best_col]) best_col = c;
      }
      if (best_col < 0) break;

      // among its active rows prefer short rows and unit pivots
      int best_row = -1;
      size_t best_nnz = 0;
      bool best_unit = false;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (!active[r]) continue;
        const Integer* v = find(rows[r], best_col);
        if (!v) continue;
        bool unit = (*v == 1 || *v == -1);
        if (best_row < 0 || rows[r].size() < best_nnz ||
            (rows[r].size() == best_nnz && unit && !best_unit)) {
          best_row = static_cast<int>(r);
          best_nnz = rows[r].size();
          best_unit = unit;
        }
      }

      const IRow& pivot = rows[best_row];
      Integer pv = *find(pivot, best_col);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (!active[r] || static_cast<int>(r) == best_row) continue;
        const Integer* v = find(rows[r], best_col);
        if (!v) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), v->get_mpz_t());
        Integer a = pv / g;
        Integer b = -(*v / g);
        retire_row_counts(rows[r]);
        IRow updated = row_axpy(a, rows[r], b, pivot);
        strip_content(updated);
        rows[r] = std::move(updated);
        add_row_counts(rows[r]);
      }
      active[best_row] = false;
      retire_row_counts(pivot);
      piv_row.push_back(best_row);
      piv_col.push_back(best_col);
    }
  }

  // Back-substitute through the frozen pivot rows; `fixed` preassigns some
  // coordinates (free columns). Returns the full dense solution of M x = 0
  // restricted to the pivot coordinates, or nullopt when a retired-free row
  // blocks it (not possible for pure kernel queries).
  std::vector<Rational> back_substitute(const std::map<int, Rational>& fixed) const {
    std::vector<Rational> x(ncols, 0);
    for (const auto& [c, v] : fixed) x[c] = v;
    for (size_t t = piv_row.size(); t-- > 0;) {
      const IRow& row = rows[piv_row[t]];
      int pc = piv_col[t];
      Rational sum = 0;
      Rational pivval;
      for (const auto& [c, v] : row) {
        if (c == pc)
          pivval = Rational(v);
        else if (x[c] != 0)
          sum += Rational(v) * x[c];
      }
      x[pc] = -sum / pivval;
    }
    return x;
  }
};

}  // namespace

SparseVec normalize_sparse(SparseVec v) {
  std::erase_if(v, [](const auto& e) { return e.second == 0; });
  if (v.empty()) return v;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [c, q] : v) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (v.front().second < 0) scale = -scale;
  for (auto& [c, q] : v) q *= scale;
  return v;
}

EliminationResult eliminate(const SparseColumns& m, bool want_kernel) {
  Eliminator el(m, m.ncols());
  el.run();
  EliminationResult res;
  res.rank = static_cast<long>(el.piv_col.size());
  res.pivot_cols = el.piv_col;
  if (want_kernel) {
    std::vector<bool> is_pivot(m.ncols(), false);
    for (int c : el.piv_col) is_pivot[c] = true;
    for (int f = 0; f < m.ncols(); ++f) {
      if (is_pivot[f]) continue;
      std::map<int, Rational> fixed{{f, Rational(1)}};
      std::vector<Rational> x = el.back_substitute(fixed);
      SparseVec v;
      for (int c = 0; c < m.ncols(); ++c)
        if (x[c] != 0) v.emplace_back(c, x[c]);
      res.kernel.push_back(normalize_sparse(std::move(v)));
    }
  }
  return res;
}

std::optional<std::vector<Rational>> solve_sparse(const SparseColumns& a, const SparseVec& b) {
  SparseColumns aug = a;
  int bcol = a.ncols();
  aug.cols.resize(bcol + 1);
  for (const auto& [r, v] : b) aug.add_entry(bcol, r, -v);
  Eliminator el(aug, bcol);
  el.run();
  for (size_t r = 0; r < el.rows.size(); ++r)
    if (el.active[r] && !el.rows[r].empty()) return std::nullopt;
  std::map<int, Rational> fixed{{bcol, Rational(1)}};
  std::vector<Rational> x = el.back_substitute(fixed);
  x.resize(bcol);
  return x;
}

long dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t nrows = m.size(), ncols = m[0].size();
  long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t piv = row;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[row]);
    for (size_t r = row + 1; r < nrows; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool IncrementalRref::insert(const SparseVec& v) {
  SparseVec res = reduce(v);
  if (res.empty()) return false;
  int pivot = res.front().first;
  Rational pv = res.front().second;
  for (auto& [c, q] : res) q /= pv;
  // keep full reduction: clear the new pivot column from existing rows
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != pivot) continue;
    Rational f = it->second;
    SparseVec updated;
    updated.reserve(row.size() + res.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < res.size()) {
      if (j == res.size() || (i < row.size() && row[i].first < res[j].first)) {
        updated.push_back(row[i++]);
      } else if (i == row.size() || res[j].first < row[i].first) {
        updated.emplace_back(res[j].first, -f * res[j].second);
        ++j;
      } else {
        Rational val = row[i].second - f * res[j].second;
        if (val != 0) updated.emplace_back(row[i].first, val);
        ++i;
        ++j;
      }
    }
    row = std::move(updated);
  }
  pivot_row_[pivot] = rows_.size();
  rows_.push_back(std::move(res));
  return true;
}

std::vector<SparseVec> IncrementalRref::rows_by_pivot() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, idx] : pivot_row_) out.push_back(rows_[idx]);
  return out;
}

SparseVec IncrementalRref::reduce(const SparseVec& v) const {
  std::map<int, Rational> acc(v.begin(), v.end());
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    auto pr = pivot_row_.find(it->first);
    if (pr == pivot_row_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    for (const auto& [c, q] : rows_[pr->second]) acc[c] -= f * q;
    // each subtraction clears one pivot column and introduces only
    // non-pivot columns, so restarting terminates
    it = acc.begin();
  }
  SparseVec out;
  out.reserve(acc.size());
  for (const auto& [c, q] : acc)
    if (q != 0) out.emplace_back(c, q);
  return out;
}

}  // namespace poico
