#include "poico/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace poico {

long Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

Monomial Monomial::times(const Monomial& o) const {
  if (e.size() != o.e.size()) throw std::invalid_argument("monomial coordinate-count mismatch");
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

WeightVector::WeightVector(std::vector<int> weights) : w(std::move(weights)) {
  for (int wi : w)
    if (wi <= 0) throw std::invalid_argument("weights must be positive");
}

WeightVector WeightVector::ones(int n) { return WeightVector(std::vector<int>(n, 1)); }

bool WeightVector::is_all_ones() const {
  return std::all_of(w.begin(), w.end(), [](int wi) { return wi == 1; });
}

long weighted_degree(const Monomial& m, const WeightVector& w) {
  if (m.nvars() != w.nvars()) throw std::invalid_argument("weight vector length mismatch");
  long d = 0;
  for (int i = 0; i < m.nvars(); ++i) d += static_cast<long>(m.e[i]) * w.w[i];
  return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return a.e.size() < b.e.size();
}

namespace {

void enumerate(int n, int pos, long remaining, const WeightVector& w, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos == n - 1) {
    if (remaining % w.w[pos] == 0) {
      cur.e[pos] = static_cast<int>(remaining / w.w[pos]);
      out.push_back(cur);
      cur.e[pos] = 0;
    }
    return;
  }
  for (long k = remaining / w.w[pos]; k >= 0; --k) {
    cur.e[pos] = static_cast<int>(k);
    enumerate(n, pos + 1, remaining - k * w.w[pos], w, cur, out);
  }
  cur.e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, long degree, const WeightVector& w) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (w.nvars() != n) throw std::invalid_argument("weight vector length mismatch");
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.push_back(Monomial(0));
    return out;
  }
  Monomial cur(n);
  enumerate(n, 0, degree, w, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_less(b, a);  // descending
  });
  return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace poico
