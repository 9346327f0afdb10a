#include "poico/multivector.hpp"

#include <bit>
#include <stdexcept>

namespace poico {

int mask_degree(IndexMask m) { return std::popcount(m); }

std::vector<int> mask_to_indices(IndexMask m) {
  std::vector<int> idx;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) idx.push_back(i);
  return idx;
}

IndexMask indices_to_mask(const std::vector<int>& idx) {
  IndexMask m = 0;
  for (int i : idx) {
    IndexMask bit = IndexMask(1) << i;
    if (m & bit) throw std::invalid_argument("repeated index in multi-index");
    m |= bit;
  }
  return m;
}

namespace {
void masks_rec(int n, int k, int start, IndexMask cur, std::vector<IndexMask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i) masks_rec(n, k - 1, i + 1, cur | (IndexMask(1) << i), out);
}
}  // namespace

std::vector<IndexMask> multi_index_masks(int n, int k) {
  std::vector<IndexMask> out;
  if (k < 0 || k > n) return out;
  masks_rec(n, k, 0, 0, out);
  return out;
}

int merge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inv = 0;
  for (IndexMask bb = b; bb;) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

int remove_sign_right(IndexMask I, int r) {
  int above = std::popcount(I >> (r + 1));
  return (above % 2 == 0) ? 1 : -1;
}

Multivector::Multivector(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative multivector degree");
}

Multivector Multivector::from_polynomial(const Polynomial& f) {
  Multivector r(f.nvars(), 0);
  r.add_term(0, f);
  return r;
}

Multivector Multivector::basis(int nvars, IndexMask m) {
  Multivector r(nvars, mask_degree(m));
  r.add_term(m, Polynomial::constant(nvars, 1));
  return r;
}

Polynomial Multivector::component(IndexMask m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? Polynomial::zero(nvars_) : it->second;
}

void Multivector::add_term(IndexMask m, const Polynomial& coeff) {
  if (mask_degree(m) != degree_) throw std::invalid_argument("multi-index size != degree");
  if (coeff.nvars() != nvars_) throw std::invalid_argument("coordinate-count mismatch");
  if (coeff.is_zero()) return;
  auto it = comps_.find(m);
  if (it == comps_.end()) {
    comps_.emplace(m, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw std::invalid_argument("multivector shape mismatch");
  Multivector r = *this;
  for (const auto& [m, c] : o.comps_) r.add_term(m, c);
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const { return *this + (-o); }

Multivector Multivector::operator-() const {
  Multivector r(nvars_, degree_);
  for (const auto& [m, c] : comps_) r.comps_.emplace(m, -c);
  return r;
}

Multivector Multivector::operator*(const Rational& c) const {
  Multivector r(nvars_, degree_);
  if (c == 0) return r;
  for (const auto& [m, p] : comps_) r.comps_.emplace(m, p * c);
  return r;
}

bool Multivector::operator==(const Multivector& o) const {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && comps_ == o.comps_;
}

Multivector Multivector::scaled_by(const Polynomial& f) const {
  Multivector r(nvars_, degree_);
  for (const auto& [m, p] : comps_) r.add_term(m, p * f);
  return r;
}

Multivector Multivector::coefficient_slice(const WeightVector& w, long degree) const {
  Multivector r(nvars_, degree_);
  for (const auto& [m, p] : comps_) r.add_term(m, p.slice(w, degree));
  return r;
}

std::vector<long> Multivector::occurring_coefficient_degrees(const WeightVector& w) const {
  std::vector<long> all;
  for (const auto& [m, p] : comps_)
    for (long d : p.occurring_degrees(w)) all.push_back(d);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool Multivector::coefficients_homogeneous(const WeightVector& w, long* degree_out) const {
  auto ds = occurring_coefficient_degrees(w);
  if (ds.size() > 1) return false;
  if (degree_out) *degree_out = ds.empty() ? 0 : ds[0];
  return true;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("coordinate-count mismatch");
  int deg = a.degree() + b.degree();
  Multivector r(a.nvars(), deg);
  if (deg > a.nvars()) return r;  // overflow degree: zero multivector
  for (const auto& [ma, pa] : a.components())
    for (const auto& [mb, pb] : b.components()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Polynomial c = pa * pb;
      if (s < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  return r;
}

Multivector schouten(const Multivector& a, const Multivector& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("coordinate-count mismatch");
  const int n = a.nvars();
  const int p = a.degree(), q = b.degree();
  const int deg = p + q - 1;
  if (deg < 0) return Multivector::zero(n, 0);
  Multivector r(n, deg);
  // - (-1)^{(p-1)(q-1)}
  const int swap_sign = (((p - 1) * (q - 1)) % 2 != 0) ? 1 : -1;

  for (const auto& [I, f] : a.components()) {
    for (const auto& [J, g] : b.components()) {
      // sum_r  d_R(f xi_I)/d xi_r . d(g xi_J)/dx_r
      for (int rr : mask_to_indices(I)) {
        Polynomial dg = g.partial(rr);
        if (dg.is_zero()) continue;
        IndexMask irest = I & ~(IndexMask(1) << rr);
        int ms = merge_sign(irest, J);
        if (ms == 0) continue;
        int s = remove_sign_right(I, rr) * ms;
        Polynomial c = f * dg;
        if (s < 0) c = -c;
        r.add_term(irest | J, c);
      }
      // - (-1)^{(p-1)(q-1)} sum_r  d_R(g xi_J)/d xi_r . d(f xi_I)/dx_r
      for (int rr : mask_to_indices(J)) {
        Polynomial df = f.partial(rr);
        if (df.is_zero()) continue;
        IndexMask jrest = J & ~(IndexMask(1) << rr);
        int ms = merge_sign(jrest, I);
        if (ms == 0) continue;
        int s = swap_sign * remove_sign_right(J, rr) * ms;
        Polynomial c = g * df;
        if (s < 0) c = -c;
        r.add_term(jrest | I, c);
      }
    }
  }
  return r;
}

Polynomial divergence(const Multivector& y, const VolumeForm& vol) {
  if (y.degree() != 1) throw std::invalid_argument("divergence needs a degree-1 field");
  if (vol.scale <= 0) throw std::invalid_argument("volume scale must be positive");
  Polynomial r(y.nvars());
  for (const auto& [m, p] : y.components()) {
    int i = mask_to_indices(m)[0];
    r = r + p.partial(i);
  }
  return r;
}

AffinePointMap AffinePointMap::identity(int n) {
  AffinePointMap phi;
  phi.linear.assign(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) phi.linear[i][i] = 1;
  phi.translation.assign(n, 0);
  phi.formal_shift.assign(n, {});
  return phi;
}

AffinePointMap AffinePointMap::linear_map(std::vector<std::vector<Rational>> m) {
  AffinePointMap phi;
  int n = static_cast<int>(m.size());
  phi.linear = std::move(m);
  phi.translation.assign(n, 0);
  phi.formal_shift.assign(n, {});
  return phi;
}

bool AffinePointMap::has_formal_shift() const {
  for (const auto& s : formal_shift)
    if (!s.empty()) return true;
  return false;
}

AffinePointMap AffinePointMap::compose(const AffinePointMap& inner) const {
  int n = dim();
  if (inner.dim() != n) throw std::invalid_argument("composition dimension mismatch");
  AffinePointMap out = AffinePointMap::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc = 0;
      for (int k = 0; k < n; ++k) acc += linear[i][k] * inner.linear[k][j];
      out.linear[i][j] = acc;
    }
  for (int i = 0; i < n; ++i) {
    Rational acc = translation[i];
    std::map<std::string, Rational> shift = formal_shift[i];
    for (int k = 0; k < n; ++k) {
      acc += linear[i][k] * inner.translation[k];
      for (const auto& [name, coeff] : inner.formal_shift[k]) {
        Rational v = linear[i][k] * coeff;
        if (v == 0) continue;
        shift[name] += v;
        if (shift[name] == 0) shift.erase(name);
      }
    }
    out.translation[i] = acc;
    out.formal_shift[i] = shift;
  }
  return out;
}

bool AffinePointMap::is_pure_translation() const {
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (linear[i][j] != Rational(i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a = m, inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular linear part");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

Rational minor_det(const std::vector<std::vector<Rational>>& L, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = L[rows[i]][cols[j]];
  // small dense determinant, fraction-free not needed here
  Rational det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int j = col; j < k; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace

Multivector pushforward(const AffinePointMap& phi, const Multivector& a) {
  const int n = a.nvars();
  if (phi.dim() != n) throw std::invalid_argument("map dimension mismatch");
  auto linv = invert_matrix(phi.linear);

  // x_i composed with phi^{-1}; coordinates reached by a formal shift may
  // not appear in any coefficient.
  std::vector<Polynomial> subs;
  std::vector<bool> shift_hits(n, false);
  for (int i = 0; i < n; ++i) {
    Polynomial s(n);
    bool hit = false;
    for (int j = 0; j < n; ++j) {
      if (linv[i][j] != 0) {
        s = s + Polynomial::variable(n, j) * linv[i][j];
        s = s + Polynomial::constant(n, -linv[i][j] * phi.translation[j]);
        if (!phi.formal_shift[j].empty()) hit = true;
      }
    }
    subs.push_back(s);
    shift_hits[i] = hit;
  }

  Multivector r(n, a.degree());
  auto target_masks = multi_index_masks(n, a.degree());
  for (const auto& [I, coeff] : a.components()) {
    for (int i = 0; i < n; ++i)
      if (shift_hits[i] && coeff.depends_on(i))
        throw std::domain_error("formal shift enters a polynomial coefficient");
    Polynomial moved = coeff.substitute(subs);
    std::vector<int> cols = mask_to_indices(I);
    for (IndexMask J : target_masks) {
      Rational det = minor_det(phi.linear, mask_to_indices(J), cols);
      if (det == 0) continue;
      r.add_term(J, moved * det);
    }
  }
  return r;
}

}  // namespace poico
