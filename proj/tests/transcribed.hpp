#ifndef POICO_TESTS_TRANSCRIBED_HPP
#define POICO_TESTS_TRANSCRIBED_HPP

// Direct transcriptions of the displayed graded coboundary formulas for the
// two four-dimensional models, kept independent of the Schouten-based
// implementation so the two constructions can be compared entry by entry.

#include <array>
#include <functional>

#include "poico/complexes.hpp"

namespace poico::transcribed {

using VField = std::array<Polynomial, 4>;  // components of a vector field

inline Polynomial apply_field(const VField& v, const Polynomial& f) {
  Polynomial acc = Polynomial::zero(4);
  for (int j = 0; j < 4; ++j) acc = acc + v[j] * f.partial(j);
  return acc;
}

inline VField zero_field() {
  return {Polynomial::zero(4), Polynomial::zero(4), Polynomial::zero(4), Polynomial::zero(4)};
}

// Hamiltonian lists of the near-positive model, typed from the four
// displayed equations.
inline std::array<VField, 4> near_positive_hamiltonians() {
  auto x = [](int i) { return Polynomial::variable(4, i); };
  std::array<VField, 4> h = {zero_field(), zero_field(), zero_field(), zero_field()};
  h[0][1] = -x(1);
  h[0][3] = -x(3);
  h[1][0] = x(1);
  h[1][2] = -x(3);
  h[2][1] = x(3);
  h[2][3] = -x(1);
  h[3][0] = x(3);
  h[3][2] = x(1);
  return h;
}

// Hamiltonian lists of the fold-circle model.
inline std::array<VField, 4> circle_hamiltonians() {
  auto x = [](int i) { return Polynomial::variable(4, i); };
  std::array<VField, 4> h = {zero_field(), zero_field(), zero_field(), zero_field()};
  h[1][2] = x(3);
  h[1][3] = -x(2);
  h[2][1] = -x(3);
  h[2][3] = -x(1);
  h[3][1] = x(2);
  h[3][2] = x(1);
  return h;
}

inline IndexMask mk(std::initializer_list<int> idx) {
  IndexMask m = 0;
  for (int i : idx) m |= IndexMask(1) << i;
  return m;
}

// d^0(f) = - sum_i pisharp(dx_i)(f) d_i
inline Multivector d0(const std::array<VField, 4>& h, const Multivector& in) {
  Polynomial f = in.component(0);
  Multivector out(4, 1);
  for (int i = 0; i < 4; ++i) out.add_term(mk({i}), -apply_field(h[i], f));
  return out;
}

// near-positive d^1
inline Multivector np_d1(const Multivector& in) {
  auto h = near_positive_hamiltonians();
  std::array<Polynomial, 4> f = {in.component(mk({0})), in.component(mk({1})),
                                 in.component(mk({2})), in.component(mk({3}))};
  Multivector out(4, 2);
  for (int i = 1; i <= 3; ++i) {
    Polynomial c = apply_field(h[i], f[0]) - apply_field(h[0], f[i]);
    if (i % 2 == 1) c = c - f[i];  // (1 - (-1)^i)/2
    out.add_term(mk({0, i}), c);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = 6 - i - j;
      Polynomial c = apply_field(h[j], f[i]) - apply_field(h[i], f[j]);
      if ((i + j) % 2 == 1) c = c - f[k];  // (1 - (-1)^{i+j})/2
      out.add_term(mk({i, j}), c);
    }
  return out;
}

// near-positive d^2, the four displayed rows
inline Multivector np_d2(const Multivector& in) {
  auto h = near_positive_hamiltonians();
  auto f = [&](int a, int b) { return in.component(mk({a, b})); };
  Multivector out(4, 3);
  out.add_term(mk({0, 1, 2}), -apply_field(h[0], f(1, 2)) + apply_field(h[1], f(0, 2)) -
                                  apply_field(h[2], f(0, 1)) - f(1, 2) + f(0, 3));
  out.add_term(mk({0, 1, 3}), -apply_field(h[0], f(1, 3)) + apply_field(h[1], f(0, 3)) -
                                  apply_field(h[3], f(0, 1)) - f(1, 3) * Rational(2));
  out.add_term(mk({0, 2, 3}), -apply_field(h[0], f(2, 3)) + apply_field(h[2], f(0, 3)) -
                                  apply_field(h[3], f(0, 2)) + f(0, 1) - f(2, 3));
  out.add_term(mk({1, 2, 3}), -apply_field(h[1], f(2, 3)) + apply_field(h[2], f(1, 3)) -
                                  apply_field(h[3], f(1, 2)));
  return out;
}

// near-positive d^3: sum over triples i<j<k with l completing {0,1,2,3},
// coefficient (-1)^{l+1} pisharp(dx_l)(f_ijk), minus 2 f_123
inline Multivector np_d3(const Multivector& in) {
  auto h = near_positive_hamiltonians();
  Multivector out(4, 4);
  Polynomial c = Polynomial::zero(4);
  const std::array<std::array<int, 4>, 4> triples = {{{0, 1, 2, 3},  // ijk, l
                                                      {0, 1, 3, 2},
                                                      {0, 2, 3, 1},
                                                      {1, 2, 3, 0}}};
  for (const auto& t : triples) {
    Polynomial term = apply_field(h[t[3]], in.component(mk({t[0], t[1], t[2]})));
    if (t[3] % 2 == 0) term = -term;  // (-1)^{l+1}
    c = c + term;
  }
  c = c - in.component(mk({1, 2, 3})) * Rational(2);
  out.add_term(mk({0, 1, 2, 3}), c);
  return out;
}

// circle-model d^1: pisharp(dx_i)(f_0) on the d_{0i} block and
// pisharp(dx_j)(f_i) - pisharp(dx_i)(f_j) + (-1)^{[(i+j+2)/2]} f_k elsewhere
inline Multivector circle_d1(const Multivector& in) {
  auto h = circle_hamiltonians();
  std::array<Polynomial, 4> f = {in.component(mk({0})), in.component(mk({1})),
                                 in.component(mk({2})), in.component(mk({3}))};
  Multivector out(4, 2);
  for (int i = 1; i <= 3; ++i) out.add_term(mk({0, i}), apply_field(h[i], f[0]));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = 6 - i - j;
      Polynomial c = apply_field(h[j], f[i]) - apply_field(h[i], f[j]);
      int sign = ((i + j + 2) / 2) % 2 == 0 ? 1 : -1;
      c = c + f[k] * Rational(sign);
      out.add_term(mk({i, j}), c);
    }
  return out;
}

// circle-model d^2
inline Multivector circle_d2(const Multivector& in) {
  auto h = circle_hamiltonians();
  auto f = [&](int a, int b) { return in.component(mk({a, b})); };
  Multivector out(4, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = 6 - i - j;
      Polynomial c = apply_field(h[i], f(0, j)) - apply_field(h[j], f(0, i));
      int sign = ((i + j) / 2) % 2 == 0 ? 1 : -1;
      c = c + f(0, k) * Rational(sign);
      out.add_term(mk({0, i, j}), c);
    }
  Polynomial c123 = Polynomial::zero(4);
  for (int i = 1; i <= 3; ++i) {
    int jk[2], t = 0;
    for (int v = 1; v <= 3; ++v)
      if (v != i) jk[t++] = v;
    Polynomial term = apply_field(h[i], f(jk[0], jk[1]));
    if (i % 2 == 1) term = -term;  // (-1)^i
    c123 = c123 + term;
  }
  out.add_term(mk({1, 2, 3}), c123);
  return out;
}

// circle-model d^3: (-1)^{k+1} pisharp(dx_k)(f_{0ij}) with k completing
// {i,j,k} = {1,2,3}
inline Multivector circle_d3(const Multivector& in) {
  auto h = circle_hamiltonians();
  Multivector out(4, 4);
  Polynomial c = Polynomial::zero(4);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = 6 - i - j;
      Polynomial term = apply_field(h[k], in.component(mk({0, i, j})));
      if (k % 2 == 0) term = -term;  // (-1)^{k+1}
      c = c + term;
    }
  out.add_term(mk({0, 1, 2, 3}), c);
  return out;
}

// Transcribed coboundary for one model ("near-positive" or "blf-circle").
inline Multivector coboundary(const std::string& model, int k, const Multivector& in) {
  if (model == "near-positive") {
    switch (k) {
      case 0: return d0(near_positive_hamiltonians(), in);
      case 1: return np_d1(in);
      case 2: return np_d2(in);
      case 3: return np_d3(in);
      default: return Multivector(4, k + 1);
    }
  }
  switch (k) {
    case 0: return d0(circle_hamiltonians(), in);
    case 1: return circle_d1(in);
    case 2: return circle_d2(in);
    case 3: return circle_d3(in);
    default: return Multivector(4, k + 1);
  }
}

// Assemble the transcribed operator into a matrix on the engine's slice
// bases so the comparison with build_slice_matrix is entry-by-entry.
inline SparseColumns transcribed_matrix(const PoissonStructure& pi, const std::string& model,
                                        int k, long i) {
  SliceBasis dom = slice_basis(pi, k, i);
  SliceBasis cod = slice_basis(pi, k + 1, i);  // both models are linear: shift 0
  SparseColumns m;
  m.rows = static_cast<int>(cod.dim());
  m.cols.resize(dom.dim());
  long col = 0;
  for (IndexMask mask : dom.masks)
    for (const auto& mono : dom.monos) {
      Multivector e(4, k);
      e.add_term(mask, Polynomial::term(mono, 1));
      SparseVec v = to_coords(cod, coboundary(model, k, e));
      for (const auto& [row, val] : v) m.add_entry(static_cast<int>(col), row, val);
      ++col;
    }
  return m;
}

inline bool sparse_columns_equal(const SparseColumns& a, const SparseColumns& b) {
  if (a.rows != b.rows || a.cols.size() != b.cols.size()) return false;
  auto norm = [](SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(v, [](const auto& e) { return e.second == 0; });
    return v;
  };
  for (size_t c = 0; c < a.cols.size(); ++c)
    if (norm(a.cols[c]) != norm(b.cols[c])) return false;
  return true;
}

}  // namespace poico::transcribed

#endif
