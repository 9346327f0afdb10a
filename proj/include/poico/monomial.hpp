#ifndef POICO_MONOMIAL_HPP
#define POICO_MONOMIAL_HPP

#include <string>
#include <vector>

#include "poico/rational.hpp"

namespace poico {

// Exponent vector, one entry per ambient coordinate.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  long degree() const;
  bool is_one() const { return degree() == 0; }
  Monomial times(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Positive integer weights, one per coordinate. Defaults to all ones.
struct WeightVector {
  std::vector<int> w;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> weights);
  static WeightVector ones(int n);

  int nvars() const { return static_cast<int>(w.size()); }
  bool is_all_ones() const;
  bool operator==(const WeightVector& o) const { return w == o.w; }
};

long weighted_degree(const Monomial& m, const WeightVector& w);

// Graded lexicographic order (total degree first, then lex with the first
// declared coordinate largest). Fixes every matrix layout in the engine.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

// All monomials in n coordinates of weighted degree `degree`, listed in
// descending graded-lex order (x0^d first).
std::vector<Monomial> monomial_basis(int n, long degree, const WeightVector& w);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace poico

#endif
