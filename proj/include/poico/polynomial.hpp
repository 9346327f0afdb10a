#ifndef POICO_POLYNOMIAL_HPP
#define POICO_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poico/monomial.hpp"
#include "poico/rational.hpp"

namespace poico {

// Multivariate polynomial with exact rational coefficients. The zero
// polynomial is the empty term map; no zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int k) const;

  // Formal partial derivative with respect to coordinate i.
  Polynomial partial(int i) const;

  Rational eval(const std::vector<Rational>& point) const;

  // Substitute coordinate i -> xs[i]; all xs share one ambient ring.
  Polynomial substitute(const std::vector<Polynomial>& xs) const;

  bool is_homogeneous(const WeightVector& w, long* degree_out = nullptr) const;
  long max_weighted_degree(const WeightVector& w) const;  // -1 for zero
  Polynomial slice(const WeightVector& w, long degree) const;
  std::vector<long> occurring_degrees(const WeightVector& w) const;

  // Leading term in graded-lex order; throws on zero.
  const std::pair<const Monomial, Rational>& leading_term() const;

  // Positive rational c such that (*this)/c has coprime integer
  // coefficients. Zero polynomial has content 0.
  Rational content() const;

  // Exact division; throws std::domain_error when q does not divide.
  Polynomial divide_exact(const Polynomial& q) const;

  bool depends_on(int i) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace poico

#endif
