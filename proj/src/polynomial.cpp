#include "poico/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace poico {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.e[i] = 1;
  Polynomial p(nvars);
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("coordinate-count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("coordinate-count mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("coordinate-count mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("coordinate-count mismatch");
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = Polynomial::constant(nvars_, 1);
  for (int j = 0; j < k; ++j) r = r * (*this);
  return r;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("partial index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    r.add_term(d, c * m.e[i]);
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point dimension mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& xs) const {
  if (static_cast<int>(xs.size()) != nvars_)
    throw std::invalid_argument("substitution arity mismatch");
  int out_vars = xs.empty() ? nvars_ : xs[0].nvars();
  Polynomial r(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial v = Polynomial::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) v = v * xs[i];
    r = r + v;
  }
  return r;
}

bool Polynomial::is_homogeneous(const WeightVector& w, long* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  long d = weighted_degree(terms_.begin()->first, w);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m, w) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

long Polynomial::max_weighted_degree(const WeightVector& w) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m, w));
  return d;
}

Polynomial Polynomial::slice(const WeightVector& w, long degree) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m, w) == degree) r.terms_.emplace(m, c);
  return r;
}

std::vector<long> Polynomial::occurring_degrees(const WeightVector& w) const {
  std::set<long> ds;
  for (const auto& [m, c] : terms_) ds.insert(weighted_degree(m, w));
  return std::vector<long>(ds.begin(), ds.end());
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(abs(num_gcd), den_lcm);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& q) const {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quo(nvars_);
  const auto& [qm, qc] = q.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    Monomial d(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      d.e[i] = rm.e[i] - qm.e[i];
      if (d.e[i] < 0) throw std::domain_error("polynomial division is not exact");
    }
    Rational c = rc / qc;
    quo.add_term(d, c);
    rem = rem - q * Polynomial::term(d, c);
  }
  return quo;
}

bool Polynomial::depends_on(int i) const {
  for (const auto& [m, c] : terms_)
    if (m.e[i] > 0) return true;
  return false;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // descending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    const Rational& c = it->second;
    Rational a = abs(c);
    bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      s += to_string(a);
    } else if (a == 1) {
      s += monomial_to_string(m, names);
    } else {
      s += to_string(a) + "*" + monomial_to_string(m, names);
    }
  }
  return s;
}

}  // namespace poico
