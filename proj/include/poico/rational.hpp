#ifndef POICO_RATIONAL_HPP
#define POICO_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace poico {

// Exact scalars. mpq_class keeps every value canonical (lowest terms,
// positive denominator), which the rank computations rely on.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// mpq_class(p, q) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace poico

#endif
