// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// always-reduced rationals, backed by GMP.

#ifndef TSF_RATIONAL_HPP
#define TSF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tsf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// q^e for e >= 0.
inline Rational rational_pow(const Rational& q, unsigned long e) {
  Rational out(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace tsf

#endif  // TSF_RATIONAL_HPP
