#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sct {

// Exact rational numbers with arbitrary-precision numerator and denominator.
// mpq_class keeps values canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace sct
