#pragma once

#include <gmpxx.h>

#include <string>

namespace cplab {

// Exact rational scalar. GMP keeps every identity check exact; nothing in
// this project ever rounds a coefficient.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long n) {
  if (n == 0) return Rational(1);
  Rational b = base;
  bool neg = n < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Rational acc(1);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (neg) return Rational(1) / acc;
  return acc;
}

}  // namespace cplab
