#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ellconf {

// Exact rational scalar. Always kept canonical (lowest terms, positive
// denominator); mpq_class does not canonicalize two-argument construction,
// so go through rat() instead of the raw constructor.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace ellconf
