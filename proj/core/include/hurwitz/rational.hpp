#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Arbitrary-precision binary float; precision is the MPFR default precision
// in effect at construction time (see set_float_precision_bits).
using BigFloat = boost::multiprecision::mpfr_float;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline Rat inv(const Rat& x) {
  if (x.is_zero()) throw std::domain_error("division by zero rational");
  return Rat(1) / x;
}
inline Rat from_rat_tag(const Rat*, const Rat& x) { return x; }

template <class C>
C from_rat(const Rat& x) {
  return from_rat_tag(static_cast<const C*>(nullptr), x);
}

inline Int factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (long j = 0; j < k; ++j) { b *= (n - j); b /= (j + 1); }
  return b;
}

// x^e for any integer e (e < 0 requires x != 0).
inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return 1;
  Rat base = e > 0 ? x : inv(x);
  long n = e > 0 ? e : -e;
  Rat acc = 1;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline void set_float_precision_bits(unsigned bits) {
  // boost tracks decimal digits; round up so at least `bits` mantissa bits.
  unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 2;
  BigFloat::default_precision(digits10);
}

}  // namespace hurwitz
