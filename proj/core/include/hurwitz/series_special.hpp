#pragma once

#include <functional>

#include "hurwitz/series.hpp"

namespace hurwitz {

inline Int int_pow(const Int& base, long e) {
  Int acc = 1, b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// sum_{k>=0} coeff(k) * L^k for L with strictly positive support.
template <class C>
Series<C> series_from_coeffs(const Series<C>& L,
                             const std::function<Rat(long)>& coeff) {
  Series<C> acc = Series<C>::constant(L.frame(), from_rat<C>(coeff(0)));
  Series<C> pw = Series<C>::constant(L.frame(), from_rat<C>(Rat(1)));
  long guard = 4;
  for (size_t i = 0; i < L.frame()->size(); ++i)
    guard += L.frame()->var(i).hi - std::min(L.frame()->var(i).lo, 0);
  for (long k = 1; k <= guard; ++k) {
    pw = pw * L;
    if (pw.is_zero()) break;
    Rat c = coeff(k);
    if (!is_zero(c)) acc += pw.scaled(from_rat<C>(c));
  }
  if (!pw.is_zero())
    throw std::domain_error("series_from_coeffs does not terminate under truncation");
  return acc;
}

// zeta(t) = e^{t/2} - e^{-t/2} = sum_j t^{2j+1} / (4^j (2j+1)!)
template <class C>
Series<C> zeta_of(const Series<C>& arg) {
  return series_from_coeffs<C>(arg, [](long k) -> Rat {
    if (k % 2 == 0) return 0;
    long j = (k - 1) / 2;
    return Rat(1, factorial(k) * int_pow(4, j));
  });
}

// ssh(t) = zeta(t)/t = sum_j t^{2j} / (4^j (2j+1)!), unit constant term.
template <class C>
Series<C> sinh_normalized_of(const Series<C>& arg) {
  return series_from_coeffs<C>(arg, [](long k) -> Rat {
    if (k % 2 != 0) return 0;
    long j = k / 2;
    return Rat(1, factorial(2 * j + 1) * int_pow(4, j));
  });
}

// e^{c * x^expo}
template <class C>
Series<C> exp_monomial(const FramePtr& f, const Expo& expo, const Rat& c) {
  return series_exp(Series<C>::monomial(f, expo, from_rat<C>(c)));
}

}  // namespace hurwitz
