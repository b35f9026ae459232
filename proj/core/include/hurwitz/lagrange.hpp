#pragma once

#include "hurwitz/series.hpp"

namespace hurwitz {

// Inverse of x = z*exp(-z^r) at the origin: the series z(x) with
// x(z(x)) = x + O(x^{order+1}).  Solved by the fixed point z = x*exp(z^r),
// which gains r orders of accuracy per pass.
template <class C = Rat>
Series<C> lagrange_invert(int order, int r, const std::string& var = "x") {
  if (order < 1) throw std::invalid_argument("lagrange_invert: order >= 1");
  FramePtr f = make_frame({{var, 0, order}});
  Series<C> x = Series<C>::variable(f, var);
  Series<C> z = x;
  for (int pass = 0; pass * r <= order; ++pass)
    z = x * series_exp(series_pow(z, r));
  return z;
}

// x(z) = z*exp(-z^r) applied to a series with positive valuation.
template <class C>
Series<C> curve_x_of(const Series<C>& z, int r) {
  return z * series_exp(-series_pow(z, r));
}

}  // namespace hurwitz
