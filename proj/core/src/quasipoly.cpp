#include "hurwitz/quasipoly.hpp"

#include <numeric>
#include <stdexcept>

#include "hurwitz/polynomial.hpp"

namespace hurwitz::quasipoly {

StrippedValue strip_prefactor(int r, int g, const std::vector<int>& mu, const Rat& h) {
  const int n = static_cast<int>(mu.size());
  if ((g == 0 && n <= 2))
    throw std::invalid_argument("strip_prefactor: unstable (g,n)");
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d % r != 0) throw std::invalid_argument("strip_prefactor: r must divide |mu|");
  long b = 2L * g - 2 + n + d / r;
  StrippedValue out;
  out.mu = mu;
  Rat pref = Rat(factorial(b));
  for (int m : mu) {
    out.eps.push_back(m % r);
    int s = m / r;
    pref *= rat_pow(Rat(m), s) / Rat(factorial(s));
  }
  out.P = h / pref;
  return out;
}

Rat InterpolatedPolynomial::eval(const std::vector<int>& mu) const {
  Rat acc = 0;
  for (const auto& [e, c] : coeffs) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) t *= rat_pow(Rat(mu[i]), e[i]);
    acc += t;
  }
  return acc;
}

std::vector<int> residue_grid(int r, int eps, int count, int offset) {
  if (eps < 0 || eps >= r) throw std::invalid_argument("residue out of range");
  std::vector<int> g;
  int mu = eps == 0 ? r : eps;
  mu += offset * r;
  for (int i = 0; i < count; ++i, mu += r) g.push_back(mu);
  return g;
}

InterpolatedPolynomial interpolate_P(int r, int g, int n,
                                     const std::vector<int>& eps, int grid_size,
                                     const ValueSupplier& supplier, int degree) {
  if (static_cast<int>(eps.size()) != n)
    throw std::invalid_argument("interpolate_P: eps length != n");
  const int D = degree < 0 ? 3 * g - 3 + n : degree;
  if (D < 0) throw std::invalid_argument("interpolate_P: unstable (g,n)");
  if (grid_size < D + 1)
    throw std::invalid_argument("interpolate_P: grid_size < degree+1");

  std::vector<std::vector<int>> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = residue_grid(r, eps[i], D + 1);

  // tensor of stripped values, indexed by node multi-index
  const int w = D + 1;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= w;
  std::vector<Rat> vals(total);
  std::vector<int> idx(n, 0), mu(n);
  for (long t = 0; t < total; ++t) {
    long rest = t;
    for (int i = n - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(rest % w);
      rest /= w;
    }
    for (int i = 0; i < n; ++i) mu[i] = nodes[i][idx[i]];
    vals[t] = strip_prefactor(r, g, mu, supplier(g, mu)).P;
  }

  // dimension-by-dimension Vandermonde solves: convert node values to
  // monomial coefficients along each axis
  for (int axis = n - 1; axis >= 0; --axis) {
    long stride = 1;
    for (int i = axis + 1; i < n; ++i) stride *= w;
    std::vector<std::vector<Rat>> V(w, std::vector<Rat>(w));
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < w; ++b) V[a][b] = rat_pow(Rat(nodes[axis][a]), b);
    for (long base = 0; base < total; ++base) {
      // visit each 1-D line along `axis` exactly once
      if ((base / stride) % w != 0) continue;
      std::vector<Rat> line(w);
      for (int a = 0; a < w; ++a) line[a] = vals[base + a * stride];
      std::vector<Rat> coef = solve_linear(V, line);
      for (int a = 0; a < w; ++a) vals[base + a * stride] = coef[a];
    }
  }

  InterpolatedPolynomial out;
  out.r = r;
  out.g = g;
  out.n = n;
  out.eps = eps;
  out.degree = D;
  for (long t = 0; t < total; ++t) {
    if (is_zero(vals[t])) continue;
    long rest = t;
    std::vector<int> e(n);
    for (int i = n - 1; i >= 0; --i) {
      e[i] = static_cast<int>(rest % w);
      rest /= w;
    }
    out.coeffs.emplace(std::move(e), vals[t]);
  }
  return out;
}

PolyReport verify_polynomiality(const InterpolatedPolynomial& poly,
                                const std::vector<std::vector<int>>& extra_points,
                                const ValueSupplier& supplier) {
  PolyReport rep;
  for (const auto& mu : extra_points) {
    Rat expected =
        strip_prefactor(poly.r, poly.g, mu, supplier(poly.g, mu)).P;
    Rat got = poly.eval(mu);
    ++rep.points_checked;
    if (expected != got) {
      rep.ok = false;
      rep.mismatches.push_back({mu, expected, got});
    }
  }
  return rep;
}

}  // namespace hurwitz::quasipoly
