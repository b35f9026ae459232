#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz::quasipoly {

// h -> P = h / (b! * prod mu_i^{floor(mu_i/r)} / floor(mu_i/r)!), together
// with the residue vector eps_i = mu_i mod r.
struct StrippedValue {
  std::vector<int> eps;
  std::vector<int> mu;
  Rat P;
};

StrippedValue strip_prefactor(int r, int g, const std::vector<int>& mu, const Rat& h);

// supplier of raw Hurwitz values h (labeled-cycle convention)
using ValueSupplier = std::function<Rat(int g, const std::vector<int>& mu)>;

struct InterpolatedPolynomial {
  int r = 1, g = 0, n = 1;
  std::vector<int> eps;
  int degree = 0;                    // per-variable bound
  std::map<std::vector<int>, Rat> coeffs;  // exponent vector -> coefficient

  Rat eval(const std::vector<int>& mu) const;
};

// Per-variable grid of the first `count` admissible mu values in residue
// class eps (starting at r when eps == 0, at eps otherwise).
std::vector<int> residue_grid(int r, int eps, int count, int offset = 0);

// Exact tensor interpolation of P on the residue-class grid, per-variable
// degree bound `degree` (defaults to 3g-3+n), grid_size >= degree+1 nodes.
InterpolatedPolynomial interpolate_P(int r, int g, int n,
                                     const std::vector<int>& eps, int grid_size,
                                     const ValueSupplier& supplier,
                                     int degree = -1);

struct PolyMismatch {
  std::vector<int> mu;
  Rat expected;  // from the supplier
  Rat got;       // polynomial evaluation
};

struct PolyReport {
  bool ok = true;
  long points_checked = 0;
  std::vector<PolyMismatch> mismatches;
};

// Evaluate the interpolant on extra grid points (same residue class, outside
// the construction grid) and compare with freshly stripped supplier values.
PolyReport verify_polynomiality(const InterpolatedPolynomial& poly,
                                const std::vector<std::vector<int>>& extra_points,
                                const ValueSupplier& supplier);

}  // namespace hurwitz::quasipoly
