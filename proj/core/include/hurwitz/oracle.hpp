#pragma once

#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz::oracle {

// A counting instance: covers of the sphere of degree sum(mu) with profile
// (r,...,r) over zero, profile mu over infinity (cycles labeled), and
// b = 2g - 2 + len(mu) + sum(mu)/r simple branch points.
struct HurwitzKey {
  int r = 1;
  int g = 0;
  std::vector<int> mu;

  int degree() const;
  // Throws if r does not divide the degree.  Returns b, which may be
  // negative or half-integral only for inadmissible keys (checked).
  long branch_count() const;
  bool admissible() const;
};

struct Limits {
  int d_max = 7;
  long b_max = 8;
};

struct HurwitzResult {
  int r, g;
  std::vector<int> mu;
  std::string method;
  Rat value;
};

// Weighted count by direct enumeration of transposition factorizations.
// Labeled-cycle convention: equals N / prod(mu_i) where N counts tuples
// (sigma_0, tau_1..tau_b) with sigma_0 of cycle type (r..r),
// sigma_0 tau_1...tau_b sigma_inf = id for the canonical sigma_inf of type mu,
// and (if connected) the generated group transitive.
Rat hurwitz_oracle(const HurwitzKey& key, bool connected = true,
                   int threads = 1, const Limits& limits = {});

// All admissible keys within the limits, deterministic order.
std::vector<HurwitzResult> hurwitz_table(int r, int g_max, int d_max, long b_max,
                                         bool connected = true, int threads = 1);

}  // namespace hurwitz::oracle
