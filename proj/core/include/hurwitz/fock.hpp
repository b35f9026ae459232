#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::fock {

using USeries = Series<Rat>;

// Finite sparse vector in the charge-zero sector, coefficients truncated
// series (in u and optional formal z-symbols).
struct FockVector {
  FramePtr frame;
  std::map<Partition, USeries> entries;

  static FockVector vacuum(FramePtr f);
  void add(const Partition& p, const USeries& s);
  bool is_zero() const { return entries.empty(); }
  int max_energy() const;
  int min_energy() const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector scaled(const USeries& s) const;
  FockVector scaled_rat(const Rat& q) const;
};

// F1 and F0 act diagonally; only used in assertions.
inline int f1_energy(const Partition& p) { return p.size(); }
inline int f0_charge(const Partition&) { return 0; }

// alpha_n: remove (n>0) or add (n<0) a border strip of |n| cells, with parity
// signs; linear extension over entries.
FockVector apply_alpha(const FockVector& v, int n);

// E operator with series argument L (the paper's zeta-regularized family):
// the sum over single-beta shifts weighted by exp(L*(beta - a/2)), plus for
// a == 0 the singular term (1/zeta(L)) * v.  energy_cap bounds the energy of
// produced components (needed for formal arguments; use a large cap
// otherwise).
FockVector apply_E(const FockVector& v, int a, const USeries& L, int energy_cap);

// multiply each entry by exp(f2(lambda) * u)
FockVector apply_F2_exponential(const FockVector& v, const std::string& u = "u");

// <0| e^{alpha_r / r} applied to v: exactly energy/r strip removals per entry,
// with weight 1/((m)! r^m).
USeries pair_with_exp_alpha_r(const FockVector& v, int r);

// ---- Hurwitz generating series -------------------------------------------

// H^dis(mu; u) = <e^{alpha_r/r} e^{u F2} prod alpha_{-mu_i}/mu_i>, exact
// truncated u-series; the u^b/b! coefficient is the disconnected labeled-cycle
// Hurwitz number when b is admissible.
USeries vev_disconnected_H(int r, const std::vector<int>& mu, int u_order);

// Same series through the A-operator product route (the two must agree).
USeries vev_disconnected_H_via_A(int r, const std::vector<int>& mu, int u_order);

// <prod_i A_{eta_i}(mu_i, u)>, numeric z = mu_i, Laurent u-series with floor
// -len(mu).
USeries vev_A_product(int r, const std::vector<int>& etas,
                      const std::vector<int>& mus, int u_order);

// All set partitions of {0..n-1}.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

// Cumulant (inclusion-exclusion over set partitions): connected correlator of
// the full index set given disconnected values for every nonempty subset.
// Subsets are encoded as bitmasks over the n indices.
USeries connected_from_disconnected(
    int n, const std::function<USeries(unsigned mask)>& disconnected);

// ---- formal-argument A operators ------------------------------------------

struct AFormalOptions {
  int energy_cap = 64;
  bool positive_part_only = false;  // project to z-exponent >= 1 afterwards
};

// Apply A_eta(z, u) (without the r^{-eta/r} prefactor) for a formal variable
// zvar living in v's frame.
FockVector apply_A_formal(const FockVector& v, int r, int eta,
                          const std::string& zvar, const AFormalOptions& opt);

// <prod_i A_{eta_i}(z_i)> with formal z's; includes the r^{-sum eta/r}
// prefactor, which is an integer power of r whenever the result is nonzero.
USeries vev_A_formal(int r, const std::vector<int>& etas,
                     const std::vector<std::string>& zvars, FramePtr frame,
                     const std::vector<bool>& positive_part, int energy_cap);

// Closed forms of the unstable correlators, as z-series on the given frame.
USeries one_point_closed(int r, int eta, FramePtr zframe, const std::string& zvar);
USeries two_point_closed(int r, int eta1, int eta2, FramePtr zframe,
                         const std::string& z1, const std::string& z2);

// The eta = 0 single-operator expectation assembled directly from its series
// formula ssh(r u z)^{z/r} / zeta(u z).
USeries one_point_formula(int r, FramePtr frame, const std::string& u,
                          const std::string& z);

// The zero-mode part of the two-operator expectation,
// ssh(r u z1)^{z1/r} ssh(r u z2)^{z2/r} / (zeta(u z1) zeta(u z2)).
USeries zero_mode_two_point(int r, FramePtr frame, const std::string& u,
                            const std::string& z1, const std::string& z2);

// ---- commutators -----------------------------------------------------------

struct CommutatorReport {
  bool ok = true;                      // identity holds on the verified window
  std::map<std::pair<int, int>, Rat> coeffs;  // extracted [z^k w^l] scalars
  std::string detail;                  // first violation, if any
};

// Verify [A_{eta1}^{(k)}, A_{eta2}^{(l)}] over |k|,|l| <= kl_bound on every
// basis state of energy <= energy_max, and report the extracted coefficients.
CommutatorReport commutator_suite(int r, int eta1, int eta2, int kl_bound,
                                  int energy_max);

// Extracted commutator coefficient at a single (k, l).
Rat commutator_check(int r, int eta1, int eta2, int k, int l, int kl_bound,
                     int energy_max);

// <prod A_{eta_i,+}(z_i)>: all operators projected to strictly positive
// z-powers.
USeries stable_vev(int r, const std::vector<int>& etas,
                   const std::vector<std::string>& zvars, FramePtr frame,
                   int energy_cap);

// ---- memoized connected Hurwitz values -------------------------------------

// Connected labeled-cycle Hurwitz numbers through the wedge route, memoized;
// thread-safe (idempotent inserts).
class FockHurwitz {
 public:
  FockHurwitz(int r, int u_max) : r_(r), u_max_(u_max) {}

  // h^conn_{g, mu} (value, not divided by b!)
  Rat connected(int g, const std::vector<int>& mu);
  // h^conn / b!, the generating-function coefficient
  Rat connected_over_bfact(int g, const std::vector<int>& mu);
  int r() const { return r_; }

 private:
  USeries disconnected_series(const std::vector<int>& sorted_mu);
  USeries connected_series(const std::vector<int>& mu);

  int r_;
  int u_max_;
  std::map<std::vector<int>, USeries> disc_memo_;
  std::map<std::vector<int>, USeries> conn_memo_;
  std::mutex mu_;
};

}  // namespace hurwitz::fock
