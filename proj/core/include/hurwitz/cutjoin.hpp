#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz::cutjoin {

// Memoized cut-and-join recursion for connected labeled-cycle Hurwitz
// numbers.  Internally works with hhat = h/b!, for which removing one simple
// branch point reads
//
//   b*hhat(g, mu) = sum_{i<j} (mu_i+mu_j) hhat(g, merge_ij)
//     + 1/2 sum_i sum_{a+b=mu_i} a*b * [ hhat(g-1, mu\i + {a,b})
//         + sum_{g1+g2=g, I|J = rest} hhat(g1, {a} u mu_I) hhat(g2, {b} u mu_J) ]
//
// with base case hhat(0, (r)) = 1/r and zero on inadmissible keys.
class CutJoin {
 public:
  explicit CutJoin(int r) : r_(r) {}

  int r() const { return r_; }
  // h (labeled-cycle count); throws on r not dividing the degree.
  Rat hurwitz(int g, const std::vector<int>& mu);
  // h / b!
  Rat over_bfact(int g, const std::vector<int>& mu);

  size_t memo_size() const { return memo_.size(); }

 private:
  Rat value(int g, const std::vector<int>& sorted_mu);

  int r_;
  std::map<std::pair<int, std::vector<int>>, Rat> memo_;
  std::mutex lock_;
};

Rat hurwitz_cutjoin(int r, int g, const std::vector<int>& mu);

// h/b! supplier used by the generating-function identity checker; must return
// 0 on inadmissible keys.
using HSupplier = std::function<Rat(int g, int n, const std::vector<int>& mu)>;

HSupplier cutjoin_supplier(int r);

struct CajReport {
  bool ok = true;
  long monomials_checked = 0;
  std::vector<int> first_bad_monomial;  // exponents, when !ok
  Rat first_bad_value;
};

// Verify the cut-and-join equation at the generating-function level for the
// n-point functions H_{g,n}(x) = sum h/b! x^mu, exactly up to total x-order.
// All four groups of terms are present: the Euler-degree part
// -(2g-2+n)H - (1/r) sum x_i d/dx_i H, the mixed x_i/(x_j - x_i) pair terms
// (combined into their polynomial divided-difference form), the two-variable
// diagonal term from H_{g-1,n+1}, and the splitting products.
CajReport caj_identity_check(int r, int g, int n, int x_order, const HSupplier& H);

}  // namespace hurwitz::cutjoin
