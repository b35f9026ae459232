#include "hurwitz/cutjoin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz::cutjoin {

namespace {

long branch_count(int r, int g, const std::vector<int>& mu) {
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  return 2L * g - 2 + static_cast<long>(mu.size()) + d / r;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

Rat CutJoin::hurwitz(int g, const std::vector<int>& mu) {
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d <= 0 || d % r_ != 0)
    throw std::invalid_argument("cut-and-join: degree not divisible by r");
  for (int m : mu)
    if (m <= 0) throw std::invalid_argument("cut-and-join: parts must be positive");
  long b = branch_count(r_, g, mu);
  if (b < 0) return 0;
  return value(g, sorted_desc(mu)) * Rat(factorial(b));
}

Rat CutJoin::over_bfact(int g, const std::vector<int>& mu) {
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d <= 0 || d % r_ != 0)
    throw std::invalid_argument("cut-and-join: degree not divisible by r");
  return value(g, sorted_desc(mu));
}

Rat CutJoin::value(int g, const std::vector<int>& mu) {
  if (g < 0) return 0;
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d <= 0 || d % r_ != 0) return 0;
  long b = branch_count(r_, g, mu);
  if (b < 0) return 0;
  if (b == 0) return (g == 0 && mu.size() == 1 && mu[0] == r_) ? Rat(1, r_) : Rat(0);

  auto key = std::make_pair(g, mu);
  {
    std::lock_guard<std::mutex> lk(lock_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  const int n = static_cast<int>(mu.size());
  Rat acc = 0;

  // joins
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> merged;
      merged.reserve(n - 1);
      for (int t = 0; t < n; ++t)
        if (t != i && t != j) merged.push_back(mu[t]);
      merged.push_back(mu[i] + mu[j]);
      acc += Rat(mu[i] + mu[j]) * value(g, sorted_desc(merged));
    }
  }

  // cuts and splittings
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int t = 0; t < n; ++t)
      if (t != i) rest.push_back(mu[t]);
    for (int a = 1; a < mu[i]; ++a) {
      int bb = mu[i] - a;
      Rat w = Rat(a) * Rat(bb) / 2;
      // genus-lowering cut
      if (g >= 1) {
        std::vector<int> cutmu = rest;
        cutmu.push_back(a);
        cutmu.push_back(bb);
        acc += w * value(g - 1, sorted_desc(cutmu));
      }
      // splittings into two stable-or-unstable halves
      const int m = n - 1;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> left{a}, right{bb};
        for (int t = 0; t < m; ++t)
          (mask & (1u << t) ? left : right).push_back(rest[t]);
        for (int g1 = 0; g1 <= g; ++g1) {
          Rat l = value(g1, sorted_desc(left));
          if (is_zero(l)) continue;
          acc += w * l * value(g - g1, sorted_desc(right));
        }
      }
    }
  }

  acc /= b;
  std::lock_guard<std::mutex> lk(lock_);
  return memo_.emplace(key, acc).first->second;
}

Rat hurwitz_cutjoin(int r, int g, const std::vector<int>& mu) {
  CutJoin cj(r);
  return cj.hurwitz(g, mu);
}

HSupplier cutjoin_supplier(int r) {
  auto cj = std::make_shared<CutJoin>(r);
  return [cj, r](int g, int n, const std::vector<int>& mu) -> Rat {
    if (static_cast<int>(mu.size()) != n)
      throw std::invalid_argument("supplier: mu length mismatch");
    int d = std::accumulate(mu.begin(), mu.end(), 0);
    if (d <= 0 || d % r != 0) return 0;
    return cj->over_bfact(g, mu);
  };
}

namespace {

using XSeries = Series<Rat>;

// sum over mu of weight(mu) * hhat(g', mu) * prod_k x_{slot_k}^{mu_k}, with
// every part >= 1 and total degree <= order.
XSeries assemble(const FramePtr& f, int r, int gp, const std::vector<int>& slots,
                 int order, const HSupplier& H,
                 const std::function<Rat(const std::vector<int>&)>& weight) {
  XSeries out(f);
  const int np = static_cast<int>(slots.size());
  std::vector<int> mu(np, 1);
  // enumerate all mu in [1..order]^np with sum <= order
  while (true) {
    int tot = std::accumulate(mu.begin(), mu.end(), 0);
    if (tot <= order && tot % r == 0) {
      Rat h = H(gp, np, mu);
      if (!is_zero(h)) {
        Rat w = weight(mu);
        if (!is_zero(w)) {
          Expo e(f->size(), 0);
          for (int k = 0; k < np; ++k) e[slots[k]] += mu[k];
          out.add_term(e, h * w);
        }
      }
    }
    int k = np - 1;
    while (k >= 0 && mu[k] == order) mu[k--] = 1;
    if (k < 0) break;
    ++mu[k];
  }
  return out;
}

}  // namespace

CajReport caj_identity_check(int r, int g, int n, int x_order, const HSupplier& H) {
  if (n < 1 || g < 0 || x_order < 1)
    throw std::invalid_argument("caj_identity_check: bad parameters");
  std::vector<VarSpec> vars;
  for (int i = 0; i < n; ++i)
    vars.push_back({"x" + std::to_string(i + 1), 0, x_order});
  FramePtr f = make_frame(std::move(vars));

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  // -(2g-2+n) H - (1/r) sum_i x_i d/dx_i H  ==  -b(mu) hhat per monomial
  XSeries total = assemble(f, r, g, all, x_order, H, [&](const std::vector<int>& mu) {
    Rat w = -Rat(2 * g - 2 + n);
    for (int m : mu) w -= Rat(m, r);
    return w;
  });

  // pair terms: for each unordered pair {i,j}, the divided-difference bracket
  // [x_i D(x_j) - x_j D(x_i)] / (x_j - x_i) with D = (t d/dt)H_{g,n-1}(t, rest),
  // whose x^a x^b coefficient is nu * hhat at nu = a + b.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> slots{i};  // slot 0 is the merged variable
      for (int t = 0; t < n; ++t)
        if (t != i && t != j) slots.push_back(t);
      XSeries base = assemble(f, r, g, slots, x_order, H,
                              [&](const std::vector<int>& mu) { return Rat(mu[0]); });
      for (const auto& [e, c] : base.terms()) {
        int nu = e[i];
        Expo out = e;
        for (int a = 1; a < nu; ++a) {
          out[i] = a;
          out[j] = nu - a;
          total.add_term(out, c);
        }
      }
    }
  }

  // diagonal second-derivative term from H_{g-1,n+1}
  if (g >= 1) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> slots{i, i};
      for (int t = 0; t < n; ++t)
        if (t != i) slots.push_back(t);
      total += assemble(f, r, g - 1, slots, x_order, H,
                        [](const std::vector<int>& mu) {
                          return Rat(mu[0]) * Rat(mu[1]) / 2;
                        });
    }
  }

  // splitting products
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    for (int t = 0; t < n; ++t)
      if (t != i) rest.push_back(t);
    const int m = static_cast<int>(rest.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> ls{i}, rs{i};
      for (int t = 0; t < m; ++t)
        (mask & (1u << t) ? ls : rs).push_back(rest[t]);
      for (int g1 = 0; g1 <= g; ++g1) {
        XSeries a = assemble(f, r, g1, ls, x_order, H,
                             [](const std::vector<int>& mu) { return Rat(mu[0], 2); });
        if (a.is_zero()) continue;
        XSeries b = assemble(f, r, g - g1, rs, x_order, H,
                             [](const std::vector<int>& mu) { return Rat(mu[0]); });
        total += truncate_total_degree(a * b, x_order);
      }
    }
  }

  CajReport rep;
  rep.monomials_checked = numerator(Rat(binomial(x_order + n, n))).convert_to<long>();
  XSeries bad = truncate_total_degree(total, x_order);
  for (const auto& [e, c] : bad.terms()) {
    if (!is_zero(c)) {
      rep.ok = false;
      rep.first_bad_monomial = e;
      rep.first_bad_value = c;
      break;
    }
  }
  return rep;
}

}  // namespace hurwitz::cutjoin
