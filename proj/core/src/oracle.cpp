#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hurwitz::oracle {

int HurwitzKey::degree() const {
  return std::accumulate(mu.begin(), mu.end(), 0);
}

long HurwitzKey::branch_count() const {
  int d = degree();
  if (r <= 0 || d % r != 0)
    throw std::invalid_argument("degree not divisible by r");
  return 2L * g - 2 + static_cast<long>(mu.size()) + d / r;
}

bool HurwitzKey::admissible() const {
  int d = degree();
  if (r <= 0 || d <= 0 || d % r != 0) return false;
  for (int m : mu)
    if (m <= 0) return false;
  return branch_count() >= 0;
}

namespace {

using Perm = std::vector<int>;  // images, 0-based

Perm identity(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int cycle_count(const Perm& p) {
  int d = static_cast<int>(p.size());
  std::vector<char> seen(d, 0);
  int c = 0;
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return c;
}

struct DisjointSet {
  std::vector<int> up;
  explicit DisjointSet(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

// All permutations with d/r cycles of length r, built lowest-element-first.
void enumerate_uniform_cycle_type(int d, int r, std::vector<int>& taken,
                                  Perm& cur, std::vector<Perm>& out) {
  int start = -1;
  for (int i = 0; i < d; ++i)
    if (!taken[i]) { start = i; break; }
  if (start < 0) {
    out.push_back(cur);
    return;
  }
  taken[start] = 1;
  std::vector<int> cyc{start};
  // choose the remaining r-1 elements of the cycle through `start`, in order
  std::function<void()> extend = [&]() {
    if (static_cast<int>(cyc.size()) == r) {
      for (int i = 0; i + 1 < r; ++i) cur[cyc[i]] = cyc[i + 1];
      cur[cyc[r - 1]] = cyc[0];
      enumerate_uniform_cycle_type(d, r, taken, cur, out);
      return;
    }
    for (int nxt = start + 1; nxt < d; ++nxt) {
      if (taken[nxt]) continue;
      taken[nxt] = 1;
      cyc.push_back(nxt);
      extend();
      cyc.pop_back();
      taken[nxt] = 0;
    }
  };
  extend();
  taken[start] = 0;
}

struct SearchCtx {
  int d;
  long b;
  bool connected;
  Perm sigma_inf_inv;
  std::vector<std::pair<int, int>> transpositions;
  const Perm* sigma0 = nullptr;
};

// Number of transpositions needed to turn p into the identity.
int transposition_distance(const Perm& p) {
  return static_cast<int>(p.size()) - cycle_count(p);
}

bool transitive(const SearchCtx& ctx, const std::vector<int>& tau_choice) {
  DisjointSet ds(ctx.d);
  const Perm& s0 = *ctx.sigma0;
  for (int i = 0; i < ctx.d; ++i) ds.join(i, s0[i]);
  for (int i = 0; i < ctx.d; ++i) ds.join(i, ctx.sigma_inf_inv[i]);
  for (int t : tau_choice)
    ds.join(ctx.transpositions[t].first, ctx.transpositions[t].second);
  int root = ds.find(0);
  for (int i = 1; i < ctx.d; ++i)
    if (ds.find(i) != root) return false;
  return true;
}

// DFS over tau_(level+1..b).  `rho` is the product that the remaining
// transpositions must realize: tau_{level+1} ... tau_b = rho.
void dfs(SearchCtx& ctx, long level, Perm& rho, std::vector<int>& picked,
         unsigned long long& count) {
  long rest = ctx.b - level;
  int dist = transposition_distance(rho);
  if (dist > rest || (rest - dist) % 2 != 0) return;
  if (ctx.connected) {
    // each remaining transposition can merge at most two orbits
    DisjointSet ds(ctx.d);
    const Perm& s0 = *ctx.sigma0;
    for (int i = 0; i < ctx.d; ++i) ds.join(i, s0[i]);
    for (int i = 0; i < ctx.d; ++i) ds.join(i, ctx.sigma_inf_inv[i]);
    for (int t : picked)
      ds.join(ctx.transpositions[t].first, ctx.transpositions[t].second);
    int orbits = 0;
    for (int i = 0; i < ctx.d; ++i)
      if (ds.find(i) == i) ++orbits;
    if (orbits - 1 > rest) return;
  }
  if (rest == 0) {
    ++count;  // rho == id by dist == 0, transitivity by orbit prune
    return;
  }
  for (size_t t = 0; t < ctx.transpositions.size(); ++t) {
    auto [a, c] = ctx.transpositions[t];
    // tau_{level+1} = (a c); remaining product becomes (a c) * rho
    std::swap(rho[a], rho[c]);
    picked.push_back(static_cast<int>(t));
    dfs(ctx, level + 1, rho, picked, count);
    picked.pop_back();
    std::swap(rho[a], rho[c]);
  }
}

Perm compose(const Perm& f, const Perm& g) {  // (f*g)(x) = f(g(x))
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

}  // namespace

Rat hurwitz_oracle(const HurwitzKey& key, bool connected, int threads,
                   const Limits& limits) {
  const int d = key.degree();
  if (d <= 0 || key.r <= 0) throw std::invalid_argument("bad Hurwitz key");
  if (d % key.r != 0) throw std::invalid_argument("degree not divisible by r");
  const long b = key.branch_count();
  if (b < 0) return 0;
  if (d > limits.d_max || b > limits.b_max)
    throw std::domain_error("oracle limits exceeded (d <= " +
                            std::to_string(limits.d_max) + ", b <= " +
                            std::to_string(limits.b_max) + ")");

  // canonical sigma_inf: cycles (0..mu_1-1)(mu_1..mu_1+mu_2-1)...
  Perm sigma_inf = identity(d);
  int base = 0;
  for (int m : key.mu) {
    for (int i = 0; i < m - 1; ++i) sigma_inf[base + i] = base + i + 1;
    sigma_inf[base + m - 1] = base;
    base += m;
  }

  SearchCtx ctx;
  ctx.d = d;
  ctx.b = b;
  ctx.connected = connected;
  ctx.sigma_inf_inv = inverse(sigma_inf);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) ctx.transpositions.emplace_back(i, j);

  std::vector<Perm> sigma0s;
  {
    std::vector<int> taken(d, 0);
    Perm cur = identity(d);
    enumerate_uniform_cycle_type(d, key.r, taken, cur, sigma0s);
  }

  unsigned long long total = 0;
  for (const Perm& s0 : sigma0s) {
    ctx.sigma0 = &s0;
    // need tau_1..tau_b = sigma0^-1 * sigma_inf^-1
    Perm rho0 = compose(inverse(s0), ctx.sigma_inf_inv);
    if (b == 0 || threads <= 1) {
      std::vector<int> picked;
      dfs(ctx, 0, rho0, picked, total);
    } else {
      // split the first transposition across workers
      std::atomic<size_t> next{0};
      std::vector<unsigned long long> sub(threads, 0);
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
          SearchCtx local = ctx;  // read-only copy apart from scratch
          for (size_t t = next.fetch_add(1); t < local.transpositions.size();
               t = next.fetch_add(1)) {
            Perm rho = rho0;
            auto [a, c] = local.transpositions[t];
            std::swap(rho[a], rho[c]);
            std::vector<int> picked{static_cast<int>(t)};
            dfs(local, 1, rho, picked, sub[w]);
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto s : sub) total += s;
    }
  }

  Rat denom = 1;
  for (int m : key.mu) denom *= m;
  return Rat(Int(total)) / denom;
}

namespace {
void multisets_of_degree(int d, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(d, max_part); p >= 1; --p) {
    cur.push_back(p);
    multisets_of_degree(d - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<HurwitzResult> hurwitz_table(int r, int g_max, int d_max, long b_max,
                                         bool connected, int threads) {
  if (r <= 0 || d_max <= 0) throw std::invalid_argument("hurwitz_table: bad limits");
  std::vector<HurwitzResult> out;
  Limits lim{d_max, b_max};
  for (int d = r; d <= d_max; d += r) {
    std::vector<std::vector<int>> mus;
    std::vector<int> cur;
    multisets_of_degree(d, d, cur, mus);
    for (int g = 0; g <= g_max; ++g) {
      for (const auto& mu : mus) {
        HurwitzKey key{r, g, mu};
        if (!key.admissible() || key.branch_count() > b_max) continue;
        out.push_back({r, g, mu, connected ? "oracle" : "oracle-disconnected",
                       hurwitz_oracle(key, connected, threads, lim)});
      }
    }
  }
  return out;
}

}  // namespace hurwitz::oracle
