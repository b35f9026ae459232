#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hurwitz/lagrange.hpp"
#include "hurwitz/qring.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::specrec {

// ---------------------------------------------------------------------------
// coefficient fields
// ---------------------------------------------------------------------------

// Q(s) with s^2 = 1/2; the two branch points of the r = 2 curve are +-s.
struct QuadElem {
  Rat a, b;  // a + b*s

  QuadElem() = default;
  QuadElem(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    return {x.a - y.a, x.b - y.b};
  }
  QuadElem operator-() const { return {-a, -b}; }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + x.b * y.b / 2, x.a * y.b + x.b * y.a};
  }
  QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
  QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
  QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a == y.a && x.b == y.b;
  }
  QuadElem conj() const { return {a, -b}; }
};

inline bool is_zero(const QuadElem& x) { return is_zero(x.a) && is_zero(x.b); }
inline QuadElem inv(const QuadElem& x) {
  Rat norm = x.a * x.a - x.b * x.b / 2;  // (a+bs)(a-bs)
  if (is_zero(norm)) throw std::domain_error("division by zero in Q(s)");
  return {x.a / norm, -x.b / norm};
}
inline QuadElem from_rat_tag(const QuadElem*, const Rat& q) { return {q, Rat(0)}; }

// Complex numbers over MPFR big floats (precision from the ambient default).
struct CplxF {
  BigFloat re, im;

  CplxF() : re(0), im(0) {}
  CplxF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend CplxF operator+(const CplxF& x, const CplxF& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend CplxF operator-(const CplxF& x, const CplxF& y) {
    return {x.re - y.re, x.im - y.im};
  }
  CplxF operator-() const { return {-re, -im}; }
  friend CplxF operator*(const CplxF& x, const CplxF& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  CplxF& operator+=(const CplxF& y) { return *this = *this + y; }
  CplxF& operator-=(const CplxF& y) { return *this = *this - y; }
  CplxF& operator*=(const CplxF& y) { return *this = *this * y; }
  friend bool operator==(const CplxF& x, const CplxF& y) {
    return x.re == y.re && x.im == y.im;
  }
  BigFloat abs2() const { return re * re + im * im; }
};

inline bool is_zero(const CplxF& x) { return x.re == 0 && x.im == 0; }
inline CplxF inv(const CplxF& x) {
  BigFloat n = x.abs2();
  if (n == 0) throw std::domain_error("complex division by zero");
  return {x.re / n, -x.im / n};
}
inline CplxF from_rat_tag(const CplxF*, const Rat& q) {
  return {BigFloat(numerator(q)) / BigFloat(denominator(q)), BigFloat(0)};
}

// ---------------------------------------------------------------------------
// curve backends
// ---------------------------------------------------------------------------

enum class BackendKind { rational, quadratic, ring, bigfloat };

// Descriptor of the branch points z^r = 1/r for the requested backend.
struct BranchPointReport {
  BackendKind kind;
  int r = 1;
  Poly modulus;                   // ring backend modulus r s^r - 1
  bool modulus_reducible = false;
  std::vector<Poly> crt_factors;  // coprime split when reducible
};

BranchPointReport branch_points(int r, BackendKind kind);

template <class F>
struct Curve {
  int r = 1;
  std::vector<F> points;  // branch-point values in F
  bool all_points = true; // false: `points` holds one generic point (ring)
};

Curve<Rat> make_curve_rational(int r);
Curve<QuadElem> make_curve_quadratic(int r);
// modulus must divide r s^r - 1 (use a CRT factor when that is reducible)
Curve<QrElem> make_curve_ring(int r, const QRingPtr& ring);
Curve<CplxF> make_curve_bigfloat(int r);

// ---------------------------------------------------------------------------
// correlation differentials
// ---------------------------------------------------------------------------

// omega_{g,n} / prod dz_j as a finite sum of products of pole factors
// (z_j - p_{alpha_j})^{-k_j}; the (0,2) kernel is kept symbolic.
template <class F>
struct CorrDiff {
  int g = 0, n = 0;
  bool bergman = false;
  // slot assignment (alpha_j, k_j) per variable -> coefficient
  std::map<std::vector<std::pair<int, int>>, F> terms;

  int pole_order(int var, int alpha) const {
    int m = 0;
    for (const auto& [slots, c] : terms)
      if (slots[var].first == alpha) m = std::max(m, slots[var].second);
    return m;
  }
  bool symmetric_under_swap(int a, int b) const {
    for (const auto& [slots, c] : terms) {
      auto sw = slots;
      std::swap(sw[a], sw[b]);
      auto it = terms.find(sw);
      if (it == terms.end() || !(it->second == c)) return false;
    }
    return true;
  }
};

// deck transformation near branch point p: tau(p + w) = p + t(w),
// t = -w + a2 w^2 + ..., x(tau(z)) = x(z), tau an involution
template <class F>
struct DeckSeries {
  F p;
  Series<F> t;  // in the local variable w
};

struct LoopViolation {
  int g, n, alpha, order;
  std::string which;  // "linear" or "quadratic"
};

struct LoopReport {
  bool ok = true;
  long checks = 0;
  std::vector<LoopViolation> violations;
};

inline int pole_bound(int g, int n) { return 6 * g - 4 + 2 * n; }

// ---------------------------------------------------------------------------
// engine
// ---------------------------------------------------------------------------

template <class F>
class Engine {
 public:
  explicit Engine(Curve<F> curve) : curve_(std::move(curve)) {
    if (curve_.points.empty()) throw std::invalid_argument("curve without branch points");
  }

  const Curve<F>& curve() const { return curve_; }

  // memoized correlation differentials, 2g-2+n > 0
  const CorrDiff<F>& omega(int g, int n);

  // deck transformation at branch point index alpha, to w-order `order`
  DeckSeries<F> deck(int alpha, int order) const;

  // expansion at the origin: mu -> h_{g,mu}/b! summed over branch points
  // (values still in F; see reducers below)
  std::map<std::vector<int>, F> expand_at_origin(int g, int n, int order);

  LoopReport check_loop_equations(int g, int n, int order);

  // principal-part projection (sum over branch points) must reproduce omega
  bool principal_parts_reproduce(int g, int n);

 private:
  using WSeries = Series<F>;
  using SpecKey = std::map<int, std::pair<int, int>>;  // spectator slot -> pole
  using Bundle = std::map<SpecKey, WSeries>;

  enum class SlotMode { local_z, local_tau, spectator };

  struct LocalCtx {
    int alpha;
    FramePtr frame;
    WSeries w;        // the local variable
    WSeries z;        // p + w
    WSeries t;        // deck offset t(w)
    WSeries tau;      // p + t(w)
    WSeries dt;       // t'(w)
    WSeries pref;     // z / (2 (tau^r - z^r)(1 - r z^r)) * t'(w)
  };

  LocalCtx make_ctx(int alpha, int lo, int hi) const;
  WSeries pole_factor_local(const LocalCtx& ctx, bool tau_slot, int beta,
                            int k) const;
  void bundle_add(Bundle& dst, const SpecKey& key, const WSeries& s) const;
  Bundle expand_corr(const LocalCtx& ctx, const CorrDiff<F>& w,
                     const std::vector<SlotMode>& modes,
                     const std::vector<int>& spectator_ids) const;
  Bundle recursion_bracket(const LocalCtx& ctx, int g, int n,
                           bool include_01) ;
  CorrDiff<F> compute_omega(int g, int n);

  Curve<F> curve_;
  std::map<std::pair<int, int>, CorrDiff<F>> memo_;
};

// reducers: collapse the branch-point sum to an exact rational / float
Rat reduce_sum(const Rat& x);
Rat reduce_sum(const QuadElem& x);         // asserts the s-part vanishes
Rat reduce_sum_trace(const QrElem& x);     // ring trace over the generic point
BigFloat reduce_sum_real(const CplxF& x);  // real part

// Unstable n-point expansions at the origin, exact for every r:
// H01: mu -> h_{0,(mu)}/b! from x dH/dx = z(x)^r;
// H02: (mu1, mu2) -> h_{0,(mu1,mu2)}/b! from the kernel with its
// dx1 dx2/(x1-x2)^2 singular part removed.
std::map<std::vector<int>, Rat> expand_H01(int r, int order);
std::map<std::vector<int>, Rat> expand_H02(int r, int order);

}  // namespace hurwitz::specrec

#include "hurwitz/specrec_impl.hpp"
