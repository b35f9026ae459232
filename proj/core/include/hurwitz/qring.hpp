#pragma once

#include <memory>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// Q[s]/(modulus).  The modulus need not be irreducible (etale algebra);
// inversion of a zero divisor throws ZeroDivisorError carrying the discovered
// factor, and the caller splits the modulus into coprime factors and
// recombines results by CRT (traces add across factors).
class QuotientRing {
 public:
  explicit QuotientRing(Poly m) : modulus_(std::move(m)) {
    if (modulus_.degree() < 1)
      throw std::invalid_argument("quotient ring needs a nonconstant modulus");
    compute_power_sums();
  }

  const Poly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  // Sum of k-th powers of all roots of the modulus, k < degree.
  const Rat& power_sum(int k) const { return psums_[k]; }

 private:
  void compute_power_sums() {
    const int d = modulus_.degree();
    const auto& a = modulus_.coeffs();  // a[0..d]
    psums_.assign(d, Rat(0));
    psums_[0] = d;
    Rat lead_inv = inv(a[d]);
    for (int k = 1; k < d; ++k) {
      Rat acc = Rat(-k) * a[d - k];
      for (int i = 1; i < k; ++i) acc -= a[d - i] * psums_[k - i];
      psums_[k] = acc * lead_inv;
    }
  }

  Poly modulus_;
  std::vector<Rat> psums_;
};
using QRingPtr = std::shared_ptr<const QuotientRing>;

inline QRingPtr make_qring(Poly m) {
  return std::make_shared<const QuotientRing>(std::move(m));
}

struct ZeroDivisorError : std::domain_error {
  Poly factor;
  explicit ZeroDivisorError(Poly f)
      : std::domain_error(
            "zero divisor in quotient ring; split the modulus by the factor " +
            f.str() + " into coprime parts and recombine results by CRT"),
        factor(std::move(f)) {}
};

// Element of Q[s]/(m).  A default-constructed element is the rational zero
// with no ring attached; rationals promote into whichever ring they meet.
class QrElem {
 public:
  QrElem() = default;
  QrElem(QRingPtr ring, Poly residue) : ring_(std::move(ring)) {
    res_ = ring_ ? Poly::divmod(residue, ring_->modulus()).second
                 : std::move(residue);
  }
  static QrElem generator(const QRingPtr& r) {
    return QrElem(r, Poly::monomial(1, 1));
  }
  static QrElem from_rational(const QRingPtr& r, const Rat& q) {
    return QrElem(r, Poly::constant(q));
  }

  const QRingPtr& ring() const { return ring_; }
  const Poly& residue() const { return res_; }
  bool is_rational() const { return res_.degree() <= 0; }
  Rat rational_part() const { return res_.is_zero() ? Rat(0) : res_[0]; }

  friend QrElem operator+(const QrElem& x, const QrElem& y) {
    const QRingPtr& r = join(x, y);
    return QrElem(r, x.res_ + y.res_);
  }
  friend QrElem operator-(const QrElem& x, const QrElem& y) {
    const QRingPtr& r = join(x, y);
    return QrElem(r, x.res_ - y.res_);
  }
  friend QrElem operator*(const QrElem& x, const QrElem& y) {
    const QRingPtr& r = join(x, y);
    return QrElem(r, x.res_ * y.res_);
  }
  QrElem operator-() const { return QrElem(ring_, res_.scaled(-1)); }
  QrElem& operator+=(const QrElem& y) { return *this = *this + y; }
  QrElem& operator-=(const QrElem& y) { return *this = *this - y; }
  QrElem& operator*=(const QrElem& y) { return *this = *this * y; }

  friend bool operator==(const QrElem& x, const QrElem& y) {
    return (x - y).res_.is_zero();
  }

 private:
  static const QRingPtr& join(const QrElem& x, const QrElem& y) {
    if (x.ring_ && y.ring_) {
      if (x.ring_ != y.ring_ && !(x.ring_->modulus() == y.ring_->modulus()))
        throw std::invalid_argument("quotient ring mismatch");
      return x.ring_;
    }
    return x.ring_ ? x.ring_ : y.ring_;
  }

  QRingPtr ring_;
  Poly res_;
};

inline bool is_zero(const QrElem& x) { return x.residue().is_zero(); }

inline QrElem inv(const QrElem& x) {
  if (!x.ring()) {
    if (x.residue().is_zero()) throw std::domain_error("division by zero");
    return QrElem(nullptr, Poly::constant(inv(x.residue()[0])));
  }
  auto [g, u, v] = Poly::ext_gcd(x.residue(), x.ring()->modulus());
  if (g.is_zero()) throw ZeroDivisorError(x.ring()->modulus());
  if (g.degree() > 0) throw ZeroDivisorError(g.to_integer_scaled());
  return QrElem(x.ring(), u);  // g is the constant 1 after normalization
}

inline QrElem from_rat_tag(const QrElem*, const Rat& q) {
  return QrElem(nullptr, Poly::constant(q));
}

// Sum of residue evaluations over all roots of the modulus, via Newton power
// sums; Q-linear, trace(1) = degree.
inline Rat ring_trace(const QrElem& x) {
  if (!x.ring())
    throw std::invalid_argument("ring_trace needs a ring-bound element");
  Rat acc = 0;
  const Poly& r = x.residue();
  for (int k = 0; k <= r.degree(); ++k)
    acc += r[k] * x.ring()->power_sum(k);
  return acc;
}

// Exact rational p-th root, if one exists.
bool rat_root(const Rat& c, int p, Rat* out);

// Factor a modulus of the shape a*s^k - b into pairwise coprime factors by
// repeatedly recognizing perfect-power splits of b/a; returns {m} when no
// split is found.  Factors are presented with integer coefficients.
std::vector<Poly> factor_power_modulus(const Poly& m);

// CRT projections of an element to the component rings of a factored modulus.
std::vector<QrElem> crt_components(const QrElem& x, const std::vector<QRingPtr>& comps);

}  // namespace hurwitz
