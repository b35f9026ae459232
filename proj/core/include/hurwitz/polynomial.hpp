#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Dense univariate polynomial over Rat.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly monomial(int deg, const Rat& a) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = a;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  Poly scaled(const Rat& q) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= q;
    return Poly(std::move(c));
  }

  // Euclidean division; divisor's leading coefficient must be invertible.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    std::vector<Rat> q(a.c_.size() > b.c_.size() - 1 ? a.c_.size() - b.c_.size() + 1 : 0,
                       Rat(0));
    Rat linv = inv(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      Rat f = r.leading() * linv;
      q[shift] = f;
      std::vector<Rat> rc = r.c_;
      for (int i = 0; i <= b.degree(); ++i) rc[shift + i] -= f * b.c_[i];
      r = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), r};
  }

  // Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(inv(a.leading()));
    return a;
  }

  // Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
  static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = constant(1), u1;
    Poly v0, v1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r2] = divmod(r0, r1);
      Poly u2 = u0 - q * u1;
      Poly v2 = v0 - q * v1;
      r0 = std::move(r1); r1 = std::move(r2);
      u0 = std::move(u1); u1 = std::move(u2);
      v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
      Rat l = inv(r0.leading());
      r0 = r0.scaled(l);
      u0 = u0.scaled(l);
      v0 = v0.scaled(l);
    }
    return {r0, u0, v0};
  }

  // Multiply by the lcm of coefficient denominators and make the leading
  // coefficient positive ("primitive-ish" presentation for moduli).
  Poly to_integer_scaled() const {
    if (is_zero()) return {};
    Int l = 1;
    for (const auto& x : c_) l = lcm(l, denominator(x));
    Poly p = scaled(Rat(l));
    if (p.leading() < 0) p = p.scaled(Rat(-1));
    return p;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "s") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += rat_str(c_[i]);
      if (i > 0) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && hurwitz::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Exact dense linear solve A x = b over Rat (A square, invertible).
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a,
                                     std::vector<Rat> b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw std::domain_error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat d = inv(a[col][col]);
    for (size_t j = col; j < n; ++j) a[col][j] *= d;
    b[col] *= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a[i][col])) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace hurwitz
