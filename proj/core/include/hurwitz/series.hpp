#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Truncated multivariate Laurent series.
//
// Each variable carries an exponent window [lo, hi].  The cap `hi` is a
// truncation: terms above it are unknown and silently dropped.  The floor
// `lo` is a guarantee: a series never has terms below it, and an operation
// whose exact result would need a lower floor throws FloorViolation.

using Expo = std::vector<int>;

struct VarSpec {
  std::string name;
  int lo = 0;
  int hi = 0;
};

class Frame {
 public:
  explicit Frame(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_)
      if (v.lo > 0 || v.hi < v.lo)
        throw std::invalid_argument("bad exponent window for variable " + v.name);
  }

  size_t size() const { return vars_.size(); }
  const VarSpec& var(size_t i) const { return vars_[i]; }

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("no variable named " + name);
  }

  bool operator==(const Frame& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name != o.vars_[i].name || vars_[i].lo != o.vars_[i].lo ||
          vars_[i].hi != o.vars_[i].hi)
        return false;
    return true;
  }

  bool above_cap(const Expo& e) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > vars_[i].hi) return true;
    return false;
  }
  bool below_floor(const Expo& e) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] < vars_[i].lo) return true;
    return false;
  }

 private:
  std::vector<VarSpec> vars_;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(std::vector<VarSpec> vars) {
  return std::make_shared<const Frame>(std::move(vars));
}

struct FloorViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class C>
class Series {
 public:
  Series() = default;
  explicit Series(FramePtr f) : frame_(std::move(f)) {}

  static Series constant(FramePtr f, C c) {
    Series s(std::move(f));
    s.add_term(Expo(s.frame_->size(), 0), std::move(c));
    return s;
  }
  static Series monomial(FramePtr f, Expo e, C c) {
    Series s(std::move(f));
    if (s.frame_->below_floor(e))
      throw FloorViolation("monomial below frame floor");
    if (!s.frame_->above_cap(e)) s.add_term(std::move(e), std::move(c));
    return s;
  }
  static Series variable(FramePtr f, const std::string& name) {
    Expo e(f->size(), 0);
    e[f->index_of(name)] = 1;
    return monomial(std::move(f), std::move(e), from_rat<C>(Rat(1)));
  }

  const FramePtr& frame() const { return frame_; }
  const std::map<Expo, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(Expo e, const C& c) {
    if (is_zero_coeff(c)) return;
    if (frame_->above_cap(e)) return;
    if (frame_->below_floor(e)) throw FloorViolation("term below frame floor");
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Series operator-() const {
    Series out(frame_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Series& operator+=(const Series& o) {
    check_same_frame(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_same_frame(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_same_frame(b);
    Series out(a.frame_);
    std::map<Expo, C> low;  // below-floor terms must cancel exactly
    Expo e(a.frame_->size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (a.frame_->above_cap(e)) continue;
        C prod = ca * cb;
        if (a.frame_->below_floor(e)) {
          auto [it, fresh] = low.emplace(e, prod);
          if (!fresh) it->second += prod;
        } else {
          out.add_term(e, prod);
        }
      }
    }
    for (const auto& [el, cl] : low)
      if (!is_zero_coeff(cl))
        throw FloorViolation("product escapes frame floor at " +
                             expo_str(*a.frame_, el));
    return out;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series& scale(const C& c) {
    if (is_zero_coeff(c)) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    prune();
    return *this;
  }
  Series scaled(const C& c) const { Series s = *this; s.scale(c); return s; }
  Series& scale_rat(const Rat& q) { return scale(from_rat<C>(q)); }

  // Multiply by c*x^shift, truncating above caps; below-floor => error.
  Series mul_monomial(const Expo& shift, const C& c) const {
    Series out(frame_);
    Expo e(frame_->size());
    for (const auto& [ea, ca] : terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + shift[i];
      out.add_term(e, ca * c);
    }
    return out;
  }

  bool operator==(const Series& o) const {
    return *frame_ == *o.frame_ && terms_ == o.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(c) << ")";
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) os << "*" << frame_->var(i).name << "^" << e[i];
    }
    return os.str();
  }

  void check_same_frame(const Series& o) const {
    if (frame_.get() != o.frame_.get() && !(*frame_ == *o.frame_))
      throw std::invalid_argument("series frame mismatch");
  }

  static std::string expo_str(const Frame& f, const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!s.empty()) s += " ";
      s += f.var(i).name + "^" + std::to_string(e[i]);
    }
    return s;
  }

 private:
  static bool is_zero_coeff(const C& c) { return is_zero(c); }
  static std::string coeff_str(const Rat& c) { return rat_str(c); }
  template <class D>
  static std::string coeff_str(const D&) { return "<coeff>"; }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = is_zero_coeff(it->second) ? terms_.erase(it) : std::next(it);
  }

  FramePtr frame_;
  std::map<Expo, C> terms_;
};

namespace detail {

// Widen a frame so that a monomial shift by -M stays representable.
inline FramePtr widen_for_shift(const Frame& f, const Expo& m) {
  std::vector<VarSpec> vars;
  vars.reserve(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    VarSpec v = f.var(i);
    if (m[i] > 0) v.lo -= m[i];
    if (m[i] < 0) v.hi -= m[i];
    vars.push_back(v);
  }
  return make_frame(std::move(vars));
}

}  // namespace detail

template <class C>
Series<C> embed(const Series<C>& s, const FramePtr& target) {
  const Frame& src = *s.frame();
  std::vector<int> where(src.size());
  for (size_t i = 0; i < src.size(); ++i)
    where[i] = target->index_of(src.var(i).name);
  Series<C> out(target);
  Expo e(target->size(), 0);
  for (const auto& [es, c] : s.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (size_t i = 0; i < es.size(); ++i) e[where[i]] = es[i];
    out.add_term(e, c);
  }
  return out;
}

// Narrow to a subframe; terms above the new caps are dropped, terms below the
// new floors must not exist.
template <class C>
Series<C> narrow(const Series<C>& s, const FramePtr& target) {
  const Frame& src = *s.frame();
  std::vector<int> where(target->size());
  for (size_t i = 0; i < target->size(); ++i)
    where[i] = src.index_of(target->var(i).name);
  Series<C> out(target);
  Expo e(target->size(), 0);
  for (const auto& [es, c] : s.terms()) {
    for (size_t i = 0; i < target->size(); ++i) e[i] = es[where[i]];
    if (target->above_cap(e)) continue;
    if (target->below_floor(e))
      throw FloorViolation("narrow: nonzero term below target floor");
    out.add_term(e, c);
  }
  return out;
}

// Multiplicative inverse.  The divisor must factor as c*x^M*(1 + g) with M the
// componentwise-minimal exponent of its support, c invertible and g supported
// on strictly positive total degree.
template <class C>
Series<C> series_inverse(const Series<C>& b) {
  if (b.is_zero())
    throw std::domain_error("series inverse: zero series");
  const Frame& f = *b.frame();
  Expo m = b.terms().begin()->first;
  for (const auto& [e, c] : b.terms())
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  auto lead = b.terms().find(m);
  if (lead == b.terms().end())
    throw std::domain_error(
        "series inverse: non-invertible leading term (no minimal monomial)");
  C c0 = inv(lead->second);

  FramePtr wide = detail::widen_for_shift(f, m);
  Expo neg_m = m;
  for (auto& v : neg_m) v = -v;

  // unit = b * x^-m / lead, supported on exponents >= 0 with unit constant 1
  Series<C> unit = embed(b, wide).mul_monomial(neg_m, c0);
  Series<C> one = Series<C>::constant(wide, from_rat<C>(Rat(1)));
  Series<C> g = unit - one;
  for (const auto& [e, c] : g.terms())
    for (int x : e)
      if (x < 0)
        throw std::domain_error(
            "series inverse: non-invertible leading term (mixed support)");

  // geometric series sum_k (-g)^k, terminates under the caps
  Series<C> acc = one, pw = one;
  long guard = 4;
  for (size_t i = 0; i < f.size(); ++i)
    guard += f.var(i).hi - std::min(f.var(i).lo, 0) + (m[i] > 0 ? m[i] : -m[i]);
  for (long k = 0; k < guard && !g.is_zero(); ++k) {
    pw = pw * g;
    if (pw.is_zero()) break;
    if (k % 2 == 0) acc -= pw; else acc += pw;
  }
  if (!pw.is_zero() && !g.is_zero())
    throw std::domain_error("series inverse does not terminate under truncation");

  return acc.mul_monomial(neg_m, c0);  // still on the wide frame
}

template <class C>
Series<C> operator/(const Series<C>& a, const Series<C>& b) {
  a.check_same_frame(b);
  Series<C> binv = series_inverse(b);
  Series<C> q = embed(a, binv.frame()) * binv;
  return narrow(q, a.frame());
}

// exp(f); f must have no constant term and strictly positive total support.
template <class C>
Series<C> series_exp(const Series<C>& f) {
  Expo zero(f.frame()->size(), 0);
  if (!is_zero(f.coeff(zero)))
    throw std::domain_error("series exp: nonzero constant term");
  Series<C> one = Series<C>::constant(f.frame(), from_rat<C>(Rat(1)));
  Series<C> acc = one, pw = one;
  long guard = 4;
  for (size_t i = 0; i < f.frame()->size(); ++i)
    guard += f.frame()->var(i).hi - std::min(f.frame()->var(i).lo, 0);
  Rat kfact = 1;
  for (long k = 1; k <= guard; ++k) {
    pw = pw * f;
    if (pw.is_zero()) break;
    kfact *= k;
    acc += pw.scaled(from_rat<C>(Rat(1) / kfact));
  }
  if (!pw.is_zero())
    throw std::domain_error("series exp does not terminate under truncation");
  return acc;
}

// log(f); f must have constant term 1.
template <class C>
Series<C> series_log(const Series<C>& f) {
  Expo zero(f.frame()->size(), 0);
  C c0 = f.coeff(zero);
  if (!(c0 == from_rat<C>(Rat(1))))
    throw std::domain_error("series log: constant term is not 1");
  Series<C> g = f - Series<C>::constant(f.frame(), from_rat<C>(Rat(1)));
  Series<C> acc(f.frame()), pw = Series<C>::constant(f.frame(), from_rat<C>(Rat(1)));
  long guard = 4;
  for (size_t i = 0; i < f.frame()->size(); ++i)
    guard += f.frame()->var(i).hi - std::min(f.frame()->var(i).lo, 0);
  for (long k = 1; k <= guard; ++k) {
    pw = pw * g;
    if (pw.is_zero()) break;
    Rat coef = (k % 2 == 1) ? Rat(1, k) : Rat(-1, k);
    acc += pw.scaled(from_rat<C>(coef));
  }
  if (!pw.is_zero())
    throw std::domain_error("series log does not terminate under truncation");
  return acc;
}

// f^(alpha + beta*t) = exp((alpha + beta*t) * log f), t a frame variable.
template <class C>
Series<C> series_pow_linear_exponent(const Series<C>& f, const Rat& alpha,
                                     const Rat& beta, const std::string& t) {
  Series<C> lg = series_log(f);
  Series<C> expo = lg.scaled(from_rat<C>(alpha));
  if (!is_zero(beta))
    expo += Series<C>::variable(f.frame(), t) * lg.scaled(from_rat<C>(beta));
  return series_exp(expo);
}

template <class C>
Series<C> series_pow(const Series<C>& f, long e) {
  if (e < 0) return series_pow(series_inverse(f), -e);
  Series<C> acc = Series<C>::constant(f.frame(), from_rat<C>(Rat(1)));
  Series<C> base = f;
  long n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = (n >>= 1) ? base * base : base;
  }
  return acc;
}

// Coefficient of var^k, as a series over the frame without var.
template <class C>
Series<C> slice(const Series<C>& s, const std::string& var, int k) {
  const Frame& f = *s.frame();
  int vi = f.index_of(var);
  std::vector<VarSpec> rest;
  for (size_t i = 0; i < f.size(); ++i)
    if (static_cast<int>(i) != vi) rest.push_back(f.var(i));
  FramePtr sub = make_frame(std::move(rest));
  Series<C> out(sub);
  Expo e(sub->size());
  for (const auto& [es, c] : s.terms()) {
    if (es[vi] != k) continue;
    size_t j = 0;
    for (size_t i = 0; i < es.size(); ++i)
      if (static_cast<int>(i) != vi) e[j++] = es[i];
    out.add_term(e, c);
  }
  return out;
}

// Substitute a rational value for one variable.
template <class C>
Series<C> substitute(const Series<C>& s, const std::string& var, const Rat& value) {
  const Frame& f = *s.frame();
  int vi = f.index_of(var);
  std::vector<VarSpec> rest;
  for (size_t i = 0; i < f.size(); ++i)
    if (static_cast<int>(i) != vi) rest.push_back(f.var(i));
  FramePtr sub = make_frame(std::move(rest));
  Series<C> out(sub);
  Expo e(sub->size());
  for (const auto& [es, c] : s.terms()) {
    size_t j = 0;
    for (size_t i = 0; i < es.size(); ++i)
      if (static_cast<int>(i) != vi) e[j++] = es[i];
    out.add_term(e, c * from_rat<C>(rat_pow(value, es[vi])));
  }
  return out;
}

// Drop every term whose total degree exceeds `cap`.
template <class C>
Series<C> truncate_total_degree(const Series<C>& s, int cap) {
  Series<C> out(s.frame());
  for (const auto& [e, c] : s.terms()) {
    int tot = 0;
    for (int x : e) tot += x;
    if (tot <= cap) out.add_term(e, c);
  }
  return out;
}

}  // namespace hurwitz
