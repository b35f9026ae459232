#include "hurwitz/qring.hpp"

namespace hurwitz {

bool rat_root(const Rat& c, int p, Rat* out) {
  if (c < 0) {
    if (p % 2 == 0) return false;
    Rat r;
    if (!rat_root(-c, p, &r)) return false;
    *out = -r;
    return true;
  }
  Int num = numerator(c), den = denominator(c);
  // GMP n-th root with exactness check.
  Int rn, rd;
  mpz_t tmp;
  mpz_init(tmp);
  int exact_n = mpz_root(tmp, num.backend().data(), p);
  rn = Int(tmp);
  int exact_d = mpz_root(tmp, den.backend().data(), p);
  rd = Int(tmp);
  mpz_clear(tmp);
  if (!exact_n || !exact_d) return false;
  *out = Rat(rn, rd);
  return true;
}

namespace {

// s^k - c as a rational-coefficient polynomial.
Poly binomial_poly(int k, const Rat& c) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[0] = -c;
  v[k] = 1;
  return Poly(std::move(v));
}

void factor_binomial(int k, const Rat& c, std::vector<Poly>* out) {
  for (int p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (!prime) continue;
    Rat root;
    if (!rat_root(c, p, &root)) continue;
    int m = k / p;
    if (p == 2) {
      if (root < 0) continue;  // complex split not representable over Q
      factor_binomial(m, root, out);          // s^m - root
      out->push_back(binomial_poly(m, -root));  // s^m + root
      return;
    }
    // odd p: (s^m - root) * sum_{i<p} root^i s^{m(p-1-i)}
    factor_binomial(m, root, out);
    std::vector<Rat> cofac(m * (p - 1) + 1, Rat(0));
    Rat pw = 1;
    for (int i = 0; i < p; ++i) {
      cofac[m * (p - 1 - i)] = pw;
      pw *= root;
    }
    out->push_back(Poly(std::move(cofac)));
    return;
  }
  out->push_back(binomial_poly(k, c));
}

}  // namespace

std::vector<Poly> factor_power_modulus(const Poly& m) {
  const int d = m.degree();
  bool binomial_shape = d >= 1 && !is_zero(m[d]) && !is_zero(m[0]);
  for (int i = 1; i < d && binomial_shape; ++i)
    if (!is_zero(m[i])) binomial_shape = false;
  if (!binomial_shape) return {m};
  std::vector<Poly> out;
  factor_binomial(d, -m[0] / m[d], &out);
  for (auto& f : out) f = f.to_integer_scaled();
  return out;
}

std::vector<QrElem> crt_components(const QrElem& x,
                                   const std::vector<QRingPtr>& comps) {
  std::vector<QrElem> out;
  out.reserve(comps.size());
  for (const auto& r : comps) out.emplace_back(r, x.residue());
  return out;
}

}  // namespace hurwitz
