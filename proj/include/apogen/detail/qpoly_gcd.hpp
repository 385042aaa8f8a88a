#pragma once

#include <gmpxx.h>

#include <vector>

#include "apogen/detail/modp.hpp"
#include "apogen/poly.hpp"
#include "apogen/rational.hpp"

namespace apogen::detail {

// gcd over Q[x] tuned for this library's workloads, where denominators are
// powers of a few structured polynomials and most gcd queries are coprime.
//
//   1. certified coprimality fast path: if both leading coefficients survive
//      reduction mod p, deg gcd(a mod p, b mod p) >= deg gcd(a, b); a degree-0
//      modular gcd therefore proves gcd == 1.
//   2. otherwise the subresultant PRS over Z[x] computes the exact gcd
//      without the coefficient blow-up of naive rational Euclid.

using ZPoly = std::vector<mpz_class>;  // ascending, no trailing zeros

inline void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zp_mul_scalar(const ZPoly& a, const mpz_class& s) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline void zp_divexact_scalar(ZPoly& a, const mpz_class& s) {
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
}

inline mpz_class zp_content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void zp_make_primitive(ZPoly& a) {
  zp_trim(a);
  if (a.empty()) return;
  mpz_class c = zp_content(a);
  if (a.back() < 0) c = -c;  // normalize sign so the leading coefficient > 0
  if (c != 1) zp_divexact_scalar(a, c);
}

// Clears denominators of a rational polynomial and strips integer content.
inline ZPoly zp_from_qpoly(const Poly<Rational>& p) {
  ZPoly r(p.coeffs().size());
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                           c.den().get_mpz_t());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    r[i] = c.num() * (l / c.den());
  }
  zp_make_primitive(r);
  return r;
}

// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a  mod  b, exact in Z.
inline ZPoly zp_prem(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const mpz_class& lb = b.back();
  int steps_left = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    zp_trim(a);
    --steps_left;
  }
  // top-up so the multiplier is exactly lc(b)^(d+1) regardless of degree gaps
  if (steps_left > 0 && !a.empty()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(),
               static_cast<unsigned long>(steps_left));
    for (auto& c : a) c *= f;
  }
  return a;
}

// Subresultant polynomial remainder sequence; returns the primitive gcd of
// two primitive inputs (both nonzero, deg a >= deg b >= 1).
inline ZPoly zp_subresultant_gcd(ZPoly a, ZPoly b) {
  mpz_class g = 1, h = 1;
  for (;;) {
    const int d = (static_cast<int>(a.size()) - 1) -
                  (static_cast<int>(b.size()) - 1);
    ZPoly r = zp_prem(std::move(a), b);
    if (r.empty()) {
      zp_make_primitive(b);
      return b;
    }
    if (static_cast<int>(r.size()) - 1 == 0) return {mpz_class(1)};
    mpz_class divisor = g;
    if (d > 0) {
      mpz_class hd;
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d));
      divisor *= hd;
    }
    a = std::move(b);
    b = std::move(r);
    zp_divexact_scalar(b, divisor);
    g = a.back();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      mpz_class gd, hd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(),
                 static_cast<unsigned long>(d - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
    }
  }
}

inline bool zp_reduce_mod(const ZPoly& a, std::uint64_t p,
                          std::vector<std::uint64_t>& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class m = a[i] % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    out[i] = m.get_ui();
  }
  return !out.empty() && out.back() != 0;  // leading coefficient survived
}

/// Monic gcd over Q[x].  Same contract as gcd_euclid(Poly<Rational>,...).
inline Poly<Rational> qpoly_gcd(const Poly<Rational>& a,
                                const Poly<Rational>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly<Rational>::one();

  ZPoly A = zp_from_qpoly(a), B = zp_from_qpoly(b);
  if (A.size() < B.size()) A.swap(B);

  std::vector<std::uint64_t> Ap, Bp;
  for (std::uint64_t p : fast_path_primes()) {
    if (!zp_reduce_mod(A, p, Ap) || !zp_reduce_mod(B, p, Bp)) continue;
    if (fp_gcd_degree(std::move(Ap), std::move(Bp), p) == 0)
      return Poly<Rational>::one();
    break;  // plausible common factor: compute it exactly
  }

  ZPoly G = zp_subresultant_gcd(std::move(A), std::move(B));
  if (G.size() <= 1) return Poly<Rational>::one();
  std::vector<Rational> qc(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) qc[i] = Rational(G[i], G.back());
  return Poly<Rational>(std::move(qc));
}

}  // namespace apogen::detail
