#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "families.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "zsums.hpp"

/// Residual checkers: each catalogued identity is evaluated as LHS - RHS in
/// exact arithmetic over the active coefficient field F (Rational or RatFun).
/// A check passes iff the residual polynomial is identically zero; there is
/// no tolerance anywhere.
namespace apogen {

namespace iddetail {

template <class F>
F frat(const Rational& q) {
  return F::from_rational(q);
}

/// Weight profile of the alternating multiplication formulas: entry r holds
/// sum of multinomial(l; v) over compositions v of l into m parts with
/// r = sum_{i>=1} i*v_i.  Equivalently the coefficient of y^r in
/// (1 + y + ... + y^{m-1})^l.
inline std::vector<mpz_class> alternating_weight_profile(int l, int m) {
  std::vector<mpz_class> w(static_cast<std::size_t>(l) * (m - 1) + 1, 0);
  for_each_composition(l, m, [&](const std::vector<int>& v) {
    long r = 0;
    for (int i = 0; i < m; ++i) r += static_cast<long>(i) * v[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(r)] += multinomial(l, v);
  });
  return w;
}

/// Apply the coefficient-field endomorphism L -> L^m to every table entry.
/// Sound because each table entry is a rational expression in the parameter,
/// so substituting the parameter commutes with the whole construction.
inline PolyTable<RatFun> substituted_table(const PolyTable<RatFun>& base, int mpow) {
  PolyTable<RatFun> out;
  out.rows.reserve(base.rows.size());
  for (const auto& row : base.rows) {
    std::vector<RatFun> c(static_cast<std::size_t>(row.degree() < 0 ? 0 : row.degree() + 1));
    for (int i = 0; i <= row.degree(); ++i)
      c[static_cast<std::size_t>(i)] = row.coeff(i).subst_power(mpow);
    out.rows.push_back(Poly<RatFun>(std::move(c)));
  }
  return out;
}

}  // namespace iddetail

/// Memoizing table provider for one fixed value of the deformation parameter.
/// Tables are keyed by family/order/parameter-power and grown on demand; for
/// the symbolic field, tables at lambda^m are produced by coefficient-wise
/// substitution into the base table instead of re-running the series division
/// over a dilated parameter.
template <class F>
class IdentityCtx {
 public:
  explicit IdentityCtx(const F& lambda, int horizon = 0)
      : lambda_(lambda), horizon_(horizon) {}

  const F& lambda_value() const { return lambda_; }

  /// Guarantee subsequently built tables hold at least h rows (avoids
  /// rebuild churn when a grid asks for increasing n).
  void reserve_rows(int h) {
    if (h > horizon_) horizon_ = h;
  }

  F lambda_power(long e) const { return lambda_.pow(e); }

  /// Order-l table of the one-parameter polynomial family with EGF kernel
  /// (2t/(lambda^mpow e^t + 1))^l e^{xt}.
  const PolyTable<F>& genocchi(int l, int mpow, int need) {
    return table("G|" + std::to_string(l) + "|" + std::to_string(mpow), need,
                 [&](int n) { return power_table(true, l, mpow, n); });
  }

  /// Order-l table with EGF kernel (t/(lambda^mpow e^t - 1))^l e^{xt}.
  const PolyTable<F>& bernoulli(int l, int mpow, int need) {
    return table("B|" + std::to_string(l) + "|" + std::to_string(mpow), need,
                 [&](int n) { return power_table(false, l, mpow, n); });
  }

  /// Classical order-1 table for 2/(e^t + 1) e^{xt}.
  const PolyTable<F>& euler1(int need) {
    return table("E", need, [&](int n) { return euler_table<F>(1, n); });
  }

  /// Three-base table for (2t/(lambda e^{Lb t} + e^{La t}))^l e^{x Lc t}.
  const PolyTable<F>& abc(int l, const Rational& la, const Rational& lb,
                          const Rational& lc, int need) {
    std::string key = "A|" + std::to_string(l) + "|" + la.to_string() + "|" +
                      lb.to_string() + "|" + lc.to_string();
    return table(key, need, [&](int n) {
      return genocchi_abc_table<F>(l, lambda_, iddetail::frat<F>(la),
                                   iddetail::frat<F>(lb), iddetail::frat<F>(lc), n);
    });
  }

  /// Two-base ratio table for t e^{x Lc t}/(e^{Lb t} - e^{La t}).
  const PolyTable<F>& luo_bernoulli(const Rational& la, const Rational& lb,
                                    const Rational& lc, int need) {
    std::string key = "LB|" + la.to_string() + "|" + lb.to_string() + "|" + lc.to_string();
    return table(key, need, [&](int n) {
      return luo_bernoulli_abc_table<F>(iddetail::frat<F>(la), iddetail::frat<F>(lb),
                                        iddetail::frat<F>(lc), n);
    });
  }

  /// Two-variable table for 2t e^{xt + y t^2}/(lambda^mpow e^t + 1).
  const PolyTable<F>& two_var(int mpow, const Rational& y, int need) {
    std::string key = "W|" + std::to_string(mpow) + "|" + y.to_string();
    return table(key, need, [&](int n) -> PolyTable<F> {
      if (mpow != 1) {
        if constexpr (std::is_same_v<F, RatFun>) {
          if (lambda_ == RatFun::symbol())
            return iddetail::substituted_table(two_var(1, y, n), mpow);
        }
        return two_var_genocchi_table<F>(lambda_.pow(mpow), iddetail::frat<F>(y), n);
      }
      return two_var_genocchi_table<F>(lambda_, iddetail::frat<F>(y), n);
    });
  }

  /// Alternating multi-power sum Z_k^{(l)}(m) at the context's lambda.
  F z_multi(int k, int l, int m) {
    std::array<long, 3> key{k, l, m};
    auto it = zmemo_.find(key);
    if (it == zmemo_.end())
      it = zmemo_.emplace(key, z_sum_multi<F>(k, l, m, lambda_)).first;
    return it->second;
  }

  /// Row k of the order-l one-parameter table evaluated at the integer x.
  F genocchi_at(int l, long x, int k) {
    std::array<long, 3> key{l, x, k};
    auto it = evalmemo_.find(key);
    if (it == evalmemo_.end()) {
      F v = genocchi(l, 1, k).row(k).eval(F::from_int(x));
      it = evalmemo_.emplace(key, std::move(v)).first;
    }
    return it->second;
  }

 private:
  template <class Build>
  const PolyTable<F>& table(const std::string& key, int need, Build build) {
    if (need < horizon_) need = horizon_;
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      PolyTable<F> t = build(need);
      it = cache_.emplace(key, std::move(t)).first;
    } else if (it->second.max_n() < need) {
      it->second = build(need);
    }
    return it->second;
  }

  PolyTable<F> power_table(bool genocchi_kind, int l, int mpow, int n) {
    if (mpow == 1)
      return genocchi_kind ? apostol_genocchi_table<F>(l, lambda_, n)
                           : apostol_bernoulli_table<F>(l, lambda_, n);
    if constexpr (std::is_same_v<F, RatFun>) {
      if (lambda_ == RatFun::symbol())
        return iddetail::substituted_table(
            genocchi_kind ? genocchi(l, 1, n) : bernoulli(l, 1, n), mpow);
    }
    F lam = lambda_.pow(mpow);
    return genocchi_kind ? apostol_genocchi_table<F>(l, lam, n)
                         : apostol_bernoulli_table<F>(l, lam, n);
  }

  F lambda_;
  int horizon_;
  std::map<std::string, PolyTable<F>> cache_;
  std::map<std::array<long, 3>, F> zmemo_;
  std::map<std::array<long, 3>, F> evalmemo_;
};

// ---------------------------------------------------------------------------
// Multiplication formulas (catalog ids T2_1, C2_2, C2_3, T2_4, C2_5, C2_6)
// ---------------------------------------------------------------------------

/// G_n^{(l)}(mx) = m^{n-l} sum over compositions v of l into m parts of
/// multinomial(l;v) (-lambda)^r G_n^{(l)}(x + r/m) at parameter lambda^m,
/// with r = sum_{i>=1} i*v_i.  Holds for odd m.
template <class F>
Poly<F> residual_T2_1(IdentityCtx<F>& ctx, int n, int l, int m) {
  if (l < 0) throw std::invalid_argument("T2_1: order must be >= 0");
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("T2_1: m must be odd");
  const PolyTable<F>& base = ctx.genocchi(l, 1, n);
  const PolyTable<F>& sub = ctx.genocchi(l, m, n);
  Poly<F> lhs = base.row(n).scale_arg(F::from_int(m));
  std::vector<mpz_class> w = iddetail::alternating_weight_profile(l, m);
  Poly<F> sum;
  F neg = -ctx.lambda_value();
  F negpow = F::one();
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (w[r] != 0)
      sum += sub.row(n).shift(iddetail::frat<F>(Rational(static_cast<long>(r), m))) *
             (negpow * iddetail::frat<F>(Rational(w[r])));
    negpow = negpow * neg;
  }
  return lhs - sum * iddetail::frat<F>(Rational(m).pow(n - l));
}

/// Order-1 form of the odd-m multiplication formula, written as the plain
/// k-sum: G_n(mx) = m^{n-1} sum_k (-lambda)^k G_n(x + k/m) at lambda^m.
template <class F>
Poly<F> residual_C2_3(IdentityCtx<F>& ctx, int n, int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("C2_3: m must be odd");
  const PolyTable<F>& base = ctx.genocchi(1, 1, n);
  const PolyTable<F>& sub = ctx.genocchi(1, m, n);
  Poly<F> lhs = base.row(n).scale_arg(F::from_int(m));
  Poly<F> sum;
  F neg = -ctx.lambda_value();
  F negpow = F::one();
  for (int k = 0; k < m; ++k) {
    sum += sub.row(n).shift(iddetail::frat<F>(Rational(k, m))) * negpow;
    negpow = negpow * neg;
  }
  return lhs - sum * iddetail::frat<F>(Rational(m).pow(n - 1));
}

/// Even-m multiplication formula: G_n^{(l)}(mx) = (-2)^l m^{n-l} sum over
/// compositions of multinomial (-lambda)^r B_n^{(l)}(x + r/m) at lambda^m.
template <class F>
Poly<F> residual_T2_4(IdentityCtx<F>& ctx, int n, int l, int m) {
  if (l < 0) throw std::invalid_argument("T2_4: order must be >= 0");
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("T2_4: m must be even");
  const PolyTable<F>& base = ctx.genocchi(l, 1, n);
  const PolyTable<F>& sub = ctx.bernoulli(l, m, n);
  Poly<F> lhs = base.row(n).scale_arg(F::from_int(m));
  std::vector<mpz_class> w = iddetail::alternating_weight_profile(l, m);
  Poly<F> sum;
  F neg = -ctx.lambda_value();
  F negpow = F::one();
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (w[r] != 0)
      sum += sub.row(n).shift(iddetail::frat<F>(Rational(static_cast<long>(r), m))) *
             (negpow * iddetail::frat<F>(Rational(w[r])));
    negpow = negpow * neg;
  }
  return lhs - sum * iddetail::frat<F>(Rational(-2).pow(l) * Rational(m).pow(n - l));
}

/// Classical even-m corollary: G_n(mx) = -2 m^{n-1} sum_k (-1)^k B_n(x + k/m).
/// Intended for a context with lambda = 1.
template <class F>
Poly<F> residual_C2_6(IdentityCtx<F>& ctx, int n, int m) {
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("C2_6: m must be even");
  const PolyTable<F>& base = ctx.genocchi(1, 1, n);
  const PolyTable<F>& sub = ctx.bernoulli(1, 1, n);
  Poly<F> lhs = base.row(n).scale_arg(F::from_int(m));
  Poly<F> sum;
  for (int k = 0; k < m; ++k) {
    Poly<F> term = sub.row(n).shift(iddetail::frat<F>(Rational(k, m)));
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return lhs - sum * iddetail::frat<F>(Rational(-2) * Rational(m).pow(n - 1));
}

// ---------------------------------------------------------------------------
// Alternating-power-sum bridge (T2_7, C2_8)
// ---------------------------------------------------------------------------

/// Z_n^{(l)}(m) = 2^{-l} sum_{j=0}^{l} C(l,j) (-1)^{j(m+1)} lambda^{mj+l}
///               / (n+1)_l * sum_{k=0}^{n+l} C(n+l,k) G_k^{(j)}(mj+l) G_{n+l-k}^{(l-j)}.
template <class F>
Poly<F> residual_T2_7(IdentityCtx<F>& ctx, int n, int l, int m) {
  if (n < 0 || l < 0 || m < 1) throw std::invalid_argument("T2_7: bad indices");
  F lhs = ctx.z_multi(n, l, m);
  F rhs = F::zero();
  for (int j = 0; j <= l; ++j) {
    F inner = F::zero();
    long x = static_cast<long>(m) * j + l;
    for (int k = 0; k <= n + l; ++k) {
      inner += iddetail::frat<F>(Rational(binomial(n + l, k))) *
               ctx.genocchi_at(j, x, k) * ctx.genocchi_at(l - j, 0, n + l - k);
    }
    Rational cj{binomial(l, j)};
    if ((static_cast<long>(j) * (m + 1)) % 2 != 0) cj = -cj;
    rhs += iddetail::frat<F>(cj) * ctx.lambda_power(x) * inner;
  }
  rhs = rhs * iddetail::frat<F>(Rational(1, 2).pow(l) /
                                Rational(rising_factorial(n + 1, l)));
  return Poly<F>(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Parameter-power recurrences (T2_9 .. C2_14)
// ---------------------------------------------------------------------------

/// m^n G_n^{(l)} at lambda^m minus m^l G_n^{(l)} at lambda equals
/// (-1)^{l-1} sum_k C(n,k) m^k G_k^{(l)}(lambda^m) Z_{n-k}^{(l)}(m-1).
/// Stated for odd m.  The printed form only holds through order 1; higher
/// orders are catalogued as documented discrepancies.
template <class F>
Poly<F> residual_T2_9(IdentityCtx<F>& ctx, int n, int l, int m) {
  if (l < 0) throw std::invalid_argument("T2_9: order must be >= 0");
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("T2_9: m must be odd");
  const PolyTable<F>& sub = ctx.genocchi(l, m, n);
  const PolyTable<F>& base = ctx.genocchi(l, 1, n);
  F lhs = iddetail::frat<F>(Rational(m).pow(n)) * sub.row(n).coeff(0) -
          iddetail::frat<F>(Rational(m).pow(l)) * base.row(n).coeff(0);
  F rhs = F::zero();
  F mk = F::one();
  for (int k = 0; k <= n; ++k) {
    rhs += iddetail::frat<F>(Rational(binomial(n, k))) * mk * sub.row(k).coeff(0) *
           ctx.z_multi(n - k, l, m - 1);
    mk = mk * F::from_int(m);
  }
  if (l % 2 == 0) rhs = -rhs;
  return Poly<F>(lhs - rhs);
}

/// Even-m companion: m^l G_n^{(l)}(lambda) - (-2)^l m^n B_n^{(l)}(lambda^m)
/// = 2^l sum_k C(n,k) m^k B_k^{(l)}(lambda^m) Z_{n-k}^{(l)}(m-1).
/// Like its odd-m sibling, only the order-1 case holds.
template <class F>
Poly<F> residual_T2_13(IdentityCtx<F>& ctx, int n, int l, int m) {
  if (l < 0) throw std::invalid_argument("T2_13: order must be >= 0");
  if (m < 2 || m % 2 == 1) throw std::invalid_argument("T2_13: m must be even");
  const PolyTable<F>& bsub = ctx.bernoulli(l, m, n);
  const PolyTable<F>& base = ctx.genocchi(l, 1, n);
  F lhs = iddetail::frat<F>(Rational(m).pow(l)) * base.row(n).coeff(0) -
          iddetail::frat<F>(Rational(-2).pow(l) * Rational(m).pow(n)) *
              bsub.row(n).coeff(0);
  F rhs = F::zero();
  F mk = F::one();
  for (int k = 0; k <= n; ++k) {
    rhs += iddetail::frat<F>(Rational(binomial(n, k))) * mk * bsub.row(k).coeff(0) *
           ctx.z_multi(n - k, l, m - 1);
    mk = mk * F::from_int(m);
  }
  rhs = rhs * iddetail::frat<F>(Rational(2).pow(l));
  return Poly<F>(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Order lowering (T2_15)
// ---------------------------------------------------------------------------

/// G_k at order n+1 equals 2k G_{k-1} at order n minus (2 - 2k/n) G_k at
/// order n (constant terms; n >= 1, k >= 1).
template <class F>
Poly<F> residual_T2_15(IdentityCtx<F>& ctx, int k, int n) {
  if (n < 1) throw std::invalid_argument("T2_15: n must be >= 1");
  if (k < 1) throw std::invalid_argument("T2_15: k must be >= 1");
  const PolyTable<F>& hi = ctx.genocchi(n + 1, 1, k);
  const PolyTable<F>& lo = ctx.genocchi(n, 1, k);
  F r = hi.row(k).coeff(0) -
        iddetail::frat<F>(Rational(2L * k)) * lo.row(k - 1).coeff(0) +
        iddetail::frat<F>(Rational(2) - Rational(2L * k, n)) * lo.row(k).coeff(0);
  return Poly<F>(r);
}

// ---------------------------------------------------------------------------
// Three-base reductions (T3_1, T3_2) and structure identities (T3_3_1..6)
// ---------------------------------------------------------------------------

/// Two-base constants reduce to the one-parameter family:
/// G_n^{(l)}(a,b) = G_n^{(l)}(l*La/(La-Lb)) * (Lb-La)^{n-l}.
template <class F>
Poly<F> residual_T3_1(IdentityCtx<F>& ctx, int n, int l,
                      const Rational& la, const Rational& lb) {
  if (la == lb) throw std::invalid_argument("T3_1: requires La != Lb");
  const PolyTable<F>& two = ctx.abc(l, la, lb, Rational::zero(), n);
  const PolyTable<F>& g = ctx.genocchi(l, 1, n);
  Rational arg = (Rational(l) * la) / (la - lb);
  F rhs = g.row(n).eval(iddetail::frat<F>(arg)) *
          iddetail::frat<F>((lb - la).pow(n - l));
  return two.row(n) - Poly<F>(rhs);
}

/// Full three-base reduction: the row equals the one-parameter row composed
/// with the affine map (x*Lc - l*La)/(Lb - La), scaled by (Lb-La)^{n-l}.
template <class F>
Poly<F> residual_T3_2(IdentityCtx<F>& ctx, int n, int l, const Rational& la,
                      const Rational& lb, const Rational& lc) {
  if (la == lb) throw std::invalid_argument("T3_2: requires La != Lb");
  const PolyTable<F>& three = ctx.abc(l, la, lb, lc, n);
  const PolyTable<F>& g = ctx.genocchi(l, 1, n);
  F u = iddetail::frat<F>(lc / (lb - la));
  F v = iddetail::frat<F>(-(Rational(l) * la) / (lb - la));
  Poly<F> rhs = g.row(n).compose_affine(u, v) *
                iddetail::frat<F>((lb - la).pow(n - l));
  return three.row(n) - rhs;
}

/// Argument shift by one: G_n^{(l)}(x+1) = sum_k C(n,k) Lc^{n-k} G_k^{(l)}(x).
template <class F>
Poly<F> residual_T3_3_1(IdentityCtx<F>& ctx, int n, int l, const Rational& la,
                        const Rational& lb, const Rational& lc) {
  const PolyTable<F>& t = ctx.abc(l, la, lb, lc, n);
  Poly<F> lhs = t.row(n).shift(F::one());
  Poly<F> rhs;
  for (int k = 0; k <= n; ++k)
    rhs += t.row(k) * iddetail::frat<F>(Rational(binomial(n, k)) * lc.pow(n - k));
  return lhs - rhs;
}

/// Argument shift by the order trades bases: G_n^{(l)}(x+l; a,b,c) equals the
/// row at logs (La-Lc, Lb-Lc, Lc).
template <class F>
Poly<F> residual_T3_3_2(IdentityCtx<F>& ctx, int n, int l, const Rational& la,
                        const Rational& lb, const Rational& lc) {
  const PolyTable<F>& t = ctx.abc(l, la, lb, lc, n);
  const PolyTable<F>& s = ctx.abc(l, la - lc, lb - lc, lc, n);
  return t.row(n).shift(F::from_int(l)) - s.row(n);
}

/// Reflection: G_n^{(l)}(l-x; a,b,c) equals the base-traded row at -x.
template <class F>
Poly<F> residual_T3_3_3(IdentityCtx<F>& ctx, int n, int l, const Rational& la,
                        const Rational& lb, const Rational& lc) {
  const PolyTable<F>& t = ctx.abc(l, la, lb, lc, n);
  const PolyTable<F>& s = ctx.abc(l, la - lc, lb - lc, lc, n);
  return t.row(n).compose_affine(-F::one(), F::from_int(l)) - s.row(n).reflect();
}

/// Order/argument addition: G_k^{(a+b)}(x+y) = sum_r C(k,r) G_{k-r}^{(a)}(x)
/// G_r^{(b)}(y), checked for one sampled rational y.
template <class F>
Poly<F> residual_T3_3_4(IdentityCtx<F>& ctx, int k, int a, int b,
                        const Rational& la, const Rational& lb,
                        const Rational& lc, const Rational& y) {
  if (a < 0 || b < 0) throw std::invalid_argument("T3_3_4: orders must be >= 0");
  const PolyTable<F>& tab = ctx.abc(a + b, la, lb, lc, k);
  const PolyTable<F>& ta = ctx.abc(a, la, lb, lc, k);
  const PolyTable<F>& tb = ctx.abc(b, la, lb, lc, k);
  Poly<F> lhs = tab.row(k).shift(iddetail::frat<F>(y));
  Poly<F> rhs;
  for (int r = 0; r <= k; ++r)
    rhs += ta.row(k - r) * (iddetail::frat<F>(Rational(binomial(k, r))) *
                            tb.row(r).eval(iddetail::frat<F>(y)));
  return lhs - rhs;
}

/// Repeated x-derivative: d^e/dx^e G_n^{(l)} = n!/(n-e)! Lc^e G_{n-e}^{(l)};
/// e > n yields the zero polynomial by contract.
template <class F>
Poly<F> residual_T3_3_5(IdentityCtx<F>& ctx, int n, int l, int e,
                        const Rational& la, const Rational& lb,
                        const Rational& lc) {
  if (e < 0) throw std::invalid_argument("T3_3_5: derivative order must be >= 0");
  const PolyTable<F>& t = ctx.abc(l, la, lb, lc, n);
  Poly<F> lhs = t.row(n);
  for (int i = 0; i < e; ++i) lhs = lhs.derivative();
  if (e > n) return lhs;
  Poly<F> rhs = t.row(n - e) *
                iddetail::frat<F>(Rational(factorial(n)) / Rational(factorial(n - e)) *
                                  lc.pow(e));
  return lhs - rhs;
}

/// Definite integral: int_s^t G_n^{(l)} dx = [G_{n+1}^{(l)}(t) -
/// G_{n+1}^{(l)}(s)] / ((n+1) Lc), compared symbolically in the endpoint t.
template <class F>
Poly<F> residual_T3_3_6(IdentityCtx<F>& ctx, int n, int l, const Rational& la,
                        const Rational& lb, const Rational& lc,
                        const Rational& s) {
  if (lc.is_zero()) throw std::domain_error("T3_3_6: requires Lc != 0");
  const PolyTable<F>& t = ctx.abc(l, la, lb, lc, n + 1);
  Poly<F> anti = t.row(n).antiderivative();
  Poly<F> lhs = anti - Poly<F>(anti.eval(iddetail::frat<F>(s)));
  const Poly<F>& hi = t.row(n + 1);
  Poly<F> rhs = (hi - Poly<F>(hi.eval(iddetail::frat<F>(s)))) *
                iddetail::frat<F>(Rational(1) / (Rational(n + 1) * lc));
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Differential recurrence (R3_4, printed and corrected forms)
// ---------------------------------------------------------------------------

/// Printed form: l*lambda*(Lb-La) sum_k C(n,k) Lb^k G_{n-k}^{(l+1)}(x)
/// = (l-n) G_n^{(l)}(x) + n (x Lc - l La) G_{n-1}^{(l)}(x).
/// Known to fail; catalogued as a documented discrepancy.
template <class F>
Poly<F> residual_R3_4_printed(IdentityCtx<F>& ctx, int n, int l,
                              const Rational& la, const Rational& lb,
                              const Rational& lc) {
  if (l < 1) throw std::invalid_argument("R3_4: order must be >= 1");
  const PolyTable<F>& hi = ctx.abc(l + 1, la, lb, lc, n);
  const PolyTable<F>& lo = ctx.abc(l, la, lb, lc, n);
  Poly<F> sum;
  for (int k = 0; k <= n; ++k)
    sum += hi.row(n - k) * iddetail::frat<F>(Rational(binomial(n, k)) * lb.pow(k));
  Poly<F> lhs = sum * (ctx.lambda_value() * iddetail::frat<F>(Rational(l) * (lb - la)));
  Poly<F> rhs = lo.row(n) * F::from_int(l - n);
  if (n >= 1)
    rhs += (Poly<F>::monomial(1, iddetail::frat<F>(lc)) -
            Poly<F>(iddetail::frat<F>(Rational(l) * la))) *
           lo.row(n - 1) * F::from_int(n);
  return lhs - rhs;
}

/// Corrected logarithmic-derivative identity (t d/dt of the EGF):
/// (l (Lb-La)/2) sum_k C(n,k) La^{n-k} G_k^{(l+1)}(x)
/// = (n-l) G_n^{(l)}(x) - n (x Lc - l Lb) G_{n-1}^{(l)}(x).
template <class F>
Poly<F> residual_R3_4_corrected(IdentityCtx<F>& ctx, int n, int l,
                                const Rational& la, const Rational& lb,
                                const Rational& lc) {
  if (l < 1) throw std::invalid_argument("R3_4: order must be >= 1");
  const PolyTable<F>& hi = ctx.abc(l + 1, la, lb, lc, n);
  const PolyTable<F>& lo = ctx.abc(l, la, lb, lc, n);
  Poly<F> sum;
  for (int k = 0; k <= n; ++k)
    sum += hi.row(k) * iddetail::frat<F>(Rational(binomial(n, k)) * la.pow(n - k));
  Poly<F> lhs = sum * iddetail::frat<F>(Rational(l) * (lb - la) / Rational(2));
  Poly<F> rhs = lo.row(n) * F::from_int(n - l);
  if (n >= 1)
    rhs -= (Poly<F>::monomial(1, iddetail::frat<F>(lc)) -
            Poly<F>(iddetail::frat<F>(Rational(l) * lb))) *
           lo.row(n - 1) * F::from_int(n);
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Mixed-family convolutions (R3_5_1..3); lambda-free, classical families
// ---------------------------------------------------------------------------

/// Printed two-base convolution B_n(x+y; a,b) = (1/2) sum_k C(n,k)/(n-k+1)
/// [B_k(y) + B_k(y+1)] G_{n-k}(x), read with base c = e (Lc = 1).
/// Fails already at n = 0, 1; catalogued as a documented discrepancy.
template <class F>
Poly<F> residual_R3_5_1(IdentityCtx<F>& ctx, int n, const Rational& la,
                        const Rational& lb, const Rational& y) {
  if (la == lb) throw std::invalid_argument("R3_5_1: requires La != Lb");
  const PolyTable<F>& b = ctx.luo_bernoulli(la, lb, Rational(1), n);
  const PolyTable<F>& g = ctx.genocchi(1, 1, n);
  Poly<F> lhs = b.row(n).shift(iddetail::frat<F>(y));
  Poly<F> rhs;
  for (int k = 0; k <= n; ++k) {
    F val = b.row(k).eval(iddetail::frat<F>(y)) +
            b.row(k).eval(iddetail::frat<F>(y + 1));
    rhs += g.row(n - k) *
           (iddetail::frat<F>(Rational(binomial(n, k)) / Rational(2L * (n - k + 1))) * val);
  }
  return lhs - rhs;
}

/// G_n(x+y) = (1/2) sum_k C(n,k) [G_k(y) + G_k(y+1)] E_{n-k}(x).
template <class F>
Poly<F> residual_R3_5_2(IdentityCtx<F>& ctx, int n, const Rational& y) {
  const PolyTable<F>& g = ctx.genocchi(1, 1, n);
  const PolyTable<F>& e = ctx.euler1(n);
  Poly<F> lhs = g.row(n).shift(iddetail::frat<F>(y));
  Poly<F> rhs;
  for (int k = 0; k <= n; ++k) {
    F val = g.row(k).eval(iddetail::frat<F>(y)) +
            g.row(k).eval(iddetail::frat<F>(y + 1));
    rhs += e.row(n - k) * (iddetail::frat<F>(Rational(binomial(n, k), 2)) * val);
  }
  return lhs - rhs;
}

/// G_n(x+y) = sum_k k C(n,k) y^{k-1} E_{n-k}(x) for y != 0.
template <class F>
Poly<F> residual_R3_5_3(IdentityCtx<F>& ctx, int n, const Rational& y) {
  if (y.is_zero()) throw std::invalid_argument("R3_5_3: y must be nonzero");
  const PolyTable<F>& g = ctx.genocchi(1, 1, n);
  const PolyTable<F>& e = ctx.euler1(n);
  Poly<F> lhs = g.row(n).shift(iddetail::frat<F>(y));
  Poly<F> rhs;
  for (int k = 1; k <= n; ++k)
    rhs += e.row(n - k) *
           iddetail::frat<F>(Rational(k) * Rational(binomial(n, k)) * y.pow(k - 1));
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// Two-variable multiplication formulas (T4_1, R4_2)
// ---------------------------------------------------------------------------

/// G_n(mx, py) = m^{n-1} sum_{k<m} (-lambda)^k G_n(x + k/m, py/m^2) at
/// parameter lambda^m, for odd m.
template <class F>
Poly<F> residual_T4_1(IdentityCtx<F>& ctx, int n, int m, const Rational& y,
                      const Rational& p) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("T4_1: m must be odd");
  Rational y_lhs = p * y;
  Rational y_rhs = (p * y) / Rational(static_cast<long>(m) * m);
  const PolyTable<F>& lt = ctx.two_var(1, y_lhs, n);
  const PolyTable<F>& rt = ctx.two_var(m, y_rhs, n);
  Poly<F> lhs = lt.row(n).scale_arg(F::from_int(m));
  Poly<F> sum;
  F neg = -ctx.lambda_value();
  F negpow = F::one();
  for (int k = 0; k < m; ++k) {
    sum += rt.row(n).shift(iddetail::frat<F>(Rational(k, m))) * negpow;
    negpow = negpow * neg;
  }
  return lhs - sum * iddetail::frat<F>(Rational(m).pow(n - 1));
}

/// Self-similar special case: G_n(mx, m^2 y) = m^{n-1} sum_k (-lambda)^k
/// G_n(x + k/m, y) at parameter lambda^m, for odd m.
template <class F>
Poly<F> residual_R4_2(IdentityCtx<F>& ctx, int n, int m, const Rational& y) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("R4_2: m must be odd");
  const PolyTable<F>& lt = ctx.two_var(1, Rational(static_cast<long>(m) * m) * y, n);
  const PolyTable<F>& rt = ctx.two_var(m, y, n);
  Poly<F> lhs = lt.row(n).scale_arg(F::from_int(m));
  Poly<F> sum;
  F neg = -ctx.lambda_value();
  F negpow = F::one();
  for (int k = 0; k < m; ++k) {
    sum += rt.row(n).shift(iddetail::frat<F>(Rational(k, m))) * negpow;
    negpow = negpow * neg;
  }
  return lhs - sum * iddetail::frat<F>(Rational(m).pow(n - 1));
}

// ---------------------------------------------------------------------------
// Kernel PDE pair and the complement identity
// ---------------------------------------------------------------------------

/// lambda G_n(x+1) + G_n(x) = 2n x^{n-1} (derived helper; RHS is 0 at n = 0).
template <class F>
Poly<F> residual_COMPLEMENT(IdentityCtx<F>& ctx, int n) {
  const PolyTable<F>& g = ctx.genocchi(1, 1, n);
  Poly<F> lhs = g.row(n).shift(F::one()) * ctx.lambda_value() + g.row(n);
  Poly<F> rhs =
      n >= 1 ? Poly<F>::monomial(n - 1, F::from_int(2L * n)) : Poly<F>();
  return lhs - rhs;
}

/// Residual series of the two differential identities satisfied by
/// phi = (2t/(e^t+1))^l e^{xt}.  With psi = phi / t^l (a genuine power
/// series), the pair reduces to
///   d/dx psi - t psi = 0
///   t d/dt psi - t x psi + l (t e^t/(e^t+1)) psi = 0,
/// both of which must vanish coefficient-for-coefficient up to `precision`.
struct PdeResiduals {
  Series<Poly<Rational>> first;
  Series<Poly<Rational>> second;
};

inline PdeResiduals phi_pde_residuals(int l, int precision) {
  if (l < 0) throw std::invalid_argument("phi_pde: order must be >= 0");
  if (precision < 2) throw std::invalid_argument("phi_pde: precision too small");
  using XP = Poly<Rational>;
  using XS = Series<XP>;
  const int prec = precision;
  auto mul_t = [](const XS& s) {
    XS r = XS::zero(s.precision());
    for (int i = 1; i < s.precision(); ++i) r.set_coeff(i, s.coeff(i - 1));
    return r;
  };
  auto t_ddt = [](const XS& s) {
    XS r = XS::zero(s.precision());
    for (int i = 1; i < s.precision(); ++i)
      r.set_coeff(i, s.coeff(i) * XP::from_int(i));
    return r;
  };
  auto ddx = [](const XS& s) {
    XS r = XS::zero(s.precision());
    for (int i = 0; i < s.precision(); ++i) r.set_coeff(i, s.coeff(i).derivative());
    return r;
  };
  XS et = exp_linear(XP::one(), prec);
  XS den = et + XS::one(prec);
  XS kern = div(XS::one(prec) * XP::from_int(2), den).pow(l);
  XS psi = kern * exp_linear(XP::monomial(1), prec);
  PdeResiduals out{ddx(psi) - mul_t(psi),
                   t_ddt(psi) - mul_t(psi) * XP::monomial(1) +
                       div(mul_t(et), den) * psi * XP::from_int(l)};
  return out;
}

// ---------------------------------------------------------------------------
// Reporting helpers: zero-test plus a printable witness coefficient
// ---------------------------------------------------------------------------

template <class F>
std::pair<bool, std::string> residual_info(const Poly<F>& r) {
  for (int i = 0; i <= r.degree(); ++i)
    if (!r.coeff(i).is_zero()) return {false, r.coeff(i).to_string()};
  return {true, "0"};
}

inline std::pair<bool, std::string> residual_info(const Series<Poly<Rational>>& s) {
  for (int i = 0; i < s.precision(); ++i) {
    const Poly<Rational>& c = s.coeff(i);
    for (int j = 0; j <= c.degree(); ++j)
      if (!c.coeff(j).is_zero()) return {false, c.coeff(j).to_string()};
  }
  return {true, "0"};
}

}  // namespace apogen
