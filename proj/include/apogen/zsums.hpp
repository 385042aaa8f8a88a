#pragma once

#include "apogen/combinatorics.hpp"
#include "apogen/series.hpp"

namespace apogen {

namespace detail {
// r^k with the 0^0 = 1 convention used by the empty composition.
inline mpz_class int_pow(long r, int k) {
  if (k == 0) return 1;
  mpz_class b(r), out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}
}  // namespace detail

/// Alternating power sum sum_{j=1}^{m} (-1)^{j+1} lambda^j j^k.
template <class F>
F z_sum(int k, int m, const F& lambda) {
  if (k < 0 || m < 0) throw std::invalid_argument("z_sum: negative index");
  F acc = F::zero();
  for (int j = 1; j <= m; ++j) {
    F term = lambda.pow(j) *
             F::from_rational(Rational(detail::int_pow(j, k), mpz_class(1)));
    if (j % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

/// Multiplicity-l alternating sum by direct enumeration:
/// (-1)^l * sum over compositions (v_1..v_m) of l, of
///   multinomial(l; v) (-lambda)^r r^k  with  r = sum_i i*v_i.
template <class F>
F z_sum_multi(int k, int l, int m, const F& lambda) {
  if (k < 0 || l < 0 || m < 0)
    throw std::invalid_argument("z_sum_multi: negative index");
  F neg_lambda = -lambda;
  F acc = F::zero();
  for_each_composition(l, m, [&](const std::vector<int>& v) {
    long r = 0;
    for (int i = 0; i < m; ++i) r += static_cast<long>(i + 1) * v[static_cast<std::size_t>(i)];
    mpz_class w = multinomial(l, v) * detail::int_pow(r, k);
    if (w == 0) return;
    acc += neg_lambda.pow(r) * F::from_rational(Rational(w, mpz_class(1)));
  });
  if (l % 2 != 0) acc = -acc;
  return acc;
}

/// Same sum read off a generating function: the k-th EGF coefficient of
/// (lambda e^t - lambda^2 e^{2t} + ... + (-1)^{m+1} lambda^m e^{mt})^l.
template <class F>
F z_sum_multi_gf(int k, int l, int m, const F& lambda) {
  if (k < 0 || l < 0 || m < 0)
    throw std::invalid_argument("z_sum_multi_gf: negative index");
  const int prec = k + 1;
  Series<F> base(prec);
  for (int j = 1; j <= m; ++j) {
    F scale = lambda.pow(j);
    if (j % 2 == 0) scale = -scale;
    base += exp_linear(F::from_int(j), prec) * scale;
  }
  return base.pow(l).egf_coeff(k);
}

}  // namespace apogen
