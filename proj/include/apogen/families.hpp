#pragma once

#include <vector>

#include "apogen/combinatorics.hpp"
#include "apogen/series.hpp"

namespace apogen {

/// Table of polynomials in x, indexed by n = 0..max_n; row n has degree <= n.
template <class F>
struct PolyTable {
  std::vector<Poly<F>> rows;

  int max_n() const { return static_cast<int>(rows.size()) - 1; }
  const Poly<F>& row(int n) const {
    if (n < 0 || n > max_n())
      throw std::out_of_range("PolyTable: row index out of range");
    return rows[static_cast<std::size_t>(n)];
  }
  friend bool operator==(const PolyTable& a, const PolyTable& b) {
    return a.rows == b.rows;
  }
};

namespace famdetail {

// lambda * e^{L t} + 1 at the given precision
template <class F>
Series<F> unit_plus_scaled_exp(const F& lambda, const F& log_base, int prec) {
  return exp_linear(log_base, prec) * lambda + Series<F>::one(prec);
}

// rows n = 0..max_n of the EGF table of a series over Poly<F>
template <class F>
PolyTable<F> rows_of(const Series<Poly<F>>& s, int max_n) {
  PolyTable<F> t;
  t.rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) t.rows.push_back(s.egf_coeff(n));
  return t;
}

// (numerator / denominator)^l * e^{x Lc t}, tabulated to max_n
template <class F>
PolyTable<F> kernel_table(const Series<F>& num, const Series<F>& den, long l,
                          const F& log_c, int max_n) {
  Series<F> kernel = div(num, den).pow(l);
  Series<Poly<F>> lifted = lift_to_poly(kernel);
  Series<Poly<F>> ex =
      exp_linear(Poly<F>::monomial(1, log_c), lifted.precision());
  return rows_of(lifted * ex, max_n);
}

template <class F>
std::vector<F> scalar_rows(const Series<F>& s, int max_n) {
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(s.egf_coeff(n));
  return out;
}

inline Series<Rational> sin_series(const Rational& a, int prec) {
  Series<Rational> s(prec);
  Rational term = a;  // a^{2k+1} / (2k+1)! with alternating sign
  if (prec > 1) s.set_coeff(1, term);
  for (int k = 1; 2 * k + 1 < prec; ++k) {
    term = -term * a * a * Rational(1, 2 * k * (2 * k + 1));
    s.set_coeff(2 * k + 1, term);
  }
  return s;
}

inline Series<Rational> cos_series(const Rational& a, int prec) {
  Series<Rational> s(prec);
  Rational term(1);
  s.set_coeff(0, term);
  for (int k = 1; 2 * k < prec; ++k) {
    term = -term * a * a * Rational(1, (2 * k - 1) * 2 * k);
    s.set_coeff(2 * k, term);
  }
  return s;
}

inline Series<Rational> sinh_series(const Rational& a, int prec) {
  Series<Rational> s(prec);
  Rational term = a;
  if (prec > 1) s.set_coeff(1, term);
  for (int k = 1; 2 * k + 1 < prec; ++k) {
    term = term * a * a * Rational(1, 2 * k * (2 * k + 1));
    s.set_coeff(2 * k + 1, term);
  }
  return s;
}

inline Series<Rational> cosh_series(const Rational& a, int prec) {
  Series<Rational> s(prec);
  Rational term(1);
  s.set_coeff(0, term);
  for (int k = 1; 2 * k < prec; ++k) {
    term = term * a * a * Rational(1, (2 * k - 1) * 2 * k);
    s.set_coeff(2 * k, term);
  }
  return s;
}

}  // namespace famdetail

/// (2t / (lambda e^t + 1))^l e^{xt}.  lambda = -1 is a genuine singularity
/// of the kernel and is rejected.
template <class F>
PolyTable<F> apostol_genocchi_table(long l, const F& lambda, int max_n) {
  if (l < 0) throw std::invalid_argument("order must be >= 0");
  if ((lambda + F::one()).is_zero())
    throw std::domain_error("apostol_genocchi_table: lambda = -1 is singular");
  const int prec = max_n + 2;
  Series<F> num = Series<F>::monomial(1, prec, F::from_int(2));
  Series<F> den = famdetail::unit_plus_scaled_exp(lambda, F::one(), prec);
  return famdetail::kernel_table(num, den, l, F::one(), max_n);
}

/// (t / (lambda e^t - 1))^l e^{xt}.  At lambda = 1 the denominator loses its
/// constant term and the valuation-aware division produces the classical
/// rows; any other lambda keeps the denominator a unit.
template <class F>
PolyTable<F> apostol_bernoulli_table(long l, const F& lambda, int max_n) {
  if (l < 0) throw std::invalid_argument("order must be >= 0");
  const int prec = max_n + 2;
  Series<F> num = Series<F>::monomial(1, prec);
  Series<F> den =
      exp_linear(F::one(), prec) * lambda - Series<F>::one(prec);
  return famdetail::kernel_table(num, den, l, F::one(), max_n);
}

/// (2 / (e^t + 1))^l e^{xt}: higher-order Euler polynomials.
template <class F>
PolyTable<F> euler_table(long l, int max_n) {
  if (l < 0) throw std::invalid_argument("order must be >= 0");
  const int prec = max_n + 2;
  Series<F> num = Series<F>::monomial(0, prec, F::from_int(2));
  Series<F> den = exp_linear(F::one(), prec) + Series<F>::one(prec);
  return famdetail::kernel_table(num, den, l, F::one(), max_n);
}

/// (t / (e^t - 1))^l e^{xt}: higher-order Bernoulli polynomials.
template <class F>
PolyTable<F> bernoulli_table(long l, int max_n) {
  if (l < 0) throw std::invalid_argument("order must be >= 0");
  const int prec = max_n + 2;
  Series<F> num = Series<F>::monomial(1, prec);
  Series<F> den = exp_linear(F::one(), prec) - Series<F>::one(prec);
  return famdetail::kernel_table(num, den, l, F::one(), max_n);
}

/// (2t / (e^t + 1)) e^{xt}: the classical table, rows 2x-1, 6x^5-..., etc.
template <class F>
PolyTable<F> genocchi_table(int max_n) {
  return apostol_genocchi_table<F>(1, F::one(), max_n);
}

/// Magnitude sequence from t tan(t/2) = t sin(t/2) / cos(t/2); the even
/// entries are the absolute values of the alternating-kernel numbers.
inline std::vector<Rational> unsigned_genocchi(int max_n) {
  const int prec = max_n + 2;
  Series<Rational> num =
      Series<Rational>::monomial(1, prec) * famdetail::sin_series(Rational(1, 2), prec);
  Series<Rational> den = famdetail::cos_series(Rational(1, 2), prec);
  return famdetail::scalar_rows(div(num, den), max_n);
}

/// Signed variant from -t tanh(t/2); matches the EGF numbers for n >= 2.
inline std::vector<Rational> signed_genocchi_tanh(int max_n) {
  const int prec = max_n + 2;
  Series<Rational> num =
      -(Series<Rational>::monomial(1, prec) * famdetail::sinh_series(Rational(1, 2), prec));
  Series<Rational> den = famdetail::cosh_series(Rational(1, 2), prec);
  return famdetail::scalar_rows(div(num, den), max_n);
}

/// Secant-kernel numbers E_0, E_1, ... from 2 / (e^t + e^{-t}); odd entries
/// vanish, even entries alternate in sign (1, 0, -1, 0, 5, ...).
inline std::vector<Rational> euler_numbers(int max_n) {
  const int prec = max_n + 2;
  Series<Rational> den =
      exp_linear(Rational(1), prec) + exp_linear(Rational(-1), prec);
  return famdetail::scalar_rows(
      div(Series<Rational>::monomial(0, prec, Rational(2)), den), max_n);
}

/// The even-index reconstruction sum
///   sum_{k=0}^{n-1} (-1)^{n-k-1} (n-k) C(2n,2k) E_{2k} / 2^{2n-2},
/// evaluated with the secant-kernel numbers as-is (signed) or with their
/// magnitudes.  Which convention reproduces unsigned_genocchi(2n) is
/// determined empirically by the suite and recorded, not assumed.
inline Rational genocchi_from_euler(int n, bool use_magnitudes) {
  if (n < 1) throw std::invalid_argument("genocchi_from_euler: n must be >= 1");
  std::vector<Rational> e = euler_numbers(2 * n);
  Rational acc(0);
  for (int k = 0; k <= n - 1; ++k) {
    Rational ek = e[static_cast<std::size_t>(2 * k)];
    if (use_magnitudes) ek = ek.abs();
    Rational term = Rational(binomial(2 * n, 2 * k), mpz_class(1)) *
                    Rational(n - k) * ek;
    if ((n - k - 1) % 2 != 0) term = -term;
    acc += term;
  }
  mpz_class sc;
  mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(2 * n - 2));
  return acc / Rational(sc, mpz_class(1));
}

/// (2t / (lambda e^{Lb t} + e^{La t}))^l e^{x Lc t}: the three-base family
/// with a, b, c represented purely by their logarithms.
template <class F>
PolyTable<F> genocchi_abc_table(long l, const F& lambda, const F& la,
                                const F& lb, const F& lc, int max_n) {
  if (l < 0) throw std::invalid_argument("order must be >= 0");
  const int prec = max_n + 2;
  Series<F> den = exp_linear(lb, prec) * lambda + exp_linear(la, prec);
  if (den.coeff(0).is_zero())
    throw std::domain_error("genocchi_abc_table: lambda = -1 is singular");
  Series<F> num = Series<F>::monomial(1, prec, F::from_int(2));
  return famdetail::kernel_table(num, den, l, lc, max_n);
}

/// t c^{xt} / (b^t - a^t) with logarithm parameters; requires La != Lb so
/// the denominator has valuation exactly 1.
template <class F>
PolyTable<F> luo_bernoulli_abc_table(const F& la, const F& lb, const F& lc,
                                     int max_n) {
  if ((lb - la).is_zero())
    throw std::domain_error("luo_bernoulli_abc_table: requires La != Lb");
  const int prec = max_n + 2;
  Series<F> den = exp_linear(lb, prec) - exp_linear(la, prec);
  Series<F> num = Series<F>::monomial(1, prec);
  return famdetail::kernel_table(num, den, 1, lc, max_n);
}

/// 2 / (b^t + a^t) as a scalar sequence (no x factor).
template <class F>
std::vector<F> luo_euler_ab(const F& la, const F& lb, int max_n) {
  const int prec = max_n + 2;
  Series<F> den = exp_linear(lb, prec) + exp_linear(la, prec);
  return famdetail::scalar_rows(
      div(Series<F>::monomial(0, prec, F::from_int(2)), den), max_n);
}

/// 4t^3 / ((lambda e^t + 1)(lambda e^{t^2} + 1)) by series division.
template <class F>
std::vector<F> hermite_genocchi_gf(const F& lambda, int max_n) {
  if ((lambda + F::one()).is_zero())
    throw std::domain_error("hermite_genocchi: lambda = -1 is singular");
  const int prec = max_n + 2;
  Series<F> den1 = famdetail::unit_plus_scaled_exp(lambda, F::one(), prec);
  Series<F> den2 = exp_quadratic(F::one(), prec) * lambda + Series<F>::one(prec);
  Series<F> num = Series<F>::monomial(3, prec, F::from_int(4));
  return famdetail::scalar_rows(div(num, den1 * den2), max_n);
}

/// Same sequence via the printed convolution:
///   sum_{s=0}^{floor(n/2)} n!/(s!(n-2s)!) G_{n-2s}(lambda) G_s(lambda),
/// where G_j(lambda) are the order-1 kernel numbers (rows at x = 0).
template <class F>
std::vector<F> hermite_genocchi_sum(const F& lambda, int max_n) {
  PolyTable<F> g = apostol_genocchi_table<F>(1, lambda, max_n);
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    F acc = F::zero();
    for (int s = 0; 2 * s <= n; ++s) {
      mpz_class w = factorial(n) / (factorial(s) * factorial(n - 2 * s));
      acc += g.row(n - 2 * s).coeff(0) * g.row(s).coeff(0) *
             F::from_rational(Rational(w, mpz_class(1)));
    }
    out.push_back(acc);
  }
  return out;
}

/// 4t^3 / ((lambda e^{at} + 1)(lambda e^{bt^2} + 1)); a and b scale the two
/// exponents and must be nonzero (they divide the closed-form weights).
template <class F>
std::vector<F> hermite_genocchi_ab_gf(const F& a, const F& b, const F& lambda,
                                      int max_n) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("hermite_genocchi_ab: a and b must be nonzero");
  if ((lambda + F::one()).is_zero())
    throw std::domain_error("hermite_genocchi_ab: lambda = -1 is singular");
  const int prec = max_n + 2;
  Series<F> den1 = famdetail::unit_plus_scaled_exp(lambda, a, prec);
  Series<F> den2 = exp_quadratic(b, prec) * lambda + Series<F>::one(prec);
  Series<F> num = Series<F>::monomial(3, prec, F::from_int(4));
  return famdetail::scalar_rows(div(num, den1 * den2), max_n);
}

/// Printed closed form for the two-exponent sequence:
///   (1/(ab)) sum_s n!/(s!(n-2s)!) G_{n-2s}(lambda) G_s(lambda) a^{n-2s} b^s.
template <class F>
std::vector<F> hermite_genocchi_ab_sum(const F& a, const F& b, const F& lambda,
                                       int max_n) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("hermite_genocchi_ab: a and b must be nonzero");
  PolyTable<F> g = apostol_genocchi_table<F>(1, lambda, max_n);
  F inv_ab = unit_inverse(a * b);
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    F acc = F::zero();
    for (int s = 0; 2 * s <= n; ++s) {
      mpz_class w = factorial(n) / (factorial(s) * factorial(n - 2 * s));
      acc += g.row(n - 2 * s).coeff(0) * g.row(s).coeff(0) * a.pow(n - 2 * s) *
             b.pow(s) * F::from_rational(Rational(w, mpz_class(1)));
    }
    out.push_back(acc * inv_ab);
  }
  return out;
}

/// 2t e^{xt + yt^2} / (lambda e^t + 1): rows polynomial in x, y a scalar.
template <class F>
PolyTable<F> two_var_genocchi_table(const F& lambda, const F& y, int max_n) {
  if ((lambda + F::one()).is_zero())
    throw std::domain_error("two_var_genocchi_table: lambda = -1 is singular");
  const int prec = max_n + 2;
  Series<F> num = Series<F>::monomial(1, prec, F::from_int(2));
  Series<F> den = famdetail::unit_plus_scaled_exp(lambda, F::one(), prec);
  Series<F> kernel = div(num, den);
  Series<Poly<F>> lifted = lift_to_poly(kernel);
  Series<Poly<F>> ex = exp_linear(Poly<F>::monomial(1), lifted.precision());
  Series<Poly<F>> ey = exp_quadratic(Poly<F>(y), lifted.precision());
  return famdetail::rows_of(lifted * ex * ey, max_n);
}

/// Printed sum for the two-variable rows:
///   sum_{s=0}^{floor(n/2)} n!/(s!(n-2s)!) y^s G_{n-2s}(x; lambda).
template <class F>
PolyTable<F> two_var_genocchi_sum(const F& lambda, const F& y, int max_n) {
  PolyTable<F> g = apostol_genocchi_table<F>(1, lambda, max_n);
  PolyTable<F> t;
  t.rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    Poly<F> acc;
    for (int s = 0; 2 * s <= n; ++s) {
      mpz_class w = factorial(n) / (factorial(s) * factorial(n - 2 * s));
      acc += g.row(n - 2 * s) *
             (y.pow(s) * F::from_rational(Rational(w, mpz_class(1))));
    }
    t.rows.push_back(acc);
  }
  return t;
}

}  // namespace apogen
