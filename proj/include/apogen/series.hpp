#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "apogen/combinatorics.hpp"
#include "apogen/poly.hpp"
#include "apogen/rational.hpp"
#include "apogen/ratfun.hpp"

namespace apogen {

inline Rational unit_inverse(const Rational& c) { return c.inverse(); }
inline RatFun unit_inverse(const RatFun& c) { return c.inverse(); }
template <class K>
Poly<K> unit_inverse(const Poly<K>& c) {
  if (c.degree() != 0)
    throw std::domain_error("Series: constant term is not a unit");
  return Poly<K>(unit_inverse(c.coeff(0)));
}

/// Truncated formal power series in t: retains the coefficients of
/// t^0 .. t^{N-1} and nothing else.  Arithmetic never reads or writes
/// indices >= N.  Precision is explicit everywhere: binary operations
/// require both operands at the same precision, and division shrinks
/// the precision by the valuation it cancels.
template <class R>
class Series {
 public:
  explicit Series(int precision) {
    if (precision < 1) throw std::invalid_argument("Series: precision < 1");
    c_.assign(static_cast<std::size_t>(precision), R::zero());
  }
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: precision < 1");
  }

  static Series zero(int precision) { return Series(precision); }
  static Series one(int precision) { return monomial(0, precision); }
  static Series monomial(int k, int precision, const R& coeff = R::one()) {
    Series s(precision);
    if (k < 0) throw std::invalid_argument("Series: negative exponent");
    if (k < precision) s.c_[static_cast<std::size_t>(k)] = coeff;
    return s;
  }

  int precision() const { return static_cast<int>(c_.size()); }
  const R& coeff(int k) const {
    if (k < 0 || k >= precision())
      throw std::out_of_range("Series: coefficient index out of precision");
    return c_[static_cast<std::size_t>(k)];
  }
  void set_coeff(int k, R v) {
    if (k < 0 || k >= precision())
      throw std::out_of_range("Series: coefficient index out of precision");
    c_[static_cast<std::size_t>(k)] = std::move(v);
  }

  bool is_zero() const {
    for (const R& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Index of the first nonzero retained coefficient; precision() if none.
  int valuation() const {
    for (int k = 0; k < precision(); ++k)
      if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    return precision();
  }

  Series truncate(int new_precision) const {
    if (new_precision < 1 || new_precision > precision())
      throw std::invalid_argument("Series: bad truncation precision");
    return Series(std::vector<R>(c_.begin(), c_.begin() + new_precision));
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.require_same_precision(b);
    Series r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    a.require_same_precision(b);
    Series r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (R& x : r.c_) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_precision(b);
    const int n = a.precision();
    Series r(n);
    for (int i = 0; i < n; ++i) {
      if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j < n; ++j) {
        if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
        r.c_[static_cast<std::size_t>(i + j)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return r;
  }
  friend Series operator*(const Series& a, const R& s) {
    Series r = a;
    for (R& x : r.c_) x = x * s;
    return r;
  }
  friend Series operator*(const R& s, const Series& a) { return a * s; }
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  friend bool operator==(const Series& a, const Series& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Exact quotient.  Cancels the denominator's valuation v (requiring the
  /// numerator to carry at least t^v as well), then inverts the remaining
  /// unit; the result retains precision() - v coefficients.
  friend Series div(const Series& a, const Series& b) {
    a.require_same_precision(b);
    const int v = b.valuation();
    if (v == b.precision()) throw std::domain_error("Series: division by zero");
    if (!a.is_zero() && a.valuation() < v)
      throw std::domain_error("Series: non-series quotient");
    const int m = a.precision() - v;
    const R inv0 = unit_inverse(b.c_[static_cast<std::size_t>(v)]);
    Series q(m);
    for (int n = 0; n < m; ++n) {
      R acc = a.c_[static_cast<std::size_t>(n + v)];
      for (int j = 0; j < n; ++j) {
        const R& qj = q.c_[static_cast<std::size_t>(j)];
        if (qj.is_zero()) continue;
        acc -= qj * b.c_[static_cast<std::size_t>(n - j + v)];
      }
      q.c_[static_cast<std::size_t>(n)] = acc * inv0;
    }
    return q;
  }

  Series pow(long e) const {
    if (e < 0) throw std::invalid_argument("Series: negative power");
    Series base = *this;
    Series acc = one(precision());
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return acc;
  }

  /// t -> m t: multiplies the k-th coefficient by m^k.
  Series subst_scale(long m) const {
    if (m < 1) throw std::invalid_argument("Series: scale factor must be >= 1");
    Series r = *this;
    mpz_class pw = 1;
    for (int k = 1; k < precision(); ++k) {
      pw *= m;
      R& x = r.c_[static_cast<std::size_t>(k)];
      if (!x.is_zero()) x = x * R::from_rational(Rational(pw, mpz_class(1)));
    }
    return r;
  }

  /// t -> t^2: moves the k-th coefficient to index 2k, same precision.
  Series subst_square() const {
    Series r(precision());
    for (int k = 0; 2 * k < precision(); ++k)
      r.c_[static_cast<std::size_t>(2 * k)] = c_[static_cast<std::size_t>(k)];
    return r;
  }

  /// n! times the coefficient of t^n.
  R egf_coeff(int n) const {
    if (n < 0 || n >= precision())
      throw std::out_of_range("Series: EGF index out of precision");
    const R& cn = c_[static_cast<std::size_t>(n)];
    if (cn.is_zero()) return R::zero();
    return cn * R::from_rational(Rational(factorial(n), mpz_class(1)));
  }

 private:
  void require_same_precision(const Series& other) const {
    if (precision() != other.precision())
      throw std::invalid_argument("Series: precision mismatch");
  }
  std::vector<R> c_;
};

/// e^{a t} = sum a^n t^n / n! truncated to N coefficients.
template <class R>
Series<R> exp_linear(const R& a, int precision) {
  Series<R> s(precision);
  R term = R::one();
  s.set_coeff(0, term);
  for (int n = 1; n < precision; ++n) {
    term = term * a * R::from_rational(Rational(1, n));
    s.set_coeff(n, term);
  }
  return s;
}

/// e^{y t^2} = sum y^n t^{2n} / n! truncated to N coefficients.
template <class R>
Series<R> exp_quadratic(const R& y, int precision) {
  Series<R> s(precision);
  R term = R::one();
  s.set_coeff(0, term);
  for (int n = 1; 2 * n < precision; ++n) {
    term = term * y * R::from_rational(Rational(1, n));
    s.set_coeff(2 * n, term);
  }
  return s;
}

/// Reinterpret scalar coefficients as constant polynomials, so a kernel
/// computed over the scalar field can be multiplied with e^{xt}.
template <class R>
Series<Poly<R>> lift_to_poly(const Series<R>& s) {
  Series<Poly<R>> r(s.precision());
  for (int k = 0; k < s.precision(); ++k)
    if (!s.coeff(k).is_zero()) r.set_coeff(k, Poly<R>(s.coeff(k)));
  return r;
}

}  // namespace apogen
