#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apogen {

/**
 * @brief Arbitrary-precision rational scalar.
 *
 * Canonical form is a class invariant: gcd(|num|, den) == 1, den > 0, the
 * sign lives on the numerator, zero is 0/1.  All operations are exact; there
 * is no floating point anywhere in this library.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, scalar literals
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p" or "p/q" (base 10, sign on the numerator). Anything else is
  /// rejected.
  static Rational parse(const std::string& s) {
    if (!looks_like_rational(s))
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_rational(const Rational& q) { return q; }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Integer power; negative exponents invert (zero base rejected there).
  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q" with q > 1, otherwise just "p".
  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  static bool looks_like_rational(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    return digits > 0 && i == s.size();
  }

  mpq_class v_;
};

inline std::string to_string(const Rational& q) { return q.to_string(); }

}  // namespace apogen
