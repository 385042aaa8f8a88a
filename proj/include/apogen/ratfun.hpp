#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "apogen/detail/qpoly_gcd.hpp"
#include "apogen/poly.hpp"
#include "apogen/rational.hpp"

namespace apogen {

using QPoly = Poly<Rational>;

/**
 * @brief Rational function in one symbolic parameter over Q.
 *
 * Canonical form is a class invariant: gcd(num, den) == 1, den monic, and
 * zero is 0/1.  Equality is therefore componentwise.  The symbol is written
 * "L" in human-readable output; JSON output serializes the two coefficient
 * lists instead.
 *
 * Fraction arithmetic uses the classical reduced-operand optimizations: adds
 * only ever take a gcd against gcd(den1, den2), and multiplies only take the
 * two cross gcds, so the frequent structured cases (equal or nested power
 * denominators) stay cheap.
 */
class RatFun {
 public:
  RatFun() : num_(), den_(QPoly::one()) {}
  RatFun(const Rational& q) : num_(QPoly(q)), den_(QPoly::one()) {}  // NOLINT
  RatFun(QPoly num, QPoly den) { assign(std::move(num), std::move(den)); }
  explicit RatFun(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}

  /// The symbol itself (the polynomial "L").
  static RatFun symbol() {
    return RatFun(QPoly::monomial(1));
  }
  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(Rational(1)); }
  static RatFun from_int(long n) { return RatFun(Rational(n)); }
  static RatFun from_rational(const Rational& q) { return RatFun(q); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  /// Constant value when is_rational(); throws otherwise.
  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("RatFun: not a constant");
    return num_.constant_term();
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFun r;
    if (a.den_ == b.den_) {
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      r.reduce_by(detail::qpoly_gcd(r.num_, r.den_));
      return r;
    }
    QPoly g = detail::qpoly_gcd(a.den_, b.den_);
    if (g.is_one()) {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;  // already reduced: gcd(num,den) | g == 1
    } else {
      QPoly ar = div_exact(a.den_, g), br = div_exact(b.den_, g);
      r.num_ = a.num_ * br + b.num_ * ar;
      r.den_ = a.den_ * br;
      r.reduce_by(detail::qpoly_gcd(r.num_, g));  // gcd(num,den) divides g
    }
    r.make_monic();
    return r;
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    QPoly g1 = detail::qpoly_gcd(a.num_, b.den_);
    QPoly g2 = detail::qpoly_gcd(b.num_, a.den_);
    RatFun r;
    r.num_ = (g1.is_one() ? a.num_ : div_exact(a.num_, g1)) *
             (g2.is_one() ? b.num_ : div_exact(b.num_, g2));
    r.den_ = (g2.is_one() ? a.den_ : div_exact(a.den_, g2)) *
             (g1.is_one() ? b.den_ : div_exact(b.den_, g1));
    r.make_monic();
    return r;
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    return a * b.inverse();
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
  }

  RatFun pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun base = *this, acc = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  /// Canonical-form comparison; agrees with cross-multiplication equality.
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  /// Independent equality route (num1*den2 == num2*den1), used by tests to
  /// cross-check canonicalization.
  friend bool equal_cross(const RatFun& a, const RatFun& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Substitutes L -> L^m (a field endomorphism; preserves canonical form).
  RatFun subst_power(int m) const {
    if (m == 1) return *this;
    RatFun r;
    r.num_ = num_.dilate(m);
    r.den_ = den_.dilate(m);
    return r;  // dilation keeps the denominator monic and gcd == 1
  }

  /// Evaluate at a rational point; throws if the denominator vanishes there.
  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFun: pole at sample point");
    return num_.eval(x) / d;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string("L");
    std::string n = num_.to_string("L");
    std::string d = den_.to_string("L");
    // numerator: parenthesize sums and fractional coefficients; a leading
    // sign or a plain product parses correctly under left association
    bool n_parens = n.find('/') != std::string::npos;
    for (std::size_t i = 1; i < n.size() && !n_parens; ++i)
      if (n[i] == '+' || n[i] == '-') n_parens = true;
    if (n_parens) n = "(" + n + ")";
    // denominator: only a bare power of the variable may go unparenthesized
    bool d_pure = d == "L" ||
                  (d.rfind("L^", 0) == 0 &&
                   d.find_first_not_of("0123456789", 2) == std::string::npos);
    if (!d_pure) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void assign(QPoly num, QPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
    num_ = std::move(num);
    den_ = std::move(den);
    if (num_.is_zero()) {
      den_ = QPoly::one();
      return;
    }
    reduce_by(detail::qpoly_gcd(num_, den_));
    make_monic();
  }
  void reduce_by(const QPoly& g) {
    if (!g.is_one()) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    if (num_.is_zero()) den_ = QPoly::one();
  }
  void make_monic() {
    if (num_.is_zero()) {
      den_ = QPoly::one();
      return;
    }
    if (!den_.lead().is_one()) {
      Rational inv = den_.lead().inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  QPoly num_, den_;
};

inline std::string to_string(const RatFun& f) { return f.to_string(); }

}  // namespace apogen
