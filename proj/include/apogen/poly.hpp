#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apogen/rational.hpp"

namespace apogen {

/**
 * @brief Dense univariate polynomial over a commutative coefficient type K.
 *
 * Coefficients are stored ascending by degree with no trailing zeros; the
 * zero polynomial has an empty coefficient vector and degree -1.  Division,
 * gcd and antiderivative additionally require K to be a field.
 *
 * Two instantiations carry the whole library: Poly<Rational> (polynomials in
 * the deformation parameter, the building block of RatFun) and Poly<F> over a
 * coefficient field F (polynomials in x, aliased XPoly below).
 */
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(K constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(K::one()); }
  static Poly monomial(int deg, K coeff = K::one()) {
    if (deg < 0) throw std::invalid_argument("Poly: negative degree");
    if (coeff.is_zero()) return Poly();
    std::vector<K> c(static_cast<std::size_t>(deg) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly from_int(long n) { return Poly(K::from_int(n)); }
  static Poly from_rational(const Rational& q) {
    return Poly(K::from_rational(q));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of x^i; zero beyond the degree.
  const K& coeff(int i) const {
    static const K kZero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<K>& coeffs() const { return c_; }

  const K& lead() const {
    if (is_zero()) throw std::domain_error("Poly: lead of zero polynomial");
    return c_.back();
  }
  K constant_term() const { return coeff(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
      if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<K> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    Poly r;
    r.c_ = std::move(c);  // negation cannot introduce trailing zeros
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const K& s) {
    if (s.is_zero()) return Poly();
    std::vector<K> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(long e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly base = *this, acc = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  /// Euclidean division (K must be a field): a == q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly r = a;
    std::vector<K> q;
    const int db = b.degree();
    if (r.degree() >= db) q.resize(static_cast<std::size_t>(r.degree() - db) + 1);
    const K inv_lead = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= db) {
      const int shift = r.degree() - db;
      K f = r.lead() * inv_lead;
      q[static_cast<std::size_t>(shift)] = f;
      // r -= f * x^shift * b, done in place
      for (int i = 0; i <= db; ++i) {
        std::size_t k = static_cast<std::size_t>(i + shift);
        r.c_[k] = r.c_[k] - f * b.c_[static_cast<std::size_t>(i)];
      }
      r.trim();
    }
    return {Poly(std::move(q)), std::move(r)};
  }
  friend Poly operator/(const Poly& a, const Poly& b) {
    return divmod(a, b).first;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    return divmod(a, b).second;
  }

  /// Exact division; throws if b does not divide a.
  friend Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
  }

  /// Plain monic Euclidean gcd over a field.  Poly<Rational> callers should
  /// prefer qpoly_gcd (same result, structured fast paths).
  friend Poly gcd_euclid(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  K eval(const K& x) const {
    K acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = c_[i] * K::from_int(static_cast<long>(i));
    return Poly(std::move(c));
  }

  /// Antiderivative with zero constant term (K must be a field).
  Poly antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<K> c(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i + 1] = c_[i] * K::from_rational(Rational(1, static_cast<long>(i) + 1));
    return Poly(std::move(c));
  }

  /// p(u*x + v) by Horner; O(deg^2) coefficient operations.
  Poly compose_affine(const K& u, const K& v) const {
    Poly lin(std::vector<K>{v, u});
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
  }
  /// p(x + c): the Taylor shift used all over the multiplication formulas.
  Poly shift(const K& c) const { return compose_affine(K::one(), c); }
  /// p(s*x): coefficient k picks up s^k.
  Poly scale_arg(const K& s) const {
    std::vector<K> c(c_.size());
    K sk = K::one();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c[i] = c_[i] * sk;
      sk = sk * s;
    }
    return Poly(std::move(c));
  }
  /// p(-x).
  Poly reflect() const {
    std::vector<K> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i] = (i % 2 == 0) ? c_[i] : -c_[i];
    Poly r;
    r.c_ = std::move(c);
    return r;
  }
  /// p(x^m): index dilation, the substitution behind lambda -> lambda^m.
  Poly dilate(int m) const {
    if (m <= 0) throw std::invalid_argument("Poly: dilate needs m >= 1");
    if (is_zero() || m == 1) return *this;
    std::vector<K> c(static_cast<std::size_t>(degree()) * m + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * m] = c_[i];
    Poly r;
    r.c_ = std::move(c);
    return r;
  }

  /// Deterministic human-readable form, highest degree first.
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const K& k = coeff(i);
      if (k.is_zero()) continue;
      std::string cs = k.to_string();
      if (plain_number(cs)) {
        bool neg = cs[0] == '-';
        out += neg ? "-" : (out.empty() ? "" : "+");
        if (neg) cs = cs.substr(1);
        if (i == 0 || cs != "1") {
          out += cs;
          if (i != 0) out += "*";
        }
      } else {  // structured scalar (e.g. a rational function): parenthesize
        if (!out.empty()) out += "+";
        out += "(" + cs + ")";
        if (i != 0) out += "*";
      }
      if (i > 0) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static bool plain_number(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    bool slash = false;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] == '/' && !slash) {
        slash = true;
        continue;
      }
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

}  // namespace apogen
