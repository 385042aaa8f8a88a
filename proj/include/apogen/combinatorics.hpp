#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "apogen/rational.hpp"

namespace apogen {

inline mpz_class factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// C(n, k); zero when k > n or k < 0, negative n rejected.
inline mpz_class binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// n! / (v_1! ... v_k!) for a composition with sum(v) == n (else rejected).
inline mpz_class multinomial(int n, const std::vector<int>& parts) {
  long sum = 0;
  for (int v : parts) {
    if (v < 0) throw std::invalid_argument("multinomial: negative part");
    sum += v;
  }
  if (sum != n)
    throw std::invalid_argument("multinomial: parts do not sum to n");
  mpz_class r = factorial(n);
  for (int v : parts)
    if (v > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(),
                            factorial(v).get_mpz_t());
  return r;
}

/// Rising factorial (n)_k = n (n+1) ... (n+k-1), with (n)_0 = 1.
inline mpz_class rising_factorial(long n, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: negative k");
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= mpz_class(n + i);
  return r;
}

/// Number of compositions of total into `parts` ordered nonnegative parts.
inline mpz_class composition_count(int total, int parts) {
  if (total < 0 || parts < 0)
    throw std::invalid_argument("composition_count: negative input");
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, parts - 1);
}

/// Enumerates every vector (v_1..v_parts) of nonnegative integers with
/// sum == total, in ascending lexicographic order.  parts == 0 yields the
/// empty composition exactly when total == 0.
inline void for_each_composition(
    int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0 || parts < 0)
    throw std::invalid_argument("for_each_composition: negative input");
  if (parts == 0) {
    if (total == 0) fn({});
    return;
  }
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      v[static_cast<std::size_t>(idx)] = remaining;
      fn(v);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      v[static_cast<std::size_t>(idx)] = take;
      rec(idx + 1, remaining - take);
    }
  };
  rec(0, total);
}

inline Rational rational_of(const mpz_class& z) { return Rational(z); }

}  // namespace apogen
