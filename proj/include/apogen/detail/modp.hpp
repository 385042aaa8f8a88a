#pragma once

#include <cstdint>
#include <vector>

namespace apogen::detail {

// Small fixed-modulus helpers for the gcd coprimality fast path.  All
// arithmetic is on uint64 residues with __int128 products.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);  // p prime
}

// Dense poly over GF(p), ascending coefficients, no trailing zeros enforced
// by the two helpers below.
inline void fp_trim(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd(a, b) over GF(p) by plain Euclid; inputs consumed.
inline int fp_gcd_degree(std::vector<std::uint64_t> a,
                         std::vector<std::uint64_t> b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // a mod b in place
    const std::uint64_t inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      if (f != 0) {
        for (std::size_t i = 0; i < b.size(); ++i) {
          std::uint64_t t = mulmod(f, b[i], p);
          std::uint64_t& c = a[shift + i];
          c = (c >= t) ? c - t : c + p - t;
        }
      }
      a.pop_back();
      fp_trim(a);
      if (a.empty()) break;
    }
    a.swap(b);
    fp_trim(b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Deterministic prime list for the fast path; all < 2^62 so mulmod is safe.
inline const std::vector<std::uint64_t>& fast_path_primes() {
  static const std::vector<std::uint64_t> primes = {
      2305843009213693951ULL,  // 2^61 - 1
      1000000007ULL, 998244353ULL, 2147483647ULL, 754974721ULL, 469762049ULL};
  return primes;
}

}  // namespace apogen::detail
