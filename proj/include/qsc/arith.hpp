#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>

#include "qsc/error.hpp"

namespace qsc {

// Exact arbitrary-precision integers and rationals.  All group-theoretic
// decisions in this library reduce to identities between such numbers; no
// floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Deterministic trial-division primality test.  Intended for the prime
// parameters p, l of the lattices, which are small (two-digit) in every
// use we care about; still correct for any 64-bit sized input.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool is_odd_prime(const Int& n) { return n > 2 && is_prime(n); }

// Throws not_odd_prime_error unless q is an odd rational prime.
inline void require_odd_prime(const Int& q, const char* what) {
  if (!is_odd_prime(q)) {
    throw not_odd_prime_error(std::string(what) + " must be an odd prime, got " +
                              q.str());
  }
}

// Legendre symbol (n/p) for an odd prime p, computed by Euler's criterion:
// n^((p-1)/2) mod p, read as 0, +1 or -1.
inline int legendre_symbol(const Int& n, const Int& p) {
  require_odd_prime(p, "modulus of legendre_symbol");
  Int r = n % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw error("legendre_symbol: Euler criterion failed for n=" + n.str() +
              ", p=" + p.str());
}

// Returns sqrt(n) if n is a perfect square, nothing otherwise.
inline std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Writes n = p^r * l^s if possible.  Returns the exponent pair (r, s), or
// nothing when n has any other prime factor (or n <= 0).
inline std::optional<std::pair<int, int>> factor_over_pair(Int n, const Int& p,
                                                           const Int& l) {
  if (n <= 0) return std::nullopt;
  int r = 0;
  int s = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  while (n % l == 0) {
    n /= l;
    ++s;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(r, s);
}

// Modular inverse for a unit a mod m (m prime in our uses).
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (r == 0) throw domain_error("mod_inverse: " + a.str() + " is not a unit mod " + m.str());
  return boost::multiprecision::powm(r, m - 2, m);
}

inline Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace qsc
