#pragma once

#include <array>

#include "qsc/arith.hpp"
#include "qsc/quaternion.hpp"

namespace qsc {

// Parameters of the 2x2 matrix embedding modulo p^k: a solution (c, d) of
// c^2 + d^2 + 1 = 0 mod p^k, found by brute force mod p and refined by
// Hensel lifting.  For p = 1 mod 4 the solution has d = 0 (and c the
// smallest square root of -1); otherwise the lexicographically smallest
// (c, d) mod p is lifted along the coordinate with invertible derivative,
// preferring c.
struct PadicParams {
  Int p;
  int k = 1;
  Int pk;  // p^k
  Int c, d;
};

inline PadicParams solve_cd(const Int& p, int k) {
  require_odd_prime(p, "p");
  if (k < 1) throw domain_error("solve_cd: k must be >= 1");
  PadicParams par;
  par.p = p;
  par.k = k;
  par.pk = 1;
  for (int t = 0; t < k; ++t) par.pk *= p;

  // Base solution mod p.  For p = 1 mod 4 take d = 0 and the smallest square
  // root c of -1; otherwise the lexicographically smallest pair (both
  // coordinates are then automatically nonzero mod p).
  bool found = false;
  if (p % 4 == 1) {
    for (Int c = 1; c < p; ++c) {
      if ((c * c + 1) % p == 0) {
        par.c = c;
        par.d = 0;
        found = true;
        break;
      }
    }
  } else {
    for (Int c = 0; c < p && !found; ++c) {
      for (Int d = 0; d < p; ++d) {
        if ((c * c + d * d + 1) % p == 0) {
          par.c = c;
          par.d = d;
          found = true;
          break;
        }
      }
    }
  }
  if (!found) throw error("solve_cd: no solution mod " + p.str());

  // Lift along a coordinate with unit derivative 2c (or 2d) mod p.
  const bool lift_c = par.c % p != 0;
  Int modulus = p;
  for (int t = 2; t <= k; ++t) {
    Int next = modulus * p;
    Int f = mod_reduce(par.c * par.c + par.d * par.d + 1, next);
    if (f != 0) {
      Int step = f / modulus;  // f = step * p^(t-1), step in [0, p)
      Int& var = lift_c ? par.c : par.d;
      Int deriv = mod_reduce(2 * var, p);
      Int adj = mod_reduce(-step * mod_inverse(deriv, p), p);
      var += adj * modulus;
    }
    modulus = next;
  }
  par.c = mod_reduce(par.c, par.pk);
  par.d = mod_reduce(par.d, par.pk);
  if ((par.c * par.c + par.d * par.d + 1) % par.pk != 0) {
    throw error("solve_cd: lift failed for p=" + p.str() + ", k=" +
                std::to_string(k));
  }
  return par;
}

// A 2x2 matrix with entries mod p^k.
struct Mat2 {
  std::array<std::array<Int, 2>, 2> a;

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
};

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y, const Int& mod) {
  Mat2 z;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      z.a[r][c] =
          mod_reduce(x.a[r][0] * y.a[0][c] + x.a[r][1] * y.a[1][c], mod);
    }
  }
  return z;
}

inline Int mat2_det(const Mat2& x, const Int& mod) {
  return mod_reduce(x.a[0][0] * x.a[1][1] - x.a[0][1] * x.a[1][0], mod);
}

// The 2x2 embedding of an integer quaternion x modulo p^k:
//
//   [ x0 + x1 c + x3 d     -x1 d + x2 + x3 c ]
//   [ -x1 d - x2 + x3 c    x0 - x1 c - x3 d  ]
//
// It is multiplicative mod p^k and its determinant is |x|^2 mod p^k.
inline Mat2 psi_matrix_mod_pk(const Quaternion& x, const PadicParams& par) {
  if (!is_integral(x)) {
    throw domain_error("psi_matrix_mod_pk: quaternion must be integral, got " +
                       format_quaternion(x));
  }
  auto ival = [](const Rat& r) { return boost::multiprecision::numerator(r); };
  Int x0 = ival(x.x0), x1 = ival(x.x1), x2 = ival(x.x2), x3 = ival(x.x3);
  Mat2 m;
  m.a[0][0] = mod_reduce(x0 + x1 * par.c + x3 * par.d, par.pk);
  m.a[0][1] = mod_reduce(-x1 * par.d + x2 + x3 * par.c, par.pk);
  m.a[1][0] = mod_reduce(-x1 * par.d - x2 + x3 * par.c, par.pk);
  m.a[1][1] = mod_reduce(x0 - x1 * par.c - x3 * par.d, par.pk);
  return m;
}

}  // namespace qsc
