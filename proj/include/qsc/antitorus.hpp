#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qsc/membership.hpp"
#include "qsc/presentation.hpp"

namespace qsc {

// Outcome of the subgroup dichotomy for a pair (a, b) with a horizontal and
// b vertical: the subgroup <a, b> is Z x Z when the lifts commute, a free
// group whose generators span an anti-torus when they do not, and degenerate
// when either element is trivial.
enum class PairClass { trivial_factor, z_cross_z, anti_torus };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::trivial_factor: return "TRIVIAL_FACTOR";
    case PairClass::z_cross_z: return "Z_CROSS_Z";
    default: return "ANTI_TORUS";
  }
}

namespace detail {

// Checks that g lies in Gamma_{p,l} and is purely horizontal (norm p^r) or
// purely vertical (norm l^s) as requested.
inline void require_side_element(const GroupElement& g, const Int& p,
                                 const Int& l, Side side, const char* role) {
  Admissibility adm = is_admissible(g.rep(), p, l);
  if (!adm.ok) {
    throw not_admissible_error(std::string(role) + " " +
                               format_quaternion(g.rep()) +
                               " is not an element of Gamma_{" + p.str() + "," +
                               l.str() + "}");
  }
  if (g.is_identity()) return;
  bool pure = side == Side::h ? adm.s == 0 : adm.r == 0;
  if (!pure) {
    throw side_mismatch_error(
        std::string(role) + " " + format_quaternion(g.rep()) +
        " must be purely " + (side == Side::h ? "horizontal" : "vertical") +
        ", but its norm is " + p.str() + "^" + std::to_string(adm.r) + " * " +
        l.str() + "^" + std::to_string(adm.s));
  }
}

}  // namespace detail

// Decides the isomorphism type of <a, b> for a horizontal a and vertical b:
// TRIVIAL_FACTOR if either is the identity, Z_CROSS_Z if the integer lifts
// commute (equivalently their imaginary parts are parallel -- impossible for
// a nontrivial mixed pair, but decided exactly anyway), ANTI_TORUS
// otherwise.
inline PairClass classify_pair(const Int& p, const Int& l, const GroupElement& a,
                               const GroupElement& b) {
  detail::require_side_element(a, p, l, Side::h, "horizontal element");
  detail::require_side_element(b, p, l, Side::v, "vertical element");
  if (a.is_identity() || b.is_identity()) return PairClass::trivial_factor;
  return commutes(a.rep(), b.rep()) ? PairClass::z_cross_z
                                    : PairClass::anti_torus;
}

// Searches for commuting nontrivial powers a^r, b^s with 1 <= r, s <= bound.
// Because commuting is equivalent to parallel imaginary parts and powers
// keep the imaginary direction (or become central), any commuting power pair
// is found at the first central power; for an anti-torus the scan returns
// nothing.
inline std::optional<std::pair<int, int>> power_commute_scan(
    const GroupElement& a, const GroupElement& b, int bound) {
  Quaternion ar = a.rep();
  for (int r = 1; r <= bound; ++r) {
    Quaternion bs = b.rep();
    for (int s = 1; s <= bound; ++s) {
      if (is_central(ar) || is_central(bs) || commutes(ar, bs)) {
        return std::make_pair(r, s);
      }
      bs = bs * b.rep();
    }
    ar = ar * a.rep();
  }
  return std::nullopt;
}

// The quadratic-form invariant of b: writing the canonical representative as
// b0 + c1 i + c2 j + c3 k with primitive imaginary direction (c1, c2, c3)
// (gcd 1), n(b) = c1^2 + c2^2 + c3^2.  Central elements have no invariant.
inline Int n_invariant(const GroupElement& b) {
  std::array<Int, 3> dir = tau_direction(b.rep());
  return dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
}

// Evidence gathered when testing whether the centralizer of a vertical
// element b is cyclic (equivalently, whether every horizontal a forms an
// anti-torus with b).  Two independent sufficient criteria are evaluated:
//
//  * the local permutation rho_v(b) of the horizontal letters is
//    fixpoint-free (only applicable when b is a single vertical letter);
//  * the quadratic-form criterion on n = n_invariant(b): the Legendre
//    symbols satisfy (-n/p) = -1 and (-n/l) = +1.
//
// Either criterion alone certifies a cyclic centralizer; if both fail the
// test is inconclusive (not a disproof).
struct CentralizerCertificate {
  bool single_letter = false;
  std::optional<bool> rho_fixpoint_free;  // set only when single_letter
  Int n_b = 0;
  int legendre_p = 0, legendre_l = 0;
  bool legendre_ok = false;

  bool certified() const {
    return (rho_fixpoint_free && *rho_fixpoint_free) || legendre_ok;
  }
};

inline CentralizerCertificate centralizer_is_cyclic(const Presentation& pres,
                                                    const GroupElement& b) {
  detail::require_side_element(b, pres.p, pres.l, Side::v, "vertical element");
  if (b.is_identity()) {
    throw domain_error("centralizer_is_cyclic: identity element");
  }
  CentralizerCertificate cert;
  if (auto it = pres.vgens.letter_of.find(b); it != pres.vgens.letter_of.end()) {
    cert.single_letter = true;
    Letter bl{Side::v, it->second.first, it->second.second};
    cert.rho_fixpoint_free = is_fixpoint_free(rho_v(pres, {bl}));
  }
  cert.n_b = n_invariant(b);
  cert.legendre_p = legendre_symbol(-cert.n_b, pres.p);
  cert.legendre_l = legendre_symbol(-cert.n_b, pres.l);
  cert.legendre_ok = cert.legendre_p == -1 && cert.legendre_l == 1;
  return cert;
}

// A witness for the norm-form search: t^2 + 4 n u^2 = p^r l^s with the
// required coprimality.
struct NormFormWitness {
  Int t, u;
  int r, s;
};

// Enumerates solutions of t^2 + 4 n u^2 = p^r l^s with 1 <= t <= t_max,
// 1 <= u <= u_max, r + s <= exp_max, gcd(t, u) = gcd(t, pl) = gcd(u, pl) = 1.
// By default both exponents are required to be >= 1: a witness with r = 0 is
// degenerate (t + 2uc is then itself a vertical element, e.g. b itself for
// n = n(b), which commutes with b for free), so the anti-commutation
// criterion quantifies over positive exponents.  Pass
// allow_zero_exponents = true to widen the search to r, s >= 0.
inline std::vector<NormFormWitness> norm_form_search(
    const Int& n, const Int& p, const Int& l, const Int& t_max, const Int& u_max,
    int exp_max, bool allow_zero_exponents = false) {
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (n <= 0) throw domain_error("norm_form_search: n must be positive");
  std::vector<NormFormWitness> out;
  const int lo = allow_zero_exponents ? 0 : 1;
  const Int pl = p * l;
  for (int r = lo; r <= exp_max; ++r) {
    for (int s = lo; r + s <= exp_max; ++s) {
      Int target = 1;
      for (int t = 0; t < r; ++t) target *= p;
      for (int t = 0; t < s; ++t) target *= l;
      for (Int u = 1; u <= u_max; ++u) {
        if (boost::multiprecision::gcd(u, pl) != 1) continue;
        Int rest = target - 4 * n * u * u;
        if (rest < 1) break;  // larger u only shrinks rest
        auto t = perfect_square_root(rest);
        if (!t || *t < 1 || *t > t_max) continue;
        if (boost::multiprecision::gcd(*t, u) != 1) continue;
        if (boost::multiprecision::gcd(*t, pl) != 1) continue;
        out.push_back({*t, u, r, s});
      }
    }
  }
  return out;
}

}  // namespace qsc
