#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qsc/arith.hpp"
#include "qsc/error.hpp"
#include "qsc/quaternion.hpp"

namespace qsc {

// Parity pattern of an integer quaternion relative to an odd prime q: the
// distinguished solutions of |x|^2 = q have x0 odd and x1, x2, x3 even when
// q = 1 mod 4, and x1 even with x0, x2, x3 odd when q = 3 mod 4.
enum class ParityClass {
  none,       // does not match the pattern for q
  one_mod4,   // x0 odd, x1, x2, x3 even      (q = 1 mod 4)
  three_mod4  // x1 even, x0, x2, x3 odd      (q = 3 mod 4)
};

// Tests x against the parity pattern of the residue class mod4 (1 or 3).
inline ParityClass parity_pattern(const Quaternion& x, int mod4) {
  if (!is_integral(x)) return ParityClass::none;
  auto odd = [](const Rat& r) {
    return boost::multiprecision::numerator(r) % 2 != 0;
  };
  if (mod4 == 1) {
    if (odd(x.x0) && !odd(x.x1) && !odd(x.x2) && !odd(x.x3)) {
      return ParityClass::one_mod4;
    }
  } else {
    if (odd(x.x0) && !odd(x.x1) && odd(x.x2) && odd(x.x3)) {
      return ParityClass::three_mod4;
    }
  }
  return ParityClass::none;
}

// Classifies the parity pattern of an integer quaternion for the prime q.
inline ParityClass parity_class(const Quaternion& x, const Int& q) {
  require_odd_prime(q, "parity_class prime");
  return parity_pattern(x, q % 4 == 1 ? 1 : 3);
}

// The distinguished set X_q of integer quaternions of norm q: those solutions
// of x0^2 + x1^2 + x2^2 + x3^2 = q satisfying the parity pattern above.
// By Jacobi's four-square count there are exactly 2(q+1) of them, closed
// under negation and conjugation, and none is real.
//
// A GeneratorSet additionally carries the induced letters: the (q+1)/2
// classes of X_q modulo the centre come in inverse pairs {g, g^-1} (the
// class of x is inverse to the class of conj(x)), and picking one class per
// pair yields the free generating letters g_1, ..., g_(q+1)/2.
struct GeneratorSet {
  Int q;
  // All 2(q+1) elements, sorted lexicographically by coordinates.
  std::vector<Quaternion> elements;
  // letter_reps[t] is the class representative of the letter with index t;
  // letters are assigned in ascending representative order.
  std::vector<GroupElement> letter_reps;
  // Class representative -> (letter index, sign).  Sign +1 marks the letter
  // itself, -1 its inverse.
  std::map<GroupElement, std::pair<int, int>> letter_of;
};

// Enumerates X_q (elements only; use build_generator_labels for letters).
inline GeneratorSet enumerate_Xq(const Int& q) {
  require_odd_prime(q, "generator-set prime");
  GeneratorSet gs;
  gs.q = q;
  long qi = q.convert_to<long>();
  long bound = 0;
  while ((bound + 1) * (bound + 1) <= qi) ++bound;
  const bool one_mod4 = qi % 4 == 1;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          if (a * a + b * b + c * c + d * d != qi) continue;
          bool ok = one_mod4 ? (a % 2 != 0 && b % 2 == 0 && c % 2 == 0 && d % 2 == 0)
                             : (a % 2 != 0 && b % 2 == 0 && c % 2 != 0 && d % 2 != 0);
          if (ok) gs.elements.emplace_back(a, b, c, d);
        }
      }
    }
  }
  auto lex = [](const Quaternion& u, const Quaternion& v) {
    for (int t = 0; t < 4; ++t) {
      if (u[t] != v[t]) return u[t] < v[t];
    }
    return false;
  };
  std::sort(gs.elements.begin(), gs.elements.end(), lex);
  if (Int(gs.elements.size()) != 2 * (q + 1)) {
    throw error("enumerate_Xq: expected " + Int(2 * (q + 1)).str() +
                " solutions for q=" + q.str() + ", found " +
                Int(gs.elements.size()).str());
  }
  return gs;
}

// Fills in the letter structure of gs: groups the 2(q+1) elements into
// (q+1)/2 inverse pairs of central classes and assigns letter indices in
// ascending order of class representative.
inline void build_generator_labels(GeneratorSet& gs) {
  gs.letter_reps.clear();
  gs.letter_of.clear();
  std::vector<GroupElement> classes;
  for (const Quaternion& x : gs.elements) classes.push_back(reduce_canonical(x));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (Int(classes.size()) != gs.q + 1) {
    throw error("build_generator_labels: expected " + Int(gs.q + 1).str() +
                " classes, found " + Int(classes.size()).str());
  }
  for (const GroupElement& g : classes) {
    if (gs.letter_of.count(g)) continue;
    GroupElement inv = g.inverse();
    if (inv == g) {
      throw error("build_generator_labels: class " + format_quaternion(g.rep()) +
                  " is its own inverse");
    }
    int idx = static_cast<int>(gs.letter_reps.size());
    gs.letter_reps.push_back(g);
    gs.letter_of.emplace(g, std::make_pair(idx, +1));
    gs.letter_of.emplace(inv, std::make_pair(idx, -1));
  }
  if (2 * gs.letter_reps.size() != gs.letter_of.size()) {
    throw error("build_generator_labels: letter pairing failed for q=" + gs.q.str());
  }
}

// Convenience: enumerate + label in one call.
inline GeneratorSet make_generator_set(const Int& q) {
  GeneratorSet gs = enumerate_Xq(q);
  build_generator_labels(gs);
  return gs;
}

// Looks up the letter of a central class: returns (letter index, sign) such
// that the class equals letter_reps[index]^sign.  Throws not_a_generator_error
// if the class does not come from X_q.
inline std::pair<int, int> lookup_letter(const GeneratorSet& gs,
                                         const GroupElement& g) {
  auto it = gs.letter_of.find(g);
  if (it == gs.letter_of.end()) {
    throw not_a_generator_error("lookup_letter: " + format_quaternion(g.rep()) +
                                " is not a generator class for q=" + gs.q.str());
  }
  return it->second;
}

}  // namespace qsc
