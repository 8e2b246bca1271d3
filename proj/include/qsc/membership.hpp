#pragma once

#include <optional>
#include <vector>

#include "qsc/word.hpp"

namespace qsc {

// Result of the admissibility test: whether a quaternion's class lies in
// Gamma_{p,l}, and if so the exponents of its norm p^r l^s.
struct Admissibility {
  bool ok = false;
  int r = 0, s = 0;
  ParityClass parity = ParityClass::none;
};

// A nonzero rational quaternion represents an element of Gamma_{p,l} iff its
// canonical integer representative x has |x|^2 = p^r l^s and x satisfies the
// parity pattern for |x|^2 mod 4.  Central quaternions reduce to the
// representative 1 and are admitted as the identity with exponents (0, 0).
inline Admissibility is_admissible(const Quaternion& q, const Int& p, const Int& l) {
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (is_zero(q)) throw zero_quaternion_error("is_admissible: zero quaternion");
  Admissibility out;
  GroupElement g = reduce_canonical(q);
  const Quaternion& x = g.rep();
  Int norm = g.rep_norm();
  auto exps = factor_over_pair(norm, p, l);
  if (!exps) return out;
  if (g.is_identity()) {
    out.ok = true;
    out.r = exps->first;
    out.s = exps->second;
    return out;
  }
  ParityClass pc = parity_pattern(x, norm % 4 == 1 ? 1 : 3);
  if (pc == ParityClass::none) return out;
  out.ok = true;
  out.r = exps->first;
  out.s = exps->second;
  out.parity = pc;
  return out;
}

namespace detail {

inline bool factor_step(const Presentation& pres, const Quaternion& cur,
                        std::vector<Letter>& acc) {
  if (cur.x1 == 0 && cur.x2 == 0 && cur.x3 == 0) return true;  // central residue
  struct Candidate {
    const GeneratorSet* gs;
    Side side;
    const Int* q;
  };
  const Candidate cands[2] = {{&pres.hgens, Side::h, &pres.p},
                              {&pres.vgens, Side::v, &pres.l}};
  for (const Candidate& cd : cands) {
    Rat nq = norm_sq(cur);
    if (boost::multiprecision::numerator(nq) % *cd.q != 0) continue;
    for (const Quaternion& g : cd.gs->elements) {
      Quaternion t = conj(g) * cur;
      bool divisible = true;
      for (int c = 0; c < 4; ++c) {
        if (boost::multiprecision::numerator(t[c]) % *cd.q != 0) {
          divisible = false;
          break;
        }
      }
      if (!divisible) continue;
      Quaternion rest(t.x0 / *cd.q, t.x1 / *cd.q, t.x2 / *cd.q, t.x3 / *cd.q);
      acc.push_back(pres.letter_of(cd.side, reduce_canonical(g)));
      if (factor_step(pres, rest, acc)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace detail

// Writes the class of q as a word in the generator letters, one letter per
// prime factor of the representative's norm (so the word length is r + s).
// Factoring peels generators from the left: if x = g * rest with |g|^2 = p
// then conj(g) * x is divisible by p and the quotient recurses.  Throws
// not_admissible_error when the class lies outside the group.
inline Word factor_to_word(const Quaternion& q, const Presentation& pres) {
  Admissibility adm = is_admissible(q, pres.p, pres.l);
  if (!adm.ok) {
    throw not_admissible_error("factor_to_word: " + format_quaternion(q) +
                               " does not represent an element of Gamma_{" +
                               pres.p.str() + "," + pres.l.str() + "}");
  }
  GroupElement g = reduce_canonical(q);
  Word w;
  w.pres = &pres;
  if (!detail::factor_step(pres, g.rep(), w.letters)) {
    throw no_factorization_error(
        "factor_to_word: no generator factorisation found for " +
        format_quaternion(g.rep()) + " (internal invariant violated)");
  }
  if (static_cast<int>(w.letters.size()) != adm.r + adm.s) {
    throw error("factor_to_word: word length " +
                std::to_string(w.letters.size()) + " differs from r+s = " +
                std::to_string(adm.r + adm.s));
  }
  return w;
}

}  // namespace qsc
