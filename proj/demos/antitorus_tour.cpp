// A small tour of Gamma_{5,17}: builds the square presentation, classifies
// the pair (1+2i, 1+4k), certifies a cyclic centralizer, and computes a
// subgroup index by coset enumeration.

#include <iostream>

#include "qsc/qsc.hpp"

int main() {
  using namespace qsc;
  Presentation pres = build_squares(5, 17);
  std::cout << "Gamma_{5,17}: " << pres.m() << "+" << pres.n()
            << " generators, " << pres.squares.size() << " squares, link "
            << (check_link(pres).complete() ? "complete" : "broken") << "\n\n";

  GroupElement a = reduce_canonical(Quaternion(1, 2, 0, 0));
  GroupElement b = reduce_canonical(Quaternion(1, 0, 0, 4));
  std::cout << "pair (1+2i, 1+4k): "
            << to_string(classify_pair(5, 17, a, b)) << "\n";
  if (auto hit = power_commute_scan(a, b, 5)) {
    std::cout << "commuting powers (" << hit->first << "," << hit->second
              << ")\n";
  } else {
    std::cout << "no commuting powers up to exponent 5\n";
  }

  GroupElement c = reduce_canonical(Quaternion(3, 2, 2, 0));
  CentralizerCertificate cert = centralizer_is_cyclic(pres, c);
  std::cout << "\ncentralizer of 3+2i+2j: n(b) = " << cert.n_b << ", (-n/5) = "
            << cert.legendre_p << ", (-n/17) = " << cert.legendre_l
            << (cert.certified() ? "  => cyclic" : "  => inconclusive") << "\n";

  std::cout << "\nfactoring (1+2i)(1+4k): ";
  Word w = factor_to_word(Quaternion(1, 2, 0, 0) * Quaternion(1, 0, 0, 4), pres);
  std::cout << w.str() << "\n";

  CosetTable ct = todd_coxeter(
      pres, {factor_to_word(Quaternion(1, 2, 0, 0), pres),
             factor_to_word(Quaternion(1, 0, 0, 4), pres)});
  std::cout << "\n[Gamma_{5,17} : <1+2i, 1+4k>] = " << ct.index() << "\n";
  return 0;
}
