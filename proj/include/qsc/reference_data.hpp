#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsc/quaternion.hpp"
#include "qsc/relations.hpp"

namespace qsc {

// Published reference data for the groups Gamma_{3,5} and Gamma_{5,17},
// used by the verification suite: an independently derived presentation of
// Gamma_{3,5}, and two explicit relations witnessing that the corresponding
// pairs of quaternions generate non-free groups.

// One relator of the reference Gamma_{3,5} presentation, as the 4-tuple of
// integer lifts of its letters (inverse letters appear as conjugates).  The
// reference labeling is a_1 = 1+j+k, a_2 = 1+j-k, b_1 = 1+2i, b_2 = 1+2j,
// b_3 = 1+2k, which differs from the ascending labeling this library
// constructs; comparisons therefore go through central classes, never
// through letter names.
using ReferenceSquare = std::array<Quaternion, 4>;

inline std::vector<ReferenceSquare> reference_squares_gamma_3_5() {
  const Quaternion a1(1, 0, 1, 1), a2(1, 0, 1, -1);
  const Quaternion b1(1, 2, 0, 0), b2(1, 0, 2, 0), b3(1, 0, 0, 2);
  // Relators: a1 b1 a2 b2, a1 b2 a2 b1^-1, a1 b3 a2^-1 b1,
  //           a1 b3^-1 a1 b2^-1, a1 b1^-1 a2^-1 b3, a2 b3 a2 b2^-1.
  return {
      {a1, b1, a2, b2},
      {a1, b2, a2, conj(b1)},
      {a1, b3, conj(a2), b1},
      {a1, conj(b3), a1, conj(b2)},
      {a1, conj(b1), conj(a2), b3},
      {a2, b3, a2, conj(b2)},
  };
}

// Relation of length 106 witnessing that the group generated by 1+2i and
// 1+4k (inside the rationals' quaternion units) is not free; it holds in
// Gamma_{5,17} modulo the centre.
inline const char* nonfree_witness_relation_5_17() {
  return "x^3 y^2 x y^-1 x^2 y^-1 x^2 y^-1 x^-4 y^-2 x^-1 y x^-2 y^-1 x^-8 "
         "y^-1 x y^2 x y^-1 x^-2 y x^-1 y^-2 x^-2 y^-2 x^3 y x^-2 y^2 x^2 "
         "y^2 x y^-1 x^2 y x^-1 y^-2 x^-1 y x^8 y x^2 y^-1 x y^2 x^4 y "
         "x^-2 y x^-2 y x^-1 y^-2 x^-5 y^-1 x";
}

// Short relation witnessing that the group generated by 1+j+k and 1+2i is
// not free; it holds in Gamma_{3,5} modulo the centre.
inline const char* nonfree_witness_relation_3_5() {
  return "y x^3 y^2 x y^-1 x^-3 y^-2 x^-1";
}

}  // namespace qsc
