#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/membership.hpp"
#include "qsc/so3.hpp"

namespace qsc {

// A word in two abstract symbols x, y with integer exponents, e.g.
// "y x^3 y^2 x y^-1".  Exponents multiply out in the total length.
struct ExponentTerm {
  char symbol;  // 'x' or 'y'
  long exponent;
};

using ExponentWord = std::vector<ExponentTerm>;

inline ExponentWord parse_exponent_word(std::string_view text) {
  ExponentWord w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok.empty() || (tok[0] != 'x' && tok[0] != 'y')) {
      throw parse_error("bad exponent-word token '" + tok + "'");
    }
    ExponentTerm term{tok[0], 1};
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3) {
        throw parse_error("bad exponent-word token '" + tok + "'");
      }
      std::size_t used = 0;
      std::string exp = tok.substr(2);
      try {
        term.exponent = std::stol(exp, &used);
      } catch (const std::exception&) {
        throw parse_error("bad exponent in token '" + tok + "'");
      }
      if (used != exp.size() || term.exponent == 0) {
        throw parse_error("bad exponent in token '" + tok + "'");
      }
    }
    w.push_back(term);
  }
  if (w.empty()) throw parse_error("empty exponent word");
  return w;
}

inline std::string format_exponent_word(const ExponentWord& w) {
  std::string out;
  for (const ExponentTerm& t : w) {
    if (!out.empty()) out += ' ';
    out += t.symbol;
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

// Total letter count with exponents multiplied out.
inline long exponent_word_length(const ExponentWord& w) {
  long n = 0;
  for (const ExponentTerm& t : w) n += std::labs(t.exponent);
  return n;
}

namespace detail {

// Substitutes quaternions for the symbols and multiplies out.  Negative
// exponents use the exact rational inverse conj(q) / |q|^2.
inline Quaternion evaluate_exponent_word(const ExponentWord& w,
                                         const Quaternion& x,
                                         const Quaternion& y) {
  Quaternion acc(1, 0, 0, 0);
  for (const ExponentTerm& t : w) {
    const Quaternion& base = t.symbol == 'x' ? x : y;
    Quaternion factor = base;
    if (t.exponent < 0) factor = Rat(1) / norm_sq(base) * conj(base);
    for (long e = 0; e < std::labs(t.exponent); ++e) acc = acc * factor;
  }
  return acc;
}

}  // namespace detail

// Checks whether w(x, y) = 1 holds in Gamma_{p,l}: substitutes the
// quaternions, multiplies out exactly, and tests that the product is a
// nonzero central quaternion (i.e. trivial modulo the centre).  Both x and y
// must represent elements of Gamma_{p,l}.
inline bool verify_relation(const Int& p, const Int& l, const ExponentWord& w,
                            const Quaternion& x, const Quaternion& y) {
  if (!is_admissible(x, p, l).ok) {
    throw not_admissible_error("verify_relation: " + format_quaternion(x) +
                               " is not in Gamma_{" + p.str() + "," + l.str() +
                               "}");
  }
  if (!is_admissible(y, p, l).ok) {
    throw not_admissible_error("verify_relation: " + format_quaternion(y) +
                               " is not in Gamma_{" + p.str() + "," + l.str() +
                               "}");
  }
  Quaternion prod = detail::evaluate_exponent_word(w, x, y);
  return is_central(prod);
}

// Transfers the relation to the rotation group: substitutes the exact
// rotation matrices theta(x), theta(y) (using the transpose as the inverse)
// and checks that the product is the identity matrix.  Because ker(theta) is
// exactly the centre, this agrees with verify_relation.
inline bool relation_transfer_check(const ExponentWord& w, const Quaternion& x,
                                    const Quaternion& y) {
  const Mat3 mx = theta(x);
  const Mat3 my = theta(y);
  const Mat3 mxi = mx.transpose();
  const Mat3 myi = my.transpose();
  Mat3 acc = Mat3::identity();
  for (const ExponentTerm& t : w) {
    const Mat3& factor =
        t.symbol == 'x' ? (t.exponent < 0 ? mxi : mx)
                        : (t.exponent < 0 ? myi : my);
    for (long e = 0; e < std::labs(t.exponent); ++e) acc = acc * factor;
  }
  return acc == Mat3::identity();
}

}  // namespace qsc
