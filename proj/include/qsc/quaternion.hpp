#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "qsc/arith.hpp"
#include "qsc/error.hpp"

namespace qsc {

// A Hamilton quaternion x0 + x1*i + x2*j + x3*k with exact rational
// coordinates.  Arithmetic follows the usual relations i^2 = j^2 = k^2 = -1,
// ij = k, jk = i, ki = j.
struct Quaternion {
  Rat x0{0}, x1{0}, x2{0}, x3{0};

  Quaternion() = default;
  Quaternion(Rat a, Rat b, Rat c, Rat d)
      : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}
  Quaternion(long a, long b, long c, long d) : x0(a), x1(b), x2(c), x3(d) {}

  Rat& operator[](int idx) {
    switch (idx) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }
  const Rat& operator[](int idx) const {
    switch (idx) {
      case 0: return x0;
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) {
    return !(a == b);
  }
};

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

inline Quaternion operator-(const Quaternion& a) {
  return {-a.x0, -a.x1, -a.x2, -a.x3};
}

// Hamilton product.
inline Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return mul(a, b);
}

inline Quaternion operator*(const Rat& s, const Quaternion& a) {
  return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
}

inline Quaternion conj(const Quaternion& q) {
  return {q.x0, -q.x1, -q.x2, -q.x3};
}

// Reduced norm |q|^2 = x0^2 + x1^2 + x2^2 + x3^2.  Nonnegative, zero only
// for the zero quaternion, and multiplicative: |ab|^2 = |a|^2 |b|^2.
inline Rat norm_sq(const Quaternion& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

inline bool is_zero(const Quaternion& q) {
  return q.x0 == 0 && q.x1 == 0 && q.x2 == 0 && q.x3 == 0;
}

// True iff q is a nonzero real quaternion, i.e. lies in the centre of the
// multiplicative group of nonzero quaternions.
inline bool is_central(const Quaternion& q) {
  return q.x0 != 0 && q.x1 == 0 && q.x2 == 0 && q.x3 == 0;
}

inline bool is_integral(const Quaternion& q) {
  return boost::multiprecision::denominator(q.x0) == 1 &&
         boost::multiprecision::denominator(q.x1) == 1 &&
         boost::multiprecision::denominator(q.x2) == 1 &&
         boost::multiprecision::denominator(q.x3) == 1;
}

inline Quaternion power(const Quaternion& q, unsigned long e) {
  Quaternion acc(1, 0, 0, 0);
  for (unsigned long t = 0; t < e; ++t) acc = acc * q;
  return acc;
}

// Two nonzero quaternions commute iff their imaginary parts are linearly
// dependent over Q, i.e. the cross product of the vectors (x1,x2,x3)
// vanishes.  This is decided exactly, without forming the products.
inline bool commutes(const Quaternion& a, const Quaternion& b) {
  if (is_zero(a) || is_zero(b)) {
    throw zero_quaternion_error("commutes: arguments must be nonzero");
  }
  return a.x2 * b.x3 - a.x3 * b.x2 == 0 && a.x3 * b.x1 - a.x1 * b.x3 == 0 &&
         a.x1 * b.x2 - a.x2 * b.x1 == 0;
}

// Direction of the imaginary part as a primitive integer vector whose first
// nonzero entry is positive.  Throws for real (or zero) quaternions, which
// have no axis.
inline std::array<Int, 3> tau_direction(const Quaternion& q) {
  if (q.x1 == 0 && q.x2 == 0 && q.x3 == 0) {
    throw real_quaternion_error("tau_direction: quaternion has no imaginary part");
  }
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int den = boost::multiprecision::lcm(
      boost::multiprecision::lcm(denominator(q.x1), denominator(q.x2)),
      denominator(q.x3));
  std::array<Int, 3> v = {numerator(q.x1) * (den / denominator(q.x1)),
                          numerator(q.x2) * (den / denominator(q.x2)),
                          numerator(q.x3) * (den / denominator(q.x3))};
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, abs_int(c));
  for (Int& c : v) c /= g;
  for (const Int& c : v) {
    if (c != 0) {
      if (c < 0) {
        for (Int& w : v) w = -w;
      }
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Canonical representatives of classes modulo the centre.
//
// Two nonzero quaternions define the same element of the quotient by the
// centre (equivalently, the same image under the embedding into the product
// of projective linear groups) iff they differ by a nonzero rational scalar.
// Each such ray contains exactly one integer quaternion that is primitive
// (coordinate gcd 1) with positive first nonzero coordinate; GroupElement
// stores that representative.
// ---------------------------------------------------------------------------

class GroupElement;

inline GroupElement reduce_canonical(const Quaternion& q);

class GroupElement {
 public:
  GroupElement() : rep_(1, 0, 0, 0) {}

  // The primitive integer representative with positive leading coordinate.
  const Quaternion& rep() const { return rep_; }

  bool is_identity() const { return rep_ == Quaternion(1, 0, 0, 0); }

  // Integer norm of the representative; well defined on the class only up to
  // squares of rationals, so callers should treat it as a property of the
  // stored representative.
  Int rep_norm() const {
    return boost::multiprecision::numerator(norm_sq(rep_));
  }

  GroupElement inverse() const {
    GroupElement g;
    g.rep_ = conj(rep_);
    return normalize_sign(g);
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return reduce_canonical(a.rep_ * b.rep_);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
  // Lexicographic order on representatives; used for deterministic sorting
  // and as a map key, with no algebraic meaning.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    for (int c = 0; c < 4; ++c) {
      if (a.rep_[c] != b.rep_[c]) return a.rep_[c] < b.rep_[c];
    }
    return false;
  }

 private:
  static GroupElement normalize_sign(GroupElement g) {
    for (int c = 0; c < 4; ++c) {
      if (g.rep_[c] != 0) {
        if (g.rep_[c] < 0) g.rep_ = -g.rep_;
        break;
      }
    }
    return g;
  }

  friend GroupElement reduce_canonical(const Quaternion& q);
  Quaternion rep_;
};

// Scale q to its canonical class representative.  Throws for q = 0, which
// represents no group element.
inline GroupElement reduce_canonical(const Quaternion& q) {
  if (is_zero(q)) {
    throw zero_quaternion_error("reduce_canonical: zero quaternion");
  }
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int den = 1;
  for (int c = 0; c < 4; ++c) {
    den = boost::multiprecision::lcm(den, denominator(q[c]));
  }
  std::array<Int, 4> v;
  for (int c = 0; c < 4; ++c) {
    v[c] = numerator(q[c]) * (den / denominator(q[c]));
  }
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, abs_int(c));
  for (Int& c : v) c /= g;
  for (const Int& c : v) {
    if (c != 0) {
      if (c < 0) {
        for (Int& w : v) w = -w;
      }
      break;
    }
  }
  GroupElement e;
  e.rep_ = Quaternion(Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3]));
  return e;
}

// ---------------------------------------------------------------------------
// Text form: integer quaternion literals such as "1+2i", "-5+j+k", "3".
// ---------------------------------------------------------------------------

namespace detail {

inline void append_term(std::string& out, const Rat& c, const char* unit) {
  if (c == 0) return;
  std::string coeff = c.str();
  bool neg = !coeff.empty() && coeff[0] == '-';
  if (neg) coeff.erase(0, 1);
  if (*unit != '\0' && coeff == "1") coeff.clear();
  if (out.empty()) {
    if (neg) out += '-';
  } else {
    out += neg ? '-' : '+';
  }
  out += coeff;
  out += unit;
}

}  // namespace detail

inline std::string format_quaternion(const Quaternion& q) {
  std::string out;
  detail::append_term(out, q.x0, "");
  detail::append_term(out, q.x1, "i");
  detail::append_term(out, q.x2, "j");
  detail::append_term(out, q.x3, "k");
  if (out.empty()) out = "0";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << format_quaternion(q);
}

// Parses an integer quaternion literal: an optional-signed sum of terms
// "<int>", "<int>i", "i", "j", "k" etc., with no whitespace.  Examples:
// "1+2i", "-5+j+k", "0", "3-2i+2j-17k".
inline Quaternion parse_quaternion(std::string_view text) {
  if (text.empty()) throw parse_error("empty quaternion literal");
  Quaternion q(0, 0, 0, 0);
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      if (pos == text.size()) throw parse_error("dangling sign in quaternion literal");
    } else if (pos != 0) {
      throw parse_error("expected '+' or '-' at position " + std::to_string(pos) +
                        " in quaternion literal '" + std::string(text) + "'");
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    Int mag;
    bool have_digits = pos > start;
    if (have_digits) {
      mag = Int(std::string(text.substr(start, pos - start)));
    } else {
      mag = 1;
    }
    int unit = 0;
    if (pos < text.size() &&
        (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = 1 + (text[pos] - 'i');
      ++pos;
    } else if (!have_digits) {
      throw parse_error("expected digits or unit at position " +
                        std::to_string(start) + " in quaternion literal '" +
                        std::string(text) + "'");
    }
    if (seen[unit]) {
      throw parse_error("repeated component in quaternion literal '" +
                        std::string(text) + "'");
    }
    seen[unit] = true;
    q[unit] = Rat(sign * mag);
  }
  return q;
}

}  // namespace qsc
