#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "qsc/arith.hpp"
#include "qsc/quaternion.hpp"

namespace qsc {

// A 3x3 matrix with exact rational entries.
struct Mat3 {
  std::array<std::array<Rat, 3>, 3> a{};

  static Mat3 identity() {
    Mat3 m;
    for (int r = 0; r < 3; ++r) m.a[r][r] = 1;
    return m;
  }

  Mat3 transpose() const {
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m.a[c][r] = a[r][c];
    }
    return m;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 z;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        Rat s = 0;
        for (int t = 0; t < 3; ++t) s += x.a[r][t] * y.a[t][c];
        z.a[r][c] = s;
      }
    }
    return z;
  }

  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
  friend bool operator!=(const Mat3& x, const Mat3& y) { return !(x == y); }
};

inline Rat det(const Mat3& m) {
  return m.a[0][0] * (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]) -
         m.a[0][1] * (m.a[1][0] * m.a[2][2] - m.a[1][2] * m.a[2][0]) +
         m.a[0][2] * (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]);
}

inline bool is_special_orthogonal(const Mat3& m) {
  return m * m.transpose() == Mat3::identity() && det(m) == 1;
}

// The rotation action of a nonzero quaternion x on the imaginary space:
// theta(x) v = x v conj(x) / |x|^2, an exact special-orthogonal matrix with
// rational entries.  Central quaternions map to the identity, and
// theta(s x) = theta(x) for any nonzero rational s, so theta descends to the
// central classes.
inline Mat3 theta(const Quaternion& x) {
  if (is_zero(x)) throw zero_quaternion_error("theta: zero quaternion");
  const Rat n = norm_sq(x);
  const Rat &a = x.x0, &b = x.x1, &c = x.x2, &d = x.x3;
  Mat3 m;
  m.a[0][0] = (a * a + b * b - c * c - d * d) / n;
  m.a[0][1] = 2 * (b * c - a * d) / n;
  m.a[0][2] = 2 * (b * d + a * c) / n;
  m.a[1][0] = 2 * (b * c + a * d) / n;
  m.a[1][1] = (a * a - b * b + c * c - d * d) / n;
  m.a[1][2] = 2 * (c * d - a * b) / n;
  m.a[2][0] = 2 * (b * d - a * c) / n;
  m.a[2][1] = 2 * (c * d + a * b) / n;
  m.a[2][2] = (a * a - b * b - c * c + d * d) / n;
  return m;
}

// Axis and angle of the rotation theta(x): the axis is the primitive integer
// direction of the imaginary part, cos(omega) = (x0^2 - x1^2 - x2^2 - x3^2)
// / |x|^2, and cos(omega/2)^2 = x0^2 / |x|^2 (with the sign of cos(omega/2)
// matching the sign of x0 for the given representative).  Rotations by
// omega = 0, i.e. central x, have no axis and are rejected.
struct AxisAngle {
  std::array<Int, 3> axis;
  Rat cos_omega;
  Rat cos_half_sq;
  int cos_half_sign = 0;  // sign of cos(omega/2) for this representative
};

inline AxisAngle rotation_axis_angle(const Quaternion& x) {
  if (is_zero(x)) throw zero_quaternion_error("rotation_axis_angle: zero quaternion");
  if (is_central(x)) {
    throw central_quaternion_error(
        "rotation_axis_angle: " + format_quaternion(x) +
        " is central and rotates by 0");
  }
  AxisAngle out;
  out.axis = tau_direction(x);
  const Rat n = norm_sq(x);
  out.cos_omega =
      (x.x0 * x.x0 - x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3) / n;
  out.cos_half_sq = x.x0 * x.x0 / n;
  out.cos_half_sign = x.x0 == 0 ? 0 : (x.x0 > 0 ? 1 : -1);
  return out;
}

inline std::string format_mat3(const Mat3& m) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    os << (r == 0 ? "[" : " ");
    os << "[";
    for (int c = 0; c < 3; ++c) {
      if (c) os << ", ";
      os << Rat(m.a[r][c]).str();
    }
    os << "]";
    os << (r == 2 ? "]" : "\n");
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  return os << format_mat3(m);
}

}  // namespace qsc
