#include "test_util.hpp"

using namespace qsc;

namespace {

Mat3 from_rows(std::array<std::array<long, 3>, 3> num, long den) {
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m.a[r][c] = Rat(num[r][c], den);
  }
  return m;
}

Quaternion random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Quaternion q(static_cast<long>(rng() % 19) - 9,
                 static_cast<long>(rng() % 19) - 9,
                 static_cast<long>(rng() % 19) - 9,
                 static_cast<long>(rng() % 19) - 9);
    if (!is_zero(q)) return q;
  }
}

}  // namespace

TEST_CASE("the three reference rotation matrices") {
  CHECK(theta(Quaternion(1, 2, 0, 0)) ==
        from_rows({{{5, 0, 0}, {0, -3, -4}, {0, 4, -3}}}, 5));
  CHECK(theta(Quaternion(1, 0, 1, 1)) ==
        from_rows({{{-1, -2, 2}, {2, 1, 2}, {-2, 2, 1}}}, 3));
  CHECK(theta(Quaternion(1, 0, 0, 4)) ==
        from_rows({{{-15, -8, 0}, {8, -15, 0}, {0, 0, 17}}}, 17));
  for (const Quaternion& q : {Quaternion(1, 2, 0, 0), Quaternion(1, 0, 1, 1),
                              Quaternion(1, 0, 0, 4)}) {
    CHECK(is_special_orthogonal(theta(q)));
  }
}

TEST_CASE("theta is a homomorphism with the centre as kernel") {
  std::mt19937_64 rng(20250822);
  for (int trial = 0; trial < 200; ++trial) {
    Quaternion x = random_nonzero(rng), y = random_nonzero(rng);
    Mat3 mx = theta(x);
    CHECK(is_special_orthogonal(mx));
    CHECK(theta(x * y) == mx * theta(y));
    CHECK(theta(conj(x)) == mx.transpose());
    CHECK((mx * mx.transpose()) == Mat3::identity());
    // scaling invariance
    CHECK(theta(Rat(3, 7) * x) == mx);
    // kernel: exactly the central quaternions
    CHECK((theta(x) == Mat3::identity()) == is_central(x));
  }
  CHECK(theta(Quaternion(-6, 0, 0, 0)) == Mat3::identity());
  CHECK_THROWS_AS(theta(Quaternion(0, 0, 0, 0)), zero_quaternion_error);
}

TEST_CASE("axis and angle data") {
  AxisAngle aa = rotation_axis_angle(Quaternion(1, 2, 0, 0));
  CHECK(aa.axis == std::array<Int, 3>{1, 0, 0});
  CHECK(aa.cos_omega == Rat(-3, 5));
  CHECK(aa.cos_half_sq == Rat(1, 5));
  CHECK(aa.cos_half_sign == 1);

  aa = rotation_axis_angle(Quaternion(1, 0, 1, 1));
  CHECK(aa.axis == std::array<Int, 3>{0, 1, 1});
  CHECK(aa.cos_omega == Rat(-1, 3));
  CHECK(aa.cos_half_sq == Rat(1, 3));

  aa = rotation_axis_angle(Quaternion(0, 1, 0, 0));
  CHECK(aa.axis == std::array<Int, 3>{1, 0, 0});
  CHECK(aa.cos_omega == Rat(-1));
  CHECK(aa.cos_half_sq == Rat(0));
  CHECK(aa.cos_half_sign == 0);

  aa = rotation_axis_angle(Quaternion(-1, -2, 0, 0));
  CHECK(aa.axis == std::array<Int, 3>{1, 0, 0});
  CHECK(aa.cos_half_sign == -1);

  CHECK_THROWS_AS(rotation_axis_angle(Quaternion(4, 0, 0, 0)),
                  central_quaternion_error);
  CHECK_THROWS_AS(rotation_axis_angle(Quaternion(0, 0, 0, 0)),
                  zero_quaternion_error);
}

TEST_CASE("trace identity and fixed axis") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Quaternion x = random_nonzero(rng);
    if (is_central(x)) continue;
    Mat3 m = theta(x);
    AxisAngle aa = rotation_axis_angle(x);
    CHECK(m.a[0][0] + m.a[1][1] + m.a[2][2] == 1 + 2 * aa.cos_omega);
    // theta(x) fixes the rotation axis
    for (int r = 0; r < 3; ++r) {
      Rat image = m.a[r][0] * aa.axis[0] + m.a[r][1] * aa.axis[1] +
                  m.a[r][2] * aa.axis[2];
      CHECK(image == Rat(aa.axis[r]));
    }
    // cos(omega) = 2 cos^2(omega/2) - 1
    CHECK(aa.cos_omega == 2 * aa.cos_half_sq - 1);
  }
}
