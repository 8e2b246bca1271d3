// Prints exact rational rotation matrices for the norm-3 and norm-5
// generators and their axis/angle data, illustrating the free subgroups of
// SO_3(Q) generated this way.

#include <iostream>

#include "qsc/qsc.hpp"

int main() {
  using namespace qsc;
  std::cout << "Exact rotations attached to small quaternions\n\n";
  for (const Quaternion& x :
       {Quaternion(1, 2, 0, 0), Quaternion(1, 0, 2, 0), Quaternion(1, 0, 0, 2),
        Quaternion(1, 0, 1, 1), Quaternion(1, 0, 1, -1)}) {
    Mat3 m = theta(x);
    AxisAngle aa = rotation_axis_angle(x);
    std::cout << "x = " << x << "  (|x|^2 = " << norm_sq(x) << ")\n";
    std::cout << format_mat3(m) << "\n";
    std::cout << "axis (" << aa.axis[0] << "," << aa.axis[1] << ","
              << aa.axis[2] << "), cos(omega) = " << aa.cos_omega << "\n\n";
  }

  // No product of the rotations theta(1+2i), theta(1+2j), theta(1+2k) and
  // their inverses collapses to the identity: they generate a free group of
  // rank 3.  Sample a few hundred random reduced words and check exactly.
  std::mt19937_64 rng(1);
  const Quaternion gens[3] = {Quaternion(1, 2, 0, 0), Quaternion(1, 0, 2, 0),
                              Quaternion(1, 0, 0, 2)};
  int nontrivial = 0, total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int len = 1 + static_cast<int>(rng() % 10);
    Quaternion prod(1, 0, 0, 0);
    int prev = -1;
    for (int t = 0; t < len; ++t) {
      int pick;
      do {
        pick = static_cast<int>(rng() % 6);
      } while (prev >= 0 && (pick ^ 1) == prev);  // avoid immediate cancellation
      prev = pick;
      Quaternion g = gens[pick / 2];
      prod = prod * (pick % 2 == 0 ? g : conj(g));
    }
    ++total;
    if (theta(prod) != Mat3::identity()) ++nontrivial;
  }
  std::cout << nontrivial << " of " << total
            << " random reduced words in the three rotations are nontrivial\n";
  return nontrivial == total ? 0 : 1;
}
