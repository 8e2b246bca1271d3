#include "test_util.hpp"

using namespace qsc;

TEST_CASE("base solutions of c^2 + d^2 + 1 = 0 are chosen canonically") {
  PadicParams par = solve_cd(5, 1);
  CHECK(par.c == 2);
  CHECK(par.d == 0);
  CHECK(par.pk == 5);

  par = solve_cd(13, 1);
  CHECK(par.c == 5);  // 25 + 1 = 26; smallest root of -1 mod 13
  CHECK(par.d == 0);

  par = solve_cd(3, 1);
  CHECK(par.c == 1);
  CHECK(par.d == 1);

  par = solve_cd(7, 1);
  CHECK(par.c == 2);
  CHECK(par.d == 3);  // 4 + 9 + 1 = 14

  CHECK_THROWS_AS(solve_cd(2, 1), not_odd_prime_error);
  CHECK_THROWS_AS(solve_cd(5, 0), domain_error);
}

TEST_CASE("hensel lifting reaches any requested precision") {
  PadicParams par = solve_cd(5, 3);
  CHECK(par.pk == 125);
  CHECK(par.c == 57);  // 57^2 + 1 = 3250 = 26 * 125
  CHECK(par.d == 0);
  CHECK(par.c % 5 == 2);

  par = solve_cd(3, 2);
  CHECK(par.pk == 9);
  CHECK(par.c == 4);  // 16 + 1 + 1 = 18
  CHECK(par.d == 1);

  for (long p : {3, 5, 7, 13, 17}) {
    for (int k = 1; k <= 6; ++k) {
      par = solve_cd(p, k);
      CHECK(mod_reduce(par.c * par.c + par.d * par.d + 1, par.pk) == 0);
      CHECK(par.c >= 0);
      CHECK(par.c < par.pk);
      CHECK(par.d >= 0);
      CHECK(par.d < par.pk);
    }
  }
}

TEST_CASE("frozen matrix embeddings") {
  PadicParams par = solve_cd(5, 1);
  Mat2 m = psi_matrix_mod_pk(Quaternion(1, 0, 0, 0), par);
  CHECK(m.a == std::array<std::array<Int, 2>, 2>{{{1, 0}, {0, 1}}});

  m = psi_matrix_mod_pk(Quaternion(1, 2, 0, 0), par);
  CHECK(m.a == std::array<std::array<Int, 2>, 2>{{{0, 0}, {0, 2}}});
  CHECK(mat2_det(m, par.pk) == 0);  // the norm 5 vanishes mod 5

  par = solve_cd(5, 2);
  CHECK(par.c == 7);
  m = psi_matrix_mod_pk(Quaternion(1, 0, 0, 4), par);
  CHECK(m.a == std::array<std::array<Int, 2>, 2>{{{1, 3}, {3, 1}}});
  CHECK(mat2_det(m, par.pk) == 17);

  CHECK_THROWS_AS(
      psi_matrix_mod_pk(Quaternion(Rat(1, 2), 0, 0, 0), solve_cd(5, 1)),
      domain_error);
}

TEST_CASE("the embedding is a determinant-preserving homomorphism mod p^k") {
  std::mt19937_64 rng(17);
  for (long p : {3, 5, 13}) {
    for (int k : {1, 2, 4}) {
      PadicParams par = solve_cd(p, k);
      for (int trial = 0; trial < 40; ++trial) {
        auto rnd = [&] {
          return Quaternion(static_cast<long>(rng() % 19) - 9,
                            static_cast<long>(rng() % 19) - 9,
                            static_cast<long>(rng() % 19) - 9,
                            static_cast<long>(rng() % 19) - 9);
        };
        Quaternion x = rnd(), y = rnd();
        Mat2 mx = psi_matrix_mod_pk(x, par);
        Mat2 my = psi_matrix_mod_pk(y, par);
        CHECK(psi_matrix_mod_pk(x * y, par) == mat2_mul(mx, my, par.pk));
        CHECK(mat2_det(mx, par.pk) ==
              mod_reduce(boost::multiprecision::numerator(norm_sq(x)), par.pk));
      }
    }
  }
}
