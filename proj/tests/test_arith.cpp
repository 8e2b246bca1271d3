#include "test_util.hpp"

using namespace qsc;

TEST_CASE("primality helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(is_odd_prime(3));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_THROWS_AS(require_odd_prime(9, "q"), not_odd_prime_error);
  CHECK_THROWS_AS(require_odd_prime(-5, "q"), not_odd_prime_error);
}

TEST_CASE("legendre symbol via Euler's criterion") {
  CHECK(legendre_symbol(-2, 5) == -1);
  CHECK(legendre_symbol(-2, 17) == 1);
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(3, 7) == -1);
  CHECK(legendre_symbol(-1, 5) == 1);
  CHECK(legendre_symbol(-1, 3) == -1);
  CHECK(legendre_symbol(10, 5) == 0);
  CHECK_THROWS_AS(legendre_symbol(1, 8), not_odd_prime_error);

  // multiplicativity on a sample of residues
  for (long a = 1; a < 13; ++a) {
    for (long b = 1; b < 13; ++b) {
      CHECK(legendre_symbol(a * b, 13) ==
            legendre_symbol(a, 13) * legendre_symbol(b, 13));
    }
  }
}

TEST_CASE("perfect squares and two-prime factorizations") {
  CHECK(perfect_square_root(0) == Int(0));
  CHECK(perfect_square_root(49) == Int(7));
  CHECK(perfect_square_root(Int("100000000000000000000")) ==
        Int("10000000000"));
  CHECK_FALSE(perfect_square_root(2).has_value());
  CHECK_FALSE(perfect_square_root(-4).has_value());

  CHECK(factor_over_pair(1, 3, 5) == std::make_pair(0, 0));
  CHECK(factor_over_pair(15, 3, 5) == std::make_pair(1, 1));
  CHECK(factor_over_pair(225, 3, 5) == std::make_pair(2, 2));
  CHECK(factor_over_pair(75, 3, 5) == std::make_pair(1, 2));
  CHECK_FALSE(factor_over_pair(21, 3, 5).has_value());
  CHECK_FALSE(factor_over_pair(0, 3, 5).has_value());
  CHECK_FALSE(factor_over_pair(-15, 3, 5).has_value());
}

TEST_CASE("modular inverse and reduction") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(4, 17) == 13);
  CHECK(mod_inverse(-3, 7) == 2);  // -3 = 4 mod 7 and 4 * 2 = 1 mod 7
  CHECK(mod_reduce(mod_inverse(-3, 7) * Int(-3), 7) == 1);
  CHECK_THROWS_AS(mod_inverse(10, 5), domain_error);
  CHECK(mod_reduce(-3, 5) == 2);
  CHECK(mod_reduce(12, 5) == 2);
}
