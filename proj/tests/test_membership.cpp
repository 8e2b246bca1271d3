#include "test_util.hpp"

using namespace qsc;
using testutil::gamma;

TEST_CASE("admissibility decides membership exactly") {
  Admissibility a = is_admissible(Quaternion(1, 2, 0, 0), 5, 17);
  CHECK(a.ok);
  CHECK(a.r == 1);
  CHECK(a.s == 0);
  CHECK(a.parity == ParityClass::one_mod4);

  a = is_admissible(Quaternion(1, 0, 0, 4), 5, 17);
  CHECK(a.ok);
  CHECK(a.r == 0);
  CHECK(a.s == 1);

  // central scaling is invisible: 7 + 14i is the class of 1 + 2i
  a = is_admissible(Quaternion(7, 14, 0, 0), 5, 7);
  CHECK(a.ok);
  CHECK(a.r == 1);
  CHECK(a.s == 0);

  // mixed norm 15 = 3 * 5 with the right parity
  a = is_admissible(Quaternion(1, 2, 3, 1), 3, 5);
  CHECK(a.ok);
  CHECK(a.r == 1);
  CHECK(a.s == 1);
  CHECK(a.parity == ParityClass::three_mod4);

  // central classes are the identity with exponents (0, 0)
  a = is_admissible(Quaternion(-3, 0, 0, 0), 3, 5);
  CHECK(a.ok);
  CHECK(a.r == 0);
  CHECK(a.s == 0);

  CHECK_FALSE(is_admissible(Quaternion(1, 1, 0, 0), 5, 17).ok);   // norm 2
  CHECK_FALSE(is_admissible(Quaternion(1, 1, 1, 0), 3, 5).ok);    // bad parity
  CHECK_FALSE(is_admissible(Quaternion(1, 2, 4, 6), 3, 5).ok);    // norm 57
  CHECK_THROWS_AS(is_admissible(Quaternion(0, 0, 0, 0), 3, 5),
                  zero_quaternion_error);
  CHECK_THROWS_AS(is_admissible(Quaternion(1, 0, 0, 0), 3, 9),
                  not_odd_prime_error);
}

TEST_CASE("factorization into generator letters") {
  const Presentation& p35 = gamma(3, 5);

  Word w = factor_to_word(Quaternion(1, 0, -1, -1), p35);
  CHECK(w.str() == "a1");

  w = factor_to_word(Quaternion(-21, 0, 0, 0), p35);
  CHECK(w.empty());

  w = factor_to_word(Quaternion(1, 2, 3, 1), p35);
  CHECK(w.size() == 2);
  CHECK(evaluate_word(w) == reduce_canonical(Quaternion(1, 2, 3, 1)));

  const Presentation& p57 = gamma(5, 7);
  w = factor_to_word(Quaternion(7, 14, 0, 0), p57);
  CHECK(w.size() == 1);
  CHECK(evaluate_word(w) == reduce_canonical(Quaternion(1, 2, 0, 0)));

  CHECK_THROWS_AS(factor_to_word(Quaternion(1, 1, 0, 0), p35),
                  not_admissible_error);
}

TEST_CASE("factorization round-trips random products of generators") {
  const Presentation& pres = gamma(3, 5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int len = 1 + static_cast<int>(rng() % 6);
    Quaternion prod(1, 0, 0, 0);
    int expect_len = 0;
    for (int t = 0; t < len; ++t) {
      Side side = rng() % 2 == 0 ? Side::h : Side::v;
      int codes = side == Side::h ? 2 * pres.m() : 2 * pres.n();
      Letter x = code_letter(side, static_cast<int>(rng() % codes));
      prod = prod * pres.lift(x);
      ++expect_len;
    }
    GroupElement g = reduce_canonical(prod);
    Admissibility adm = is_admissible(g.rep(), pres.p, pres.l);
    REQUIRE(adm.ok);
    // free cancellation can shorten the word; the norm exponents say by how much
    CHECK(adm.r + adm.s <= expect_len);
    Word w = factor_to_word(g.rep(), pres);
    CHECK(static_cast<int>(w.size()) == adm.r + adm.s);
    CHECK(evaluate_word(w) == g);
  }
}
