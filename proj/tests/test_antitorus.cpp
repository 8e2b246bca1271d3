#include "test_util.hpp"

using namespace qsc;
using testutil::cls;
using testutil::gamma;

TEST_CASE("pair classification meets the published examples") {
  CHECK(classify_pair(5, 17, cls(1, 2, 0, 0), cls(1, 0, 0, 4)) ==
        PairClass::anti_torus);
  CHECK(classify_pair(5, 17, cls(1, 2, 0, 0), cls(1, 4, 0, 0)) ==
        PairClass::z_cross_z);
  CHECK(classify_pair(5, 17, cls(1, 0, 0, 0), cls(1, 0, 0, 4)) ==
        PairClass::trivial_factor);

  // Gamma_{5,7}: a product of two vertical letters commutes with 1+2i+j+k,
  // while every single horizontal letter spans an anti-torus with it.
  Quaternion b(1, 2, 1, 1);
  Quaternion prod = Quaternion(1, 0, 2, 0) * Quaternion(1, 0, 0, 2);
  REQUIRE(prod == Quaternion(1, 4, 2, 2));
  CHECK(classify_pair(5, 7, reduce_canonical(prod), cls(1, 2, 1, 1)) ==
        PairClass::z_cross_z);
  const Presentation& pres = gamma(5, 7);
  for (int c = 0; c < 2 * pres.m(); ++c) {
    CHECK(classify_pair(5, 7, pres.group_element(code_letter(Side::h, c)),
                        cls(1, 2, 1, 1)) == PairClass::anti_torus);
  }

  CHECK(to_string(PairClass::anti_torus) == std::string("ANTI_TORUS"));
  CHECK(to_string(PairClass::z_cross_z) == std::string("Z_CROSS_Z"));
  CHECK(to_string(PairClass::trivial_factor) == std::string("TRIVIAL_FACTOR"));
}

TEST_CASE("classification rejects elements of the wrong kind") {
  // sides swapped
  CHECK_THROWS_AS(classify_pair(5, 17, cls(1, 0, 0, 4), cls(1, 2, 0, 0)),
                  side_mismatch_error);
  // mixed norm 5 * 17 is not a pure element of either side
  GroupElement mixed = cls(1, 2, 0, 0) * cls(1, 0, 0, 4);
  CHECK_THROWS_AS(classify_pair(5, 17, mixed, cls(1, 0, 0, 4)),
                  side_mismatch_error);
  // not in the group at all
  CHECK_THROWS_AS(classify_pair(5, 17, cls(1, 1, 0, 0), cls(1, 0, 0, 4)),
                  not_admissible_error);
}

TEST_CASE("power scan finds commuting powers exactly when they exist") {
  CHECK_FALSE(power_commute_scan(cls(1, 2, 0, 0), cls(1, 0, 0, 4), 5));
  auto hit = power_commute_scan(cls(1, 2, 0, 0), cls(1, 4, 0, 0), 5);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::make_pair(1, 1));
  CHECK_FALSE(power_commute_scan(cls(1, 0, 1, 1), cls(1, 2, 0, 0), 6));
}

TEST_CASE("the quadratic invariant n(b)") {
  CHECK(n_invariant(cls(3, 2, 2, 0)) == 2);
  CHECK(n_invariant(cls(1, 2, 0, 0)) == 1);
  CHECK(n_invariant(cls(1, 2, 4, 6)) == 14);
  CHECK_THROWS_AS(n_invariant(cls(7, 0, 0, 0)), real_quaternion_error);
}

TEST_CASE("centralizer certificates for vertical elements") {
  const Presentation& pres = gamma(5, 17);

  CentralizerCertificate cert = centralizer_is_cyclic(pres, cls(3, 2, 2, 0));
  CHECK(cert.single_letter);
  REQUIRE(cert.rho_fixpoint_free.has_value());
  CHECK(*cert.rho_fixpoint_free);
  CHECK(cert.n_b == 2);
  CHECK(cert.legendre_p == -1);
  CHECK(cert.legendre_l == 1);
  CHECK(cert.legendre_ok);
  CHECK(cert.certified());

  // 1+4i: n = 1 and (-1/5) = +1, so the quadratic criterion fails here
  cert = centralizer_is_cyclic(pres, cls(1, 4, 0, 0));
  CHECK(cert.single_letter);
  CHECK(cert.n_b == 1);
  CHECK(cert.legendre_p == 1);
  CHECK_FALSE(cert.legendre_ok);

  // a two-letter vertical word is not a single letter
  cert = centralizer_is_cyclic(pres, cls(1, 4, 0, 0) * cls(1, 0, 0, 4));
  CHECK_FALSE(cert.single_letter);
  CHECK_FALSE(cert.rho_fixpoint_free.has_value());

  CHECK_THROWS_AS(centralizer_is_cyclic(pres, cls(5, 0, 0, 0)), domain_error);
  CHECK_THROWS_AS(centralizer_is_cyclic(pres, cls(1, 2, 0, 0)),
                  side_mismatch_error);
}

TEST_CASE("norm-form search finds all small solutions for n = 1") {
  auto out = norm_form_search(1, 5, 17, 100, 100, 2, true);
  std::vector<std::array<long, 4>> got;
  for (const NormFormWitness& w : out) {
    got.push_back({w.t.convert_to<long>(), w.u.convert_to<long>(),
                   static_cast<long>(w.r), static_cast<long>(w.s)});
  }
  std::vector<std::array<long, 4>> expected = {
      {1, 2, 0, 1},  // 1 + 16 = 17
      {1, 1, 1, 0},  // 1 + 4 = 5
      {9, 1, 1, 1},  // 81 + 4 = 85
      {7, 3, 1, 1},  // 49 + 36 = 85
      {3, 2, 2, 0},  // 9 + 16 = 25
  };
  CHECK(got == expected);

  // with the default positive exponents only the mixed-norm solutions remain
  auto pos = norm_form_search(1, 5, 17, 100, 100, 2);
  REQUIRE(pos.size() == 2);
  CHECK(pos[0].t == 9);
  CHECK(pos[1].t == 7);

  for (const NormFormWitness& w : out) {
    Int target = 1;
    for (int t = 0; t < w.r; ++t) target *= 5;
    for (int t = 0; t < w.s; ++t) target *= 17;
    CHECK(w.t * w.t + 4 * w.u * w.u == target);
  }
}

TEST_CASE("norm-form search is empty for n = 2 in a moderate box") {
  CHECK(norm_form_search(2, 5, 17, 2000, 2000, 8).empty());

  // Allowing zero exponents admits the degenerate witness 3^2 + 8 = 17,
  // i.e. t + 2uc = 3 + 2i + 2j itself; the nonexistence statement is about
  // positive exponents only.
  auto degenerate = norm_form_search(2, 5, 17, 2000, 2000, 8, true);
  REQUIRE_FALSE(degenerate.empty());
  CHECK(degenerate.front().t == 3);
  CHECK(degenerate.front().u == 1);
  CHECK(degenerate.front().r == 0);
  CHECK(degenerate.front().s == 1);

  CHECK_THROWS_AS(norm_form_search(0, 5, 17, 10, 10, 2), domain_error);
  CHECK_THROWS_AS(norm_form_search(2, 15, 17, 10, 10, 2), not_odd_prime_error);
}
