#include "test_util.hpp"

using namespace qsc;
using testutil::gamma;

namespace {

Word random_word(const Presentation& pres, std::mt19937_64& rng, int len,
                 int side_mode) {
  Word w;
  w.pres = &pres;
  for (int t = 0; t < len; ++t) {
    Side side;
    if (side_mode == 1) {
      side = Side::h;
    } else if (side_mode == 2) {
      side = Side::v;
    } else {
      side = rng() % 2 == 0 ? Side::h : Side::v;
    }
    int codes = side == Side::h ? 2 * pres.m() : 2 * pres.n();
    w.letters.push_back(code_letter(side, static_cast<int>(rng() % codes)));
  }
  return w;
}

Word as_word(const Presentation& pres, std::vector<Letter> ls) {
  return Word(pres, std::move(ls));
}

}  // namespace

TEST_CASE("word parsing and printing round trip") {
  const Presentation& pres = gamma(3, 5);
  Word w = Word::parse(pres, "a1 b2^-1 a2 b3");
  REQUIRE(w.size() == 4);
  CHECK(w.letters[0] == Letter{Side::h, 0, +1});
  CHECK(w.letters[1] == Letter{Side::v, 1, -1});
  CHECK(w.str() == "a1 b2^-1 a2 b3");
  CHECK(Word::parse(pres, "").empty());
  CHECK_THROWS_AS(Word::parse(pres, "a3"), parse_error);  // only a1, a2 exist
  CHECK_THROWS_AS(Word::parse(pres, "c1"), parse_error);
  CHECK_THROWS_AS(Word::parse(pres, "b1^2"), parse_error);
}

TEST_CASE("word evaluation multiplies the lifts") {
  const Presentation& pres = gamma(3, 5);
  CHECK(evaluate_word(Word::parse(pres, "")).is_identity());
  CHECK(evaluate_word(Word::parse(pres, "a1")) ==
        reduce_canonical(Quaternion(1, 0, -1, -1)));
  CHECK(evaluate_word(Word::parse(pres, "a1 a1^-1")).is_identity());
  // a square relator evaluates to a central quaternion, i.e. the identity class
  Word rel = as_word(pres, {pres.squares[0].w.begin(), pres.squares[0].w.end()});
  CHECK(evaluate_word(rel).is_identity());
  CHECK(words_equal(rel, Word::parse(pres, "")));
}

TEST_CASE("words over different groups cannot be compared") {
  Word u = Word::parse(gamma(3, 5), "a1");
  Word v = Word::parse(gamma(5, 7), "a1");
  CHECK_THROWS_AS(words_equal(u, v), alphabet_mismatch_error);
}

TEST_CASE("normal forms sort sides, preserve the element, and are stable") {
  const Presentation& pres = gamma(3, 5);
  std::mt19937_64 rng(20250822);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(pres, rng, 1 + static_cast<int>(rng() % 12), 0);
    NormalForm ab = normalize_ab(w);
    NormalForm ba = normalize_ba(w);

    for (const Letter& x : ab.sigma_h) CHECK(x.side == Side::h);
    for (const Letter& x : ab.sigma_v) CHECK(x.side == Side::v);

    // soundness: the normal form is the same group element
    Word wab = as_word(pres, ab.joined());
    Word wba = as_word(pres, ba.joined());
    CHECK(words_equal(w, wab));
    CHECK(words_equal(w, wba));

    // the two syllable lengths agree between the ab- and ba-forms
    CHECK(ab.sigma_h.size() == ba.sigma_h.size());
    CHECK(ab.sigma_v.size() == ba.sigma_v.size());

    // idempotence: normalizing a normal form changes nothing
    NormalForm again = normalize_ab(wab);
    CHECK(again.sigma_h == ab.sigma_h);
    CHECK(again.sigma_v == ab.sigma_v);
  }
}

TEST_CASE("inserting a relator does not change the normal form") {
  const Presentation& pres = gamma(3, 5);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(pres, rng, 1 + static_cast<int>(rng() % 8), 0);
    const Square& s = pres.squares[rng() % pres.squares.size()];
    std::vector<Letter> spliced = w.letters;
    std::size_t at = rng() % (spliced.size() + 1);
    spliced.insert(spliced.begin() + at, s.w.begin(), s.w.end());
    NormalForm nf1 = normalize_ab(w);
    NormalForm nf2 = normalize_ab(as_word(pres, spliced));
    CHECK(nf1.sigma_h == nf2.sigma_h);
    CHECK(nf1.sigma_v == nf2.sigma_v);
  }
}

TEST_CASE("reduced one-sided words are already normal and nontrivial") {
  const Presentation& pres = gamma(3, 5);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int side_mode = 1 + static_cast<int>(rng() % 2);
    Word w = random_word(pres, rng, 1 + static_cast<int>(rng() % 10), side_mode);
    detail::free_reduce(w.letters);
    NormalForm nf = normalize_ab(w);
    if (side_mode == 1) {
      CHECK(nf.sigma_v.empty());
      CHECK(nf.sigma_h == w.letters);
    } else {
      CHECK(nf.sigma_h.empty());
      CHECK(nf.sigma_v == w.letters);
    }
    // the one-sided subgroups are free: nonempty reduced words are nontrivial
    if (!w.letters.empty()) CHECK_FALSE(evaluate_word(w).is_identity());
  }
}
