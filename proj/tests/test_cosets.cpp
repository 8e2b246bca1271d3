#include <algorithm>

#include "test_util.hpp"

using namespace qsc;
using testutil::gamma;

namespace {

std::vector<Word> letter_words(const Presentation& pres,
                               std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(Word::parse(pres, t));
  return out;
}

// Applies a word to a 0-based coset through the closed table.
int walk(const CosetTable& ct, const Word& w, int coset) {
  for (const Letter& x : w.letters) {
    int t = (x.side == Side::h ? 0 : ct.m) + x.index;
    int col = 2 * t + (x.sign < 0 ? 1 : 0);
    coset = ct.table[coset + 1][col] - 1;
  }
  return coset;
}

}  // namespace

TEST_CASE("the whole group has index 1") {
  const Presentation& pres = gamma(3, 5);
  CosetTable ct =
      todd_coxeter(pres, letter_words(pres, {"a1", "a2", "b1", "b2", "b3"}));
  REQUIRE(ct.status == CosetTable::Status::closed);
  CHECK(ct.index() == 1);
  CHECK(ct.column_names ==
        std::vector<std::string>({"a1", "a1^-1", "a2", "a2^-1", "b1", "b1^-1",
                                  "b2", "b2^-1", "b3", "b3^-1"}));
}

TEST_CASE("published subgroup indices are reproduced") {
  const Presentation& p35 = gamma(3, 5);
  Quaternion a1(1, 0, 1, 1), b1(1, 2, 0, 0);

  CosetTable ct = todd_coxeter(
      p35, {factor_to_word(a1, p35), factor_to_word(b1, p35)});
  REQUIRE(ct.status == CosetTable::Status::closed);
  CHECK(ct.index() == 4);

  ct = todd_coxeter(
      p35, {factor_to_word(a1 * a1, p35), factor_to_word(b1 * b1, p35)});
  REQUIRE(ct.status == CosetTable::Status::closed);
  CHECK(ct.index() == 896);

  const Presentation& p517 = gamma(5, 17);
  ct = todd_coxeter(p517, {factor_to_word(Quaternion(1, 2, 0, 0), p517),
                           factor_to_word(Quaternion(1, 0, 0, 4), p517)});
  REQUIRE(ct.status == CosetTable::Status::closed);
  CHECK(ct.index() == 32);
}

TEST_CASE("enumeration is deterministic") {
  const Presentation& pres = gamma(3, 5);
  Quaternion a1(1, 0, 1, 1), b1(1, 2, 0, 0);
  std::vector<Word> gens = {factor_to_word(a1, pres), factor_to_word(b1, pres)};
  CosetTable ct1 = todd_coxeter(pres, gens);
  CosetTable ct2 = todd_coxeter(pres, gens);
  CHECK(ct1.table == ct2.table);
  CHECK(ct1.cosets_defined == ct2.cosets_defined);
}

TEST_CASE("closed tables satisfy the defining relations") {
  const Presentation& pres = gamma(3, 5);
  Quaternion a1(1, 0, 1, 1), b1(1, 2, 0, 0);
  std::vector<Word> gens = {factor_to_word(a1, pres), factor_to_word(b1, pres)};
  CosetTable ct = todd_coxeter(pres, gens);
  REQUIRE(ct.status == CosetTable::Status::closed);
  const int idx = static_cast<int>(ct.index());

  // subgroup generators stabilize the subgroup coset
  for (const Word& w : gens) CHECK(walk(ct, w, 0) == 0);

  // every square relator acts trivially on every coset
  for (const Square& s : pres.squares) {
    Word rel(pres, {s.w.begin(), s.w.end()});
    for (int c = 0; c < idx; ++c) CHECK(walk(ct, rel, c) == c);
  }

  // the table rows are mutually inverse permutations
  auto perms = permutation_representation(ct);
  REQUIRE(perms.size() == 5);
  for (const auto& perm : perms) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < idx; ++c) CHECK(sorted[c] == c);
  }
  // the permutation action is transitive for these generators (index 4 orbit)
  std::vector<bool> seen(idx, false);
  seen[0] = true;
  for (int round = 0; round < idx; ++round) {
    for (int c = 0; c < idx; ++c) {
      if (!seen[c]) continue;
      for (const auto& perm : perms) seen[perm[c]] = seen[perm[c]] || seen[c];
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("a cyclic subgroup overflows the coset budget") {
  const Presentation& pres = gamma(3, 5);
  CosetTable ct = todd_coxeter(pres, letter_words(pres, {"a1"}), 200);
  CHECK(ct.status == CosetTable::Status::overflow);
  CHECK_THROWS_AS(ct.index(), table_not_closed_error);
  CHECK_THROWS_AS(permutation_representation(ct), table_not_closed_error);
}

TEST_CASE("argument validation") {
  const Presentation& p35 = gamma(3, 5);
  const Presentation& p57 = gamma(5, 7);
  CHECK_THROWS_AS(todd_coxeter(p35, letter_words(p57, {"a1"})),
                  alphabet_mismatch_error);
  CHECK_THROWS_AS(todd_coxeter(p35, letter_words(p35, {"a1"}), 0), domain_error);
}
