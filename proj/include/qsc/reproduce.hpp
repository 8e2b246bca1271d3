#pragma once

#include <cctype>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/antitorus.hpp"
#include "qsc/cosets.hpp"
#include "qsc/membership.hpp"
#include "qsc/padic.hpp"
#include "qsc/presentation.hpp"
#include "qsc/reference_data.hpp"
#include "qsc/relations.hpp"
#include "qsc/so3.hpp"
#include "qsc/word.hpp"

namespace qsc {

// One verification check of the reproduction suite.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

inline Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-9, 9);
  for (;;) {
    Quaternion q(coord(rng), coord(rng), coord(rng), coord(rng));
    if (!is_zero(q)) return q;
  }
}

inline Word random_word(const Presentation& pres, std::mt19937_64& rng,
                        int max_len, int sides) {
  // sides: 0 = both, 1 = horizontal only, 2 = vertical only.
  std::uniform_int_distribution<int> len(1, max_len);
  Word w;
  w.pres = &pres;
  int target = len(rng);
  std::uniform_int_distribution<int> hpick(0, 2 * pres.m() - 1);
  std::uniform_int_distribution<int> vpick(0, 2 * pres.n() - 1);
  std::uniform_int_distribution<int> side(0, 1);
  for (int t = 0; t < target; ++t) {
    bool horizontal = sides == 1 || (sides == 0 && side(rng) == 0);
    w.letters.push_back(horizontal ? code_letter(Side::h, hpick(rng))
                                   : code_letter(Side::v, vpick(rng)));
  }
  return w;
}

}  // namespace detail

// --- Check 1: generator-set counts -----------------------------------------

inline std::string check_generator_counts() {
  int checked = 0;
  for (int q = 3; q < 100; q += 2) {
    if (!is_prime(Int(q))) continue;
    GeneratorSet gs = enumerate_Xq(Int(q));
    detail::expect(Int(gs.elements.size()) == 2 * (Int(q) + 1),
                   "wrong count for q=" + std::to_string(q));
    ++checked;
  }
  return std::to_string(checked) + " primes q < 100, each with 2(q+1) solutions";
}

// --- Check 2: square construction and link condition -----------------------

inline std::string check_square_construction() {
  Presentation p35 = build_squares(3, 5);
  detail::expect(p35.m() == 2 && p35.n() == 3 && p35.squares.size() == 6,
                 "Gamma_{3,5} shape mismatch");
  Presentation p517 = build_squares(5, 17);
  detail::expect(p517.m() == 3 && p517.n() == 9 && p517.squares.size() == 27,
                 "Gamma_{5,17} shape mismatch");
  int links = 0;
  for (auto [p, l] : {std::pair<int, int>{3, 5}, {5, 17}, {5, 7}, {13, 17}}) {
    LinkGraph g = check_link(build_squares(p, l));
    detail::expect(g.complete(), "incomplete link for (" + std::to_string(p) +
                                     "," + std::to_string(l) + ")");
    ++links;
  }
  return "2+3 generators / 6 squares, 3+9 generators / 27 squares, " +
         std::to_string(links) + " complete links";
}

// --- Check 3: reference relators match the constructed squares -------------

inline std::string check_reference_relators() {
  Presentation pres = build_squares(3, 5);
  std::set<std::array<GroupElement, 4>> ours;
  for (const Square& s : pres.squares) ours.insert(square_signature(pres, s));
  std::set<std::array<GroupElement, 4>> matched;
  for (const ReferenceSquare& rs : reference_squares_gamma_3_5()) {
    Quaternion prod = rs[0] * rs[1] * rs[2] * rs[3];
    detail::expect(is_central(prod) && !is_zero(prod),
                   "reference relator does not evaluate centrally");
    detail::expect(norm_sq(prod) == Rat(Int(15) * 15),
                   "reference relator norm is not (pl)^2");
    std::array<GroupElement, 4> w = {
        reduce_canonical(rs[0]), reduce_canonical(rs[1]),
        reduce_canonical(rs[2]), reduce_canonical(rs[3])};
    auto sig = square_signature(w, 3);
    detail::expect(ours.count(sig) == 1,
                   "reference relator not among constructed squares");
    matched.insert(sig);
  }
  detail::expect(matched.size() == 6, "reference relators not pairwise distinct");
  return "6 relators central (norm 225) and in bijection with the 6 squares";
}

// --- Check 4: subgroup indices via coset enumeration -----------------------

inline std::string check_subgroup_indices() {
  std::ostringstream detail_os;
  {
    Presentation pres = build_squares(5, 17);
    std::vector<Word> gens = {factor_to_word(Quaternion(1, 2, 0, 0), pres),
                              factor_to_word(Quaternion(1, 0, 0, 4), pres)};
    CosetTable ct = todd_coxeter(pres, gens, 1000000);
    detail::expect(ct.status == CosetTable::Status::closed,
                   "enumeration for index 32 did not close");
    detail::expect(ct.index() == 32, "wrong index for <psi(1+2i), psi(1+4k)>: " +
                                         std::to_string(ct.index()));
    detail_os << "32";
  }
  {
    Presentation pres = build_squares(3, 5);
    Quaternion a1(1, 0, 1, 1), b1(1, 2, 0, 0);
    std::vector<Word> gens = {factor_to_word(a1, pres),
                              factor_to_word(b1, pres)};
    CosetTable ct = todd_coxeter(pres, gens, 1000000);
    detail::expect(ct.status == CosetTable::Status::closed &&
                       ct.index() == 4,
                   "wrong index for <a1, b1>");
    detail_os << ", 4";
    std::vector<Word> gens2 = {factor_to_word(a1 * a1, pres),
                               factor_to_word(b1 * b1, pres)};
    CosetTable ct2 = todd_coxeter(pres, gens2, 1000000);
    detail::expect(ct2.status == CosetTable::Status::closed &&
                       ct2.index() == 896,
                   "wrong index for <a1^2, b1^2>");
    detail_os << ", 896";
  }
  return "indices " + detail_os.str() + " as expected";
}

// --- Check 5: explicit non-freeness relations ------------------------------

inline std::string check_witness_relations() {
  {
    ExponentWord w = parse_exponent_word(nonfree_witness_relation_5_17());
    detail::expect(exponent_word_length(w) == 106, "long relation length != 106");
    Quaternion x(1, 2, 0, 0), y(1, 0, 0, 4);
    detail::expect(verify_relation(5, 17, w, x, y),
                   "long relation does not hold in Gamma_{5,17}");
    detail::expect(relation_transfer_check(w, x, y),
                   "long relation does not transfer to the rotation group");
  }
  {
    ExponentWord w = parse_exponent_word(nonfree_witness_relation_3_5());
    detail::expect(exponent_word_length(w) == 14, "short relation length != 14");
    Quaternion x(1, 0, 1, 1), y(1, 2, 0, 0);
    detail::expect(verify_relation(3, 5, w, x, y),
                   "short relation does not hold in Gamma_{3,5}");
    detail::expect(relation_transfer_check(w, x, y),
                   "short relation does not transfer to the rotation group");
  }
  return "lengths 106 and 14; both central and identity in SO_3(Q)";
}

// --- Check 6: commutation dichotomy ----------------------------------------

inline std::string check_pair_classification() {
  int anti = 0, flat = 0;
  {
    detail::expect(classify_pair(5, 17, reduce_canonical(Quaternion(1, 2, 0, 0)),
                                 reduce_canonical(Quaternion(1, 0, 0, 4))) ==
                       PairClass::anti_torus,
                   "(psi(1+2i), psi(1+4k)) should span an anti-torus");
    ++anti;
    detail::expect(!power_commute_scan(reduce_canonical(Quaternion(1, 2, 0, 0)),
                                       reduce_canonical(Quaternion(1, 0, 0, 4)),
                                       5)
                        .has_value(),
                   "no commuting power pair up to exponent 5 expected");
    detail::expect(classify_pair(5, 17, reduce_canonical(Quaternion(1, 2, 0, 0)),
                                 reduce_canonical(Quaternion(1, 4, 0, 0))) ==
                       PairClass::z_cross_z,
                   "(psi(1+2i), psi(1+4i)) should span Z x Z");
    ++flat;
  }
  {
    Quaternion b(1, 2, 1, 1);  // vertical: norm 7
    Quaternion prod = Quaternion(1, 0, 2, 0) * Quaternion(1, 0, 0, 2);
    detail::expect(prod == Quaternion(1, 4, 2, 2),
                   "(1+2j)(1+2k) should be 1+4i+2j+2k");
    detail::expect(classify_pair(5, 7, reduce_canonical(prod),
                                 reduce_canonical(b)) == PairClass::z_cross_z,
                   "(psi(1+2j)psi(1+2k), psi(1+2i+j+k)) should span Z x Z");
    ++flat;
    Presentation pres = build_squares(5, 7);
    for (int c = 0; c < 2 * pres.m(); ++c) {
      GroupElement a = pres.group_element(code_letter(Side::h, c));
      detail::expect(classify_pair(5, 7, a, reduce_canonical(b)) ==
                         PairClass::anti_torus,
                     "single-letter pair should span an anti-torus");
      ++anti;
    }
  }
  return std::to_string(anti) + " anti-tori, " + std::to_string(flat) +
         " Z x Z pairs";
}

// --- Check 7: cyclic centralizer certificates ------------------------------

inline std::string check_centralizer_certificates() {
  Presentation pres = build_squares(5, 17);
  GroupElement b = reduce_canonical(Quaternion(3, 2, 2, 0));
  CentralizerCertificate cert = centralizer_is_cyclic(pres, b);
  detail::expect(cert.single_letter, "psi(3+2i+2j) should be a single letter");
  detail::expect(cert.rho_fixpoint_free && *cert.rho_fixpoint_free,
                 "rho_v(psi(3+2i+2j)) should be fixpoint-free");
  detail::expect(cert.n_b == 2, "n(psi(3+2i+2j)) should be 2");
  detail::expect(cert.legendre_p == -1, "(-2/5) should be -1");
  detail::expect(cert.legendre_l == 1, "(-2/17) should be +1");
  detail::expect(cert.certified(), "certificate should be conclusive");
  return "rho_v fixpoint-free; n(b)=2, (-2/5)=-1, (-2/17)=+1";
}

// --- Check 8: norm-form search comes up empty ------------------------------

inline std::string check_norm_form_search() {
  auto hits = norm_form_search(2, 5, 17, 10000, 10000, 12);
  detail::expect(hits.empty(),
                 "t^2 + 8u^2 = 5^r 17^s unexpectedly has a solution");
  return "no t^2+8u^2 = 5^r 17^s with r,s >= 1, t,u <= 10^4, r+s <= 12";
}

// --- Check 9: exact rotation matrices --------------------------------------

inline std::string check_rotation_matrices() {
  auto mk = [](std::array<std::array<long, 3>, 3> num, long den) {
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m.a[r][c] = Rat(num[r][c], den);
    }
    return m;
  };
  const Mat3 m_12i = mk({{{5, 0, 0}, {0, -3, -4}, {0, 4, -3}}}, 5);
  const Mat3 m_1jk = mk({{{-1, -2, 2}, {2, 1, 2}, {-2, 2, 1}}}, 3);
  const Mat3 m_14k = mk({{{-15, -8, 0}, {8, -15, 0}, {0, 0, 17}}}, 17);
  detail::expect(theta(Quaternion(1, 2, 0, 0)) == m_12i, "theta(1+2i) mismatch");
  detail::expect(theta(Quaternion(1, 0, 1, 1)) == m_1jk, "theta(1+j+k) mismatch");
  detail::expect(theta(Quaternion(1, 0, 0, 4)) == m_14k, "theta(1+4k) mismatch");
  std::mt19937_64 rng(7);
  int so = 0;
  for (const Mat3& m : {m_12i, m_1jk, m_14k}) {
    detail::expect(is_special_orthogonal(m), "reference matrix not in SO_3");
    ++so;
  }
  for (int t = 0; t < 200; ++t) {
    detail::expect(is_special_orthogonal(theta(detail::random_quaternion(rng))),
                   "theta image not special-orthogonal");
    ++so;
  }
  return "3 matrices match exactly; " + std::to_string(so) +
         " images special-orthogonal";
}

// --- Check 10: randomized property suites ----------------------------------

inline std::string check_property_suites(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int trials = 1000;
  Presentation pres = build_squares(3, 5);

  // Normal forms: soundness, length symmetry, and uniqueness under relator
  // insertion.
  std::uniform_int_distribution<int> sq_pick(0, 5);
  for (int t = 0; t < trials; ++t) {
    Word w = detail::random_word(pres, rng, 12, 0);
    GroupElement g = evaluate_word(w);
    NormalForm ab = normalize_ab(w);
    NormalForm ba = normalize_ba(w);
    Word wab(pres, ab.joined()), wba(pres, ba.joined());
    detail::expect(evaluate_word(wab) == g && evaluate_word(wba) == g,
                   "normal form changed the group element");
    detail::expect(ab.sigma_h.size() == ba.sigma_h.size() &&
                       ab.sigma_v.size() == ba.sigma_v.size(),
                   "ab- and ba-form syllable lengths differ");
    Word w2 = w;
    const Square& s = pres.squares[sq_pick(rng)];
    std::uniform_int_distribution<int> pos(0, static_cast<int>(w2.letters.size()));
    w2.letters.insert(w2.letters.begin() + pos(rng), s.w.begin(), s.w.end());
    NormalForm ab2 = normalize_ab(w2);
    detail::expect(ab2.sigma_h == ab.sigma_h && ab2.sigma_v == ab.sigma_v,
                   "normal form not invariant under relator insertion");
  }

  // Free vertex subgroups: nonempty reduced one-sided words are nontrivial.
  for (int t = 0; t < trials; ++t) {
    Word w = detail::random_word(pres, rng, 10, t % 2 == 0 ? 1 : 2);
    detail::free_reduce(w.letters);
    if (w.letters.empty()) continue;
    detail::expect(!evaluate_word(w).is_identity(),
                   "reduced one-sided word evaluated to the identity");
  }

  // Rotation action: multiplicative, kernel the centre, scale-invariant.
  for (int t = 0; t < trials; ++t) {
    Quaternion x = detail::random_quaternion(rng);
    Quaternion y = detail::random_quaternion(rng);
    detail::expect(theta(x * y) == theta(x) * theta(y),
                   "theta not multiplicative");
    detail::expect((theta(x) == Mat3::identity()) == is_central(x),
                   "theta kernel is not the centre");
    detail::expect(theta(Rat(3, 7) * x) == theta(x), "theta not scale-invariant");
  }

  // Factorisation round trip on random words.
  for (int t = 0; t < trials; ++t) {
    Word w = detail::random_word(pres, rng, 8, 0);
    GroupElement g = evaluate_word(w);
    if (g.is_identity()) continue;
    Word back = factor_to_word(g.rep(), pres);
    detail::expect(evaluate_word(back) == g, "factorisation round trip failed");
  }

  // 2x2 embeddings mod p^k: solution quality, multiplicativity, determinant.
  int padic_checks = 0;
  for (long p : {3L, 5L, 13L, 17L}) {
    for (int k = 1; k <= 6; ++k) {
      PadicParams par = solve_cd(p, k);
      detail::expect((par.c * par.c + par.d * par.d + 1) % par.pk == 0,
                     "c^2+d^2+1 != 0 mod p^k");
      Mat2 id = psi_matrix_mod_pk(Quaternion(1, 0, 0, 0), par);
      detail::expect(id.a[0][0] == 1 && id.a[0][1] == 0 && id.a[1][0] == 0 &&
                         id.a[1][1] == 1,
                     "embedding of 1 is not the identity");
      for (int t = 0; t < 40; ++t) {
        Quaternion x = detail::random_quaternion(rng);
        Quaternion y = detail::random_quaternion(rng);
        Mat2 mx = psi_matrix_mod_pk(x, par);
        Mat2 my = psi_matrix_mod_pk(y, par);
        detail::expect(psi_matrix_mod_pk(x * y, par) ==
                           mat2_mul(mx, my, par.pk),
                       "embedding not multiplicative mod p^k");
        detail::expect(mat2_det(mx, par.pk) ==
                           mod_reduce(boost::multiprecision::numerator(
                                          norm_sq(x)),
                                      par.pk),
                       "embedding determinant != norm mod p^k");
        ++padic_checks;
      }
    }
  }
  return std::to_string(trials) + " trials per property; " +
         std::to_string(padic_checks) + " modular embedding checks";
}

namespace detail {

// True when `filter` selects the check: either its numeric id, or a
// case-insensitive substring of its name or one of its tags.
inline bool check_matches(const std::string& filter, int id,
                          const std::string& name,
                          const std::vector<std::string>& tags) {
  std::string f;
  for (char c : filter) f.push_back(static_cast<char>(std::tolower(c)));
  if (!f.empty() && f.find_first_not_of("0123456789") == std::string::npos)
    return std::stoi(f) == id;
  std::string lname;
  for (char c : name) lname.push_back(static_cast<char>(std::tolower(c)));
  if (lname.find(f) != std::string::npos) return true;
  for (const std::string& t : tags)
    if (t.find(f) != std::string::npos) return true;
  return false;
}

}  // namespace detail

// Runs the verification battery.  Each `only` entry selects checks by id,
// by name substring, or by tag (empty = all); the seed feeds the randomized
// property suites.
inline std::vector<CheckResult> run_reproduce_suite(
    std::uint64_t seed = 20250822, const std::vector<std::string>& only = {}) {
  struct Entry {
    int id;
    const char* name;
    std::vector<std::string> tags;
    std::function<std::string()> fn;
  };
  const std::vector<Entry> entries = {
      {1, "generator-set counts", {"genset", "generators"},
       [] { return check_generator_counts(); }},
      {2, "square construction and links", {"complex", "squares", "links"},
       [] { return check_square_construction(); }},
      {3, "reference relators", {"relators", "presentation"},
       [] { return check_reference_relators(); }},
      {4, "subgroup indices", {"cosets", "index"},
       [] { return check_subgroup_indices(); }},
      {5, "non-freeness relations", {"relations", "witness"},
       [] { return check_witness_relations(); }},
      {6, "pair classification", {"classify", "antitorus", "commutation"},
       [] { return check_pair_classification(); }},
      {7, "centralizer certificates", {"centralizer"},
       [] { return check_centralizer_certificates(); }},
      {8, "norm-form search", {"normform", "anticommutation"},
       [] { return check_norm_form_search(); }},
      {9, "rotation matrices", {"so3", "rotations", "theta"},
       [] { return check_rotation_matrices(); }},
      {10, "property suites", {"properties", "random", "padic"},
       [seed] { return check_property_suites(seed); }},
  };
  std::vector<CheckResult> results;
  for (const Entry& e : entries) {
    if (!only.empty()) {
      bool wanted = false;
      for (const std::string& f : only)
        if (detail::check_matches(f, e.id, e.name, e.tags)) wanted = true;
      if (!wanted) continue;
    }
    CheckResult r;
    r.id = e.id;
    r.name = e.name;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = e.fn();
      r.passed = true;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = ex.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace qsc
