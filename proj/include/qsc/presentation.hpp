#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/arith.hpp"
#include "qsc/error.hpp"
#include "qsc/genset.hpp"
#include "qsc/quaternion.hpp"

namespace qsc {

// The two letter alphabets of a one-vertex square complex: horizontal
// letters a1..am (norm-p classes) and vertical letters b1..bn (norm-l
// classes).
enum class Side : std::uint8_t { h, v };

inline char side_char(Side s) { return s == Side::h ? 'a' : 'b'; }

// A signed occurrence of a generator letter: side, 0-based index, sign +-1.
struct Letter {
  Side side;
  int index;
  int sign;

  Letter inverse() const { return {side, index, -sign}; }

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.side == y.side && x.index == y.index && x.sign == y.sign;
  }
  friend bool operator!=(const Letter& x, const Letter& y) { return !(x == y); }
  // Order: h before v, then by index, positive sign before negative.  Used
  // only to make canonical forms and output deterministic.
  friend bool operator<(const Letter& x, const Letter& y) {
    if (x.side != y.side) return x.side == Side::h;
    if (x.index != y.index) return x.index < y.index;
    return x.sign > y.sign;
  }

  std::string str() const {
    std::string out(1, side_char(side));
    out += std::to_string(index + 1);
    if (sign < 0) out += "^-1";
    return out;
  }
};

// Side-local code of a signed letter, in [0, 2m) or [0, 2n): letter t with
// sign +1 is 2t, with sign -1 is 2t+1.  Used to index the rewrite tables.
inline int letter_code(const Letter& x) {
  return 2 * x.index + (x.sign < 0 ? 1 : 0);
}
inline Letter code_letter(Side side, int code) {
  return {side, code / 2, code % 2 == 0 ? +1 : -1};
}
inline int inverse_code(int code) { return code ^ 1; }

// A defining square, stored as the cyclic relator w0 w1 w2 w3 = 1 with
// w0, w2 horizontal and w1, w3 vertical, rotated/reflected to the
// lexicographically least of its eight dihedral forms.
struct Square {
  std::array<Letter, 4> w;

  friend bool operator==(const Square& x, const Square& y) { return x.w == y.w; }
  friend bool operator<(const Square& x, const Square& y) {
    return std::lexicographical_compare(x.w.begin(), x.w.end(), y.w.begin(),
                                        y.w.end());
  }

  std::string str() const {
    return w[0].str() + " " + w[1].str() + " " + w[2].str() + " " + w[3].str();
  }
};

// The dihedral orbit of a square relator: four rotations of the word and
// four of the inverse word.  Only forms starting with a horizontal letter
// are kept (there are four), and the least is the canonical one.
inline Square canonical_square(const std::array<Letter, 4>& w) {
  std::array<Letter, 4> inv = {w[3].inverse(), w[2].inverse(), w[1].inverse(),
                               w[0].inverse()};
  std::optional<Square> best;
  for (int r = 0; r < 4; ++r) {
    for (const auto& base : {w, inv}) {
      Square cand;
      for (int t = 0; t < 4; ++t) cand.w[t] = base[(r + t) % 4];
      if (cand.w[0].side != Side::h) continue;
      if (!best || cand < *best) best = cand;
    }
  }
  return *best;
}

// The four ordered (horizontal, vertical) corners of the square w0 w1 w2 w3,
// one per vertex of the square: (w0,w1), (w2,w3), (w2^-1,w1^-1),
// (w0^-1,w3^-1).  The link condition says that over all squares these corners
// hit every pair in E_h x E_v exactly once.
inline std::array<std::pair<Letter, Letter>, 4> square_corners(const Square& s) {
  return {std::make_pair(s.w[0], s.w[1]), std::make_pair(s.w[2], s.w[3]),
          std::make_pair(s.w[2].inverse(), s.w[1].inverse()),
          std::make_pair(s.w[0].inverse(), s.w[3].inverse())};
}

// Bipartite corner-incidence graph on E_h x E_v with multiplicities; the
// complex is well formed iff it is the complete bipartite graph K_{2m,2n}
// with every multiplicity exactly 1.
struct LinkGraph {
  int m = 0, n = 0;
  // counts[h-code][v-code]
  std::vector<std::vector<int>> counts;

  bool complete() const {
    for (const auto& row : counts) {
      for (int c : row) {
        if (c != 1) return false;
      }
    }
    return true;
  }
};

// A finitely presented group of the family Gamma_{p,l}: generator letters
// from the two norm generator sets and the m*n defining squares, together
// with the rewrite tables derived from the squares.
struct Presentation {
  Int p, l;
  GeneratorSet hgens, vgens;
  std::vector<Square> squares;

  // table_hv[h-code][v-code] = (v-code', h-code') encodes the relation
  // a b = b' a'; table_vh is the inverse rewriting b a = a' b'.
  // Entry -1 means undefined (never the case for a well formed complex).
  std::vector<std::vector<std::pair<int, int>>> table_hv;
  std::vector<std::vector<std::pair<int, int>>> table_vh;

  int m() const { return static_cast<int>(hgens.letter_reps.size()); }
  int n() const { return static_cast<int>(vgens.letter_reps.size()); }

  const GeneratorSet& gens(Side s) const { return s == Side::h ? hgens : vgens; }

  // The integer quaternion representing a signed letter: the class
  // representative for sign +1, its conjugate for sign -1.
  Quaternion lift(const Letter& x) const {
    const GeneratorSet& gs = gens(x.side);
    if (x.index < 0 || x.index >= static_cast<int>(gs.letter_reps.size())) {
      throw not_a_generator_error("lift: letter index out of range: " + x.str());
    }
    const Quaternion& rep = gs.letter_reps[x.index].rep();
    return x.sign > 0 ? rep : conj(rep);
  }

  GroupElement group_element(const Letter& x) const {
    return reduce_canonical(lift(x));
  }

  // Letter whose class equals g (throws not_a_generator_error otherwise).
  Letter letter_of(Side side, const GroupElement& g) const {
    auto [idx, sign] = lookup_letter(gens(side), g);
    return {side, idx, sign};
  }

  friend bool operator==(const Presentation& x, const Presentation& y) {
    return x.p == y.p && x.l == y.l && x.squares == y.squares;
  }
};

namespace detail {

// Derives both rewrite tables from the squares.  Each square contributes
// four entries to each table; the link condition makes the tables total
// functions E_h x E_v -> E_v x E_h (resp. E_v x E_h -> E_h x E_v).
inline void build_rewrite_tables(Presentation& pres) {
  const int m2 = 2 * pres.m();
  const int n2 = 2 * pres.n();
  pres.table_hv.assign(m2, std::vector<std::pair<int, int>>(n2, {-1, -1}));
  pres.table_vh.assign(n2, std::vector<std::pair<int, int>>(m2, {-1, -1}));
  // A corner may be claimed by exactly one square; a second write means two
  // squares (or two corners of one square) share a corner, which already
  // violates the link condition whatever the rewritten pair would be.
  auto put_hv = [&](const Letter& a, const Letter& b, const Letter& b2,
                    const Letter& a2) {
    auto& slot = pres.table_hv[letter_code(a)][letter_code(b)];
    if (slot.first != -1) {
      throw link_violation_error("rewrite table conflict at corner (" + a.str() +
                                 ", " + b.str() + ")");
    }
    slot = {letter_code(b2), letter_code(a2)};
  };
  auto put_vh = [&](const Letter& b, const Letter& a, const Letter& a2,
                    const Letter& b2) {
    auto& slot = pres.table_vh[letter_code(b)][letter_code(a)];
    if (slot.first != -1) {
      throw link_violation_error("rewrite table conflict at corner (" + b.str() +
                                 ", " + a.str() + ")");
    }
    slot = {letter_code(a2), letter_code(b2)};
  };
  for (const Square& s : pres.squares) {
    const Letter &w0 = s.w[0], &w1 = s.w[1], &w2 = s.w[2], &w3 = s.w[3];
    // From w0 w1 w2 w3 = 1:
    //   w0 w1 = w3^-1 w2^-1        (hv at (w0, w1))
    //   w2 w3 = w1^-1 w0^-1        (hv at (w2, w3))
    //   w2^-1 w1^-1 = w3 w0        (hv at (w2^-1, w1^-1))
    //   w0^-1 w3^-1 = w1 w2        (hv at (w0^-1, w3^-1))
    put_hv(w0, w1, w3.inverse(), w2.inverse());
    put_hv(w2, w3, w1.inverse(), w0.inverse());
    put_hv(w2.inverse(), w1.inverse(), w3, w0);
    put_hv(w0.inverse(), w3.inverse(), w1, w2);
    //   w1 w2 = w0^-1 w3^-1        (vh at (w1, w2))
    //   w3 w0 = w2^-1 w1^-1        (vh at (w3, w0))
    //   w1^-1 w0^-1 = w2 w3        (vh at (w1^-1, w0^-1))
    //   w3^-1 w2^-1 = w0 w1        (vh at (w3^-1, w2^-1))
    put_vh(w1, w2, w0.inverse(), w3.inverse());
    put_vh(w3, w0, w2.inverse(), w1.inverse());
    put_vh(w1.inverse(), w0.inverse(), w2, w3);
    put_vh(w3.inverse(), w2.inverse(), w0, w1);
  }
  for (int a = 0; a < m2; ++a) {
    for (int b = 0; b < n2; ++b) {
      if (pres.table_hv[a][b].first == -1 || pres.table_vh[b][a].first == -1) {
        throw link_violation_error(
            "rewrite table incomplete at corner (" +
            code_letter(Side::h, a).str() + ", " + code_letter(Side::v, b).str() +
            ")");
      }
    }
  }
}

}  // namespace detail

// Builds the presentation of Gamma_{p,l} for distinct odd primes p, l: for
// every ordered pair (a, b) in E_h x E_v the unique square a b = b' a' is
// found by exact quaternion arithmetic (x y = +- y' x' with x, y, x', y' in
// the norm generator sets), and the m*n distinct squares are canonicalised
// and sorted.
inline Presentation build_squares(const Int& p, const Int& l) {
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (p == l) {
    throw domain_error("build_squares: p and l must be distinct, got p = l = " +
                       p.str());
  }
  Presentation pres;
  pres.p = p;
  pres.l = l;
  pres.hgens = make_generator_set(p);
  pres.vgens = make_generator_set(l);
  const int m = pres.m();
  const int n = pres.n();

  // Lexicographic index over the vertical elements for O(log) membership.
  auto lex = [](const Quaternion& u, const Quaternion& v) {
    for (int t = 0; t < 4; ++t) {
      if (u[t] != v[t]) return u[t] < v[t];
    }
    return false;
  };

  std::vector<Square> found;
  for (int ac = 0; ac < 2 * m; ++ac) {
    Letter a = code_letter(Side::h, ac);
    Quaternion x = pres.lift(a);
    for (int bc = 0; bc < 2 * n; ++bc) {
      Letter b = code_letter(Side::v, bc);
      Quaternion y = pres.lift(b);
      Quaternion z = x * y;
      // Search y' in X_l with conj(y') z = l x', x' in X_p; the two integer
      // solutions (y', x') and (-y', -x') give the same letters.
      std::optional<std::pair<Letter, Letter>> swap;
      for (const Quaternion& yp : pres.vgens.elements) {
        Quaternion w = conj(yp) * z;
        bool divisible = true;
        for (int t = 0; t < 4; ++t) {
          if (boost::multiprecision::numerator(w[t]) % l != 0) {
            divisible = false;
            break;
          }
        }
        if (!divisible) continue;
        Quaternion xp(w.x0 / l, w.x1 / l, w.x2 / l, w.x3 / l);
        if (!std::binary_search(pres.hgens.elements.begin(),
                                pres.hgens.elements.end(), xp, lex)) {
          continue;
        }
        Letter a2 = pres.letter_of(Side::h, reduce_canonical(xp));
        Letter b2 = pres.letter_of(Side::v, reduce_canonical(yp));
        if (swap && *swap != std::make_pair(b2, a2)) {
          throw error("build_squares: ambiguous square at corner (" + a.str() +
                      ", " + b.str() + ")");
        }
        swap = {b2, a2};
      }
      if (!swap) {
        throw error("build_squares: no square found at corner (" + a.str() +
                    ", " + b.str() + ")");
      }
      // a b = b' a'  =>  relator a b a'^-1 b'^-1.
      auto [b2, a2] = *swap;
      found.push_back(canonical_square({a, b, a2.inverse(), b2.inverse()}));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (static_cast<int>(found.size()) != m * n) {
    throw error("build_squares: expected " + std::to_string(m * n) +
                " squares, found " + std::to_string(found.size()));
  }
  pres.squares = std::move(found);
  detail::build_rewrite_tables(pres);
  return pres;
}

// Computes the link graph of the complex and checks completeness.  Returns
// the graph when every corner pair occurs exactly once; otherwise throws
// link_violation_error listing the offending pairs.
inline LinkGraph check_link(const Presentation& pres) {
  LinkGraph g;
  g.m = pres.m();
  g.n = pres.n();
  g.counts.assign(2 * g.m, std::vector<int>(2 * g.n, 0));
  for (const Square& s : pres.squares) {
    for (const auto& [a, b] : square_corners(s)) {
      ++g.counts[letter_code(a)][letter_code(b)];
    }
  }
  std::string bad;
  int nbad = 0;
  for (int a = 0; a < 2 * g.m; ++a) {
    for (int b = 0; b < 2 * g.n; ++b) {
      if (g.counts[a][b] != 1) {
        ++nbad;
        if (!bad.empty()) bad += ", ";
        if (nbad <= 8) {
          bad += "(" + code_letter(Side::h, a).str() + ", " +
                 code_letter(Side::v, b).str() +
                 ") x" + std::to_string(g.counts[a][b]);
        }
      }
    }
  }
  if (nbad > 0) {
    if (nbad > 8) bad += ", ...";
    throw link_violation_error("link condition fails at " +
                               std::to_string(nbad) + " corner pair(s): " + bad);
  }
  return g;
}

// The vertical local permutation action: for a vertical letter b, rho_v(b)
// maps each horizontal letter a' to the unique a with a^-1 b a' vertical,
// i.e. with b a' = a b'' for some vertical b''.  For a vertical word the
// permutations compose along the word.  Returned as a table over side-local
// codes: perm[code(a')] = code(a).
inline std::vector<int> rho_v(const Presentation& pres,
                              const std::vector<Letter>& vword) {
  const int m2 = 2 * pres.m();
  std::vector<int> perm(m2);
  for (int c = 0; c < m2; ++c) perm[c] = c;
  for (const Letter& b : vword) {
    if (b.side != Side::v) {
      throw side_mismatch_error("rho_v: word must use vertical letters, got " +
                                b.str());
    }
    std::vector<int> step(m2);
    for (int ac = 0; ac < m2; ++ac) {
      // b a' = a b''  =>  rho(b) sends a' to a.
      step[ac] = pres.table_vh[letter_code(b)][ac].first;
    }
    // rho(prefix . b) = rho(prefix) o rho(b).
    std::vector<int> next(m2);
    for (int c = 0; c < m2; ++c) next[c] = perm[step[c]];
    perm = std::move(next);
  }
  return perm;
}

inline bool is_fixpoint_free(const std::vector<int>& perm) {
  for (int c = 0; c < static_cast<int>(perm.size()); ++c) {
    if (perm[c] == c) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Comparing squares across different labelings.
//
// A square is determined up to its dihedral moves by the 4-tuple of central
// classes of its letters.  The signature below is invariant under rotation
// and inversion of the relator and under renaming of letters, so squares
// produced from different labeling conventions can be compared directly.
// ---------------------------------------------------------------------------

inline std::array<GroupElement, 4> square_signature(
    const std::array<GroupElement, 4>& w, const Int& p) {
  std::array<GroupElement, 4> inv = {w[3].inverse(), w[2].inverse(),
                                     w[1].inverse(), w[0].inverse()};
  std::optional<std::array<GroupElement, 4>> best;
  for (int r = 0; r < 4; ++r) {
    for (const auto& base : {w, inv}) {
      std::array<GroupElement, 4> cand;
      for (int t = 0; t < 4; ++t) cand[t] = base[(r + t) % 4];
      if (cand[0].rep_norm() % p != 0) continue;  // keep horizontal-first forms
      if (!best || std::lexicographical_compare(cand.begin(), cand.end(),
                                                best->begin(), best->end())) {
        best = cand;
      }
    }
  }
  return *best;
}

inline std::array<GroupElement, 4> square_signature(const Presentation& pres,
                                                    const Square& s) {
  std::array<GroupElement, 4> w = {
      pres.group_element(s.w[0]), pres.group_element(s.w[1]),
      pres.group_element(s.w[2]), pres.group_element(s.w[3])};
  return square_signature(w, pres.p);
}

// ---------------------------------------------------------------------------
// Plain-text and JSON serialisation.
//
// Text format (one item per line, '#' comments allowed):
//   gamma 3 5
//   hgen a1 = 1 0 -1 -1
//   vgen b1 = 1 -2 0 0
//   square a1 b1 a2^-1 b3^-1
// ---------------------------------------------------------------------------

inline std::string export_presentation_text(const Presentation& pres) {
  std::ostringstream os;
  os << "gamma " << pres.p << " " << pres.l << "\n";
  for (int t = 0; t < pres.m(); ++t) {
    const Quaternion& r = pres.hgens.letter_reps[t].rep();
    os << "hgen a" << t + 1 << " = " << r.x0 << " " << r.x1 << " " << r.x2
       << " " << r.x3 << "\n";
  }
  for (int t = 0; t < pres.n(); ++t) {
    const Quaternion& r = pres.vgens.letter_reps[t].rep();
    os << "vgen b" << t + 1 << " = " << r.x0 << " " << r.x1 << " " << r.x2
       << " " << r.x3 << "\n";
  }
  for (const Square& s : pres.squares) os << "square " << s.str() << "\n";
  return os.str();
}

// Parses a single letter token such as "a2" or "b1^-1".
inline Letter parse_letter_token(std::string_view tok, int m, int n) {
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b')) {
    throw parse_error("bad letter token '" + std::string(tok) + "'");
  }
  Side side = tok[0] == 'a' ? Side::h : Side::v;
  std::size_t pos = 1;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    ++pos;
  }
  if (pos == 1) throw parse_error("bad letter token '" + std::string(tok) + "'");
  int idx = std::stoi(std::string(tok.substr(1, pos - 1))) - 1;
  int sign = 1;
  if (pos != tok.size()) {
    if (tok.substr(pos) != "^-1") {
      throw parse_error("bad letter token '" + std::string(tok) + "'");
    }
    sign = -1;
  }
  int limit = side == Side::h ? m : n;
  if (idx < 0 || idx >= limit) {
    throw parse_error("letter index out of range in token '" + std::string(tok) +
                      "'");
  }
  return {side, idx, sign};
}

// Parses the text format above.  The primes determine the generator sets;
// the listed generators are checked against the canonical labeling and the
// squares against the rewrite-table construction, so a file that disagrees
// with the arithmetic is rejected.
inline Presentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<Int> p, l;
  std::vector<std::pair<int, Quaternion>> hlisted, vlisted;
  std::vector<std::array<std::string, 4>> square_tokens;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "gamma") {
      std::string ps, lss;
      if (!(ls >> ps >> lss)) throw parse_error("gamma line needs two primes");
      p = Int(ps);
      l = Int(lss);
    } else if (kw == "hgen" || kw == "vgen") {
      std::string name, eq;
      std::string c0, c1, c2, c3;
      if (!(ls >> name >> eq >> c0 >> c1 >> c2 >> c3) || eq != "=") {
        throw parse_error("bad generator line: " + line);
      }
      char want = kw == "hgen" ? 'a' : 'b';
      if (name.empty() || name[0] != want) {
        throw parse_error("generator name '" + name + "' does not match " + kw);
      }
      int idx = std::stoi(name.substr(1)) - 1;
      Quaternion q{Rat(Int(c0)), Rat(Int(c1)), Rat(Int(c2)), Rat(Int(c3))};
      (kw == "hgen" ? hlisted : vlisted).emplace_back(idx, q);
    } else if (kw == "square") {
      std::array<std::string, 4> toks;
      if (!(ls >> toks[0] >> toks[1] >> toks[2] >> toks[3])) {
        throw parse_error("square line needs four letters: " + line);
      }
      square_tokens.push_back(toks);
    } else {
      throw parse_error("unknown keyword '" + kw + "'");
    }
  }
  if (!p || !l) throw parse_error("missing gamma header line");
  Presentation pres = build_squares(*p, *l);
  for (const auto& [idx, q] : hlisted) {
    if (idx < 0 || idx >= pres.m() ||
        pres.hgens.letter_reps[idx].rep() != q) {
      throw parse_error("horizontal generator a" + std::to_string(idx + 1) +
                        " does not match the canonical labeling");
    }
  }
  for (const auto& [idx, q] : vlisted) {
    if (idx < 0 || idx >= pres.n() ||
        pres.vgens.letter_reps[idx].rep() != q) {
      throw parse_error("vertical generator b" + std::to_string(idx + 1) +
                        " does not match the canonical labeling");
    }
  }
  std::vector<Square> listed;
  for (const auto& toks : square_tokens) {
    std::array<Letter, 4> w;
    for (int t = 0; t < 4; ++t) {
      w[t] = parse_letter_token(toks[t], pres.m(), pres.n());
    }
    if (w[0].side != Side::h || w[1].side != Side::v || w[2].side != Side::h ||
        w[3].side != Side::v) {
      throw parse_error("square letters must alternate h, v, h, v");
    }
    listed.push_back(canonical_square(w));
  }
  std::sort(listed.begin(), listed.end());
  if (listed != pres.squares) {
    throw parse_error("listed squares do not match the arithmetic construction");
  }
  return pres;
}

}  // namespace qsc
