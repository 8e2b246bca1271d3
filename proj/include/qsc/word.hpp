#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/presentation.hpp"

namespace qsc {

// A word over the generator alphabet of a fixed presentation.  The letters
// are stored verbatim (not reduced); all semantic operations go through
// evaluate_word or the normal forms.
struct Word {
  const Presentation* pres = nullptr;
  std::vector<Letter> letters;

  Word() = default;
  Word(const Presentation& pr, std::vector<Letter> ls)
      : pres(&pr), letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::string str() const {
    std::string out;
    for (const Letter& x : letters) {
      if (!out.empty()) out += ' ';
      out += x.str();
    }
    return out;
  }

  // Parses a whitespace-separated letter list such as "a1 b2^-1 a1".
  static Word parse(const Presentation& pres, std::string_view text) {
    Word w;
    w.pres = &pres;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
      w.letters.push_back(parse_letter_token(tok, pres.m(), pres.n()));
    }
    return w;
  }
};

// Multiplies out the integer lifts of the letters and reduces the product to
// its canonical class representative.  The empty word gives the identity.
inline GroupElement evaluate_word(const Word& w) {
  if (!w.pres) throw error("evaluate_word: word has no presentation");
  Quaternion acc(1, 0, 0, 0);
  for (const Letter& x : w.letters) acc = acc * w.pres->lift(x);
  return reduce_canonical(acc);
}

// Equality in the group.  Both words must belong to presentations of the
// same Gamma_{p,l}.
inline bool words_equal(const Word& u, const Word& v) {
  if (!u.pres || !v.pres) throw error("words_equal: word has no presentation");
  if (u.pres->p != v.pres->p || u.pres->l != v.pres->l) {
    throw alphabet_mismatch_error(
        "words_equal: words over different groups (" + u.pres->p.str() + "," +
        u.pres->l.str() + ") vs (" + v.pres->p.str() + "," + v.pres->l.str() +
        ")");
  }
  return evaluate_word(u) == evaluate_word(v);
}

namespace detail {

// Removes adjacent inverse pairs until none remain.
inline void free_reduce(std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  w = std::move(out);
}

}  // namespace detail

// A word in normal form: a horizontal part and a vertical part, each freely
// reduced, concatenated in the stated order.
struct NormalForm {
  enum class Order { ab, ba };
  Order order;
  std::vector<Letter> sigma_h;  // the horizontal syllable
  std::vector<Letter> sigma_v;  // the vertical syllable

  std::vector<Letter> joined() const {
    std::vector<Letter> out;
    if (order == Order::ab) {
      out.insert(out.end(), sigma_h.begin(), sigma_h.end());
      out.insert(out.end(), sigma_v.begin(), sigma_v.end());
    } else {
      out.insert(out.end(), sigma_v.begin(), sigma_v.end());
      out.insert(out.end(), sigma_h.begin(), sigma_h.end());
    }
    return out;
  }

  std::size_t length() const { return sigma_h.size() + sigma_v.size(); }
};

namespace detail {

// Shared engine for the two normal forms.  For the ab-form we repeatedly
// replace adjacent pairs (v-letter, h-letter) using the vh rewrite table
// until every horizontal letter precedes every vertical letter, then freely
// reduce each syllable and repeat until stable.  Each table swap decreases
// the number of (v, h) inversions by one, and each reduction shortens the
// word, so the loop terminates.  The ba-form is symmetric via the hv table.
inline NormalForm normalize(const Word& w, NormalForm::Order order) {
  if (!w.pres) throw error("normalize: word has no presentation");
  const Presentation& pres = *w.pres;
  const Side first_side = order == NormalForm::Order::ab ? Side::h : Side::v;
  std::vector<Letter> cur = w.letters;
  for (;;) {
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t t = 0; t + 1 < cur.size(); ++t) {
        if (cur[t].side != first_side && cur[t + 1].side == first_side) {
          Letter x = cur[t], y = cur[t + 1];
          if (order == NormalForm::Order::ab) {
            // x vertical, y horizontal: x y = y' x' via the vh table.
            auto [hc, vc] = pres.table_vh[letter_code(x)][letter_code(y)];
            cur[t] = code_letter(Side::h, hc);
            cur[t + 1] = code_letter(Side::v, vc);
          } else {
            // x horizontal, y vertical: x y = y' x' via the hv table.
            auto [vc, hc] = pres.table_hv[letter_code(x)][letter_code(y)];
            cur[t] = code_letter(Side::v, vc);
            cur[t + 1] = code_letter(Side::h, hc);
          }
          swapped = true;
        }
      }
    }
    std::size_t before = cur.size();
    free_reduce(cur);
    if (cur.size() == before) break;
  }
  NormalForm nf;
  nf.order = order;
  for (const Letter& x : cur) {
    (x.side == Side::h ? nf.sigma_h : nf.sigma_v).push_back(x);
  }
  return nf;
}

}  // namespace detail

// Normal form with the horizontal syllable first: w = sigma_h sigma_v.
inline NormalForm normalize_ab(const Word& w) {
  return detail::normalize(w, NormalForm::Order::ab);
}

// Normal form with the vertical syllable first: w = sigma_v sigma_h.
inline NormalForm normalize_ba(const Word& w) {
  return detail::normalize(w, NormalForm::Order::ba);
}

}  // namespace qsc
