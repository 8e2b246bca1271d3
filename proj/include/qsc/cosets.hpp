#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/word.hpp"

namespace qsc {

// A coset table for a subgroup H <= Gamma_{p,l}, produced by Todd-Coxeter
// enumeration over the square relators.  Columns come in signed pairs, the
// horizontal generators first: a1, a1^-1, ..., am, am^-1, b1, ..., bn^-1.
// Rows are 1-based (row 0 is unused); entry 0 means undefined, which only
// survives in tables that overflowed.  Coset 1 is the subgroup itself.
struct CosetTable {
  enum class Status { incomplete, closed, overflow };

  Status status = Status::incomplete;
  int m = 0, n = 0;
  long long max_cosets = 0;
  long long cosets_defined = 0;  // total definitions, before merging
  std::vector<std::string> column_names;
  std::vector<std::vector<std::int32_t>> table;

  int ngens() const { return m + n; }
  int ncols() const { return 2 * (m + n); }

  // The index [Gamma : H]; defined only for a closed table.
  long long index() const {
    if (status != Status::closed) {
      throw table_not_closed_error(
          "index: coset table is not closed (status " +
          std::string(status == Status::overflow ? "overflow" : "incomplete") +
          ")");
    }
    return static_cast<long long>(table.size()) - 1;
  }
};

namespace detail {

// Column of a signed letter: the two signed columns of generator t are
// 2t (positive) and 2t+1 (negative), with horizontal generators numbered
// before vertical ones.
inline int letter_column(const Letter& x, int m) {
  int t = (x.side == Side::h ? 0 : m) + x.index;
  return 2 * t + (x.sign < 0 ? 1 : 0);
}

// HLT-style enumerator with immediate coincidence handling.  The budget is
// on live cosets; when it runs out the driver can fold the table with
// lookahead scans (scan_only) and compact away the dead rows.
class Enumerator {
 public:
  Enumerator(int ncols, long long max_live) : ncols_(ncols), max_(max_live) {
    tab_.push_back(std::vector<std::int32_t>(ncols_, 0));  // row 0 unused
    tab_.push_back(std::vector<std::int32_t>(ncols_, 0));  // coset 1
    p_ = {0, 1};
  }

  bool overflowed() const { return overflow_; }
  void clear_overflow() { overflow_ = false; }
  std::int32_t last() const { return static_cast<std::int32_t>(tab_.size()) - 1; }
  long long defined_count() const { return defined_; }
  long long live_count() const { return static_cast<long long>(last()) - dead_; }

  std::int32_t rep(std::int32_t k) {
    while (p_[k] != k) {
      p_[k] = p_[p_[k]];  // path halving
      k = p_[k];
    }
    return k;
  }

  bool alive(std::int32_t k) { return rep(k) == k; }

  // Fills the whole trace of word w from coset alpha, defining new cosets
  // where needed.  Returns false on overflow.
  bool scan_and_fill(std::int32_t alpha, const std::vector<int>& w) {
    std::int32_t f = alpha;
    std::size_t i = 0;
    std::int32_t b = alpha;
    std::size_t j = w.size();  // scan positions are [i, j)
    for (;;) {
      while (i < j && tab_[f][w[i]] != 0) f = tab_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && tab_[b][w[j - 1] ^ 1] != 0) b = tab_[b][w[--j] ^ 1];
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        tab_[f][w[i]] = b;
        tab_[b][w[i] ^ 1] = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  // Lookahead scan: traces w at alpha as far as the existing entries reach,
  // defining nothing.  Completes the scan when at most one entry is missing
  // (a deduction) and processes any coincidence it uncovers; otherwise the
  // table is left unchanged.
  void scan_only(std::int32_t alpha, const std::vector<int>& w) {
    std::int32_t f = alpha;
    std::size_t i = 0;
    std::int32_t b = alpha;
    std::size_t j = w.size();
    while (i < j && tab_[f][w[i]] != 0) f = tab_[f][w[i++]];
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && tab_[b][w[j - 1] ^ 1] != 0) b = tab_[b][w[--j] ^ 1];
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      tab_[f][w[i]] = b;
      tab_[b][w[i] ^ 1] = f;
    }
  }

  bool define(std::int32_t alpha, int col) {
    if (live_count() >= max_) {
      overflow_ = true;
      return false;
    }
    tab_.push_back(std::vector<std::int32_t>(ncols_, 0));
    p_.push_back(last());
    ++defined_;
    std::int32_t nu = last();
    tab_[alpha][col] = nu;
    tab_[nu][col ^ 1] = alpha;
    return true;
  }

  std::int32_t entry(std::int32_t alpha, int col) { return tab_[alpha][col]; }

  // Compacts the live rows into out (1-based), resolving entries through
  // their representatives.
  void compact(std::vector<std::vector<std::int32_t>>& out) {
    std::vector<std::int32_t> newnum(tab_.size(), 0);
    std::int32_t cnt = 0;
    for (std::int32_t a = 1; a <= last(); ++a) {
      if (alive(a)) newnum[a] = ++cnt;
    }
    out.assign(cnt + 1, std::vector<std::int32_t>(ncols_, 0));
    for (std::int32_t a = 1; a <= last(); ++a) {
      if (!alive(a)) continue;
      for (int c = 0; c < ncols_; ++c) {
        std::int32_t e = tab_[a][c];
        out[newnum[a]][c] = e == 0 ? 0 : newnum[rep(e)];
      }
    }
  }

  // Drops the dead rows, renumbering the live cosets densely in their current
  // order; afterwards every coset is its own representative.  Returns the new
  // number of the smallest live coset whose old number was >= from, i.e. the
  // position at which a scan loop interrupted at position from should resume
  // (one past the end if everything up to from was merged away).
  std::int32_t compact_live(std::int32_t from) {
    std::vector<std::int32_t> newnum(tab_.size(), 0);
    std::int32_t cnt = 0;
    for (std::int32_t a = 1; a <= last(); ++a) {
      if (alive(a)) newnum[a] = ++cnt;
    }
    std::int32_t resume = cnt + 1;
    for (std::int32_t a = from; a <= last(); ++a) {
      if (newnum[a] != 0) {
        resume = newnum[a];
        break;
      }
    }
    std::vector<std::vector<std::int32_t>> out(
        cnt + 1, std::vector<std::int32_t>(ncols_, 0));
    for (std::int32_t a = 1; a <= last(); ++a) {
      if (!alive(a)) continue;
      for (int c = 0; c < ncols_; ++c) {
        std::int32_t e = tab_[a][c];
        out[newnum[a]][c] = e == 0 ? 0 : newnum[rep(e)];
      }
    }
    tab_ = std::move(out);
    p_.resize(tab_.size());
    for (std::size_t k = 0; k < p_.size(); ++k) {
      p_[k] = static_cast<std::int32_t>(k);
    }
    dead_ = 0;
    return resume;
  }

 private:
  // Merges the classes of two cosets and processes the resulting cascade of
  // table coincidences, keeping the table symmetric (alpha^x = beta iff
  // beta^(x^-1) = alpha) and free of references to dead cosets.
  void coincidence(std::int32_t alpha, std::int32_t beta) {
    queue_.clear();
    qhead_ = 0;
    merge(alpha, beta);
    while (qhead_ < queue_.size()) {
      std::int32_t gamma = queue_[qhead_++];
      for (int x = 0; x < ncols_; ++x) {
        std::int32_t delta = tab_[gamma][x];
        if (delta == 0) continue;
        tab_[delta][x ^ 1] = 0;
        std::int32_t mu = rep(gamma);
        std::int32_t nu = rep(delta);
        if (tab_[mu][x] != 0) {
          merge(nu, tab_[mu][x]);
        } else if (tab_[nu][x ^ 1] != 0) {
          merge(mu, tab_[nu][x ^ 1]);
        } else {
          tab_[mu][x] = nu;
          tab_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;  // b dies
    ++dead_;
    queue_.push_back(b);
  }

  int ncols_;
  long long max_;
  long long defined_ = 1;  // coset 1
  long long dead_ = 0;
  bool overflow_ = false;
  std::vector<std::vector<std::int32_t>> tab_;
  std::vector<std::int32_t> p_;
  std::vector<std::int32_t> queue_;
  std::size_t qhead_ = 0;
};

}  // namespace detail

// Enumerates the cosets of the subgroup generated by the given words.  The
// enumeration is deterministic: subgroup generators are scanned from coset 1
// in the given order, then each live coset is scanned against every square
// relator (in sorted square order) and its row is filled left to right.
// When max_cosets rows are live at once, a lookahead pass rescans the live
// table against all relators without defining anything, which folds together
// the coincidences the fill-ahead frontier has not yet seen; the table is
// then compacted and the enumeration resumes.  Stops with status overflow
// when even that pass leaves more than half the budget occupied; otherwise
// the returned table is closed and compacted.
inline CosetTable todd_coxeter(const Presentation& pres,
                               const std::vector<Word>& subgroup_gens,
                               long long max_cosets = 1000000) {
  if (max_cosets < 1) throw domain_error("todd_coxeter: max_cosets must be >= 1");
  const int m = pres.m();
  const int n = pres.n();
  CosetTable ct;
  ct.m = m;
  ct.n = n;
  ct.max_cosets = max_cosets;
  for (int t = 0; t < m + n; ++t) {
    Letter pos{t < m ? Side::h : Side::v, t < m ? t : t - m, +1};
    ct.column_names.push_back(pos.str());
    ct.column_names.push_back(pos.inverse().str());
  }

  std::vector<std::vector<int>> relators;
  for (const Square& s : pres.squares) {
    std::vector<int> w;
    for (const Letter& x : s.w) w.push_back(detail::letter_column(x, m));
    relators.push_back(std::move(w));
  }
  std::vector<std::vector<int>> subgens;
  for (const Word& w : subgroup_gens) {
    if (!w.pres || w.pres->p != pres.p || w.pres->l != pres.l) {
      throw alphabet_mismatch_error(
          "todd_coxeter: subgroup generator word over a different group");
    }
    std::vector<int> cols;
    for (const Letter& x : w.letters) {
      cols.push_back(detail::letter_column(x, m));
    }
    subgens.push_back(std::move(cols));
  }

  detail::Enumerator en(2 * (m + n), max_cosets);
  bool ok = true;
  for (const auto& w : subgens) {
    if (!en.scan_and_fill(1, w)) {
      ok = false;
      break;
    }
  }
  if (ok) {
    std::int32_t alpha = 1;
    while (alpha <= en.last()) {
      if (!en.alive(alpha)) {
        ++alpha;
        continue;
      }
      bool out_of_room = false;
      for (const auto& rel : relators) {
        if (!en.scan_and_fill(alpha, rel)) {
          out_of_room = true;
          break;
        }
        if (!en.alive(alpha)) break;
      }
      if (!out_of_room && en.alive(alpha)) {
        for (int c = 0; c < 2 * (m + n); ++c) {
          if (en.entry(alpha, c) == 0 && !en.define(alpha, c)) {
            out_of_room = true;
            break;
          }
        }
      }
      if (!out_of_room) {
        ++alpha;
        continue;
      }
      // Live budget exhausted: lookahead over the whole live table.
      for (std::int32_t g = 1; g <= en.last(); ++g) {
        if (!en.alive(g)) continue;
        for (const auto& rel : relators) {
          en.scan_only(g, rel);
          if (!en.alive(g)) break;
        }
      }
      if (2 * en.live_count() > max_cosets) {
        ok = false;  // not enough room recovered to keep going
        break;
      }
      en.clear_overflow();
      alpha = en.compact_live(alpha);  // alpha is rescanned if it survived
    }
  }
  ct.cosets_defined = en.defined_count();
  en.compact(ct.table);
  if (!ok || en.overflowed()) {
    ct.status = CosetTable::Status::overflow;
    return ct;
  }
  for (std::size_t r = 1; r < ct.table.size(); ++r) {
    for (int c = 0; c < ct.ncols(); ++c) {
      if (ct.table[r][c] == 0) {
        throw error("todd_coxeter: closed table has an undefined entry at row " +
                    std::to_string(r));
      }
    }
  }
  ct.status = CosetTable::Status::closed;
  return ct;
}

// Extracts, for each unsigned generator, the permutation of the coset set
// induced by right multiplication.  perms[t][c] is the 0-based image of
// 0-based coset c under generator t (horizontal generators first).  Requires
// a closed table.
inline std::vector<std::vector<int>> permutation_representation(
    const CosetTable& ct) {
  long long idx = ct.index();  // throws unless closed
  std::vector<std::vector<int>> perms(ct.ngens(), std::vector<int>(idx));
  for (int t = 0; t < ct.ngens(); ++t) {
    for (long long c = 0; c < idx; ++c) {
      perms[t][c] = ct.table[c + 1][2 * t] - 1;
    }
  }
  return perms;
}

}  // namespace qsc
