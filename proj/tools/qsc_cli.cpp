// qsc — command-line front end for the exact quaternion-lattice toolkit.
//
// Every subcommand is a thin adapter over the library: it parses exact
// integer/quaternion literals, calls one library entry point, and prints a
// deterministic text or JSON report.  No mathematics lives in this file.
//
// Exit codes: 0 success, 1 domain/parse error, 2 coset budget overflow.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/qsc.hpp"

namespace {

using nlohmann::json;
using namespace qsc;

// ---------------------------------------------------------------------------
// small formatting helpers

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string int_str(const Int& n) { return n.str(); }

json quat_json(const Quaternion& q) {
  return json::array({rat_str(q.x0), rat_str(q.x1), rat_str(q.x2), rat_str(q.x3)});
}

json mat3_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(rat_str(m.a[i][j]));
    rows.push_back(row);
  }
  return rows;
}

Quaternion parse_quat_arg(const std::string& text) {
  return parse_quaternion(text);
}

// Splits "1+2i;1+4k" into quaternion literals.
std::vector<Quaternion> parse_quat_list(const std::string& text) {
  std::vector<Quaternion> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) {
    // trim blanks
    while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
    while (!cur.empty() && cur.back() == ' ') cur.pop_back();
    if (cur.empty()) continue;
    out.push_back(parse_quaternion(cur));
  }
  if (out.empty()) throw parse_error("empty generator list");
  return out;
}

void require_distinct_odd_primes(const Int& p, const Int& l) {
  require_odd_prime(p, "p");
  require_odd_prime(l, "l");
  if (p == l) throw domain_error("p and l must be distinct primes");
}

// ---------------------------------------------------------------------------
// per-subcommand option bags

struct Options {
  bool json_out = false;
  std::int64_t p = 0, l = 0, q = 0;
  std::string a_text, b_text, x_text, y_text;
  std::string word_text, subgens_text, table_path, order = "ab";
  std::int64_t precision = 1;
  std::int64_t max_cosets = 1000000;
  std::int64_t bound = 5;
  bool axis_angle = false;
  std::uint64_t seed = 20250822;
  std::vector<std::string> only;
};

// ---------------------------------------------------------------------------
// subcommand bodies (each returns the process exit code)

int cmd_genset(const Options& opt) {
  require_odd_prime(Int(opt.q), "q");
  GeneratorSet gs = make_generator_set(Int(opt.q));
  if (opt.json_out) {
    json j;
    j["q"] = opt.q;
    j["count"] = gs.elements.size();
    j["elements"] = json::array();
    for (const Quaternion& x : gs.elements)
      j["elements"].push_back(quat_json(x));
    j["letters"] = json::array();
    for (std::size_t i = 0; i < gs.letter_reps.size(); ++i)
      j["letters"].push_back(format_quaternion(gs.letter_reps[i].rep()));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "X_" << opt.q << ": " << gs.elements.size() << " elements, "
            << gs.letter_reps.size() << " letters\n";
  for (const Quaternion& x : gs.elements)
    std::cout << "  " << format_quaternion(x) << "\n";
  std::cout << "letter representatives (with inverse pairing):\n";
  for (std::size_t i = 0; i < gs.letter_reps.size(); ++i) {
    GroupElement inv = gs.letter_reps[i].inverse();
    std::cout << "  g" << (i + 1) << " = "
              << format_quaternion(gs.letter_reps[i].rep()) << "   g" << (i + 1)
              << "^-1 ~ " << format_quaternion(inv.rep()) << "\n";
  }
  return 0;
}

int cmd_present(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Presentation pres = build_squares(Int(opt.p), Int(opt.l));
  check_link(pres);
  if (opt.json_out) {
    json j;
    j["p"] = opt.p;
    j["l"] = opt.l;
    j["m"] = pres.m();
    j["n"] = pres.n();
    j["hgens"] = json::array();
    for (const GroupElement& g : pres.hgens.letter_reps)
      j["hgens"].push_back(format_quaternion(g.rep()));
    j["vgens"] = json::array();
    for (const GroupElement& g : pres.vgens.letter_reps)
      j["vgens"].push_back(format_quaternion(g.rep()));
    j["squares"] = json::array();
    for (const Square& s : pres.squares) {
      json w = json::array();
      for (const Letter& let : s.w) w.push_back(let.str());
      j["squares"].push_back(w);
    }
    j["link_complete"] = true;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << export_presentation_text(pres);
  std::cout << "# " << pres.squares.size() << " squares, link complete\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  GroupElement a = reduce_canonical(parse_quat_arg(opt.a_text));
  GroupElement b = reduce_canonical(parse_quat_arg(opt.b_text));
  PairClass pc = classify_pair(Int(opt.p), Int(opt.l), a, b);
  auto scan = power_commute_scan(a, b, static_cast<int>(opt.bound));
  if (opt.json_out) {
    json j;
    j["class"] = to_string(pc);
    j["a"] = format_quaternion(a.rep());
    j["b"] = format_quaternion(b.rep());
    j["power_scan_bound"] = opt.bound;
    if (scan)
      j["commuting_powers"] = json::array({scan->first, scan->second});
    else
      j["commuting_powers"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(pc) << "\n";
  if (pc == PairClass::anti_torus) {
    if (scan)
      std::cout << "powers (" << scan->first << "," << scan->second
                << ") commute\n";
    else
      std::cout << "no commuting powers up to exponent " << opt.bound << "\n";
  }
  return 0;
}

int cmd_centralizer(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Presentation pres = build_squares(Int(opt.p), Int(opt.l));
  GroupElement b = reduce_canonical(parse_quat_arg(opt.b_text));
  CentralizerCertificate cert = centralizer_is_cyclic(pres, b);
  if (opt.json_out) {
    json j;
    j["b"] = format_quaternion(b.rep());
    j["single_letter"] = cert.single_letter;
    if (cert.rho_fixpoint_free)
      j["rho_v_fixpoint_free"] = *cert.rho_fixpoint_free;
    else
      j["rho_v_fixpoint_free"] = nullptr;
    j["n_b"] = int_str(cert.n_b);
    j["legendre_minus_n_p"] = cert.legendre_p;
    j["legendre_minus_n_l"] = cert.legendre_l;
    j["certified_cyclic"] = cert.certified();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "b = " << format_quaternion(b.rep()) << "\n";
  if (cert.rho_fixpoint_free)
    std::cout << "single letter: yes; rho_v fixpoint-free: "
              << (*cert.rho_fixpoint_free ? "yes" : "no") << "\n";
  else
    std::cout << "single letter: no\n";
  std::cout << "n(b) = " << int_str(cert.n_b) << ", (-n/p) = " << cert.legendre_p
            << ", (-n/l) = " << cert.legendre_l << "\n";
  std::cout << (cert.certified() ? "centralizer certified cyclic"
                                 : "certificate inconclusive")
            << "\n";
  return 0;
}

int cmd_verify_relation(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Quaternion x = parse_quat_arg(opt.x_text);
  Quaternion y = parse_quat_arg(opt.y_text);
  ExponentWord w = parse_exponent_word(opt.word_text);
  bool holds = verify_relation(Int(opt.p), Int(opt.l), w, x, y);
  bool so3_holds = relation_transfer_check(w, x, y);
  if (opt.json_out) {
    json j;
    j["word"] = format_exponent_word(w);
    j["length"] = exponent_word_length(w);
    j["holds_in_group"] = holds;
    j["holds_in_so3"] = so3_holds;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "length " << exponent_word_length(w) << " relation "
            << (holds ? "holds" : "FAILS") << " in the lattice, "
            << (so3_holds ? "holds" : "FAILS") << " in SO3(Q)\n";
  return 0;
}

int cmd_normform(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Presentation pres = build_squares(Int(opt.p), Int(opt.l));
  Word w = Word::parse(pres, opt.word_text);
  NormalForm nf = (opt.order == "ba") ? normalize_ba(w) : normalize_ab(w);
  auto letters_str = [](const std::vector<Letter>& ls) {
    std::string out;
    for (const Letter& let : ls) {
      if (!out.empty()) out += ' ';
      out += let.str();
    }
    return out;
  };
  std::string joined = letters_str(nf.joined());
  if (opt.json_out) {
    json j;
    j["input"] = w.str();
    j["order"] = opt.order;
    json h = json::array(), v = json::array();
    for (const Letter& let : nf.sigma_h) h.push_back(let.str());
    for (const Letter& let : nf.sigma_v) v.push_back(let.str());
    j["sigma_h"] = h;
    j["sigma_v"] = v;
    j["normal_form"] = joined;
    j["length"] = nf.length();
    j["element"] = format_quaternion(evaluate_word(w).rep());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << (joined.empty() ? std::string("(empty)") : joined) << "\n";
  std::cout << "length " << nf.length() << ", element "
            << format_quaternion(evaluate_word(w).rep()) << "\n";
  return 0;
}

int cmd_factor(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Presentation pres = build_squares(Int(opt.p), Int(opt.l));
  GroupElement x = reduce_canonical(parse_quat_arg(opt.x_text));
  Admissibility adm = is_admissible(x.rep(), Int(opt.p), Int(opt.l));
  if (!adm.ok) {
    if (opt.json_out) {
      json j;
      j["admissible"] = false;
      j["x"] = format_quaternion(x.rep());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_quaternion(x.rep()) << " is not in the lattice\n";
    }
    return 1;
  }
  Word w = factor_to_word(x.rep(), pres);
  if (opt.json_out) {
    json j;
    j["admissible"] = true;
    j["x"] = format_quaternion(x.rep());
    j["r"] = adm.r;
    j["s"] = adm.s;
    j["word"] = w.str();
    j["length"] = w.letters.size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << (w.letters.empty() ? std::string("(empty)") : w.str()) << "\n";
  std::cout << "norm p^" << adm.r << " l^" << adm.s << ", length "
            << w.letters.size() << "\n";
  return 0;
}

int cmd_index(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  Presentation pres = build_squares(Int(opt.p), Int(opt.l));
  std::vector<Quaternion> gens = parse_quat_list(opt.subgens_text);
  std::vector<Word> words;
  for (const Quaternion& g : gens) words.push_back(factor_to_word(g, pres));
  CosetTable table = todd_coxeter(pres, words, opt.max_cosets);
  if (table.status == CosetTable::Status::overflow) {
    if (opt.json_out) {
      json j;
      j["status"] = "overflow";
      j["max_cosets"] = opt.max_cosets;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "overflow at max_cosets = " << opt.max_cosets << "\n";
    }
    return 2;
  }
  if (!opt.table_path.empty()) {
    json jt;
    jt["p"] = opt.p;
    jt["l"] = opt.l;
    jt["index"] = table.index();
    jt["columns"] = table.column_names;
    json rows = json::array();
    for (std::size_t c = 1; c < table.table.size(); ++c) {
      json row;
      for (std::size_t k = 0; k < table.column_names.size(); ++k)
        row[table.column_names[k]] = table.table[c][k];
      rows.push_back(row);
    }
    jt["rows"] = rows;
    std::ofstream out(opt.table_path);
    if (!out) throw domain_error("cannot write " + opt.table_path);
    out << jt.dump(2) << "\n";
  }
  if (opt.json_out) {
    json j;
    j["status"] = "closed";
    j["index"] = table.index();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "index " << table.index() << "\n";
  return 0;
}

int cmd_padic_embed(const Options& opt) {
  require_distinct_odd_primes(Int(opt.p), Int(opt.l));
  if (opt.precision < 1) throw domain_error("--precision must be >= 1");
  GroupElement x = reduce_canonical(parse_quat_arg(opt.x_text));
  int k = static_cast<int>(opt.precision);
  PadicParams pp = solve_cd(Int(opt.p), k);
  PadicParams pl = solve_cd(Int(opt.l), k);
  Mat2 mp = psi_matrix_mod_pk(x.rep(), pp);
  Mat2 ml = psi_matrix_mod_pk(x.rep(), pl);
  auto emit = [&](const PadicParams& par, const Mat2& m) {
    json j;
    j["prime"] = int_str(par.p);
    j["k"] = par.k;
    j["c"] = int_str(par.c);
    j["d"] = int_str(par.d);
    j["matrix"] = json::array({
        json::array({int_str(m.a[0][0]), int_str(m.a[0][1])}),
        json::array({int_str(m.a[1][0]), int_str(m.a[1][1])}),
    });
    j["det"] = int_str(mat2_det(m, par.pk));
    return j;
  };
  if (opt.json_out) {
    json j;
    j["x"] = format_quaternion(x.rep());
    j["p_adic"] = emit(pp, mp);
    j["l_adic"] = emit(pl, ml);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto show = [&](const PadicParams& par, const Mat2& m) {
    std::cout << "mod " << int_str(par.p) << "^" << par.k << " (c="
              << int_str(par.c) << ", d=" << int_str(par.d) << "):\n";
    std::cout << "  [" << int_str(m.a[0][0]) << " " << int_str(m.a[0][1])
              << "]\n";
    std::cout << "  [" << int_str(m.a[1][0]) << " " << int_str(m.a[1][1])
              << "]   det = " << int_str(mat2_det(m, par.pk)) << "\n";
  };
  std::cout << "x = " << format_quaternion(x.rep()) << "\n";
  show(pp, mp);
  show(pl, ml);
  return 0;
}

int cmd_so3(const Options& opt) {
  Quaternion x = parse_quat_arg(opt.x_text);
  Mat3 m = theta(x);
  if (opt.json_out) {
    json j;
    j["x"] = format_quaternion(x);
    j["matrix"] = mat3_json(m);
    j["special_orthogonal"] = is_special_orthogonal(m);
    if (opt.axis_angle) {
      AxisAngle aa = rotation_axis_angle(x);
      j["axis"] = json::array(
          {int_str(aa.axis[0]), int_str(aa.axis[1]), int_str(aa.axis[2])});
      j["cos_omega"] = rat_str(aa.cos_omega);
      j["cos_half_sq"] = rat_str(aa.cos_half_sq);
      j["cos_half_sign"] = aa.cos_half_sign;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << format_mat3(m) << "\n";
  if (opt.axis_angle) {
    AxisAngle aa = rotation_axis_angle(x);
    std::cout << "axis (" << int_str(aa.axis[0]) << "," << int_str(aa.axis[1])
              << "," << int_str(aa.axis[2]) << "), cos(omega) = "
              << rat_str(aa.cos_omega) << ", cos^2(omega/2) = "
              << rat_str(aa.cos_half_sq) << " (sign " << aa.cos_half_sign
              << ")\n";
  }
  return 0;
}

int cmd_reproduce(const Options& opt) {
  std::vector<CheckResult> results = run_reproduce_suite(opt.seed, opt.only);
  bool all = true;
  if (opt.json_out) {
    json j = json::array();
    for (const CheckResult& r : results) {
      json e;
      e["id"] = r.id;
      e["name"] = r.name;
      e["passed"] = r.passed;
      e["detail"] = r.detail;
      e["seconds"] = r.seconds;
      j.push_back(e);
      all = all && r.passed;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::ostringstream line;
      line << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name;
      std::string head = line.str();
      if (head.size() < 44) head.resize(44, ' ');
      std::cout << head << " " << r.detail << "\n";
      all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for quaternion lattices acting on products of trees"};
  app.require_subcommand(1);
  Options opt;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_out, "emit JSON instead of text");
  };
  auto add_pl = [&](CLI::App* sub) {
    sub->add_option("p", opt.p, "first odd prime")->required();
    sub->add_option("l", opt.l, "second odd prime")->required();
  };

  CLI::App* genset = app.add_subcommand("genset", "list X_q and its letters");
  genset->add_option("q", opt.q, "odd prime")->required();
  add_json(genset);

  CLI::App* present =
      app.add_subcommand("present", "construct the square presentation");
  add_pl(present);
  add_json(present);

  CLI::App* classify =
      app.add_subcommand("classify", "commuting pair / anti-torus decision");
  add_pl(classify);
  classify->add_option("--a", opt.a_text, "horizontal element")->required();
  classify->add_option("--b", opt.b_text, "vertical element")->required();
  classify->add_option("--bound", opt.bound, "power scan bound (default 5)");
  add_json(classify);

  CLI::App* centralizer =
      app.add_subcommand("centralizer", "cyclic centralizer certificate");
  add_pl(centralizer);
  centralizer->add_option("--b", opt.b_text, "vertical element")->required();
  add_json(centralizer);

  CLI::App* verify = app.add_subcommand(
      "verify-relation", "check an exponent-word relation in the lattice and SO3");
  add_pl(verify);
  verify->add_option("--x", opt.x_text, "value of x")->required();
  verify->add_option("--y", opt.y_text, "value of y")->required();
  verify->add_option("--word", opt.word_text, "word in x,y with ^ exponents")
      ->required();
  add_json(verify);

  CLI::App* normform = app.add_subcommand("normform", "normal form of a word");
  add_pl(normform);
  normform->add_option("--word", opt.word_text, "letters like \"a1 b2^-1\"")
      ->required();
  normform->add_option("--order", opt.order, "ab (default) or ba")
      ->check(CLI::IsMember({"ab", "ba"}));
  add_json(normform);

  CLI::App* factor =
      app.add_subcommand("factor", "factor a lattice element into letters");
  add_pl(factor);
  factor->add_option("--x", opt.x_text, "quaternion literal")->required();
  add_json(factor);

  CLI::App* index = app.add_subcommand(
      "index", "subgroup index by coset enumeration (exit 2 on overflow)");
  add_pl(index);
  index->add_option("--subgens", opt.subgens_text,
                    "semicolon-separated quaternion generators")
      ->required();
  index->add_option("--max-cosets", opt.max_cosets, "budget (default 10^6)");
  index->add_option("--table", opt.table_path, "write the coset table as JSON");
  add_json(index);

  CLI::App* padic = app.add_subcommand(
      "padic-embed", "2x2 matrix embeddings mod p^k and l^k");
  add_pl(padic);
  padic->add_option("--x", opt.x_text, "quaternion literal")->required();
  padic->add_option("--precision", opt.precision, "exponent k (default 1)");
  add_json(padic);

  CLI::App* so3 = app.add_subcommand("so3", "exact rational rotation matrix");
  so3->add_option("--x", opt.x_text, "quaternion literal")->required();
  so3->add_flag("--axis-angle", opt.axis_angle, "also print axis and angle data");
  add_json(so3);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "run the verification battery of published results");
  reproduce->add_option("--seed", opt.seed, "property-test seed");
  reproduce->add_option("--only", opt.only,
                        "restrict to checks by id, name, or tag");
  add_json(reproduce);

  CLI11_PARSE(app, argc, argv);

  try {
    if (genset->parsed()) return cmd_genset(opt);
    if (present->parsed()) return cmd_present(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (centralizer->parsed()) return cmd_centralizer(opt);
    if (verify->parsed()) return cmd_verify_relation(opt);
    if (normform->parsed()) return cmd_normform(opt);
    if (factor->parsed()) return cmd_factor(opt);
    if (index->parsed()) return cmd_index(opt);
    if (padic->parsed()) return cmd_padic_embed(opt);
    if (so3->parsed()) return cmd_so3(opt);
    if (reproduce->parsed()) return cmd_reproduce(opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
