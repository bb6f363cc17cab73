// Command-line front end: every core operation behind one subcommand, with a
// stable --json form on stdout and human text otherwise.  Progress and
// advisory notes go to stderr.  Exit codes: 0 success, 1 verification
// failure, 2 bad input, 3 size bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canondy/canon.hpp"
#include "canondy/config.hpp"
#include "canondy/dyck.hpp"
#include "canondy/errors.hpp"
#include "canondy/maximizers.hpp"
#include "canondy/poly.hpp"
#include "canondy/sequences.hpp"
#include "canondy/verify.hpp"
#include "json.hpp"

namespace {

using canondy::DyckPath;
using canondy::Permutation;
using json = nlohmann::ordered_json;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

long long to_ll(const mpz_class& z) { return mpz_get_si(z.get_mpz_t()); }

json coeffs_json(const canondy::DescentPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_ll(c));
  return a;
}

json poly_json(const DyckPath& d, const canondy::DescentPolynomial& p) {
  const int n = d.semilength();
  json j;
  j["path"] = d.to_string();
  j["n"] = n;
  j["coeffs"] = coeffs_json(p);
  j["degree"] = p.degree();
  j["min_degree"] = p.min_degree();
  j["bpk"] = canondy::bpk(d);
  j["lpk"] = canondy::lpk(d);
  j["m_d"] = 2 * n - 1 - canondy::bpk(d);
  return j;
}

json perm_json(const Permutation& s) {
  json a = json::array();
  for (int v : s.one_line()) a.push_back(v);
  return a;
}

std::vector<int> parse_choice_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

canondy::RectTableau parse_tableau(const std::string& s) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    rows.emplace_back();
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) {
      try {
        rows.back().push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw canondy::InvalidTableau("bad tableau entry '" + item + "'");
      }
    }
  }
  return canondy::RectTableau(rows);
}

struct Global {
  bool json = false;
  int threads = 0;
};

void print_sequence_report(const canondy::SequenceReport& r, const Global& g,
                           const std::string& out_file) {
  for (const auto& note : r.notes) std::cerr << note << "\n";
  if (!out_file.empty()) {
    std::ofstream os(out_file);
    if (!os) throw canondy::Error("cannot open output file " + out_file);
    canondy::write_bfile(r, os);
    std::cerr << "wrote " << r.terms.size() << " terms to " << out_file
              << "\n";
    return;
  }
  if (g.json) {
    json j;
    j["name"] = r.name;
    j["method"] = r.method;
    j["conjectural"] = r.conjectural;
    json terms = json::array();
    for (const auto& [idx, val] : r.terms) terms.push_back({idx, val});
    j["terms"] = terms;
    j["notes"] = r.notes;
    emit(j);
  } else {
    canondy::write_bfile(r, std::cout);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canon descent polynomials of Dyck paths"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "emit JSON on stdout");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");

  int rc = 0;

  // ---- poly ----
  auto* poly_cmd = app.add_subcommand("poly", "canon descent polynomial C_d");
  std::string poly_word;
  int poly_bound = canondy::kDefaultBruteForceBound;
  poly_cmd->add_option("path", poly_word, "Dyck word, e.g. UUDUDD")->required();
  poly_cmd->add_option("--bound", poly_bound,
                       "largest semilength accepted for the n! sweep");
  poly_cmd->fallthrough();
  poly_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(poly_word);
    const auto p = canondy::canon_descent_poly(d, poly_bound);
    if (g.json)
      emit(poly_json(d, p));
    else
      std::cout << p.to_text() << "\n";
  });

  // ---- bperm ----
  auto* bperm_cmd =
      app.add_subcommand("bperm", "greedy maximizer labeling of a path");
  std::string bperm_word, bperm_choices;
  bperm_cmd->add_option("path", bperm_word, "Dyck word")->required();
  bperm_cmd->add_option(
      "--choices", bperm_choices,
      "comma-separated per-round choices for the generalized labeling");
  bperm_cmd->fallthrough();
  bperm_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(bperm_word);
    const Permutation s =
        bperm_choices.empty()
            ? canondy::bperm(d)
            : canondy::generalized_bperm(d, parse_choice_list(bperm_choices));
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      j["perm"] = perm_json(s);
      j["perm_str"] = s.to_string();
      j["des"] = canondy::descent_count(d, s);
      if (!bperm_choices.empty()) j["choices"] = parse_choice_list(bperm_choices);
      emit(j);
    } else {
      std::cout << s.to_string() << "\n";
    }
  });

  // ---- vperm ----
  auto* vperm_cmd =
      app.add_subcommand("vperm", "valley-swap maximizer labeling of a path");
  std::string vperm_word;
  bool vperm_show_trace = false;
  vperm_cmd->add_option("path", vperm_word, "Dyck word")->required();
  vperm_cmd->add_flag("--trace", vperm_show_trace,
                      "also print every intermediate labeled path");
  vperm_cmd->fallthrough();
  vperm_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(vperm_word);
    const auto trace = canondy::vperm_trace(d);
    const Permutation& s = trace.back().perm();
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      j["perm"] = perm_json(s);
      j["perm_str"] = s.to_string();
      j["des"] = canondy::descent_count(d, s);
      if (vperm_show_trace) {
        json t = json::array();
        for (const auto& lp : trace) {
          json e;
          e["path"] = lp.path().to_string();
          e["perm_str"] = lp.perm().to_string();
          t.push_back(e);
        }
        j["trace"] = t;
      }
      emit(j);
    } else {
      if (vperm_show_trace)
        for (const auto& lp : trace)
          std::cout << lp.path().to_string() << " " << lp.perm().to_string()
                    << "\n";
      else
        std::cout << s.to_string() << "\n";
    }
  });

  // ---- maximizers ----
  auto* max_cmd = app.add_subcommand(
      "maximizers", "maximizer set, both algorithms, compatible paths and the "
                    "partition into linear extensions");
  std::string max_word;
  int max_bound = canondy::kDefaultBruteForceBound;
  max_cmd->add_option("path", max_word, "Dyck word")->required();
  max_cmd->add_option("--bound", max_bound,
                      "largest semilength for the exhaustive maximizer sweep");
  max_cmd->fallthrough();
  max_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(max_word);
    const int n = d.semilength();
    const Permutation bp = canondy::bperm(d);
    const Permutation vp = canondy::vperm(d);
    const auto bs = canondy::b_set(d);
    const bool sweep_ok = n <= max_bound;
    if (!sweep_ok)
      std::cerr << "semilength " << n << " above --bound " << max_bound
                << "; omitting the exhaustive maximizer sweep\n";
    std::vector<Permutation> ms;
    if (sweep_ok) ms = canondy::max_set(d, max_bound);
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      j["n"] = n;
      j["m_d"] = 2 * n - 1 - canondy::bpk(d);
      j["bperm"] = bp.to_string();
      j["vperm"] = vp.to_string();
      json blocks = json::array();
      for (const auto& b : bs) {
        json e;
        e["b"] = b.to_string();
        json exts = json::array();
        for (const auto& s :
             canondy::linear_extensions(canondy::max_poset(d, b)))
          exts.push_back(s.to_string());
        e["extensions"] = exts;
        blocks.push_back(e);
      }
      j["B"] = blocks;
      if (sweep_ok) {
        json m = json::array();
        for (const auto& s : ms) m.push_back(s.to_string());
        j["max_set"] = m;
      } else {
        j["max_set"] = nullptr;
      }
      emit(j);
    } else {
      std::cout << "m_d " << 2 * n - 1 - canondy::bpk(d) << "\n";
      std::cout << "bperm " << bp.to_string() << "\n";
      std::cout << "vperm " << vp.to_string() << "\n";
      for (const auto& b : bs) {
        std::cout << "b " << b.to_string() << " extensions";
        for (const auto& s :
             canondy::linear_extensions(canondy::max_poset(d, b)))
          std::cout << " " << s.to_string();
        std::cout << "\n";
      }
      if (sweep_ok) {
        std::cout << "max_set";
        for (const auto& s : ms) std::cout << " " << s.to_string();
        std::cout << "\n";
      }
    }
  });

  // ---- bset ----
  auto* bset_cmd =
      app.add_subcommand("bset", "compatible paths of d, lexicographic");
  std::string bset_word;
  bset_cmd->add_option("path", bset_word, "Dyck word")->required();
  bset_cmd->fallthrough();
  bset_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(bset_word);
    const auto bs = canondy::b_set(d);
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      json arr = json::array();
      for (const auto& b : bs) arr.push_back(b.to_string());
      j["B"] = arr;
      emit(j);
    } else {
      for (const auto& b : bs) std::cout << b.to_string() << "\n";
    }
  });

  // ---- poset ----
  auto* poset_cmd = app.add_subcommand(
      "poset", "maximizer poset of (d, b) and its linear extensions");
  std::string poset_word, poset_b;
  poset_cmd->add_option("path", poset_word, "Dyck word d")->required();
  poset_cmd->add_option("b", poset_b, "compatible path b")->required();
  poset_cmd->fallthrough();
  poset_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(poset_word);
    const DyckPath b = DyckPath::parse(poset_b);
    const canondy::MaxPoset p = canondy::max_poset(d, b);
    const auto exts = canondy::linear_extensions(p);
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      j["b"] = b.to_string();
      j["n"] = p.size();
      json rel = json::array();
      for (const auto& [i, k] : p.strict_relations()) rel.push_back({i, k});
      j["relations"] = rel;
      json e = json::array();
      for (const auto& s : exts) e.push_back(s.to_string());
      j["extensions"] = e;
      emit(j);
    } else {
      for (const auto& [i, k] : p.strict_relations())
        std::cout << "a" << i << " > a" << k << "\n";
      std::cout << "extensions";
      for (const auto& s : exts) std::cout << " " << s.to_string();
      std::cout << "\n";
    }
  });

  // ---- bounce ----
  auto* bounce_cmd =
      app.add_subcommand("bounce", "bounce path and bounce composition");
  std::string bounce_word;
  bounce_cmd->add_option("path", bounce_word, "Dyck word")->required();
  bounce_cmd->fallthrough();
  bounce_cmd->callback([&] {
    const DyckPath d = DyckPath::parse(bounce_word);
    const canondy::Composition c = canondy::bcomp(d);
    if (g.json) {
      json j;
      j["path"] = d.to_string();
      j["bounce"] = canondy::bounce(d).to_string();
      j["bcomp"] = c.parts;
      j["bpk"] = static_cast<int>(c.parts.size());
      j["boundaries"] = canondy::bounce_factors(d).boundaries;
      emit(j);
    } else {
      std::cout << canondy::bounce(d).to_string() << " " << c.to_string()
                << "\n";
    }
  });

  // ---- sequence ----
  auto* seq_cmd = app.add_subcommand(
      "sequence", "computed integer sequences (b-file layout on stdout)");
  std::string seq_name, seq_out, seq_series = "candy";
  int seq_max_n = 0;
  seq_cmd
      ->add_option("name", seq_name,
                   "one of pk-eq-bpk, bd-singleton, md-dist, md-one, candy")
      ->required();
  seq_cmd->add_option("--max-n", seq_max_n,
                      "largest semilength (defaults to the per-sequence cap)");
  seq_cmd->add_option("--bfile,--out", seq_out,
                      "write the b-file here instead");
  seq_cmd->add_option(
      "--series", seq_series,
      "for candy: candy, bperm-image, vperm-image or bperm-eq-vperm");
  seq_cmd->fallthrough();
  seq_cmd->callback([&] {
    if (seq_name == "pk-eq-bpk") {
      print_sequence_report(canondy::seq_pk_eq_bpk(seq_max_n ? seq_max_n : 8),
                            g, seq_out);
    } else if (seq_name == "bd-singleton") {
      print_sequence_report(
          canondy::seq_bd_singleton(seq_max_n ? seq_max_n : 8), g, seq_out);
    } else if (seq_name == "md-dist") {
      print_sequence_report(
          canondy::seq_md_distribution(seq_max_n ? seq_max_n : 8), g, seq_out);
    } else if (seq_name == "md-one") {
      print_sequence_report(
          canondy::seq_md_equals_one(seq_max_n ? seq_max_n : 9, g.threads), g,
          seq_out);
    } else if (seq_name == "candy") {
      const canondy::CandyReport r =
          canondy::candy_sizes(seq_max_n ? seq_max_n : 8, g.threads);
      const canondy::SequenceReport* pick = &r.candy;
      if (seq_series == "bperm-image")
        pick = &r.bperm_image;
      else if (seq_series == "vperm-image")
        pick = &r.vperm_image;
      else if (seq_series == "bperm-eq-vperm")
        pick = &r.bperm_eq_vperm;
      else if (seq_series != "candy")
        throw canondy::Error("unknown --series " + seq_series);
      print_sequence_report(*pick, g, seq_out);
    } else {
      throw canondy::Error("unknown sequence " + seq_name);
    }
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive verification suites over all small paths");
  std::string verify_suite = "all";
  int verify_max_n = 6;
  bool verify_list = false;
  verify_cmd->add_option("suite,--suite", verify_suite,
                         "suite name or 'all' (see --list for names)");
  verify_cmd->add_option("--max-n", verify_max_n, "largest semilength");
  verify_cmd->add_flag("--list", verify_list, "print the suite names and exit");
  verify_cmd->fallthrough();
  verify_cmd->callback([&] {
    if (verify_list) {
      for (const auto& name : canondy::suite_names()) std::cout << name << "\n";
      return;
    }
    std::vector<std::string> names;
    if (verify_suite == "all")
      names = canondy::suite_names();
    else
      names.push_back(verify_suite);
    json out = json::array();
    for (const auto& name : names) {
      const canondy::SuiteResult r =
          canondy::run_suite(name, verify_max_n, g.threads);
      if (!r.ok()) rc = 1;
      if (g.json) {
        json j;
        j["suite"] = r.suite;
        j["max_n"] = verify_max_n;
        j["checks"] = r.checks;
        j["failures"] = r.failures;
        j["notes"] = r.conjecture_notes;
        j["ok"] = r.ok();
        out.push_back(j);
      } else {
        for (const auto& note : r.conjecture_notes)
          std::cerr << note << "\n";
        if (r.ok()) {
          std::cout << "ok " << r.suite << ": " << r.checks << " checks\n";
        } else {
          std::cout << "FAIL " << r.suite << ": " << r.failures.size()
                    << " of " << r.checks << " checks failed\n";
          for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
      }
    }
    if (g.json) emit(out);
  });

  // ---- tableau-poly ----
  auto* tab_cmd = app.add_subcommand(
      "tableau-poly", "descent polynomial of a rectangular tableau");
  std::string tab_str;
  int tab_bound = canondy::kDefaultBruteForceBound;
  tab_cmd
      ->add_option("tableau", tab_str,
                   "rows separated by ';', entries by ',', e.g. "
                   "1,4,7;2,5,8;3,6,9")
      ->required();
  tab_cmd->add_option("--bound", tab_bound,
                      "largest row count accepted for the sweep");
  tab_cmd->fallthrough();
  tab_cmd->callback([&] {
    const canondy::RectTableau t = parse_tableau(tab_str);
    const auto p = canondy::tableau_descent_poly(t, tab_bound);
    if (g.json) {
      json j;
      j["tableau"] = t.row_data();
      j["rows"] = t.rows();
      j["cols"] = t.cols();
      j["coeffs"] = coeffs_json(p);
      j["degree"] = p.degree();
      j["min_degree"] = p.min_degree();
      emit(j);
    } else {
      std::cout << p.to_text() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const canondy::BruteForceBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const canondy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return rc;
}
