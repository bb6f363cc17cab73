// Python bindings for the canondy library.  The extension module is named
// _canondy and is re-exported by the canondy package.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "canondy/canon.hpp"
#include "canondy/config.hpp"
#include "canondy/dyck.hpp"
#include "canondy/errors.hpp"
#include "canondy/maximizers.hpp"
#include "canondy/poly.hpp"
#include "canondy/sequences.hpp"
#include "canondy/verify.hpp"

namespace py = pybind11;
using namespace canondy;

namespace {

// Exact conversion mpz -> arbitrary-precision Python int.
py::object to_pyint(const mpz_class& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list coeffs_list(const DescentPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

std::vector<std::vector<int>> as_sorted_lists(
    const std::set<std::vector<int>>& s) {
  return {s.begin(), s.end()};
}

std::string bfile_text(const SequenceReport& r) {
  std::ostringstream os;
  write_bfile(r, os);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_canondy, m) {
  m.doc() =
      "Canon descent polynomials of Dyck paths: labelings, bounce paths, "
      "descent-maximizer algorithms, compatible-path sets, maximizer posets, "
      "and verification suites.";

  // ---- errors ------------------------------------------------------------
  auto err = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BruteForceBoundExceeded>(m, "BruteForceBoundExceeded",
                                                  err);

  // ---- dyck paths --------------------------------------------------------
  py::class_<DyckPath>(m, "DyckPath",
                       "A Dyck path of semilength n as a word over {U, D}.")
      .def(py::init(&DyckPath::parse), py::arg("word"))
      .def_static("parse", &DyckPath::parse, py::arg("word"))
      .def_property_readonly("semilength", &DyckPath::semilength)
      .def("__len__", &DyckPath::length)
      .def("height", &DyckPath::height, py::arg("x"),
           "Lattice height after x steps, 0 <= x <= 2n.")
      .def_property_readonly("heights", &DyckPath::heights)
      .def_property_readonly("max_height", &DyckPath::max_height)
      .def("__str__", &DyckPath::to_string)
      .def("__repr__",
           [](const DyckPath& d) { return "DyckPath('" + d.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const DyckPath& d) { return py::hash(py::str(d.to_string())); });

  py::class_<Composition>(m, "Composition",
                          "An ordered list of positive parts.")
      .def(py::init([](std::vector<int> parts) {
             return Composition{std::move(parts)};
           }),
           py::arg("parts"))
      .def_readonly("parts", &Composition::parts)
      .def_property_readonly("total", &Composition::total)
      .def("__len__", &Composition::size)
      .def("__str__", &Composition::to_string)
      .def("__repr__",
           [](const Composition& c) {
             return "Composition(" + c.to_string() + ")";
           })
      .def(py::self == py::self);

  py::class_<BounceFactorization>(
      m, "BounceFactorization",
      "A path cut at its bounce apex steps (1-based indices).")
      .def_readonly("path", &BounceFactorization::path)
      .def_readonly("boundaries", &BounceFactorization::boundaries)
      .def("factor_ranges", &BounceFactorization::factor_ranges,
           "1-based inclusive step ranges covering [1, 2n].");

  m.def("peaks", &peaks, py::arg("d"),
        "Step pairs (i, i+1) with step i = U, step i+1 = D.");
  m.def("pk", &pk, py::arg("d"), "Number of peaks.");
  m.def("low_peaks", &low_peaks, py::arg("d"),
        "Peaks whose up step starts at height 0.");
  m.def("lpk", &lpk, py::arg("d"), "Number of low peaks.");
  m.def("valleys", &valleys, py::arg("d"),
        "Step pairs (i, i+1) with step i = D, step i+1 = U.");
  m.def("primitive_factors", &primitive_factors, py::arg("d"),
        "Maximal decomposition into paths touching 0 only at their ends.");
  m.def("bounce", &bounce, py::arg("d"), "The bounce path of d.");
  m.def("bcomp", &bcomp, py::arg("d"),
        "Peak heights of bounce(d) as a composition of n.");
  m.def("bpk", &bpk, py::arg("d"), "Number of bounce peaks.");
  m.def("path_from_bcomp", &path_from_bcomp, py::arg("c"),
        "The path U^c1 D^c1 ... U^ck D^ck.");
  m.def("bounce_factors", &bounce_factors, py::arg("d"));
  m.def("is_under", &is_under, py::arg("lower"), py::arg("upper"),
        "True if lower stays weakly below upper.");
  m.def("all_dyck", &all_dyck, py::arg("n"),
        "All Dyck paths of semilength n in lexicographic order (U < D).");
  m.def("for_each_dyck", &for_each_dyck, py::arg("n"), py::arg("fn"),
        "Visit all Dyck paths of semilength n in lexicographic order.");
  m.def(
      "catalan", [](int n) { return to_pyint(catalan(n)); }, py::arg("n"),
      "The n-th Catalan number as an exact integer.");
  m.def("reverse", &reverse, py::arg("d"),
        "Left-right mirror: reverse the word and swap U <-> D.");
  m.def("reverse_bounce", &reverse_bounce, py::arg("d"),
        "Bounce computed from the right: reverse(bounce(reverse(d))).");
  m.def("for_each_composition", &for_each_composition, py::arg("n"),
        py::arg("fn"), "Visit all compositions of n in lexicographic order.");
  m.def(
      "count_by_bcomp",
      [](const Composition& c) { return to_pyint(count_by_bcomp(c)); },
      py::arg("c"), "Number of paths with bounce composition c.");
  m.def(
      "count_pk_eq_bpk_by_bcomp",
      [](const Composition& c) { return to_pyint(count_pk_eq_bpk_by_bcomp(c)); },
      py::arg("c"),
      "Number of paths with bounce composition c and pk = bpk.");
  m.def(
      "count_peak_coincide_by_bcomp",
      [](const Composition& c) {
        return to_pyint(count_peak_coincide_by_bcomp(c));
      },
      py::arg("c"),
      "Number of paths with bounce composition c whose bounce peaks all "
      "coincide with peaks of the path.");

  // ---- permutations and canon words --------------------------------------
  py::class_<Permutation>(m, "Permutation",
                          "A permutation of [n] in one-line notation.")
      .def(py::init<std::vector<int>>(), py::arg("one_line"))
      .def_static("parse", &Permutation::parse, py::arg("text"),
                  "Parse '4132' (n <= 9) or comma-separated values.")
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("decreasing", &Permutation::decreasing, py::arg("n"))
      .def("__len__", &Permutation::size)
      .def("value", &Permutation::value, py::arg("i"),
           "Value at 1-based position i.")
      .def_property_readonly("one_line", &Permutation::one_line)
      .def("complement", &Permutation::complement,
           "Value v goes to n + 1 - v.")
      .def("descent_positions", &Permutation::descent_positions)
      .def("descent_count", &Permutation::descent_count)
      .def("__str__", &Permutation::to_string)
      .def("__repr__",
           [](const Permutation& s) {
             return "Permutation.parse('" + s.to_string() + "')";
           })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Permutation& s) {
        return py::hash(py::str(s.to_string()));
      });

  m.def("word_descent_positions", &word_descent_positions, py::arg("w"),
        "1-based strict descent positions of an integer word.");
  m.def("word_descent_count", &word_descent_count, py::arg("w"));

  py::class_<CanonWord>(m, "CanonWord",
                        "The canonical labeling word of (d, sigma): the k-th "
                        "up step and k-th down step both carry sigma_k.")
      .def(py::init<DyckPath, Permutation>(), py::arg("d"), py::arg("sigma"))
      .def_property_readonly("path", &CanonWord::path)
      .def_property_readonly("perm", &CanonWord::perm)
      .def_property_readonly("word", &CanonWord::word)
      .def("descent_positions", &CanonWord::descent_positions)
      .def("descent_count", &CanonWord::descent_count)
      .def("__str__", &CanonWord::to_string)
      .def("__repr__", [](const CanonWord& w) {
        return "CanonWord(DyckPath('" + w.path().to_string() +
               "'), Permutation.parse('" + w.perm().to_string() + "'))";
      });

  m.def("canon_word", &canon_word, py::arg("d"), py::arg("sigma"));
  m.def("descent_count",
        py::overload_cast<const DyckPath&, const Permutation&>(&descent_count),
        py::arg("d"), py::arg("sigma"),
        "Number of descents of the canon word of (d, sigma).");

  py::class_<RectTableau>(m, "RectTableau",
                          "A rectangular standard Young tableau.")
      .def(py::init<std::vector<std::vector<int>>>(), py::arg("rows"))
      .def_static("column_superstandard", &RectTableau::column_superstandard,
                  py::arg("rows"), py::arg("cols"),
                  "Entry (i, j) = (j-1)*rows + i.")
      .def_property_readonly(
          "shape",
          [](const RectTableau& t) {
            return py::make_tuple(t.rows(), t.cols());
          },
          "(row count, column count)")
      .def_property_readonly("rows", &RectTableau::row_data)
      .def("entry", &RectTableau::entry, py::arg("i"), py::arg("j"),
           "1-based entry at row i, column j.");

  m.def("tableau_word", &tableau_word, py::arg("T"), py::arg("sigma"),
        "Word with sigma_i at every position listed in row i of T.");
  m.def("tableau_from_path", &tableau_from_path, py::arg("d"),
        "Two-column tableau whose row k lists the k-th up and down steps.");

  // ---- descent polynomials -----------------------------------------------
  py::class_<DescentPolynomial>(
      m, "DescentPolynomial",
      "A polynomial in t with exact integer coefficients, ascending order.")
      .def(py::init(&poly_from_ints), py::arg("coeffs"))
      .def_static("from_ints", &poly_from_ints, py::arg("coeffs"))
      .def_property_readonly("coeffs", &coeffs_list,
                             "Coefficient list c0, c1, ... as Python ints.")
      .def(
          "coeff",
          [](const DescentPolynomial& p, int k) { return to_pyint(p.coeff(k)); },
          py::arg("k"), "Coefficient of t^k (zero outside the stored range).")
      .def_property_readonly("is_zero", &DescentPolynomial::is_zero)
      .def_property_readonly("degree", &DescentPolynomial::degree)
      .def_property_readonly("min_degree", &DescentPolynomial::min_degree)
      .def_property_readonly(
          "coeff_sum",
          [](const DescentPolynomial& p) { return to_pyint(p.coeff_sum()); })
      .def("has_internal_zero", &DescentPolynomial::has_internal_zero)
      .def("is_palindromic_about", &DescentPolynomial::is_palindromic_about,
           py::arg("k"), "True if coeff(i) == coeff(k - i) for all i.")
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &DescentPolynomial::to_text)
      .def("__repr__", [](const DescentPolynomial& p) {
        return "<DescentPolynomial " + p.to_text() + ">";
      });

  m.def("canon_descent_poly", &canon_descent_poly, py::arg("d"),
        py::arg("bound") = kDefaultBruteForceBound,
        "C_d(t) = sum over sigma in S_n of t^des(d, sigma).");
  m.def("eulerian", &eulerian, py::arg("n"),
        "Descent polynomial of S_n (Eulerian polynomial).");
  m.def("narayana", &narayana, py::arg("n"), "Narayana polynomial.");
  m.def(
      "eulerian_tilde",
      [](int n) {
        const TildePair p = eulerian_tilde(n);
        return py::make_tuple(p.u0, p.u1);
      },
      py::arg("n"),
      "The pair (u0, u1) of the refinement A~_n(t, u) = u0(t) + u*u1(t).");
  m.def("eulerian_tilde_t2_t", &eulerian_tilde_t2_t, py::arg("n"),
        "A~_n(t^2, t) as a polynomial in t.");
  m.def("canon_poly_all", &canon_poly_all, py::arg("n"),
        py::arg("bound") = kDefaultBruteForceBound,
        "Sum of C_d over all paths of semilength n.");
  m.def("fixed_sigma_poly", &fixed_sigma_poly, py::arg("sigma"),
        py::arg("bound") = kDefaultBruteForceBound,
        "Sum over all paths d of t^des(d, sigma).");
  m.def("tilde_poly", &tilde_poly, py::arg("d"),
        py::arg("bound") = kDefaultBruteForceBound,
        "Restriction of C_d to sigma with sigma_1 in {1, n}.");
  m.def("tableau_descent_poly", &tableau_descent_poly, py::arg("T"),
        py::arg("bound") = kDefaultBruteForceBound,
        "Sum over sigma in S_rows of t^des(word(T, sigma)).");

  // ---- maximizers --------------------------------------------------------
  py::class_<LabeledPath>(m, "LabeledPath",
                          "A Dyck path with its canon labeling by sigma.")
      .def(py::init<DyckPath, Permutation>(), py::arg("d"), py::arg("sigma"))
      .def_property_readonly("path", &LabeledPath::path)
      .def_property_readonly("perm", &LabeledPath::perm)
      .def_property_readonly("labels", &LabeledPath::labels)
      .def("label", &LabeledPath::label, py::arg("i"),
           "Label of the 1-based step i.")
      .def("__repr__", [](const LabeledPath& c) {
        return "LabeledPath(DyckPath('" + c.path().to_string() +
               "'), Permutation.parse('" + c.perm().to_string() + "'))";
      });

  m.def("bperm", &bperm, py::arg("d"), "The greedy maximizer labeling.");
  m.def("bperm_labeled", &bperm_labeled, py::arg("d"));
  m.def("valley_swap", &valley_swap, py::arg("c"), py::arg("p"),
        "Swap the valley at steps (p, p+1) and transport the labels.");
  m.def("vperm", &vperm, py::arg("d"), "The valley-swap maximizer labeling.");
  m.def("vperm_trace", &vperm_trace, py::arg("d"),
        "All intermediate labelings from the bounce start to d.");
  m.def("max_set", &max_set, py::arg("d"),
        py::arg("bound") = kDefaultBruteForceBound,
        "All sigma with des(d, sigma) = deg C_d, lexicographic.");
  m.def("max_set_size", &max_set_size, py::arg("d"), py::arg("cap") = 0,
        "Number of maximizers; counting stops at cap when cap > 0.");
  m.def("in_b_set", &in_b_set, py::arg("d"), py::arg("b"),
        "True if b is a compatible path of d.");
  m.def("b_set", &b_set, py::arg("d"),
        "All compatible paths of d, lexicographic.");

  py::class_<MaxPoset>(m, "MaxPoset",
                       "Partial order on labels a_1..a_n encoding the descent "
                       "constraints of one compatible path.")
      .def("__len__", &MaxPoset::size)
      .def("greater", &MaxPoset::greater, py::arg("i"), py::arg("j"),
           "True if a_i > a_j in the order (1-based).")
      .def("strict_relations", &MaxPoset::strict_relations,
           "All strict pairs (i, j) with a_i > a_j, sorted.");

  m.def("max_poset", &max_poset, py::arg("d"), py::arg("b"));
  m.def("linear_extensions", &linear_extensions, py::arg("P"),
        "All sigma whose values respect the poset, lexicographic.");
  m.def("respects", &respects, py::arg("P"), py::arg("sigma"));
  m.def("generalized_bperm", &generalized_bperm, py::arg("d"),
        py::arg("choices"),
        "Greedy labeling steered by a per-round label-decrement choice list.");
  m.def("for_each_generalized_bperm", &for_each_generalized_bperm,
        py::arg("d"), py::arg("fn"),
        "Visit every admissible choice vector with its output permutation.");
  m.def(
      "descent_sets_of_max",
      [](const DyckPath& d, int bound) {
        return as_sorted_lists(descent_sets_of_max(d, bound));
      },
      py::arg("d"), py::arg("bound") = kDefaultBruteForceBound,
      "Distinct descent-position sets of the maximizers, sorted.");
  m.def(
      "descent_sets_of_b",
      [](const DyckPath& d) { return as_sorted_lists(descent_sets_of_b(d)); },
      py::arg("d"),
      "Descent sets of the decreasing labelings of the compatible paths.");

  // ---- sequences ---------------------------------------------------------
  py::class_<SequenceReport>(m, "SequenceReport",
                             "A computed integer sequence with provenance.")
      .def_readonly("name", &SequenceReport::name)
      .def_readonly("terms", &SequenceReport::terms)
      .def_readonly("method", &SequenceReport::method)
      .def_readonly("conjectural", &SequenceReport::conjectural)
      .def_readonly("notes", &SequenceReport::notes)
      .def_property_readonly(
          "values",
          [](const SequenceReport& r) {
            std::vector<long long> v;
            for (const auto& [i, x] : r.terms) v.push_back(x);
            return v;
          },
          "Term values without their indices.")
      .def("bfile", &bfile_text, "The sequence as 'index value' lines.")
      .def("__repr__", [](const SequenceReport& r) {
        return "<SequenceReport " + r.name + ", " +
               std::to_string(r.terms.size()) + " terms>";
      });

  py::class_<CandyReport>(m, "CandyReport",
                          "Maximizer-union sizes and algorithm image sizes.")
      .def_readonly("candy", &CandyReport::candy)
      .def_readonly("bperm_image", &CandyReport::bperm_image)
      .def_readonly("vperm_image", &CandyReport::vperm_image)
      .def_readonly("bperm_eq_vperm", &CandyReport::bperm_eq_vperm);

  m.def("seq_pk_eq_bpk", &seq_pk_eq_bpk, py::arg("max_n"),
        "Paths with pk = bpk by semilength (A001519-type recurrence check).");
  m.def("seq_bd_singleton", &seq_bd_singleton, py::arg("max_n"),
        "Paths whose compatible-path set is a singleton (cf. OEIS A287709).");
  m.def("seq_md_distribution", &seq_md_distribution, py::arg("max_n"),
        "Triangle of path counts by bounce peak count.");
  m.def("seq_md_equals_one", &seq_md_equals_one, py::arg("max_n"),
        py::arg("threads") = 0,
        "Paths with a unique maximizer (cf. OEIS A088456; conjectural).");
  m.def("candy_sizes", &candy_sizes, py::arg("max_n"), py::arg("threads") = 0,
        "Maximizer-union sizes (cf. OEIS A005773) and algorithm images.",
        py::call_guard<py::gil_scoped_release>());

  // ---- verification ------------------------------------------------------
  py::class_<SuiteResult>(m, "SuiteResult",
                          "Outcome of one verification suite.")
      .def_readonly("suite", &SuiteResult::suite)
      .def_readonly("checks", &SuiteResult::checks)
      .def_readonly("failures", &SuiteResult::failures)
      .def_readonly("conjecture_notes", &SuiteResult::conjecture_notes)
      .def_property_readonly("ok", &SuiteResult::ok)
      .def("__repr__", [](const SuiteResult& r) {
        return "<SuiteResult " + r.suite + (r.ok() ? " ok, " : " FAILED, ") +
               std::to_string(r.checks) + " checks>";
      });

  m.def("suite_names", &suite_names,
        "Names accepted by run_suite, in canonical order.");
  m.def("run_suite", &run_suite, py::arg("name"), py::arg("max_n"),
        py::arg("threads") = 0,
        "Run one verification suite over all paths of semilength 1..max_n.",
        py::call_guard<py::gil_scoped_release>());

  m.attr("DEFAULT_BRUTE_FORCE_BOUND") = kDefaultBruteForceBound;
  m.attr("DEFAULT_EXHAUSTIVE_BOUND") = kDefaultExhaustiveBound;
}
