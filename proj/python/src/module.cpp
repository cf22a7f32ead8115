#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiftpat/conjectures.hpp"
#include "shiftpat/enumeration.hpp"
#include "shiftpat/errors.hpp"
#include "shiftpat/realization.hpp"

namespace py = pybind11;
using namespace shiftpat;

namespace {

// cpp_int goes through its decimal string so no width is ever assumed.
py::int_ to_py(const ExactInt& v) {
  const std::string digits = to_string(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

Permutation to_perm(const std::vector<int>& entries) { return Permutation(entries); }

std::vector<int> to_list(const Permutation& pi) { return {pi.entries().begin(), pi.entries().end()}; }

std::vector<std::vector<int>> to_lists(const std::set<Permutation>& s) {
  std::vector<std::vector<int>> out;
  for (const auto& pi : s) out.push_back(to_list(pi));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal alphabets, witness words and counts for shift-realizable permutation patterns";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<BoundExceeded> bound_error(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const BoundExceeded& e) {
      PyErr_SetString(bound_error.ptr(), e.what());
    }
  });

  m.def("parse_permutation", [](const std::string& text) { return to_list(parse_permutation(text)); },
        py::arg("text"));

  m.def("n_min", [](const std::vector<int>& p) { return n_min(to_perm(p)); }, py::arg("perm"),
        "Least alphabet size whose shift realizes the permutation.");
  m.def("n_min_marked", [](const std::vector<int>& p) { return n_min_marked(to_perm(p)); }, py::arg("perm"));
  m.def("a_set", [](const std::vector<int>& p) { return a_set(to_perm(p)); }, py::arg("perm"));
  m.def(
      "delta",
      [](const std::vector<int>& p) {
        const Delta d = delta(to_perm(p));
        return py::make_tuple(d.value, delta_case_name(d.kind));
      },
      py::arg("perm"));
  m.def("theta", [](const std::vector<int>& p) { return format_marked_cycle(theta(to_perm(p))); }, py::arg("perm"));
  m.def("base_assignment",
        [](const std::vector<int>& p) {
          const auto w = base_assignment(to_perm(p));
          return std::vector<int>(w.symbols().begin(), w.symbols().end());
        },
        py::arg("perm"));

  m.def(
      "witness",
      [](const std::vector<int>& p, std::optional<std::string> variant, std::optional<int> m_reps) {
        std::optional<WitnessVariant> v;
        if (variant) v = parse_variant(*variant);
        const auto spec = witness(to_perm(p), v, m_reps);
        py::dict out;
        out["word"] = format_word(spec.word);
        out["variant"] = std::string(1, variant_name(spec.variant));
        out["k"] = spec.k;
        out["m"] = spec.m;
        out["alphabet"] = spec.word.alphabet_size();
        return out;
      },
      py::arg("perm"), py::arg("variant") = py::none(), py::arg("m") = py::none(),
      "Word over exactly n_min(perm) symbols realizing perm, in PRE(PER) notation.");
  m.def(
      "applicable_variants",
      [](const std::vector<int>& p) {
        std::vector<std::string> out;
        for (auto v : applicable_variants(to_perm(p))) out.emplace_back(1, variant_name(v));
        return out;
      },
      py::arg("perm"));

  m.def(
      "pat",
      [](const std::string& word, int n) -> std::optional<std::vector<int>> {
        const auto pi = pat(parse_word(word), n);
        if (!pi) return std::nullopt;
        return to_list(*pi);
      },
      py::arg("word"), py::arg("n"), "Pattern of the first n suffixes, or None when two coincide.");
  m.def(
      "compare_words",
      [](const std::string& a, const std::string& b) {
        const auto c = compare(parse_word(a), parse_word(b));
        return c < 0 ? -1 : c > 0 ? 1 : 0;
      },
      py::arg("a"), py::arg("b"));
  m.def("normalize_word", [](const std::string& w) { return format_word(parse_word(w)); }, py::arg("word"));

  m.def("count_a", [](int n, int N) { return to_py(count_a(n, N)); }, py::arg("n"), py::arg("N"));
  m.def("count_a_recurrence", [](int n, int N) { return to_py(count_a_recurrence(n, N)); }, py::arg("n"),
        py::arg("N"));
  m.def("count_binary", [](int n) { return to_py(count_binary(n)); }, py::arg("n"));
  m.def("count_g", [](int n, int N) { return to_py(count_g(n, N)); }, py::arg("n"), py::arg("N"));
  m.def("count_h", [](int n, int N) { return to_py(count_h(n, N)); }, py::arg("n"), py::arg("N"));

  m.def(
      "enumerate_by_nmin",
      [](int n, unsigned threads) {
        py::dict out;
        py::gil_scoped_release release;
        const auto row = enumerate_by_nmin(n, Parallelism{threads});
        py::gil_scoped_acquire acquire;
        for (const auto& [N, cell] : row.cells) out[py::int_(N)] = to_py(cell.count);
        return out;
      },
      py::arg("n"), py::arg("threads") = 1);
  m.def(
      "table",
      [](int n_max) {
        py::dict out;
        for (const auto& [key, cell] : closed_form_table(n_max).cells) {
          out[py::make_tuple(key.first, key.second)] = to_py(cell.count);
        }
        return out;
      },
      py::arg("n_max"));

  m.def(
      "allowed", [](int n, int N, unsigned threads) { return to_lists(oracle_allowed(n, N, Parallelism{threads})); },
      py::arg("n"), py::arg("N"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "forbidden", [](int n, int N, unsigned threads) { return to_lists(forbidden(n, N, Parallelism{threads})); },
      py::arg("n"), py::arg("N"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "minimal_forbidden",
      [](int n, int N, unsigned threads) { return to_lists(minimal_forbidden(n, N, Parallelism{threads})); },
      py::arg("n"), py::arg("N"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("extremal_sextet", [](int n) { return to_lists(extremal_sextet(n)); }, py::arg("n"));

  m.def(
      "check_conjecture1",
      [](int n, int bound) {
        const auto report = check_conjecture1(n, bound);
        py::dict by_count;
        for (const auto& [k, v] : report.zeroed_cycles.by_count) by_count[py::int_(k)] = to_py(v);
        py::dict out;
        out["matches"] = report.matches;
        out["des_distribution"] = by_count;
        return out;
      },
      py::arg("n"), py::arg("bound") = kDefaultConjectureBound);
  m.def("check_conjecture2", [](int n_max) { return check_conjecture2(n_max).verified; }, py::arg("n_max"));
  m.def("eulerian_row",
        [](int n) {
          py::list out;
          for (const auto& v : eulerian_row(n)) out.append(to_py(v));
          return out;
        },
        py::arg("n"));
}
