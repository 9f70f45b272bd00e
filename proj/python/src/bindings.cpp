#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/mzvlimit.hpp"
#include "mdsum/quasishuffle.hpp"
#include "mdsum/serialize.hpp"
#include "mdsum/suite.hpp"

namespace py = pybind11;
using namespace mdsum;

namespace {

py::object fraction(const Rational& x) {
  // leaked on purpose: must not be released after the interpreter shuts down
  static const auto* make = new py::object(py::module_::import("fractions").attr("Fraction"));
  Rational y = x;
  y.canonicalize();
  return (*make)(py::int_(py::str(y.get_num().get_str())), py::int_(py::str(y.get_den().get_str())));
}

py::object to_python(const Json& j) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

Composition comp(const std::vector<int>& parts) { return Composition(parts); }

py::dict word_sum_dict(const WordSum& w) {
  py::dict d;
  for (const auto& [word, coeff] : w.terms()) d[py::tuple(py::cast(word.parts()))] = fraction(coeff);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiple divisor sums and their q-series";

  py::register_exception<VerificationError>(m, "VerificationError");

  m.def(
      "bracket_series",
      [](const std::vector<int>& parts, int order) {
        const QSeries s = bracket_series(comp(parts), order);
        py::list out;
        for (const Rational& c : s.coefficients()) out.append(fraction(c));
        return out;
      },
      py::arg("parts"), py::arg("order"), "Coefficients of q^0..q^order as Fractions.");

  m.def(
      "quasi_shuffle", [](const std::vector<int>& w, const std::vector<int>& v) { return word_sum_dict(quasi_shuffle(comp(w), comp(v))); },
      py::arg("w"), py::arg("v"), "Product of two brackets as {parts: Fraction}.");

  m.def(
      "derivative", [](const std::vector<int>& parts) { return word_sum_dict(d_general(comp(parts)).expression); },
      py::arg("parts"), "q d/dq of a bracket as {parts: Fraction}, checked to q^120.");

  m.def(
      "decompose_in_one",
      [](const std::vector<int>& parts) {
        py::list out;
        for (const WordSum& w : decompose_in_one(comp(parts)).powers) out.append(word_sum_dict(w));
        return out;
      },
      py::arg("parts"), "Coefficients of T^0, T^1, ... with T = [1].");

  m.def(
      "dim_lower_bound",
      [](const std::string& space, int k, int l, int order) { return dim_lower_bound(parse_space(space), k, l, order); },
      py::arg("space"), py::arg("k"), py::arg("l"), py::arg("order"));

  m.def(
      "fil_table_csv",
      [](const std::string& space, int max_k, int max_l, int order) {
        return fil_table(parse_space(space), max_k, max_l, order).to_csv();
      },
      py::arg("space"), py::arg("max_k"), py::arg("max_l"), py::arg("order"));

  m.def(
      "relation_search",
      [](const std::string& space, int k, int l, int order) {
        py::list out;
        for (const Relation& r : relation_search(parse_space(space), k, l, order)) out.append(to_python(to_json(r)));
        return out;
      },
      py::arg("space"), py::arg("k"), py::arg("l"), py::arg("order") = 200, "Candidate relations as JSON objects.");

  m.def(
      "mzv", [](const std::vector<int>& parts, double target_error) { return to_python(to_json(mzv(comp(parts), target_error))); },
      py::arg("parts"), py::arg("target_error") = 1e-30, "{'index', 'value', 'error_bound'} with decimal strings.");

  m.def(
      "verify_group",
      [](int id) {
        const SuiteGroup g = run_suite_group(id);
        py::list checks;
        for (const SuiteCheck& c : g.checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["informational"] = c.informational;
          d["detail"] = c.detail;
          checks.append(d);
        }
        py::dict out;
        out["group"] = g.id;
        out["title"] = g.title;
        out["pass"] = g.pass();
        out["seconds"] = g.seconds;
        out["checks"] = checks;
        return out;
      },
      py::arg("group"), "Runs one group (1-10) of the reference identity suite.");
}
