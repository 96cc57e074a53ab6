// Python bindings over the expression evaluator and the reporting surface.
// Results come back as plain dicts with the same keys the CLI emits in
// --json mode, so scripts can switch between the two without remapping;
// exact rationals become fractions.Fraction instead of "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ulrichlab/expr.hpp"
#include "ulrichlab/graded.hpp"
#include "ulrichlab/report.hpp"
#include "ulrichlab/scalar.hpp"
#include "ulrichlab/verify.hpp"

namespace py = pybind11;

namespace {

using namespace ulab;

py::object fraction(const Rat& r) {
  return py::module_::import("fractions").attr("Fraction")(py::str(r.str()));
}

py::dict dict_of_ulrich(const UlrichReport& r) {
  py::dict d;
  d["mu"] = r.facts.mu;
  d["beta1"] = r.facts.beta1;
  d["rank"] = r.facts.rank;
  d["dim"] = r.facts.dim;
  d["depth"] = r.facts.depth;
  if (r.facts.length >= 0) d["length"] = r.facts.length;
  d["ideal_min"] = r.ideal_min;
  d["covolume"] = r.covolume;
  d["e"] = r.e_ideal;
  d["c_min"] = fraction(r.c_min);
  d["free_mod_ideal"] = r.free_mod_i;
  d["cohen_macaulay"] = r.is_cm;
  d["ulrich"] = r.is_ulrich;
  return d;
}

py::dict dict_of_artin(const ArtinInvariants& a) {
  py::dict d;
  d["length"] = a.length;
  d["mu"] = a.mu;
  d["socle_dim"] = a.socle_dim;
  d["c_min"] = fraction(a.c_min);
  d["ulrich"] = a.is_ulrich;
  return d;
}

py::dict dict_of_table(const FiniteLengthTable& t, int index) {
  py::dict d;
  d["index"] = index;
  d["total"] = t.total;
  py::list degrees;
  for (size_t k = 0; k < t.dims.size(); ++k) {
    if (!t.dims[k]) continue;
    py::dict row;
    row["deg"] = t.lo + static_cast<long>(k);
    row["dim"] = t.dims[k];
    degrees.append(row);
  }
  d["degrees"] = degrees;
  return d;
}

py::dict dict_of_verifier(const VerifierReport& r) {
  py::dict d;
  d["theorem_id"] = r.theorem_id;
  d["instances"] = r.instances;
  py::list cex;
  for (const auto& c : r.counterexamples) {
    py::dict row;
    row["instance"] = c.instance;
    row["detail"] = c.detail;
    cex.append(row);
  }
  d["counterexamples"] = cex;
  d["errors"] = r.errors;
  d["elapsed"] = r.elapsed_seconds;
  return d;
}

py::dict dict_of_result(const EvalResult& r) {
  py::dict d;
  d["kind"] = r.kind;
  if (r.ulrich) d["report"] = dict_of_ulrich(*r.ulrich);
  if (r.artin) d["report"] = dict_of_artin(*r.artin);
  if (r.table) d["report"] = dict_of_table(*r.table, r.table_index);
  if (r.kind == "resolve") {
    py::dict rep;
    rep["betti"] = r.betti;
    d["report"] = rep;
  }
  if (r.kind == "dualitycheck") {
    py::list rows;
    for (const auto& dr : r.duality) {
      py::dict row;
      row["i"] = dr.i;
      row["gate_ok"] = dr.gate_ok;
      row["lhs"] = dr.lhs;
      row["rhs"] = dr.rhs;
      row["equal"] = dr.equal;
      rows.append(row);
    }
    py::dict rep;
    rep["rows"] = rows;
    rep["ok"] = !r.failed;
    d["report"] = rep;
  }
  if (r.verifier) d["report"] = dict_of_verifier(*r.verifier);
  d["failed"] = r.failed;
  d["errored"] = r.errored;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact graded module algebra over numerical semigroup rings and "
      "monomial Artinian algebras";
  m.attr("__version__") = "1.0.0";

  py::register_exception<Error>(m, "Error");

  m.def(
      "eval", [](const std::string& text) { return dict_of_result(eval_text(text)); },
      py::arg("text"),
      "Evaluate a let/query program, e.g. \"let S = sgp(3,4,5); "
      "classify can\". Returns a dict shaped like the CLI --json payload.");
  m.def(
      "classify",
      [](const std::string& expr, const std::string& ideal) {
        return dict_of_result(eval_classify_with_ideal(expr, ideal));
      },
      py::arg("expr"), py::arg("ideal") = std::string(),
      "Classify the module built by `expr`, against the maximal ideal or "
      "against a second ideal expression sharing the same let bindings.");
  m.def(
      "verify",
      [](const std::string& id, long max_gen, long max_deg, int jobs) {
        if (!is_verifier_id(id))
          fail(Errc::TypeError, "unknown theorem id '" + id + "'");
        return dict_of_verifier(run_verifier(id, max_gen, max_deg, jobs));
      },
      py::arg("id"), py::arg("max_gen") = 9, py::arg("max_deg") = 30,
      py::arg("jobs") = 1,
      "Sweep one registered checker over its instance family.");
  m.def(
      "verifier_ids", [] { return verifier_ids(); },
      "Registered checker ids, in canonical order.");
  m.def(
      "paper_report",
      [] {
        auto rows = paper_report();
        py::list out;
        for (const auto& r : rows) {
          py::dict row;
          row["id"] = r.id;
          row["statement"] = r.statement;
          row["expected"] = r.expected;
          row["computed"] = r.computed;
          row["status"] = r.status;
          row["error"] = r.error;
          out.append(row);
        }
        py::dict d;
        d["rows"] = out;
        d["passed"] = report_passed(rows);
        return d;
      },
      "Run the frozen example corpus; dict with `rows` and `passed`.");

  m.def(
      "set_field",
      [](const std::string& name) { set_session_field(parse_field(name)); },
      py::arg("name"),
      "Set the session coefficient field: \"rational\" or \"fp:<prime>\".");
  m.def(
      "field", [] { return session_field().name(); },
      "Name of the session coefficient field.");
  m.def(
      "set_window_margin", [](std::optional<long> m_) { set_window_margin(m_); },
      py::arg("margin"),
      "Cap degree scans this many degrees past the largest presentation "
      "twist (None restores the provable default; starved caps raise Error "
      "rather than returning wrong values).");
  m.def(
      "window_margin", [] { return window_margin(); },
      "Current degree-scan cap, or None for the provable default.");
}
