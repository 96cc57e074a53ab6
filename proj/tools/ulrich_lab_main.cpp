#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ulrichlab/error.hpp"
#include "ulrichlab/expr.hpp"
#include "ulrichlab/graded.hpp"
#include "ulrichlab/report.hpp"
#include "ulrichlab/scalar.hpp"

using nlohmann::json;

namespace {

using namespace ulab;

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

json json_of_ulrich(const UlrichReport& r) {
  json j;
  j["mu"] = r.facts.mu;
  j["beta1"] = r.facts.beta1;
  j["rank"] = r.facts.rank;
  j["dim"] = r.facts.dim;
  j["depth"] = r.facts.depth;
  if (r.facts.length >= 0) j["length"] = r.facts.length;
  j["ideal_min"] = r.ideal_min;
  j["covolume"] = r.covolume;
  j["e"] = r.e_ideal;
  j["c_min"] = r.c_min.str();
  j["free_mod_ideal"] = r.free_mod_i;
  j["cohen_macaulay"] = r.is_cm;
  j["ulrich"] = r.is_ulrich;
  return j;
}

std::string human_of_ulrich(const UlrichReport& r) {
  std::ostringstream o;
  o << "classification\n";
  o << "  mu             = " << r.facts.mu << "\n";
  o << "  beta1          = " << r.facts.beta1 << "\n";
  o << "  rank           = " << r.facts.rank << "\n";
  o << "  dim            = " << r.facts.dim << "\n";
  o << "  depth          = " << r.facts.depth << "\n";
  if (r.facts.length >= 0) o << "  length         = " << r.facts.length << "\n";
  o << "  ideal_min      = " << r.ideal_min << "\n";
  o << "  covolume       = " << r.covolume << "\n";
  o << "  e              = " << r.e_ideal << "\n";
  o << "  c_min          = " << r.c_min.str() << "\n";
  o << "  free_mod_ideal = " << yn(r.free_mod_i) << "\n";
  o << "  cohen_macaulay = " << yn(r.is_cm) << "\n";
  o << "  ulrich         = " << yn(r.is_ulrich) << "\n";
  return o.str();
}

json json_of_verifier(const VerifierReport& r) {
  json j;
  j["theorem_id"] = r.theorem_id;
  j["instances"] = r.instances;
  j["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back(
        {{"instance", c.instance}, {"detail", c.detail}});
  j["errors"] = r.errors;
  j["elapsed"] = r.elapsed_seconds;
  return j;
}

std::string human_of_verifier(const VerifierReport& r) {
  std::ostringstream o;
  o << "theorem_id      = " << r.theorem_id << "\n";
  o << "instances       = " << r.instances << "\n";
  o << "counterexamples = " << r.counterexamples.size() << "\n";
  o << "errors          = " << r.errors.size() << "\n";
  o << "elapsed_seconds = " << r.elapsed_seconds << "\n";
  for (const auto& c : r.counterexamples)
    o << "  CEX " << c.instance << " :: " << c.detail << "\n";
  for (const auto& e : r.errors) o << "  ERR " << e << "\n";
  return o.str();
}

json json_of_result(const EvalResult& r) {
  json j;
  j["kind"] = r.kind;
  if (r.ulrich) j["report"] = json_of_ulrich(*r.ulrich);
  if (r.artin) {
    j["report"] = {{"length", r.artin->length},
                   {"mu", r.artin->mu},
                   {"socle_dim", r.artin->socle_dim},
                   {"c_min", r.artin->c_min.str()},
                   {"ulrich", r.artin->is_ulrich}};
  }
  if (r.table) {
    json dims = json::array();
    for (size_t k = 0; k < r.table->dims.size(); ++k)
      if (r.table->dims[k])
        dims.push_back({{"deg", r.table->lo + static_cast<long>(k)},
                        {"dim", r.table->dims[k]}});
    j["report"] = {{"index", r.table_index},
                   {"total", r.table->total},
                   {"degrees", dims}};
  }
  if (r.kind == "resolve") j["report"] = {{"betti", r.betti}};
  if (r.kind == "dualitycheck") {
    json rows = json::array();
    for (const auto& d : r.duality)
      rows.push_back({{"i", d.i},
                      {"gate_ok", d.gate_ok},
                      {"lhs", d.lhs},
                      {"rhs", d.rhs},
                      {"equal", d.equal}});
    j["report"] = {{"rows", rows}, {"ok", !r.failed}};
  }
  if (r.verifier) j["report"] = json_of_verifier(*r.verifier);
  return j;
}

std::string human_of_result(const EvalResult& r) {
  if (r.ulrich) return human_of_ulrich(*r.ulrich);
  std::ostringstream o;
  if (r.artin) {
    o << "artinian classification\n";
    o << "  length    = " << r.artin->length << "\n";
    o << "  mu        = " << r.artin->mu << "\n";
    o << "  socle_dim = " << r.artin->socle_dim << "\n";
    o << "  c_min     = " << r.artin->c_min.str() << "\n";
    o << "  ulrich    = " << yn(r.artin->is_ulrich) << "\n";
  } else if (r.table) {
    o << r.kind << "_" << r.table_index << " total length = " << r.table->total
      << "\n";
    for (size_t k = 0; k < r.table->dims.size(); ++k)
      if (r.table->dims[k])
        o << "  deg " << (r.table->lo + static_cast<long>(k)) << ": "
          << r.table->dims[k] << "\n";
  } else if (r.kind == "resolve") {
    o << "betti:";
    for (long b : r.betti) o << " " << b;
    o << "\n";
  } else if (r.kind == "dualitycheck") {
    for (const auto& d : r.duality)
      o << "i=" << d.i << " gate=" << (d.gate_ok ? "ok" : "off")
        << " lhs=" << d.lhs << " rhs=" << d.rhs << " equal=" << yn(d.equal)
        << "\n";
    o << (r.failed ? "duality: FAIL" : "duality: PASS") << "\n";
  } else if (r.verifier) {
    o << human_of_verifier(*r.verifier);
  }
  return o.str();
}

int exit_code_of(const EvalResult& r) {
  if (r.failed) return 1;
  if (r.errored) return 3;
  return 0;
}

std::string read_stdin() {
  std::ostringstream o;
  o << std::cin.rdbuf();
  return o.str();
}

int write_out(const std::string& outfile, const std::string& payload) {
  if (outfile.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(outfile);
  if (!f) {
    std::cerr << "error: cannot open " << outfile << " for writing\n";
    return 3;
  }
  f << payload;
  return 0;
}

std::string wrap_json(const std::string& command, json payload) {
  payload["schema"] = "ulrich-lab/1";
  payload["command"] = command;
  payload["generated_at"] = utc_now();
  return payload.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants, resolutions, and theorem checks over numerical "
               "semigroup rings and monomial artinian algebras"};
  app.require_subcommand(1);

  std::string field = "rational";
  int margin = -1;
  int jobs = 1;
  bool as_json = false;
  std::string outfile;
  app.add_option("--field", field, "coefficient field: rational or fp:<prime>");
  app.add_option("--window-margin", margin,
                 "cap degree scans this far past the largest presentation "
                 "twist; computations needing more raise WindowUnstable");
  app.add_option("--jobs", jobs, "worker threads for verify");
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", outfile, "write output to a file instead of stdout");

  auto* eval_cmd =
      app.add_subcommand("eval", "run a program that ends in a query");
  std::vector<std::string> text_parts;
  eval_cmd->add_option("text", text_parts, "program text; stdin when omitted");

  auto* cls_cmd = app.add_subcommand("classify", "classify a module expression");
  std::string cls_text, cls_ideal;
  cls_cmd->add_option("expr", cls_text,
                      "let statements followed by a module expression")
      ->required();
  cls_cmd->add_option("--ideal", cls_ideal,
                      "classify against this ideal expression");

  auto* ver_cmd = app.add_subcommand("verify", "run one theorem verifier");
  std::string ver_id;
  long max_gen = 9, max_deg = 30;
  ver_cmd->add_option("id", ver_id, "theorem id")->required();
  ver_cmd->add_option("--max-gen", max_gen, "largest semigroup generator");
  ver_cmd->add_option("--max-deg", max_deg, "largest ideal generator degree");

  auto* rep_cmd = app.add_subcommand(
      "paper-report", "check every worked example against expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  }

  try {
    set_session_field(parse_field(field));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (margin >= 0) set_window_margin(margin);

  try {
    if (eval_cmd->parsed()) {
      std::string text;
      for (size_t i = 0; i < text_parts.size(); ++i)
        text += (i ? " " : "") + text_parts[i];
      if (text.empty()) text = read_stdin();
      auto r = eval_text(text);
      auto payload =
          as_json ? wrap_json("eval", json_of_result(r)) : human_of_result(r);
      int w = write_out(outfile, payload);
      return w ? w : exit_code_of(r);
    }
    if (cls_cmd->parsed()) {
      auto r = eval_classify_with_ideal(cls_text, cls_ideal);
      auto payload = as_json ? wrap_json("classify", json_of_result(r))
                             : human_of_result(r);
      int w = write_out(outfile, payload);
      return w ? w : exit_code_of(r);
    }
    if (ver_cmd->parsed()) {
      if (!is_verifier_id(ver_id)) {
        std::cerr << "error: unknown theorem id '" << ver_id << "'\n";
        return 2;
      }
      auto rep = run_verifier(ver_id, max_gen, max_deg, jobs);
      std::string payload;
      if (as_json) {
        json j;
        j["report"] = json_of_verifier(rep);
        payload = wrap_json("verify", j);
      } else {
        payload = human_of_verifier(rep);
      }
      int w = write_out(outfile, payload);
      if (w) return w;
      if (!rep.counterexamples.empty()) return 1;
      if (!rep.errors.empty()) return 3;
      return 0;
    }
    if (rep_cmd->parsed()) {
      auto rows = paper_report();
      bool any_fail = false, any_error = false;
      std::string payload;
      if (as_json) {
        json jrows = json::array();
        for (const auto& r : rows)
          jrows.push_back({{"id", r.id},
                           {"statement", r.statement},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"status", r.status},
                           {"error", r.error}});
        json j;
        j["rows"] = jrows;
        j["passed"] = report_passed(rows);
        payload = wrap_json("paper-report", j);
      } else {
        std::ostringstream o;
        for (const auto& r : rows) {
          o << r.id;
          for (size_t k = r.id.size(); k < 20; ++k) o << ' ';
          o << r.status;
          for (size_t k = r.status.size(); k < 7; ++k) o << ' ';
          if (r.status == "ERROR")
            o << r.error;
          else if (r.status == "FAIL")
            o << r.computed << "  (expected " << r.expected << ")";
          else
            o << r.computed;
          o << "\n";
        }
        long pass = 0;
        for (const auto& r : rows)
          if (r.status == "PASS") ++pass;
        o << "report: " << (report_passed(rows) ? "PASS" : "FAIL") << " ("
          << pass << "/" << rows.size() << ")\n";
        payload = o.str();
      }
      for (const auto& r : rows) {
        if (r.status == "FAIL") any_fail = true;
        if (r.status == "ERROR") any_error = true;
      }
      int w = write_out(outfile, payload);
      if (w) return w;
      if (any_error) return 3;
      if (any_fail) return 1;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::SyntaxError || e.code() == Errc::TypeError ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
