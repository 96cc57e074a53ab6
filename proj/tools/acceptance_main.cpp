// Acceptance gate: five end-to-end checks over the library, one line of
// output per check. The binary exits nonzero when any line fails, so a CI
// job can gate on it without parsing the table.

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ulrichlab/graded.hpp"
#include "ulrichlab/homology.hpp"
#include "ulrichlab/relideal.hpp"
#include "ulrichlab/report.hpp"
#include "ulrichlab/scalar.hpp"
#include "ulrichlab/semigroup.hpp"
#include "ulrichlab/verify.hpp"

namespace {

using namespace ulab;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", v);
  return buf;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string first_non_pass(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows)
    if (r.status != "PASS")
      return r.id + " " + r.status + (r.error.empty() ? "" : ": " + r.error);
  return "";
}

// Every report row must pass, and the whole table must come back quickly
// enough to run on each commit.
Outcome corpus_rows() {
  auto t0 = Clock::now();
  auto rows = paper_report();
  double dt = seconds_since(t0);
  Outcome o;
  o.ok = !rows.empty() && report_passed(rows) && dt < 10.0;
  std::ostringstream os;
  long pass = 0;
  for (const auto& r : rows) pass += r.status == "PASS";
  os << pass << "/" << rows.size() << " rows in " << secs(dt);
  if (!o.ok) {
    auto bad = first_non_pass(rows);
    if (!bad.empty()) os << "; first offender: " << bad;
    if (dt >= 10.0) os << "; over the 10s budget";
  }
  o.detail = os.str();
  return o;
}

// Every registered checker sweeps its instance family without finding a
// counterexample and without a single uncertified instance. The combined
// corpus has to be large enough to mean something, and both the sequential
// and the worker-pool runs have to finish within their budgets and agree
// on the totals.
Outcome theorem_sweeps() {
  Outcome o;
  long inst1 = 0, cex1 = 0, err1 = 0;
  std::string first_bad;
  auto t1 = Clock::now();
  for (const auto& id : verifier_ids()) {
    auto rep = run_verifier(id, 9, 30, 1);
    inst1 += rep.instances;
    cex1 += static_cast<long>(rep.counterexamples.size());
    err1 += static_cast<long>(rep.errors.size());
    if (first_bad.empty() && !rep.counterexamples.empty())
      first_bad = id + " cex " + rep.counterexamples.front().instance;
    if (first_bad.empty() && !rep.errors.empty())
      first_bad = id + " err " + rep.errors.front();
  }
  double dt1 = seconds_since(t1);

  long inst8 = 0, cex8 = 0, err8 = 0;
  auto t8 = Clock::now();
  for (const auto& id : verifier_ids()) {
    auto rep = run_verifier(id, 9, 30, 8);
    inst8 += rep.instances;
    cex8 += static_cast<long>(rep.counterexamples.size());
    err8 += static_cast<long>(rep.errors.size());
  }
  double dt8 = seconds_since(t8);

  bool parity = inst1 == inst8 && cex1 == cex8 && err1 == err8;
  o.ok = inst1 >= 1000 && cex1 == 0 && err1 == 0 && dt1 < 600.0 &&
         dt8 < 120.0 && parity;
  std::ostringstream os;
  os << inst1 << " instances across " << verifier_ids().size() << " checkers, "
     << cex1 << " counterexamples, " << err1 << " errors, " << secs(dt1)
     << " sequential / " << secs(dt8) << " with 8 workers";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  if (!parity) os << "; worker pool disagrees with sequential totals";
  o.detail = os.str();
  return o;
}

// Cross-check two independent computations on a large corpus of ideal
// pairs: the torsion of I tensor J against the first Tor of (R/I, J), and
// the lattice-point count of R/IJ against the graded length of the
// presented quotient.
Outcome oracle_triples() {
  Outcome o;
  long triples = 0, mismatches = 0;
  std::string first_bad;
  for (const auto& gens : stock_semigroups(9)) {
    auto s = make_semigroup(gens);
    std::vector<RelativeIdeal> ideals;
    for (const auto& g : stock_ideal_gens(s, 24, 6))
      ideals.push_back(RelativeIdeal::normalize(s, g));
    for (size_t a = 0; a < ideals.size(); ++a) {
      auto mi = PresentedModule::from_relative_ideal(ideals[a]);
      for (size_t b = a; b < ideals.size(); ++b) {
        const auto& j = ideals[b];
        auto mj = PresentedModule::from_relative_ideal(j);
        long t_direct = tensor(mi, mj).torsion_length();
        long t_tor = tor_table(1, PresentedModule::quotient_ring(ideals[a]), mj).total;
        auto l = product(ideals[a], j);
        long len_count = quotient_length(ring_ideal(s), l);
        long len_graded = PresentedModule::quotient_ring(l).length();
        ++triples;
        if (t_direct != t_tor || len_count != len_graded) {
          ++mismatches;
          if (first_bad.empty()) {
            std::ostringstream bs;
            bs << "sgp<";
            for (size_t k = 0; k < gens.size(); ++k)
              bs << (k ? "," : "") << gens[k];
            bs << "> pair " << a << "," << b << ": torsion " << t_direct
               << " vs tor " << t_tor << ", length " << len_count << " vs "
               << len_graded;
            first_bad = bs.str();
          }
        }
      }
    }
  }
  o.ok = triples >= 500 && mismatches == 0;
  std::ostringstream os;
  os << triples << " ideal pairs, " << mismatches << " oracle mismatches";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  if (triples < 500) os << "; corpus below the 500 floor";
  o.detail = os.str();
  return o;
}

// Degree-window caps must never change an answer. Generous caps have to
// reproduce the uncapped table exactly; starved caps may fail rows with a
// typed error but may never flip one to a different value.
Outcome window_robustness() {
  Outcome o;
  set_window_margin(std::nullopt);
  auto ref = paper_report();
  std::vector<std::string> ref_sig;
  for (const auto& r : ref) ref_sig.push_back(r.id + "|" + r.status + "|" + r.computed);
  bool ok = report_passed(ref);
  std::string bad;

  for (long m : {60L, 69L}) {
    set_window_margin(m);
    auto rows = paper_report();
    bool same = rows.size() == ref.size();
    for (size_t i = 0; same && i < rows.size(); ++i)
      same = rows[i].id + "|" + rows[i].status + "|" + rows[i].computed == ref_sig[i];
    if (!same) {
      ok = false;
      if (bad.empty()) bad = "margin " + std::to_string(m) + " diverges from the default";
    }
  }

  bool typed_error_seen = false;
  for (long m : {0L, 1L}) {
    set_window_margin(m);
    auto rows = paper_report();
    for (const auto& r : rows) {
      if (r.status == "FAIL") {
        ok = false;
        if (bad.empty())
          bad = "margin " + std::to_string(m) + " row " + r.id +
                " reported a wrong value instead of erroring";
      }
      if (r.status == "ERROR" && r.error.find("WindowUnstable") != std::string::npos)
        typed_error_seen = true;
    }
  }
  if (!typed_error_seen) {
    ok = false;
    if (bad.empty()) bad = "starved margins never raised WindowUnstable";
  }
  set_window_margin(std::nullopt);

  o.ok = ok;
  o.detail = ok ? "margins 60 and 69 match the default byte for byte; "
                  "margins 0 and 1 yield only PASS or typed ERROR rows"
                : bad;
  return o;
}

// The whole report must pass over the rationals and over two large prime
// fields; none of the frozen values may depend on the coefficient field.
Outcome field_independence() {
  Outcome o;
  bool ok = true;
  std::string bad;
  for (const char* f : {"rational", "fp:32003", "fp:65537"}) {
    set_session_field(parse_field(f));
    auto rows = paper_report();
    if (!report_passed(rows)) {
      ok = false;
      if (bad.empty()) bad = std::string(f) + ": " + first_non_pass(rows);
    }
  }
  set_session_field(parse_field("rational"));
  o.ok = ok;
  o.detail = ok ? "all rows pass over rational, fp:32003, fp:65537" : bad;
  return o;
}

}  // namespace

int main() {
  struct Line {
    const char* name;
    Outcome (*fn)();
  };
  const Line lines[] = {
      {"corpus rows reproduce", corpus_rows},
      {"theorem sweeps are clean", theorem_sweeps},
      {"independent oracles agree", oracle_triples},
      {"window caps never alter results", window_robustness},
      {"results are field independent", field_independence},
  };
  bool all = true;
  int i = 0;
  for (const auto& l : lines) {
    ++i;
    Outcome o;
    try {
      o = l.fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("unexpected error: ") + e.what();
    }
    all = all && o.ok;
    std::printf("[%d/5] %-33s %s  %s\n", i, l.name, o.ok ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all ? "PASS (5/5)" : "FAIL");
  return all ? 0 : 1;
}
