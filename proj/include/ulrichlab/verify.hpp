#pragma once

#include <string>
#include <vector>

#include "ulrichlab/relideal.hpp"

namespace ulab {

struct Counterexample {
  std::string instance;  // full printable instance data
  std::string detail;    // which claimed inequality or conclusion failed
};

struct VerifierReport {
  std::string theorem_id;
  long instances = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> errors;  // per-instance computation failures
  double elapsed_seconds = 0.0;
};

// the supported theorem ids, in canonical order
const std::vector<std::string>& verifier_ids();
bool is_verifier_id(const std::string& id);

// All semigroups whose minimal generating set lies in [2, max_gen], each listed
// once, ordered by generator count then lexicographically. None are regular.
std::vector<std::vector<long>> stock_semigroups(long max_gen);

// Deterministic monomial ideals of R: minimal antichain generating sets drawn
// from the first few semigroup elements up to max_deg, pair sets first, then
// singletons, then triples, capped at max_count.
std::vector<std::vector<long>> stock_ideal_gens(const SgpPtr& s, long max_deg,
                                                int max_count);

// Enumerates the instance family for one theorem id and checks every instance.
// jobs > 1 runs instances on a thread pool; results merge in instance order.
VerifierReport run_verifier(const std::string& id, long max_gen, long max_deg,
                            int jobs);

}  // namespace ulab
