#pragma once

#include <string>
#include <vector>

#include "spechtweb/specht.hpp"

namespace spechtweb {
namespace checks {

// Reusable property suites.  Each returns pass/fail and appends a short
// description of what was verified (or the first counterexample) to
// `detail`.  These back both the command-line `check` verb and the
// acceptance suite.

bool dimension_counts(int max_n, std::string& detail);
bool tableau_action_laws(int max_n, std::string& detail);
bool sigma_round_trip(int max_n, std::string& detail);
bool inversion_monotonicity(int max_len, std::string& detail);
bool weak_order_axioms(int max_n, std::string& detail);
bool weak_order_vs_word_orders(int max_n, std::string& detail);
bool bijection_suite(int max_n, std::string& detail);
bool fork_census(int max_n, std::string& detail);
bool web_relation_coefficients(std::string& detail);
bool act_web_involution(int n, std::string& detail);
bool route_equality(int max_n, std::string& detail);
bool reduction_confluence(int max_n, int samples, unsigned long seed, std::string& detail);
bool oracle_equivalence(int max_n, std::string& detail);
bool matrix_suite(int max_n, std::string& detail);
bool representation_suite(int max_n, std::string& detail);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Every module invariant suite, sized by n (larger sizes are clamped to
/// the documented per-suite bounds).  Deterministic except where seeded.
std::vector<CheckResult> run_all(int n, unsigned long seed);

}  // namespace checks
}  // namespace spechtweb
