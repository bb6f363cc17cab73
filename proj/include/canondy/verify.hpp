#pragma once

#include <string>
#include <vector>

#include "canondy/config.hpp"

namespace canondy {

// Result of one verification suite.  checks counts individual predicate
// evaluations; failures lists proven statements that did not hold (a bug
// witness); conjecture_notes lists status lines for conjectured statements,
// including CONJECTURE_VIOLATED records, which never make the suite fail.
struct SuiteResult {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> conjecture_notes;

  bool ok() const { return failures.empty(); }
};

// Suite names accepted by run_suite: symmetry, degree, internal-zeros,
// mindes, partition, dessets, corollaries, identities, sequences.
std::vector<std::string> suite_names();

// Runs one suite exhaustively over all Dyck paths of semilength 1..max_n
// (suites with fixed feasibility caps clamp and note it).  Throws Error on
// an unknown suite name.
SuiteResult run_suite(const std::string& name, int max_n, int threads = 0);

}  // namespace canondy
