#pragma once

// Library-level entry point behind the CLI: a validated RunConfig in, a
// machine- or human-readable report out. Kept out of main() so the whole
// surface is unit-testable without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypertree/census.hpp"
#include "hypertree/sampling.hpp"

namespace hypertree {

struct RunConfig {
  // count-trees | tree-degree-count | census | expected | probability |
  // moments | sample | compare
  std::string subcommand;

  std::optional<std::int64_t> n;
  std::optional<std::int64_t> r;
  std::string degrees;           // "2,2,1,1", "2^9", or "@file" holding either
  std::int64_t k_regular = 0;    // with n: shorthand for the regular sequence
  std::vector<std::int64_t> x;   // hypertree degree vector where required

  bool exact = false;            // expected/compare method switches
  bool mc = false;
  bool asymptotic = false;

  std::string kind = "hypergraph";  // sample: hypergraph | hypertree
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::uint64_t budget = kDefaultCensusBudget;
  std::uint64_t max_rejects = kDefaultMaxRejects;

  std::string format = "table";  // json | csv | table
  std::vector<std::int64_t> grid_n;  // compare: sweep of n (regular degrees)
};

// Executes one subcommand, writing the report to out and diagnostics to err.
// Returns 0 on success, 2 when the input violates a stated hypothesis (the
// message names it), 3 when a work budget is exhausted.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hypertree
