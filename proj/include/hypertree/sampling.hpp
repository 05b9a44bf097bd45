#pragma once

// Randomized estimation: uniform sampling of degree-constrained hypergraphs
// through the pairing model with simplicity rejection, Monte Carlo estimates
// of the expected spanning-hypertree count, and hypergeometric sampling of
// hypertree degree vectors.

#include <cstdint>
#include <vector>

#include "hypertree/bigint.hpp"
#include "hypertree/degree_sequence.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/rng.hpp"

namespace hypertree {

inline constexpr std::uint64_t kDefaultMaxRejects = 1'000'000;

// One pairing-model draw: the M(k) labeled points (k_i per vertex i) are
// partitioned uniformly into M/r cells of size r and each cell is projected
// to its sorted vertex multiset. Cells may contain repeated vertices and two
// cells may coincide; the cell list is in draw order.
std::vector<Edge> sample_pairing(const DegreeSequence& k, std::int64_t r, Rng& rng);

// Uniform over the simple hypergraphs with degree sequence k: pairings are
// redrawn until the projection has no repeated vertex within a cell and no
// repeated cell. Every simple hypergraph lifts to exactly prod k_i! pairings,
// so acceptance is uniform. rejects_out, when non-null, is incremented by the
// number of discarded pairings. Throws BudgetError after max_rejects discards.
Hypergraph sample_simple_hypergraph(const DegreeSequence& k, std::int64_t r, Rng& rng,
                                    std::uint64_t max_rejects = kDefaultMaxRejects,
                                    std::uint64_t* rejects_out = nullptr);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // of the mean; named to dodge the stderr macro
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double rejection_rate = 0.0;  // rejected pairings / pairings drawn
  bool degenerate = false;      // samples == 1: std_error not estimable
};

// Plain Monte Carlo mean of the spanning-hypertree count over uniform samples
// from the degree class. Sample i draws from Rng::stream(seed, i), so the
// result depends only on (seed, threads), never on scheduling; threads > 1
// splits the sample indices across workers and merges moments in worker order.
McEstimate mc_expected_spanning_hypertrees(const DegreeSequence& k, std::int64_t r,
                                           std::uint64_t samples, std::uint64_t seed,
                                           std::uint64_t max_rejects = kDefaultMaxRejects,
                                           int threads = 1);

// One draw of the degree vector X of a random hypertree on the degree class:
// X_j - 1 counts the hits of a uniform (t-1)-subset of the sum(k_i - 1)
// points in block j of size k_j - 1. Every draw sums to n + t - 1 = rt.
// Requires k_i >= 1 and 0 <= t - 1 <= sum(k_i - 1).
std::vector<std::int64_t> sample_degree_vector_X(const std::vector<std::int64_t>& k,
                                                 std::int64_t t, Rng& rng);
std::vector<std::int64_t> sample_degree_vector_X(const DegreeSequence& k, std::int64_t t,
                                                 Rng& rng);

struct GMomentEstimate {
  double mean_exp_g = 0.0;
  double stderr_exp_g = 0.0;
  double mean_g = 0.0;
  double stderr_g = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Sample moments of g(X) = lambda0(k) - lambda(X) under the hypergeometric
// law of X, with the tree shape taken from (n, r). Deterministic per-sample
// streams as above.
GMomentEstimate empirical_exp_g(const DegreeSequence& k, std::int64_t r,
                                std::uint64_t samples, std::uint64_t seed);

// Uniform sampling over all spanning hypertrees of the complete r-uniform
// hypergraph on [n]. The direct path enumerates every hypertree once and
// indexes into the table; the two-stage path first picks a degree class x
// with probability proportional to the exact class count, then enumerates
// only that class (cached across draws). Both are exact; both throw
// BudgetError when an enumeration exceeds max_trees.
class UniformHypertreeSampler {
 public:
  enum class Path { kDirect, kTwoStage };

  UniformHypertreeSampler(std::int64_t n, std::int64_t r, Path path = Path::kDirect,
                          std::uint64_t max_trees = 2'000'000);

  Hypergraph draw(Rng& rng);

  const BigInt& total() const { return total_; }

 private:
  const std::vector<Hypergraph>& class_table(std::size_t idx);

  std::int64_t n_;
  std::int64_t r_;
  Path path_;
  std::uint64_t max_trees_;
  BigInt total_;
  std::vector<Hypergraph> all_;                     // direct path
  std::vector<std::vector<std::int64_t>> classes_;  // two-stage: suitable x, lex order
  std::vector<BigInt> cumulative_;                  // running class-count sums
  std::vector<std::vector<Hypergraph>> class_cache_;
};

// One-shot wrapper around the direct path; prefer the sampler for loops.
Hypergraph sample_uniform_hypertree(std::int64_t n, std::int64_t r, Rng& rng);

// Uniform BigInt in [0, bound), bound >= 1. Consumes whole 64-bit words.
BigInt uniform_bigint_below(Rng& rng, const BigInt& bound);

}  // namespace hypertree
