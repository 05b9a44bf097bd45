#pragma once

// Exhaustive enumeration over the set H_r(k) of simple r-uniform hypergraphs
// with a prescribed degree sequence, and the pairing-model brute force used to
// validate the closed-form edge-containment factor. All results exact.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hypertree/bigint.hpp"
#include "hypertree/degree_sequence.hpp"
#include "hypertree/hypergraph.hpp"

namespace hypertree {

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

struct CensusResult {
  BigInt hypergraph_count;
  BigInt total_spanning_trees;
  BigRat expectation;  // total / count, exact
};

// Streams every hypergraph in H_r(k) exactly once, lexicographically by sorted
// edge list. Throws BudgetError("census infeasible...") past node_budget
// backtracking nodes. Requires r | M(k).
void for_each_hypergraph(const DegreeSequence& k, std::int64_t r,
                         const std::function<void(const Hypergraph&)>& fn,
                         std::uint64_t node_budget = kDefaultCensusBudget);

// Average spanning-hypertree count over H_r(k), exact. threads > 1 splits the
// enumeration at the top-level branches; identical result to sequential.
CensusResult exact_expected_spanning_hypertrees(const DegreeSequence& k, std::int64_t r,
                                                std::uint64_t node_budget = kDefaultCensusBudget,
                                                int threads = 1);

// Streams every partition of the M(k) configuration points (k_i points for
// vertex i) into M/r unordered cells of r points, as cells projected to sorted
// vertex lists (repeats possible). Cell leader is always the smallest unplaced
// point, so each partition appears exactly once.
void for_each_pairing_partition(const DegreeSequence& k, std::int64_t r,
                                const std::function<void(const std::vector<Edge>&)>& fn);

// Exact expected number of point-level realizations of X's edge set in a
// uniformly random pairing partition, by full enumeration. Intended for
// M(k) <= ~12. X must be simple with degrees at most k pointwise.
BigRat pairing_expected_copies_bruteforce(const DegreeSequence& k, std::int64_t r,
                                          const Hypergraph& x);

// Batched form of the same brute force: one enumeration pass per k recording,
// for every set S of simple edges, the total number of realizations of S
// summed over all partitions (only sets supported by some partition appear).
struct PairingCopyIndex {
  BigInt partition_count = 0;
  // key: sorted vector of edge bitmasks (n <= 62)
  std::map<std::vector<std::uint64_t>, BigInt> realizations;

  // Expected copies of the edge set of X; exact.
  BigRat expected_copies(const Hypergraph& x) const;
};
PairingCopyIndex build_pairing_copy_index(const DegreeSequence& k, std::int64_t r);

// Closed-form first factor of the edge-containment probability:
// (M/r)_t r!^t prod_i (k_i)_{x_i} / (M)_{rt}. Requires r | M(k) and rt <= M(k).
BigRat leading_factor(const DegreeSequence& k, std::int64_t r,
                      const std::vector<std::int64_t>& x, std::int64_t t);

}  // namespace hypertree
