#pragma once

// Closed-form counts and explicit enumeration of spanning hypertrees of the
// complete r-uniform hypergraph on n labeled vertices.

#include <cstdint>
#include <functional>
#include <vector>

#include "hypertree/bigint.hpp"
#include "hypertree/degree_sequence.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/tree_shape.hpp"

namespace hypertree {

// Number of hypertrees on n labeled vertices with edge size r:
// (n-1)! n^(t-1) / (t! ((r-1)!)^t), t = (n-1)/(r-1).
BigInt count_hypertrees(std::int64_t n, std::int64_t r);

// Degree sequence of a hypertree: x_i >= 1 and sum x_i = r t, equivalently
// sum (x_i - 1) = t - 1.
struct SuitableDegreeSequence {
  std::vector<std::int64_t> x;
  TreeShape shape;

  SuitableDegreeSequence(std::vector<std::int64_t> x_, TreeShape shape_);
};

// Number of hypertrees whose vertex degrees are exactly x:
// (r-1) (n-2)! / (((r-1)!)^t prod (x_i - 1)!).
BigInt count_hypertrees_with_degrees(const SuitableDegreeSequence& x);
BigInt count_hypertrees_with_degrees(std::int64_t n, std::int64_t r,
                                     const std::vector<std::int64_t>& x);

// Streams every suitable x with x_i <= k_i, in lexicographic order. Emits
// nothing when some k_i = 0 (no hypertree can avoid a vertex).
void for_each_suitable(const DegreeSequence& k, std::int64_t r,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn);
std::vector<std::vector<std::int64_t>> suitable_degree_sequences(const DegreeSequence& k,
                                                                 std::int64_t r);

// Enumerates every hypertree on [n] exactly once, in lexicographic order of the
// sorted edge list. exact_degrees, when non-empty, restricts to trees whose
// degree at vertex i is exactly exact_degrees[i]. Intended for desk scale
// (n <= ~12 at r = 3); throws BudgetError past max_trees distinct trees.
void for_each_hypertree(std::int64_t n, std::int64_t r,
                        const std::function<void(const Hypergraph&)>& fn,
                        const std::vector<std::int64_t>& exact_degrees = {},
                        std::uint64_t max_trees = 2'000'000);
std::vector<Hypergraph> enumerate_hypertrees(std::int64_t n, std::int64_t r,
                                             std::uint64_t max_trees = 2'000'000);

}  // namespace hypertree
