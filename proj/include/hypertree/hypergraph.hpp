#pragma once

// Simple r-uniform hypergraph on vertices 0..n-1 (1-based in the text format).
// Edges are strictly increasing vertex lists; the edge list is kept sorted, so
// equal hypergraphs compare equal structurally.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypertree/bigint.hpp"
#include "hypertree/degree_sequence.hpp"

namespace hypertree {

using Edge = std::vector<int>;
using EdgeSubset = std::vector<std::int32_t>;  // sorted distinct edge indices

struct Hypergraph {
  std::int64_t n = 0;
  std::vector<Edge> edges;

  Hypergraph() = default;
  // Normalizes (sorts within and across edges) and validates: vertices in
  // range, r distinct vertices per edge, uniform edge size, no repeated edge.
  Hypergraph(std::int64_t n_, std::vector<Edge> edges_);

  int r() const { return edges.empty() ? 0 : static_cast<int>(edges[0].size()); }
  std::int64_t m() const { return static_cast<std::int64_t>(edges.size()); }

  bool operator==(const Hypergraph& o) const { return n == o.n && edges == o.edges; }

  // Text format: header "n r m", then m lines of r 1-based vertex labels.
  std::string format() const;
  static Hypergraph parse(std::istream& in);
  static Hypergraph parse(const std::string& text);
};

// Per-vertex edge counts of H.
std::vector<std::int64_t> degrees_of(const Hypergraph& h);
DegreeSequence degree_sequence_of(const Hypergraph& h);

// True when the vertex-edge incidence graph of the given edges is a forest
// (equivalently: the edge set is Berge-acyclic).
bool is_incidence_forest(std::int64_t n, const std::vector<Edge>& edges);

// True when the indexed edges form a spanning hypertree of h: (n-1)/(r-1)
// edges, Berge-acyclic, connecting all n vertices.
bool is_spanning_hypertree(const Hypergraph& h, const EdgeSubset& subset);

// Number of spanning hypertrees of h, by backtracking over edge subsets with
// component pruning. threads > 1 splits the top-level branches; the result is
// identical to the sequential count. Returns 0 when (r-1) does not divide (n-1).
BigInt count_spanning_hypertrees(const Hypergraph& h, int threads = 1);

}  // namespace hypertree
