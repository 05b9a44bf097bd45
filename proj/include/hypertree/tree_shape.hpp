#pragma once

// Shape of a spanning hypertree: n vertices, r vertices per edge,
// t = (n-1)/(r-1) edges. Any connected Berge-acyclic spanning subhypergraph has
// exactly this many edges, so t is a function of (n, r) alone.

#include <cstdint>

#include "hypertree/errors.hpp"

namespace hypertree {

struct TreeShape {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;

  TreeShape(std::int64_t n_, std::int64_t r_) : n(n_), r(r_) {
    if (r < 3) throw DomainError("edge size r must be at least 3 (graphs are out of scope)");
    if (n < 3) throw DomainError("vertex count n must be at least 3");
    if ((n - 1) % (r - 1) != 0) throw DivisibilityError("(r-1) divides (n-1)");
    t = (n - 1) / (r - 1);
  }
};

}  // namespace hypertree
