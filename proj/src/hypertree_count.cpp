#include "hypertree/hypertree_count.hpp"

#include <algorithm>
#include <unordered_set>

#include "hypertree/errors.hpp"

namespace hypertree {

BigInt count_hypertrees(std::int64_t n, std::int64_t r) {
  TreeShape shape(n, r);
  BigInt num = factorial(static_cast<std::uint64_t>(n - 1)) *
               int_pow(BigInt(n), static_cast<std::uint64_t>(shape.t - 1));
  BigInt den = factorial(static_cast<std::uint64_t>(shape.t)) *
               int_pow(factorial(static_cast<std::uint64_t>(r - 1)),
                       static_cast<std::uint64_t>(shape.t));
  BigInt q = num / den;
  if (q * den != num) throw Error("internal: hypertree count is not integral");
  return q;
}

SuitableDegreeSequence::SuitableDegreeSequence(std::vector<std::int64_t> x_, TreeShape shape_)
    : x(std::move(x_)), shape(shape_) {
  if (static_cast<std::int64_t>(x.size()) != shape.n)
    throw DimensionError("degree vector length must equal n");
  std::int64_t sum = 0;
  for (std::int64_t xi : x) {
    if (xi < 1) throw ContractError("hypertree degrees must be at least 1");
    sum += xi;
  }
  if (sum != shape.r * shape.t)
    throw ContractError("hypertree degrees must sum to r*t");
}

BigInt count_hypertrees_with_degrees(const SuitableDegreeSequence& s) {
  const TreeShape& shape = s.shape;
  BigInt num = BigInt(shape.r - 1) * factorial(static_cast<std::uint64_t>(shape.n - 2));
  BigInt den = int_pow(factorial(static_cast<std::uint64_t>(shape.r - 1)),
                       static_cast<std::uint64_t>(shape.t));
  for (std::int64_t xi : s.x) den *= factorial(static_cast<std::uint64_t>(xi - 1));
  BigInt q = num / den;
  if (q * den != num) throw Error("internal: degree-class count is not integral");
  return q;
}

BigInt count_hypertrees_with_degrees(std::int64_t n, std::int64_t r,
                                     const std::vector<std::int64_t>& x) {
  return count_hypertrees_with_degrees(SuitableDegreeSequence(x, TreeShape(n, r)));
}

namespace {

void suitable_rec(const std::vector<std::int64_t>& k,
                  const std::vector<std::int64_t>& suffix_caps, std::size_t i,
                  std::int64_t remaining, std::vector<std::int64_t>& x,
                  const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::size_t n = k.size();
  if (i == n) {
    if (remaining == 0) fn(x);
    return;
  }
  std::int64_t slots_after = static_cast<std::int64_t>(n - 1 - i);
  std::int64_t lo = std::max<std::int64_t>(1, remaining - suffix_caps[i + 1]);
  std::int64_t hi = std::min<std::int64_t>(k[i], remaining - slots_after);
  for (std::int64_t v = lo; v <= hi; ++v) {
    x[i] = v;
    suitable_rec(k, suffix_caps, i + 1, remaining - v, x, fn);
  }
}

}  // namespace

void for_each_suitable(const DegreeSequence& k, std::int64_t r,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  TreeShape shape(k.n(), r);
  if (k.has_zero()) return;
  std::size_t n = k.degrees().size();
  std::vector<std::int64_t> suffix_caps(n + 1, 0);
  for (std::size_t i = n; i > 0; --i) suffix_caps[i - 1] = suffix_caps[i] + k[i - 1];
  std::vector<std::int64_t> x(n, 0);
  suitable_rec(k.degrees(), suffix_caps, 0, shape.r * shape.t, x, fn);
}

std::vector<std::vector<std::int64_t>> suitable_degree_sequences(const DegreeSequence& k,
                                                                 std::int64_t r) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_suitable(k, r, [&out](const std::vector<std::int64_t>& x) { out.push_back(x); });
  return out;
}

namespace {

// Hypertrees are built by recursive attachment: the first edge contains vertex
// 0; each later edge reuses exactly one covered vertex and r-1 new ones. Every
// hypertree admits at least one such build order (root the incidence forest at
// vertex 0), and at most t!, so duplicates are removed with a canonical-key
// set. Edges are 64-bit vertex masks during generation.
struct TreeEnumerator {
  std::int64_t n;
  int r;
  std::int64_t t;
  const std::vector<std::int64_t>& caps;  // empty = unconstrained
  std::uint64_t max_trees;
  std::vector<std::uint64_t> edges;       // masks of the partial tree
  std::vector<std::int64_t> deg;
  std::vector<int> pool;                  // scratch for combinations
  std::unordered_set<std::string> seen;
  std::vector<std::vector<Edge>> trees;

  TreeEnumerator(std::int64_t n_, int r_, std::int64_t t_,
                 const std::vector<std::int64_t>& caps_, std::uint64_t max_trees_)
      : n(n_), r(r_), t(t_), caps(caps_), max_trees(max_trees_),
        deg(static_cast<std::size_t>(n_), 0) {}

  bool cap_ok(int v) const {
    return caps.empty() || deg[static_cast<std::size_t>(v)] < caps[static_cast<std::size_t>(v)];
  }

  void emit() {
    std::vector<std::uint64_t> key = edges;
    std::sort(key.begin(), key.end());
    std::string packed(reinterpret_cast<const char*>(key.data()), key.size() * 8);
    if (!seen.insert(std::move(packed)).second) return;
    if (seen.size() > max_trees) throw BudgetError("hypertree enumeration budget exhausted");
    if (!caps.empty()) {
      for (std::int64_t v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] != caps[static_cast<std::size_t>(v)]) return;
    }
    std::vector<Edge> tree;
    tree.reserve(edges.size());
    for (std::uint64_t mask : key) {
      Edge e;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) e.push_back(v);
      tree.push_back(std::move(e));
    }
    std::sort(tree.begin(), tree.end());
    trees.push_back(std::move(tree));
  }

  // Chooses r-1 new vertices from pool[from..] to join attach_mask.
  void choose_new(std::uint64_t covered, std::uint64_t edge_mask, int needed,
                  std::size_t from) {
    if (needed == 0) {
      edges.push_back(edge_mask);
      grow(covered | edge_mask);
      edges.pop_back();
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(needed) <= pool.size(); ++i) {
      int v = pool[i];
      if (!cap_ok(v)) continue;
      ++deg[static_cast<std::size_t>(v)];
      choose_new(covered, edge_mask | (1ULL << v), needed - 1, i + 1);
      --deg[static_cast<std::size_t>(v)];
    }
  }

  void grow(std::uint64_t covered) {
    if (static_cast<std::int64_t>(edges.size()) == t) {
      emit();
      return;
    }
    std::vector<int> uncovered;
    for (int v = 0; v < n; ++v)
      if (!(covered >> v & 1)) uncovered.push_back(v);
    std::vector<int> saved_pool = std::move(pool);
    pool = std::move(uncovered);
    for (int c = 0; c < n; ++c) {
      if (!(covered >> c & 1) || !cap_ok(c)) continue;
      ++deg[static_cast<std::size_t>(c)];
      choose_new(covered, 1ULL << c, r - 1, 0);
      --deg[static_cast<std::size_t>(c)];
    }
    pool = std::move(saved_pool);
  }

  void run() {
    // First edge: vertex 0 plus r-1 of the others.
    if (!cap_ok(0)) return;
    pool.clear();
    for (int v = 1; v < n; ++v) pool.push_back(v);
    ++deg[0];
    choose_new(0, 1ULL << 0, r - 1, 0);
    --deg[0];
  }
};

}  // namespace

void for_each_hypertree(std::int64_t n, std::int64_t r,
                        const std::function<void(const Hypergraph&)>& fn,
                        const std::vector<std::int64_t>& exact_degrees,
                        std::uint64_t max_trees) {
  TreeShape shape(n, r);
  if (n > 62) throw BudgetError("hypertree enumeration limited to n <= 62");
  if (!exact_degrees.empty() &&
      static_cast<std::int64_t>(exact_degrees.size()) != n)
    throw DimensionError("degree vector length must equal n");
  TreeEnumerator en(n, static_cast<int>(r), shape.t, exact_degrees, max_trees);
  en.run();
  std::sort(en.trees.begin(), en.trees.end());
  for (std::vector<Edge>& tree : en.trees) fn(Hypergraph(n, std::move(tree)));
}

std::vector<Hypergraph> enumerate_hypertrees(std::int64_t n, std::int64_t r,
                                             std::uint64_t max_trees) {
  std::vector<Hypergraph> out;
  for_each_hypertree(n, r, [&out](const Hypergraph& h) { out.push_back(h); }, {}, max_trees);
  return out;
}

}  // namespace hypertree
