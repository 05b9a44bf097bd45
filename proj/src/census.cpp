#include "hypertree/census.hpp"

#include <algorithm>
#include <future>

#include "hypertree/errors.hpp"

namespace hypertree {

namespace {

// Enumerates H_r(k) by anchored backtracking: vertices are processed in
// increasing order, and the residual degree of vertex v is consumed by edges
// whose minimum vertex is v, chosen as strictly increasing (r-1)-subsets of
// later vertices with positive residual. The resulting edge list is already in
// lexicographic order, and no hypergraph is produced twice.
struct HypergraphEnumerator {
  std::int64_t n;
  int r;
  std::vector<std::int64_t> res;
  std::vector<Edge> edges;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget;
  const std::function<void(const Hypergraph&)>& fn;

  HypergraphEnumerator(const DegreeSequence& k, std::int64_t r_, std::uint64_t budget,
                       const std::function<void(const Hypergraph&)>& fn_)
      : n(k.n()), r(static_cast<int>(r_)), res(k.degrees().begin(), k.degrees().end()),
        node_budget(budget), fn(fn_) {}

  void tick() {
    if (++nodes > node_budget)
      throw BudgetError("census infeasible: node budget exhausted");
  }

  bool partners_feasible(std::int64_t v) const {
    // Edges anchored at v need res[v]*(r-1) partner slots; vertex w > v can
    // supply at most min(res[w], res[v]) of them.
    std::int64_t need = res[static_cast<std::size_t>(v)];
    std::int64_t supply = 0;
    for (std::int64_t w = v + 1; w < n; ++w)
      supply += std::min(res[static_cast<std::size_t>(w)], need);
    return supply >= need * (r - 1);
  }

  void next_vertex(std::int64_t v) {
    tick();
    while (v < n && res[static_cast<std::size_t>(v)] == 0) ++v;
    if (v == n) {
      fn(Hypergraph(n, edges));
      return;
    }
    if (!partners_feasible(v)) return;
    anchor_edge(v, Edge());
  }

  // Chooses the next edge anchored at v, strictly greater (lex) than prev.
  // prev is taken by value: the edges vector reallocates during recursion.
  void anchor_edge(std::int64_t v, Edge prev) {
    if (res[static_cast<std::size_t>(v)] == 0) {
      next_vertex(v + 1);
      return;
    }
    Edge partners(static_cast<std::size_t>(r - 1));
    grow_subset(v, prev, partners, 0, v + 1, !prev.empty());
  }

  void grow_subset(std::int64_t v, const Edge& prev, Edge& partners, int pos,
                   std::int64_t lo, bool tied) {
    tick();
    if (pos == r - 1) {
      if (tied) return;  // equal to the previous edge: would repeat it
      --res[static_cast<std::size_t>(v)];
      Edge e;
      e.reserve(static_cast<std::size_t>(r));
      e.push_back(static_cast<int>(v));
      e.insert(e.end(), partners.begin(), partners.end());
      edges.push_back(e);
      anchor_edge(v, std::move(e));
      edges.pop_back();
      ++res[static_cast<std::size_t>(v)];
      return;
    }
    for (std::int64_t w = lo; w + (r - 2 - pos) < n; ++w) {
      if (res[static_cast<std::size_t>(w)] == 0) continue;
      if (tied && w < prev[static_cast<std::size_t>(pos + 1)]) continue;
      bool still_tied = tied && w == prev[static_cast<std::size_t>(pos + 1)];
      partners[static_cast<std::size_t>(pos)] = static_cast<int>(w);
      --res[static_cast<std::size_t>(w)];
      grow_subset(v, prev, partners, pos + 1, w + 1, still_tied);
      ++res[static_cast<std::size_t>(w)];
    }
  }

  void run() {
    if (n >= 3) next_vertex(0);
  }
};

void validate_census_args(const DegreeSequence& k, std::int64_t r) {
  if (r < 3) throw DomainError("edge size r must be at least 3");
  if (k.M() % r != 0) throw DivisibilityError("r divides M(k)");
}

}  // namespace

void for_each_hypergraph(const DegreeSequence& k, std::int64_t r,
                         const std::function<void(const Hypergraph&)>& fn,
                         std::uint64_t node_budget) {
  validate_census_args(k, r);
  HypergraphEnumerator en(k, r, node_budget, fn);
  en.run();
}

CensusResult exact_expected_spanning_hypertrees(const DegreeSequence& k, std::int64_t r,
                                                std::uint64_t node_budget, int threads) {
  CensusResult result;
  result.hypergraph_count = 0;
  result.total_spanning_trees = 0;
  if (threads <= 1) {
    for_each_hypergraph(
        k, r,
        [&result](const Hypergraph& h) {
          result.hypergraph_count += 1;
          result.total_spanning_trees += count_spanning_hypertrees(h);
        },
        node_budget);
  } else {
    std::vector<Hypergraph> all;
    for_each_hypergraph(k, r, [&all](const Hypergraph& h) { all.push_back(h); },
                        node_budget);
    result.hypergraph_count = all.size();
    std::size_t workers = std::max<std::size_t>(1, threads);
    std::vector<std::future<BigInt>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
      parts.push_back(std::async(std::launch::async, [&all, w, workers] {
        BigInt sub = 0;
        for (std::size_t i = w; i < all.size(); i += workers)
          sub += count_spanning_hypertrees(all[i]);
        return sub;
      }));
    }
    for (auto& f : parts) result.total_spanning_trees += f.get();
  }
  result.expectation = result.hypergraph_count == 0
                           ? BigRat(0)
                           : BigRat(result.total_spanning_trees, result.hypergraph_count);
  return result;
}

namespace {

// Partition enumeration: the leader of each cell is the smallest unplaced
// point, so each unordered partition is produced exactly once.
struct PartitionEnumerator {
  int points;
  int r;
  const std::vector<int>& vertex_of;
  std::uint64_t used = 0;
  std::vector<Edge> cells;
  Edge cell;  // scratch, point indices
  const std::function<void(const std::vector<Edge>&)>& fn;

  PartitionEnumerator(int points_, int r_, const std::vector<int>& vertex_of_,
                      const std::function<void(const std::vector<Edge>&)>& fn_)
      : points(points_), r(r_), vertex_of(vertex_of_), fn(fn_) {}

  void run() { step(); }

  void step() {
    if (static_cast<int>(cells.size()) * r == points) {
      fn(cells);
      return;
    }
    int leader = 0;
    while (used >> leader & 1) ++leader;
    used |= 1ULL << leader;
    cell.assign(1, leader);
    choose(leader + 1, r - 1);
    used &= ~(1ULL << leader);
  }

  void choose(int from, int needed) {
    if (needed == 0) {
      Edge projected(cell.size());
      for (std::size_t i = 0; i < cell.size(); ++i)
        projected[i] = vertex_of[static_cast<std::size_t>(cell[i])];
      std::sort(projected.begin(), projected.end());
      Edge saved = cell;
      cells.push_back(std::move(projected));
      step();
      cells.pop_back();
      cell = std::move(saved);
      return;
    }
    for (int p = from; p + needed <= points; ++p) {
      if (used >> p & 1) continue;
      used |= 1ULL << p;
      cell.push_back(p);
      choose(p + 1, needed - 1);
      cell.pop_back();
      used &= ~(1ULL << p);
    }
  }
};

std::vector<int> expand_points(const DegreeSequence& k) {
  std::vector<int> vertex_of;
  for (std::int64_t v = 0; v < k.n(); ++v)
    for (std::int64_t c = 0; c < k[static_cast<std::size_t>(v)]; ++c)
      vertex_of.push_back(static_cast<int>(v));
  return vertex_of;
}

bool cell_is_simple(const Edge& projected) {
  for (std::size_t i = 1; i < projected.size(); ++i)
    if (projected[i] == projected[i - 1]) return false;
  return true;
}

std::uint64_t edge_mask(const Edge& e) {
  std::uint64_t mask = 0;
  for (int v : e) mask |= 1ULL << v;
  return mask;
}

}  // namespace

void for_each_pairing_partition(const DegreeSequence& k, std::int64_t r,
                                const std::function<void(const std::vector<Edge>&)>& fn) {
  validate_census_args(k, r);
  std::vector<int> vertex_of = expand_points(k);
  if (vertex_of.size() > 62) throw BudgetError("pairing enumeration limited to M(k) <= 62");
  PartitionEnumerator en(static_cast<int>(vertex_of.size()), static_cast<int>(r),
                         vertex_of, fn);
  en.run();
}

BigRat pairing_expected_copies_bruteforce(const DegreeSequence& k, std::int64_t r,
                                          const Hypergraph& x) {
  if (x.n != k.n()) throw DimensionError("X must live on the same vertex set as k");
  if (!x.edges.empty() && x.r() != r) throw DimensionError("X must be r-uniform");
  BigInt total = 0;
  BigInt partitions = 0;
  for_each_pairing_partition(k, r, [&](const std::vector<Edge>& cells) {
    ++partitions;
    BigInt product = 1;
    for (const Edge& e : x.edges) {
      int mult = 0;
      for (const Edge& cell : cells)
        if (cell == e) ++mult;
      if (mult == 0) {
        product = 0;
        break;
      }
      product *= mult;
    }
    total += product;
  });
  if (partitions == 0) throw DomainError("no pairing partitions exist");
  return BigRat(total, partitions);
}

BigRat PairingCopyIndex::expected_copies(const Hypergraph& x) const {
  if (x.edges.empty()) return BigRat(1);
  std::vector<std::uint64_t> key;
  key.reserve(x.edges.size());
  for (const Edge& e : x.edges) key.push_back(edge_mask(e));
  std::sort(key.begin(), key.end());
  auto it = realizations.find(key);
  if (it == realizations.end()) return BigRat(0);
  return BigRat(it->second, partition_count);
}

PairingCopyIndex build_pairing_copy_index(const DegreeSequence& k, std::int64_t r) {
  PairingCopyIndex index;
  std::vector<std::pair<std::uint64_t, BigInt>> support;  // mask -> multiplicity
  std::vector<std::uint64_t> key;
  std::vector<BigInt> weight;
  for_each_pairing_partition(k, r, [&](const std::vector<Edge>& cells) {
    index.partition_count += 1;
    support.clear();
    for (const Edge& cell : cells) {
      if (!cell_is_simple(cell)) continue;
      std::uint64_t mask = edge_mask(cell);
      bool found = false;
      for (auto& entry : support)
        if (entry.first == mask) {
          entry.second += 1;
          found = true;
        }
      if (!found) support.emplace_back(mask, 1);
    }
    std::sort(support.begin(), support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Every non-empty sub-multiset of the simple support, with its product of
    // multiplicities; masks stay sorted so keys are canonical.
    std::size_t s = support.size();
    for (std::uint64_t bits = 1; bits < (1ULL << s); ++bits) {
      key.clear();
      BigInt product = 1;
      for (std::size_t i = 0; i < s; ++i)
        if (bits >> i & 1) {
          key.push_back(support[i].first);
          product *= support[i].second;
        }
      index.realizations[key] += product;
    }
  });
  return index;
}

BigRat leading_factor(const DegreeSequence& k, std::int64_t r,
                      const std::vector<std::int64_t>& x, std::int64_t t) {
  if (static_cast<std::int64_t>(x.size()) != k.n())
    throw DimensionError("x must have one entry per vertex");
  if (r < 3) throw DomainError("edge size r must be at least 3");
  if (k.M() % r != 0) throw DivisibilityError("r divides M(k)");
  if (t < 0) throw DomainError("t must be non-negative");
  if (BigInt(r) * t > k.M()) throw DomainError("rt exceeds M(k)");
  std::int64_t sum_x = 0;
  for (std::int64_t xi : x) {
    if (xi < 0) throw DomainError("x entries must be non-negative");
    sum_x += xi;
  }
  if (BigInt(sum_x) != BigInt(r) * t)
    throw ContractError("x must sum to r*t");
  BigInt num = falling_factorial(k.M() / r, static_cast<std::uint64_t>(t)) *
               int_pow(factorial(static_cast<std::uint64_t>(r)), static_cast<std::uint64_t>(t));
  for (std::int64_t i = 0; i < k.n(); ++i)
    num *= falling_factorial(BigInt(k[static_cast<std::size_t>(i)]),
                             static_cast<std::uint64_t>(x[static_cast<std::size_t>(i)]));
  BigInt den = falling_factorial(k.M(), static_cast<std::uint64_t>(r * t));
  return BigRat(num, den);
}

}  // namespace hypertree
