#include "hypertree/hypergraph.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <sstream>

#include "hypertree/errors.hpp"

namespace hypertree {

namespace {

// Union-find over vertices with an undo log; no path compression so rollback
// is exact.
class UndoableDsu {
 public:
  explicit UndoableDsu(std::int64_t n) : parent_(n), size_(n, 1) {
    for (std::int64_t v = 0; v < n; ++v) parent_[v] = static_cast<std::int32_t>(v);
  }

  std::int32_t find(std::int32_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // false if already joined.
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
    return true;
  }

  std::size_t mark() const { return log_.size(); }

  void rollback(std::size_t mark) {
    while (log_.size() > mark) {
      std::int32_t b = log_.back();
      log_.pop_back();
      size_[parent_[b]] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
  std::vector<std::int32_t> log_;
};

// Unites the edge's vertices; returns the number of merges performed.
// A Berge-acyclic addition merges exactly r-1 times.
int add_edge(UndoableDsu& dsu, const Edge& e) {
  int merges = 0;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (dsu.unite(e[0], e[i])) ++merges;
  return merges;
}

struct TreeCounter {
  const std::vector<Edge>& edges;
  std::int64_t t;
  UndoableDsu dsu;
  BigInt count = 0;

  TreeCounter(const Hypergraph& h, std::int64_t t_) : edges(h.edges), t(t_), dsu(h.n) {}

  // components = current component count over all n vertices.
  void run(std::size_t idx, std::int64_t chosen, std::int64_t components) {
    if (chosen == t) {
      if (components == 1) ++count;
      return;
    }
    std::int64_t remaining = t - chosen;
    if (static_cast<std::int64_t>(edges.size() - idx) < remaining) return;
    int r1 = static_cast<int>(edges[0].size()) - 1;
    if (components - 1 > remaining * r1) return;  // cannot reach one component

    // Include edges[idx] if it is acyclic here (all r vertices in distinct
    // components, i.e. exactly r-1 merges).
    std::size_t m = dsu.mark();
    int merges = add_edge(dsu, edges[idx]);
    if (merges == r1) run(idx + 1, chosen + 1, components - r1);
    dsu.rollback(m);

    run(idx + 1, chosen, components);
  }
};

}  // namespace

Hypergraph::Hypergraph(std::int64_t n_, std::vector<Edge> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n < 1) throw DomainError("hypergraph needs at least one vertex");
  std::size_t r0 = edges.empty() ? 0 : edges[0].size();
  for (Edge& e : edges) {
    if (e.size() != r0) throw DomainError("hypergraph edges must have uniform size");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) throw DomainError("edge vertex out of range");
      if (i > 0 && e[i] == e[i - 1]) throw DomainError("edge has a repeated vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw DomainError("repeated edge");
}

std::string Hypergraph::format() const {
  std::ostringstream out;
  out << n << " " << r() << " " << m() << "\n";
  for (const Edge& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
    out << "\n";
  }
  return out.str();
}

Hypergraph Hypergraph::parse(std::istream& in) {
  std::int64_t n, r, m;
  if (!(in >> n >> r >> m)) throw DomainError("hypergraph header must be: n r m");
  std::vector<Edge> edges(static_cast<std::size_t>(m));
  for (Edge& e : edges) {
    e.resize(static_cast<std::size_t>(r));
    for (int& v : e) {
      if (!(in >> v)) throw DomainError("truncated hypergraph edge list");
      --v;  // external labels are 1-based
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph Hypergraph::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::vector<std::int64_t> degrees_of(const Hypergraph& h) {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(h.n), 0);
  for (const Edge& e : h.edges)
    for (int v : e) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

DegreeSequence degree_sequence_of(const Hypergraph& h) {
  return DegreeSequence(degrees_of(h));
}

bool is_incidence_forest(std::int64_t n, const std::vector<Edge>& edges) {
  UndoableDsu dsu(n);
  for (const Edge& e : edges) {
    for (std::size_t i = 1; i < e.size(); ++i)
      if (!dsu.unite(e[0], e[i])) return false;
  }
  return true;
}

bool is_spanning_hypertree(const Hypergraph& h, const EdgeSubset& subset) {
  if (h.r() < 2) return false;
  if ((h.n - 1) % (h.r() - 1) != 0) return false;
  std::int64_t t = (h.n - 1) / (h.r() - 1);
  if (static_cast<std::int64_t>(subset.size()) != t) return false;
  UndoableDsu dsu(h.n);
  std::int64_t components = h.n;
  for (std::int32_t idx : subset) {
    if (idx < 0 || idx >= h.m()) throw ContractError("edge index out of range");
    int merges = add_edge(dsu, h.edges[static_cast<std::size_t>(idx)]);
    if (merges != h.r() - 1) return false;  // Berge cycle
    components -= merges;
  }
  return components == 1;
}

BigInt count_spanning_hypertrees(const Hypergraph& h, int threads) {
  if (h.n == 1) return h.edges.empty() ? 1 : 0;
  if (h.r() < 2) return 0;
  if ((h.n - 1) % (h.r() - 1) != 0) return 0;
  std::int64_t t = (h.n - 1) / (h.r() - 1);
  if (h.m() < t) return 0;

  if (threads <= 1) {
    TreeCounter counter(h, t);
    counter.run(0, 0, h.n);
    return counter.count;
  }

  // Split on the index of the first included edge, strided across workers;
  // subtotals are summed in worker order, so the result does not depend on
  // scheduling.
  std::size_t first_max = h.edges.size() - static_cast<std::size_t>(t);
  std::size_t workers = std::min<std::size_t>(threads, first_max + 1);
  std::vector<std::future<BigInt>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&h, t, w, workers, first_max] {
      BigInt sub = 0;
      int r1 = h.r() - 1;
      for (std::size_t first = w; first <= first_max; first += workers) {
        TreeCounter counter(h, t);
        int merges = add_edge(counter.dsu, h.edges[first]);
        if (merges == r1) counter.run(first + 1, 1, h.n - r1);
        sub += counter.count;
      }
      return sub;
    }));
  }
  BigInt total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace hypertree
