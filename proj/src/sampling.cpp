#include "hypertree/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <utility>

#include "hypertree/asymptotics.hpp"
#include "hypertree/errors.hpp"
#include "hypertree/hypertree_count.hpp"
#include "hypertree/tree_shape.hpp"

namespace hypertree {
namespace {

constexpr std::int64_t kMaxPairingPoints = 100'000'000;

// Loop-free cells and pairwise distinct cells. Sorts the cell list in place;
// cell order carries no information in a pairing projection.
bool projection_is_simple(std::vector<Edge>& cells) {
  for (const Edge& cell : cells)
    for (std::size_t i = 1; i < cell.size(); ++i)
      if (cell[i] == cell[i - 1]) return false;
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (cells[i] == cells[i - 1]) return false;
  return true;
}

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  // Chan's pairwise update; applied in fixed worker order for determinism.
  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    double delta = o.mean - mean;
    auto na = static_cast<double>(count);
    auto nb = static_cast<double>(o.count);
    m2 += o.m2 + delta * delta * na * nb / (na + nb);
    mean += delta * nb / (na + nb);
    count += o.count;
  }

  double std_error() const {
    if (count < 2) return 0.0;
    auto n = static_cast<double>(count);
    return std::sqrt(std::max(m2, 0.0) / (n - 1.0) / n);
  }
};

}  // namespace

std::vector<Edge> sample_pairing(const DegreeSequence& k, std::int64_t r, Rng& rng) {
  if (r < 2) throw DomainError("edge size must be at least 2");
  if (k.M() % r != 0) throw DivisibilityError("r divides M(k)");
  if (k.M() > kMaxPairingPoints)
    throw BudgetError("pairing sample infeasible: M(k) exceeds the point budget");
  auto points_total = k.M().convert_to<std::int64_t>();

  std::vector<int> points;
  points.reserve(static_cast<std::size_t>(points_total));
  for (std::int64_t v = 0; v < k.n(); ++v)
    points.insert(points.end(), static_cast<std::size_t>(k[static_cast<std::size_t>(v)]),
                  static_cast<int>(v));

  for (std::size_t i = points.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(points[i - 1], points[j]);
  }

  std::vector<Edge> cells;
  cells.reserve(static_cast<std::size_t>(points_total / r));
  for (std::size_t at = 0; at < points.size(); at += static_cast<std::size_t>(r)) {
    Edge cell(points.begin() + static_cast<std::ptrdiff_t>(at),
              points.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(r)));
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

Hypergraph sample_simple_hypergraph(const DegreeSequence& k, std::int64_t r, Rng& rng,
                                    std::uint64_t max_rejects, std::uint64_t* rejects_out) {
  std::uint64_t rejects = 0;
  for (;;) {
    std::vector<Edge> cells = sample_pairing(k, r, rng);
    if (projection_is_simple(cells)) {
      if (rejects_out) *rejects_out += rejects;
      return Hypergraph(k.n(), std::move(cells));
    }
    if (++rejects > max_rejects) {
      if (rejects_out) *rejects_out += rejects;
      throw BudgetError("rejection budget exhausted: " + std::to_string(rejects) +
                        " pairings drawn, none simple");
    }
  }
}

McEstimate mc_expected_spanning_hypertrees(const DegreeSequence& k, std::int64_t r,
                                           std::uint64_t samples, std::uint64_t seed,
                                           std::uint64_t max_rejects, int threads) {
  if (samples < 1) throw DomainError("sample count must be positive");

  struct WorkerOut {
    Moments stats;
    std::uint64_t rejects = 0;
  };
  auto run_worker = [&](std::uint64_t first, std::uint64_t stride) {
    WorkerOut out;
    for (std::uint64_t i = first; i < samples; i += stride) {
      Rng rng = Rng::stream(seed, i);
      std::uint64_t rejects = 0;
      Hypergraph h = sample_simple_hypergraph(k, r, rng, max_rejects, &rejects);
      out.rejects += rejects;
      out.stats.add(to_double(count_spanning_hypertrees(h)));
    }
    return out;
  };

  std::uint64_t workers = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), samples));

  Moments total;
  std::uint64_t rejects = 0;
  if (workers == 1) {
    WorkerOut out = run_worker(0, 1);
    total = out.stats;
    rejects = out.rejects;
  } else {
    std::vector<std::future<WorkerOut>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (std::uint64_t w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, run_worker, w, workers));
    for (auto& f : futures) {
      WorkerOut out = f.get();
      total.merge(out.stats);
      rejects += out.rejects;
    }
  }

  McEstimate est;
  est.mean = total.mean;
  est.std_error = total.std_error();
  est.samples = samples;
  est.seed = seed;
  est.rejection_rate =
      static_cast<double>(rejects) / static_cast<double>(rejects + samples);
  est.degenerate = samples == 1;
  return est;
}

std::vector<std::int64_t> sample_degree_vector_X(const std::vector<std::int64_t>& k,
                                                 std::int64_t t, Rng& rng) {
  std::int64_t points = 0;
  for (std::int64_t ki : k) {
    if (ki < 1) throw DomainError("degrees must be positive for the degree-vector law");
    points += ki - 1;
  }
  if (t < 1 || t - 1 > points)
    throw ContractError("t - 1 must lie in [0, sum(k_i - 1)]");

  // Partial Fisher-Yates: the first t-1 entries are a uniform subset of the
  // points; block j holds the k_j - 1 points of vertex j, laid out in order.
  std::vector<std::int64_t> idx(static_cast<std::size_t>(points));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::int64_t>(i);
  auto subset = static_cast<std::size_t>(t - 1);
  for (std::size_t i = 0; i < subset; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }

  std::vector<std::int64_t> ends(k.size());
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    acc += k[j] - 1;
    ends[j] = acc;
  }

  std::vector<std::int64_t> x(k.size(), 1);
  for (std::size_t i = 0; i < subset; ++i) {
    auto block = std::upper_bound(ends.begin(), ends.end(), idx[i]) - ends.begin();
    ++x[static_cast<std::size_t>(block)];
  }
  return x;
}

std::vector<std::int64_t> sample_degree_vector_X(const DegreeSequence& k, std::int64_t t,
                                                 Rng& rng) {
  return sample_degree_vector_X(k.degrees(), t, rng);
}

GMomentEstimate empirical_exp_g(const DegreeSequence& k, std::int64_t r,
                                std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("sample count must be positive");
  TreeShape shape(k.n(), r);

  Moments g_stats;
  Moments eg_stats;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = Rng::stream(seed, i);
    std::vector<std::int64_t> x = sample_degree_vector_X(k.degrees(), shape.t, rng);
    double g = to_double(g_exact(k, x, r));
    g_stats.add(g);
    eg_stats.add(std::exp(g));
  }

  GMomentEstimate est;
  est.mean_exp_g = eg_stats.mean;
  est.stderr_exp_g = eg_stats.std_error();
  est.mean_g = g_stats.mean;
  est.stderr_g = g_stats.std_error();
  est.samples = samples;
  est.seed = seed;
  return est;
}

BigInt uniform_bigint_below(Rng& rng, const BigInt& bound) {
  if (bound < 1) throw DomainError("bound must be positive");
  if (bound == 1) return BigInt(0);
  unsigned bits = boost::multiprecision::msb(bound) + 1;
  unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) x = (x << 64) | BigInt(rng.next());
    x >>= words * 64 - bits;
    if (x < bound) return x;
  }
}

UniformHypertreeSampler::UniformHypertreeSampler(std::int64_t n, std::int64_t r, Path path,
                                                 std::uint64_t max_trees)
    : n_(n), r_(r), path_(path), max_trees_(max_trees) {
  TreeShape shape(n, r);
  if (path_ == Path::kDirect) {
    all_ = enumerate_hypertrees(n, r, max_trees_);
    total_ = BigInt(all_.size());
    if (total_ != count_hypertrees(n, r))
      throw Error("internal: enumeration disagrees with the closed-form count");
    return;
  }
  // Degree classes: any suitable x with entries capped by t, the largest
  // degree a spanning hypertree can give one vertex.
  DegreeSequence caps = DegreeSequence::regular(n, shape.t);
  BigInt running = 0;
  for_each_suitable(caps, r, [&](const std::vector<std::int64_t>& x) {
    classes_.push_back(x);
    running += count_hypertrees_with_degrees(n_, r_, x);
    cumulative_.push_back(running);
  });
  total_ = running;
  if (total_ != count_hypertrees(n, r))
    throw Error("internal: class counts do not sum to the closed-form count");
  class_cache_.resize(classes_.size());
}

const std::vector<Hypergraph>& UniformHypertreeSampler::class_table(std::size_t idx) {
  std::vector<Hypergraph>& table = class_cache_[idx];
  if (table.empty()) {
    for_each_hypertree(
        n_, r_, [&](const Hypergraph& h) { table.push_back(h); }, classes_[idx], max_trees_);
    BigInt expected = count_hypertrees_with_degrees(n_, r_, classes_[idx]);
    if (BigInt(table.size()) != expected)
      throw Error("internal: class enumeration disagrees with the degree-count formula");
  }
  return table;
}

Hypergraph UniformHypertreeSampler::draw(Rng& rng) {
  if (path_ == Path::kDirect)
    return all_[static_cast<std::size_t>(rng.below(all_.size()))];

  BigInt u = uniform_bigint_below(rng, total_);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  BigInt before = idx == 0 ? BigInt(0) : cumulative_[idx - 1];
  // u - before is uniform on [0, class count) given the class, so one draw
  // picks both the class and the member.
  const std::vector<Hypergraph>& table = class_table(idx);
  return table[(u - before).convert_to<std::size_t>()];
}

Hypergraph sample_uniform_hypertree(std::int64_t n, std::int64_t r, Rng& rng) {
  UniformHypertreeSampler sampler(n, r);
  return sampler.draw(rng);
}

}  // namespace hypertree
