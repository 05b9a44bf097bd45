// Acceptance gate: ten orthogonal end-to-end checks, one line of output each:
//   criterion N: PASS|FAIL - detail (X.Xs)
// Every criterion enforces its own wall-clock budget; the process exits 0 only
// when every criterion it ran passed. --criterion N selects a single one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hypertree/asymptotics.hpp"
#include "hypertree/census.hpp"
#include "hypertree/errors.hpp"
#include "hypertree/hypertree_count.hpp"
#include "hypertree/sampling.hpp"
#include "hypertree/special_functions.hpp"
#include "oracles.hpp"

using namespace hypertree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "violated: " + what;
    }
  }
};

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Closed-form hypertree count vs exhaustive subset enumeration.

Outcome criterion1() {
  Outcome out;
  struct Shape {
    std::int64_t n;
    int r;
  };
  for (const Shape& s : {Shape{5, 3}, {7, 3}, {9, 3}, {7, 4}, {5, 5}, {9, 5}, {13, 7}}) {
    BigInt formula = count_hypertrees(s.n, s.r);
    BigInt brute =
        oracles::count_spanning_by_subsets(oracles::complete_hypergraph(s.n, s.r));
    out.require(formula == brute, "count(" + std::to_string(s.n) + "," +
                                      std::to_string(s.r) + ") vs enumeration");
  }
  out.require(count_hypertrees(5, 3) == 15, "count(5,3) = 15");
  out.require(count_hypertrees(7, 3) == 735, "count(7,3) = 735");
  out.require(count_hypertrees(7, 4) == 70, "count(7,4) = 70");
  if (out.pass)
    out.detail = "7 shapes match subset enumeration; (5,3)=15 (7,3)=735 (7,4)=70";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Per-degree hypertree count vs enumeration classes, every suitable x.

Outcome criterion2() {
  Outcome out;
  std::size_t classes = 0;
  BigInt trees = 0;
  for (std::int64_t n : {3, 5, 7, 9}) {
    std::int64_t t = (n - 1) / 2;
    std::map<std::vector<std::int64_t>, BigInt> by_degrees;
    BigInt enumerated = 0;
    for_each_hypertree(n, 3, [&](const Hypergraph& h) {
      ++by_degrees[degrees_of(h)];
      ++enumerated;
    });
    BigInt total = count_hypertrees(n, 3);
    out.require(enumerated == total, "n=" + std::to_string(n) + " enumeration size");

    BigInt formula_sum = 0;
    std::size_t suitable = 0;
    // every positive x with sum rt has parts <= t, so t-regular caps cover all
    for_each_suitable(DegreeSequence::regular(n, t), 3,
                      [&](const std::vector<std::int64_t>& x) {
                        ++suitable;
                        BigInt f = count_hypertrees_with_degrees(n, 3, x);
                        auto it = by_degrees.find(x);
                        BigInt seen = it == by_degrees.end() ? BigInt(0) : it->second;
                        out.require(f == seen,
                                    "n=" + std::to_string(n) + " class count mismatch");
                        formula_sum += f;
                      });
    out.require(formula_sum == total, "n=" + std::to_string(n) + " class sum = total");
    out.require(suitable == by_degrees.size(),
                "n=" + std::to_string(n) + " every suitable class realized");
    classes += suitable;
    trees += total;
  }
  if (out.pass)
    out.detail = std::to_string(classes) + " degree classes over n=3,5,7,9 (" +
                 trees.str() + " trees), sums exact";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Closed-form containment factor vs exhaustive pairing enumeration for
//    every degree sequence with M(k) <= 12 and every Berge-acyclic X.

Outcome criterion3() {
  Outcome out;
  std::vector<std::vector<std::int64_t>> seqs;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> gen = [&](std::int64_t rem,
                                                            std::int64_t max_part) {
    if (rem == 0) {
      if (cur.size() >= 3) seqs.push_back(cur);
      return;
    }
    for (std::int64_t d = std::min(max_part, rem); d >= 1; --d) {
      cur.push_back(d);
      gen(rem - d, d);
      cur.pop_back();
    }
  };
  for (std::int64_t M : {3, 6, 9, 12}) gen(M, M);

  std::uint64_t forests = 0;
  bool witness_ok = false;
  for (const std::vector<std::int64_t>& degrees : seqs) {
    DegreeSequence k(degrees);
    std::int64_t n = k.n();
    PairingCopyIndex index = build_pairing_copy_index(k, 3);
    std::vector<Edge> candidates;
    oracles::for_each_subset(static_cast<std::size_t>(n), 3,
                             [&](const std::vector<std::size_t>& idx) {
                               candidates.push_back({static_cast<int>(idx[0]),
                                                     static_cast<int>(idx[1]),
                                                     static_cast<int>(idx[2])});
                             });
    std::vector<Edge> edges;
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
      if (!edges.empty()) {
        Hypergraph x(n, edges);
        BigRat closed = leading_factor(k, 3, deg, static_cast<std::int64_t>(edges.size()));
        BigRat brute = index.expected_copies(x);
        if (closed != brute) {
          out.require(false, "k=" + k.to_string() + " forest factor mismatch");
          return;
        }
        ++forests;
        if (degrees == std::vector<std::int64_t>{2, 2, 2} && edges.size() == 1 &&
            closed == BigRat(4, 5))
          witness_ok = true;
      }
      if (static_cast<std::int64_t>(edges.size()) == k.M() / 3) return;
      for (std::size_t e = start; e < candidates.size(); ++e) {
        const Edge& c = candidates[e];
        bool fits = true;
        for (int v : c)
          if (deg[static_cast<std::size_t>(v)] + 1 > k[static_cast<std::size_t>(v)]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        edges.push_back(c);
        if (is_incidence_forest(n, edges)) {
          for (int v : c) ++deg[static_cast<std::size_t>(v)];
          extend(e + 1);
          for (int v : c) --deg[static_cast<std::size_t>(v)];
        }
        edges.pop_back();
      }
    };
    extend(0);
    if (!out.pass) break;
  }
  out.require(witness_ok, "witness k=(2,2,2), X one edge: factor 4/5");
  if (out.pass)
    out.detail = std::to_string(seqs.size()) + " degree sequences (M <= 12), " +
                 std::to_string(forests) + " forests, all factors exact";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Hypergeometric moment identities vs brute-force subset enumeration for
//    every degree multiset with sum(k_i - 1) <= 16 (padded to n <= 19).

Outcome criterion4() {
  Outcome out;
  std::uint64_t moment_checks = 0, lambda_checks = 0;

  // partitions of the excess E = sum(k_i - 1) over the non-unit degrees
  std::vector<std::vector<std::int64_t>> excess_parts;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> gen = [&](std::int64_t rem,
                                                            std::int64_t max_part) {
    if (rem == 0) {
      excess_parts.push_back(cur);
      return;
    }
    for (std::int64_t d = std::min(max_part, rem); d >= 1; --d) {
      cur.push_back(d);
      gen(rem - d, d);
      cur.pop_back();
    }
  };
  for (std::int64_t e = 1; e <= 16; ++e) gen(e, e);

  for (const std::vector<std::int64_t>& parts : excess_parts) {
    std::int64_t N = 0;
    for (std::int64_t p : parts) N += p;
    std::int64_t n0 = std::max<std::int64_t>(3, static_cast<std::int64_t>(parts.size()));

    // point -> block (only non-unit degrees own points)
    std::vector<std::size_t> block_of;
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (std::int64_t p = 0; p < parts[j]; ++p) block_of.push_back(j);

    // falling moments at the minimal padding; they are padding-invariant
    {
      std::vector<std::int64_t> k(static_cast<std::size_t>(n0), 1);
      for (std::size_t j = 0; j < parts.size(); ++j) k[j] = parts[j] + 1;
      std::set<std::int64_t> ts{1, 2, (N + 3) / 2, N + 1};
      for (std::int64_t t : ts) {
        if (t < 1 || t - 1 > N) continue;
        std::int64_t a_max = std::min<std::int64_t>(3, N);
        // sums[j][a] accumulates (x_j - 1)_a over all (t-1)-subsets
        std::vector<std::vector<std::int64_t>> sums(
            parts.size() + 1, std::vector<std::int64_t>(static_cast<std::size_t>(a_max) + 1, 0));
        std::int64_t count = 0;
        std::vector<std::int64_t> hits(parts.size(), 0);
        oracles::for_each_subset(
            block_of.size(), static_cast<std::size_t>(t - 1),
            [&](const std::vector<std::size_t>& c) {
              ++count;
              std::fill(hits.begin(), hits.end(), 0);
              for (std::size_t p : c) ++hits[block_of[p]];
              for (std::size_t j = 0; j < parts.size(); ++j) {
                std::int64_t ff = 1;
                sums[j][0] += 1;
                for (std::int64_t a = 1; a <= a_max; ++a) {
                  ff *= hits[j] - (a - 1);
                  sums[j][static_cast<std::size_t>(a)] += std::max<std::int64_t>(ff, 0);
                  if (ff <= 0) ff = 0;
                }
              }
              // one degree-1 representative: X = 1 always
              sums[parts.size()][0] += 1;
            });
        for (std::size_t j = 0; j < parts.size(); ++j)
          for (std::int64_t a = 0; a <= a_max; ++a) {
            BigRat brute(BigInt(sums[j][static_cast<std::size_t>(a)]), BigInt(count));
            out.require(hypergeom_falling_moment(j, a, k, t) == brute,
                        "falling moment mismatch");
            ++moment_checks;
          }
        if (static_cast<std::size_t>(n0) > parts.size()) {
          // a padded degree-1 vertex: all moments above order zero vanish
          out.require(hypergeom_falling_moment(parts.size(), 1, k, t) == BigRat(0),
                      "degree-1 moment must vanish");
          ++moment_checks;
        }
      }
    }

    // expected lambda under the spanning-tree shape, across paddings
    if (N >= 2) {
      for (std::int64_t n = n0; n <= 19; ++n) {
        std::int64_t M = N + n;
        if (n % 2 == 0 || M % 3 != 0) continue;  // r = 3 shape
        std::int64_t t = (n - 1) / 2;
        if (t < 1 || t - 1 > N) continue;
        std::vector<std::int64_t> kvec(static_cast<std::size_t>(n), 1);
        for (std::size_t j = 0; j < parts.size(); ++j) kvec[j] = parts[j] + 1;
        DegreeSequence k(kvec);
        std::int64_t total_sq = 0;
        std::int64_t count = 0;
        std::vector<std::int64_t> hits(parts.size(), 0);
        oracles::for_each_subset(block_of.size(), static_cast<std::size_t>(t - 1),
                                 [&](const std::vector<std::size_t>& c) {
                                   ++count;
                                   std::fill(hits.begin(), hits.end(), 0);
                                   for (std::size_t p : c) ++hits[block_of[p]];
                                   for (std::size_t j = 0; j < parts.size(); ++j) {
                                     std::int64_t d = parts[j] - hits[j];  // k_j - x_j
                                     total_sq += d * (d - 1);
                                   }
                                 });
        std::int64_t deficit = N - (t - 1);  // M - rt
        BigRat brute = deficit == 0 ? BigRat(0)
                                    : BigRat(BigInt(2) * total_sq,
                                             BigInt(2) * deficit * count);
        out.require(expected_lambda_exact(k, 3) == brute, "expected lambda mismatch");
        ++lambda_checks;
      }
    }
    if (!out.pass) break;
  }
  if (out.pass)
    out.detail = std::to_string(moment_checks) + " moment identities and " +
                 std::to_string(lambda_checks) +
                 " lambda expectations exact (excess <= 16, n <= 19)";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Stirling companion within its documented envelope across the grid.

Outcome criterion5() {
  Outcome out;
  int points = 0;
  double worst_ratio = 0.0;
  for (std::int64_t r : {3, 4, 5, 7})
    for (std::int64_t k : {2, 3, 4, 5, 10}) {
      if (k * (r - 1) <= r) continue;
      for (std::int64_t n : {9, 10, 13, 21, 25, 46, 99, 100, 101, 201, 999, 1000, 9999,
                             99999, 999999, 1000000}) {
        if ((n - 1) % (r - 1) != 0 || (k * n) % r != 0) continue;
        TreeShape shape(n, r);
        if (k * n < r * shape.t) continue;
        DegreeSequence ks = DegreeSequence::regular(n, k);
        double gap = std::abs(log_D(ks, r).log_abs - log_F(ks, r).log_abs);
        double envelope = 10.0 * static_cast<double>(r + k) /
                          (static_cast<double>(k) * static_cast<double>(n) -
                           static_cast<double>(r) * static_cast<double>(shape.t));
        out.require(gap <= envelope, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " r=" + std::to_string(r) + " outside envelope");
        worst_ratio = std::max(worst_ratio, gap / envelope);
        ++points;
      }
    }
  out.require(points >= 50, "at least 50 grid points");
  if (out.pass)
    out.detail = std::to_string(points) + " points (n up to 1e6), worst gap/envelope = " +
                 fmt(worst_ratio);
  return out;
}

// ---------------------------------------------------------------------------
// 6. Desk-scale consistency of census, Monte Carlo, and the main estimate.

Outcome criterion6() {
  Outcome out;
  const double kCalibration = 5.0;  // declared: |ln est - ln exact| <= 5 x bound
  DegreeSequence k = DegreeSequence::regular(9, 2);
  CensusResult census = exact_expected_spanning_hypertrees(k, 3, kDefaultCensusBudget, 4);
  out.require(census.expectation == BigRat(420, 97), "census expectation = 420/97");

  McEstimate mc = mc_expected_spanning_hypertrees(k, 3, 10000, 20260815,
                                                  kDefaultMaxRejects, 4);
  double exact = to_double(census.expectation);
  out.require(std::abs(mc.mean - exact) <= 3.0 * mc.std_error,
              "mc within 3 stderr of exact");

  AsymptoticEstimate est = theorem1_estimate(k, 3);
  double gap = std::abs(est.log_value.log_abs - std::log(exact));
  out.require(gap <= kCalibration * est.error_exponent_bound,
              "log gap within declared calibration");
  if (out.pass)
    out.detail = "exact 420/97; mc " + fmt(mc.mean, "%.5g") + " +- " +
                 fmt(mc.std_error, "%.2g") + "; |ln est - ln exact| = " + fmt(gap) +
                 " <= 5 x " + fmt(est.error_exponent_bound);
  return out;
}

// ---------------------------------------------------------------------------
// 7. The log gap between measured expectation and the estimate shrinks with n.

Outcome criterion7() {
  Outcome out;
  const std::uint64_t kSamples = 10000;
  const std::uint64_t kSeed = 727;
  std::string gaps;
  double prev = std::numeric_limits<double>::infinity();
  double final_gap = 0.0, final_bound = 0.0;
  for (std::int64_t n : {9, 15, 21, 27}) {
    DegreeSequence k = DegreeSequence::regular(n, 2);
    double ln_measured;
    if (n == 9) {
      CensusResult census = exact_expected_spanning_hypertrees(k, 3, kDefaultCensusBudget, 4);
      ln_measured = log_bigrat(census.expectation);
    } else {
      McEstimate mc =
          mc_expected_spanning_hypertrees(k, 3, kSamples, kSeed, kDefaultMaxRejects, 4);
      ln_measured = std::log(mc.mean);
    }
    AsymptoticEstimate est = theorem1_estimate(k, 3);
    double gap = std::abs(ln_measured - est.log_value.log_abs);
    out.require(gap < prev, "gap not decreasing at n=" + std::to_string(n));
    prev = gap;
    final_gap = gap;
    final_bound = est.error_exponent_bound;
    if (!gaps.empty()) gaps += " > ";
    gaps += fmt(gap, "%.3f");
  }
  out.require(final_gap <= 2.0 * final_bound, "final gap within 2 x bound");
  if (out.pass)
    out.detail = "ln gaps " + gaps + " over n=9,15,21,27 (exact, then mc 1e4)";
  return out;
}

// ---------------------------------------------------------------------------
// 8. Concentration of g(X): empirical tails under the subset bound, and the
//    exponential-moment gap inside [0, min{s,N-s} alpha^2 / 8].

Outcome criterion8() {
  Outcome out;
  DegreeSequence k = DegreeSequence::regular(9, 3);
  const std::int64_t t = 4, s = t - 1, N = 18;

  // exact alpha: max |g(x) - g(x')| over suitable x, x' one unit move apart
  BigRat alpha_exact(0);
  std::vector<std::vector<std::int64_t>> xs = suitable_degree_sequences(k, 3);
  for (const std::vector<std::int64_t>& x : xs) {
    BigRat gx = g_exact(k, x, 3);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 2) continue;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (i == j || x[j] >= k[j]) continue;
        std::vector<std::int64_t> moved = x;
        --moved[i];
        ++moved[j];
        BigRat diff = g_exact(k, moved, 3) - gx;
        if (diff < 0) diff = -diff;
        if (diff > alpha_exact) alpha_exact = diff;
      }
    }
  }
  out.require(alpha_exact == BigRat(2, 15), "alpha = 2/15 over adjacent suitable pairs");
  double alpha = to_double(alpha_exact);

  BigRat eg = lambda0_exact(k, 3) - expected_lambda_exact(k, 3);  // exact E g = 20/17
  const std::int64_t draws = 100000;
  Rng rng(90210);
  std::map<BigRat, std::int64_t> atom_counts;
  double sum_g = 0.0, sum_eg = 0.0;
  for (std::int64_t it = 0; it < draws; ++it) {
    std::vector<std::int64_t> x = sample_degree_vector_X(k, t, rng);
    BigRat g = g_exact(k, x, 3);
    ++atom_counts[g];
    double gd = to_double(g);
    sum_g += gd;
    sum_eg += std::exp(gd);
  }

  // declared z grid: j/4 x alpha for j = 1..8; below alpha/4 the two-sided
  // bound is vacuous against the discrete atom spacing
  for (std::int64_t j = 1; j <= 8; ++j) {
    BigRat z(BigInt(j) * 2, BigInt(4) * 15);
    std::int64_t tail_count = 0;
    for (const auto& [g, count] : atom_counts) {
      BigRat dev = g - eg;
      if (dev < 0) dev = -dev;
      if (dev >= z) tail_count += count;
    }
    double tail = static_cast<double>(tail_count) / static_cast<double>(draws);
    double bound = concentration_tail_bound(alpha, s, N, to_double(z));
    out.require(tail <= bound, "tail above bound at z = " + fmt(to_double(z)));
  }

  double k_gap = std::log(sum_eg / static_cast<double>(draws)) -
                 sum_g / static_cast<double>(draws);
  double k_bound = concentration_k_bound(alpha, s, N);
  out.require(k_gap >= 0.0, "ln E exp(g) - E g >= 0");
  out.require(k_gap <= k_bound, "ln E exp(g) - E g <= min{s,N-s} alpha^2 / 8");
  if (out.pass)
    out.detail = "alpha = 2/15 exact; 1e5 draws, tails under bound on z = alpha/4..2 alpha; "
                 "K = " +
                 fmt(k_gap, "%.2e") + " in [0, " + fmt(k_bound, "%.2e") + "]";
  return out;
}

// ---------------------------------------------------------------------------
// 9. Uniformity of both samplers by chi-square goodness of fit.

Outcome criterion9() {
  Outcome out;
  const std::int64_t draws = 100000;

  DegreeSequence k({2, 1, 1, 1, 1});
  std::map<std::vector<Edge>, std::size_t> cell;
  for_each_hypergraph(k, 3, [&](const Hypergraph& h) {
    std::size_t next = cell.size();
    cell[h.edges] = next;
  });
  std::vector<std::int64_t> observed(cell.size(), 0);
  Rng rng(4093);
  for (std::int64_t it = 0; it < draws; ++it)
    ++observed[cell.at(sample_simple_hypergraph(k, 3, rng).edges)];
  double stat = oracles::chi_square_stat(
      observed, std::vector<double>(cell.size(), 1.0 / static_cast<double>(cell.size())));
  double p_class = chi_square_pvalue(stat, static_cast<int>(cell.size()) - 1);
  out.require(p_class > 0.001, "degree-class sampler fit (p = " + fmt(p_class) + ")");

  UniformHypertreeSampler sampler(5, 3, UniformHypertreeSampler::Path::kDirect);
  std::map<std::vector<Edge>, std::size_t> tree_cell;
  for_each_hypertree(5, 3, [&](const Hypergraph& h) {
    std::size_t next = tree_cell.size();
    tree_cell[h.edges] = next;
  });
  std::vector<std::int64_t> tree_observed(tree_cell.size(), 0);
  Rng rng2(17041);
  for (std::int64_t it = 0; it < draws; ++it)
    ++tree_observed[tree_cell.at(sampler.draw(rng2).edges)];
  double tree_stat = oracles::chi_square_stat(
      tree_observed,
      std::vector<double>(tree_cell.size(), 1.0 / static_cast<double>(tree_cell.size())));
  double p_tree = chi_square_pvalue(tree_stat, static_cast<int>(tree_cell.size()) - 1);
  out.require(p_tree > 0.001, "hypertree sampler fit (p = " + fmt(p_tree) + ")");

  if (out.pass)
    out.detail = "1e5 draws each: degree class (3 cells) p = " + fmt(p_class) +
                 ", hypertrees (15 cells) p = " + fmt(p_tree);
  return out;
}

// ---------------------------------------------------------------------------
// 10. Zero-degree and divisibility edge handling.

Outcome criterion10() {
  Outcome out;
  DegreeSequence k0({2, 2, 2, 1, 1, 1, 0});
  out.require(theorem1_estimate(k0, 3).log_value.is_zero(), "estimate zero at zero degree");
  out.require(log_F(k0, 3).is_zero(), "first-order value zero at zero degree");
  CensusResult census = exact_expected_spanning_hypertrees(k0, 3);
  out.require(census.hypergraph_count > 0, "degree class nonempty");
  out.require(census.total_spanning_trees == 0, "no member has a spanning hypertree");
  out.require(census.expectation == BigRat(0), "census expectation zero");

  bool shape_named = false;
  try {
    count_hypertrees(6, 3);
  } catch (const DivisibilityError& e) {
    shape_named = std::string(e.what()).find("(r-1) divides (n-1)") != std::string::npos;
  }
  out.require(shape_named, "(r-1) | (n-1) failure names the hypothesis");

  bool sum_named = false;
  try {
    theorem1_estimate(DegreeSequence::regular(5, 2), 3);
  } catch (const DivisibilityError& e) {
    sum_named = std::string(e.what()).find("r divides M(k)") != std::string::npos;
  }
  out.require(sum_named, "r | kn failure names the hypothesis");

  if (out.pass)
    out.detail = "zero degree: estimate 0, census 0/" + census.hypergraph_count.str() +
                 "; both divisibility errors named";
  return out;
}

struct Criterion {
  int number;
  double budget_seconds;
  Outcome (*fn)();
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);

  const Criterion table[] = {{1, 10, criterion1},  {2, 30, criterion2},
                             {3, 300, criterion3}, {4, 60, criterion4},
                             {5, 10, criterion5},  {6, 600, criterion6},
                             {7, 1800, criterion7}, {8, 120, criterion8},
                             {9, 120, criterion9}, {10, 1, criterion10}};
  bool all_pass = true;
  for (const Criterion& c : table) {
    if (only != 0 && c.number != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("unexpected exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      out.pass = false;
      out.detail += " [over budget: " + fmt(secs, "%.1f") + "s > " +
                    fmt(c.budget_seconds, "%.0f") + "s]";
    }
    std::printf("criterion %d: %s - %s (%.1fs)\n", c.number, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
