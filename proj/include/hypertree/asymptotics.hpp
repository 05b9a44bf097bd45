#pragma once

// Log-space asymptotic formulas for the expected number of spanning hypertrees
// over a uniformly random simple r-uniform hypergraph with degree sequence k,
// plus the exact-rational identities (hypergeometric moments, expected
// correction exponent) used to cross-validate them. Exponent corrections are
// evaluated in exact rational arithmetic before the single conversion to
// double.

#include <cstdint>
#include <vector>

#include "hypertree/bigint.hpp"
#include "hypertree/degree_sequence.hpp"
#include "hypertree/log_real.hpp"
#include "hypertree/tree_shape.hpp"

namespace hypertree {

inline constexpr double kDefaultRegimeThreshold = 0.1;

struct AsymptoticEstimate {
  LogReal log_value;
  double error_exponent_bound = 0.0;  // magnitude of the neglected exponent
  bool regime_ok = false;             // bound <= threshold
};

// First-order closed form: the estimate is F * exp(correction). Requires mean
// degree k > 1 and k(r-1) - r > 0; zero when some k_i = 0.
LogReal log_F(const DegreeSequence& k, std::int64_t r);

// Stirling companion of log_F built from exact factorial ratios via
// log-gamma; |log_D - log_F| = O((r+k)/(kn-rt)).
LogReal log_D(const DegreeSequence& k, std::int64_t r);

// Exponent pieces of the edge-containment estimate. lambda_x uses the
// (r-1)/(2(kn-rt)) form; the equivalent (r-1)^2/(2(k(r-1)-r)n+2r) denominator
// identity is asserted internally. Sum-of-squares zero gives 0 without
// division.
BigRat lambda0_exact(const DegreeSequence& k, std::int64_t r);
BigRat lambda_x_exact(const DegreeSequence& k, const std::vector<std::int64_t>& x,
                      std::int64_t r);
BigRat g_exact(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r);
double lambda0(const DegreeSequence& k, std::int64_t r);
double lambda_x(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r);
double g_value(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r);

// Error exponent of the edge-containment theorem for a sub-hypergraph with
// degree vector x and t edges.
double beta(const DegreeSequence& k, std::int64_t r, const std::vector<std::int64_t>& x,
            std::int64_t t);

// P(random H contains a fixed hypertree with degrees x):
// leading_factor * exp(lambda0 - lambda(x)), with error exponent
// r^5 k_max^3 / ((k(r-1)-r) n).
AsymptoticEstimate tree_probability_estimate(const DegreeSequence& k, std::int64_t r,
                                             const std::vector<std::int64_t>& x,
                                             double threshold = kDefaultRegimeThreshold);

// E[(X_j - 1)_a] for X_j = 1 + |A_j ∩ C|, C a uniform (t-1)-subset of
// (k_mean-1)n points split into blocks A_j of size k_j - 1:
// (t-1)_a (k_j - 1)_a / ((k_mean-1)n)_a. j is 0-based. Raw-vector core with a
// DegreeSequence convenience wrapper.
BigRat hypergeom_falling_moment(std::size_t j, std::int64_t a,
                                const std::vector<std::int64_t>& degrees, std::int64_t t);
BigRat hypergeom_falling_moment(std::size_t j, std::int64_t a, const DegreeSequence& k,
                                std::int64_t t);

// E[lambda(X)] under the same model, exact:
// (r-1)(kn-rt-1) sum_i (k_i-1)(k_i-2) / (2 ((k-1)n)((k-1)n - 1)).
BigRat expected_lambda_exact(const DegreeSequence& k, std::int64_t r);

// First-order closed form of E[g(X)] and the magnitude of its neglected term.
struct ClosedFormExponent {
  double value = 0.0;
  double error_magnitude = 0.0;
};
ClosedFormExponent expected_g_closed_form(const DegreeSequence& k, std::int64_t r);

// Main estimate: F * exp(E g(X) closed form), error exponent
// r^5 k_max^3 / ((k(r-1)-r) n). Throws DivisibilityError/RegimeError naming
// the failed hypothesis; zero estimate when some k_i = 0.
AsymptoticEstimate theorem1_estimate(const DegreeSequence& k, std::int64_t r,
                                     double threshold = kDefaultRegimeThreshold);

// Same estimate for the k-regular sequence on n vertices (delegates, so it is
// bit-identical to theorem1_estimate on that sequence).
AsymptoticEstimate regular_estimate(std::int64_t n, std::int64_t k, std::int64_t r,
                                    double threshold = kDefaultRegimeThreshold);

// Two-sided tail bound for a Lipschitz function of a uniform random s-subset
// of [N]: P(|h - E h| >= z) <= exp(-2 z^2 / (min{s, N-s} alpha^2)), where
// alpha bounds the change of h across adjacent subsets. Zero when alpha = 0.
double concentration_tail_bound(double alpha, std::int64_t s, std::int64_t N, double z);

// Bound on K = ln E exp(h) - E h for the same model: min{s, N-s} alpha^2 / 8.
double concentration_k_bound(double alpha, std::int64_t s, std::int64_t N);

}  // namespace hypertree
