#include "hypertree/asymptotics.hpp"

#include <cmath>

#include "hypertree/census.hpp"
#include "hypertree/errors.hpp"
#include "hypertree/special_functions.hpp"

namespace hypertree {

namespace {

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

// Divisibility and shape hypotheses shared by the estimates.
TreeShape checked_shape(const DegreeSequence& k, std::int64_t r) {
  TreeShape shape(k.n(), r);
  if (k.M() % r != 0) throw DivisibilityError("r divides M(k)");
  return shape;
}

// k(r-1) - r with k the mean degree: (M(r-1) - rn)/n. Positive in the regime.
BigRat regime_margin(const DegreeSequence& k, std::int64_t r) {
  return BigRat(k.M() * (r - 1) - BigInt(r) * k.n(), BigInt(k.n()));
}

void check_regime(const DegreeSequence& k, std::int64_t r) {
  if (k.M() <= k.n())
    throw RegimeError("mean degree must exceed 1 for the asymptotic formulas");
  if (regime_margin(k, r) <= 0)
    throw RegimeError("k(r-1) - r must be positive; the formula is undefined here");
}

double error_exponent(const DegreeSequence& k, std::int64_t r) {
  // r^5 k_max^3 / ((k(r-1)-r) n); the denominator equals M(r-1) - rn exactly.
  BigInt den = k.M() * (r - 1) - BigInt(r) * k.n();
  if (den <= 0) return std::numeric_limits<double>::infinity();
  return to_double(BigRat(int_pow(BigInt(r), 5) * int_pow(BigInt(k.k_max()), 3), den));
}

// Main correction exponent shared by theorem1_estimate and
// expected_g_closed_form: (kr-r-1)/(2(k-1)) - (kr-r-2k+1)/(2k(k-1)^2 n) * S,
// with k the mean degree and S = sum (k_i - k)^2. Exact rational.
BigRat closed_form_exponent_exact(const DegreeSequence& k, std::int64_t r) {
  BigInt n(k.n());
  const BigInt& M = k.M();
  // (kr - r - 1)/(2(k-1)) = (Mr - rn - n) / (2(M - n))
  BigRat first(M * r - BigInt(r) * n - n, 2 * (M - n));
  // (kr - r - 2k + 1)/(2k(k-1)^2 n) = n(Mr - rn - 2M + n) / (2M(M-n)^2)
  BigRat coeff(n * (M * r - BigInt(r) * n - 2 * M + n), 2 * M * (M - n) * (M - n));
  return first - coeff * k.variance_sum();
}

}  // namespace

LogReal log_F(const DegreeSequence& k, std::int64_t r) {
  checked_shape(k, r);
  if (k.has_zero()) return LogReal::zero();
  check_regime(k, r);
  std::int64_t n = k.n();
  std::int64_t M = to_i64(k.M());
  double log_n = std::log(static_cast<double>(n));
  // ln(k-1) and ln(k(r-1)-r) from exact integer ratios.
  double log_km1 = log_bigint(BigInt(M - n)) - log_n;
  BigInt margin_num = BigInt(M) * (r - 1) - BigInt(r) * n;  // n * (k(r-1)-r)
  double log_margin = log_bigint(margin_num) - log_n;
  double log_r1 = std::log(static_cast<double>(r - 1));
  double log_k = log_bigint(BigInt(M)) - log_n;

  double prefactor = 0.5 * log_km1 + log_r1 - log_n -
                     (static_cast<double>(r + 1) / (2.0 * (r - 1))) * log_margin;
  // n * per-vertex exponent; every coefficient is an exact rational.
  double bulk = k.sum_log_degrees();                        // n ln k_hat
  bulk += to_double(BigRat(M, r)) * log_r1;                 // n (k/r) ln(r-1)
  bulk += static_cast<double>(M - n) * log_km1;             // n (k-1) ln(k-1)
  bulk -= to_double(BigRat(BigInt(M) * (r - 1), r)) * log_k;  // n (kr-k)/r ln k
  bulk -= to_double(BigRat(margin_num, BigInt(r) * (r - 1))) * log_margin;
  return LogReal::from_log(prefactor + bulk);
}

LogReal log_D(const DegreeSequence& k, std::int64_t r) {
  TreeShape shape = checked_shape(k, r);
  if (k.has_zero()) return LogReal::zero();
  std::int64_t n = k.n();
  std::int64_t M = to_i64(k.M());
  std::int64_t t = shape.t;
  if (M < r * t) throw DomainError("M(k) must be at least rt");
  // D = r^t k_hat^n n! (M/r)! (M-n)! / (n ((M-rt)/r)! M! t!)
  double value = static_cast<double>(t) * std::log(static_cast<double>(r));
  value += k.sum_log_degrees();
  value += log_factorial(static_cast<double>(n));
  value += log_factorial(static_cast<double>(M / r));
  value += log_factorial(static_cast<double>(M - n));
  value -= std::log(static_cast<double>(n));
  value -= log_factorial(static_cast<double>((M - r * t) / r));
  value -= log_factorial(static_cast<double>(M));
  value -= log_factorial(static_cast<double>(t));
  return LogReal::from_log(value);
}

BigRat lambda0_exact(const DegreeSequence& k, std::int64_t r) {
  if (k.M() == 0) throw DomainError("lambda0 requires a positive degree sum");
  return BigRat(BigInt(r - 1) * k.M2(), 2 * k.M());
}

BigRat lambda_x_exact(const DegreeSequence& k, const std::vector<std::int64_t>& x,
                      std::int64_t r) {
  if (static_cast<std::int64_t>(x.size()) != k.n())
    throw DimensionError("x must have one entry per vertex");
  BigInt sum_sq = 0;  // sum (k_i - x_i)(k_i - x_i - 1)
  BigInt deficit = 0;
  for (std::int64_t i = 0; i < k.n(); ++i) {
    std::int64_t d = k[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
    if (d < 0) throw DomainError("x must be at most k pointwise");
    sum_sq += BigInt(d) * (d - 1);
    deficit += d;
  }
  if (sum_sq == 0) return BigRat(0);
  // deficit = M(k) - sum x_i > 0 here, since some d >= 2. When x is suitable
  // (sum x_i = rt for the tree shape), the two published denominators agree:
  // 2(k(r-1)-r)n + 2r = 2(r-1)(kn - rt); assert that before using the second.
  BigInt sum_x = k.M() - deficit;
  if ((k.n() - 1) % (r - 1) == 0 &&
      sum_x == BigInt(r) * ((k.n() - 1) / (r - 1))) {
    BigInt via_margin = 2 * (k.M() * (r - 1) - BigInt(r) * k.n()) + 2 * r;
    if (via_margin != 2 * BigInt(r - 1) * deficit)
      throw Error("internal: lambda denominators disagree");
  }
  return BigRat(BigInt(r - 1) * sum_sq, 2 * deficit);
}

BigRat g_exact(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r) {
  return lambda0_exact(k, r) - lambda_x_exact(k, x, r);
}

double lambda0(const DegreeSequence& k, std::int64_t r) {
  return to_double(lambda0_exact(k, r));
}

double lambda_x(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r) {
  return to_double(lambda_x_exact(k, x, r));
}

double g_value(const DegreeSequence& k, const std::vector<std::int64_t>& x, std::int64_t r) {
  return to_double(g_exact(k, x, r));
}

double beta(const DegreeSequence& k, std::int64_t r, const std::vector<std::int64_t>& x,
            std::int64_t t) {
  if (static_cast<std::int64_t>(x.size()) != k.n())
    throw DimensionError("x must have one entry per vertex");
  BigInt residual = k.M();
  for (std::int64_t xi : x) residual -= xi;
  if (residual <= 0) throw DomainError("beta requires M(k - x) > 0");
  BigInt kmax3 = int_pow(BigInt(k.k_max()), 3);
  BigRat b(int_pow(BigInt(r), 4) * kmax3, residual);
  b += BigRat(BigInt(t) * kmax3, residual * residual);
  b += BigRat(BigInt(r) * t * int_pow(BigInt(k.k_max()), 4), residual * residual * residual);
  return to_double(b);
}

AsymptoticEstimate tree_probability_estimate(const DegreeSequence& k, std::int64_t r,
                                             const std::vector<std::int64_t>& x,
                                             double threshold) {
  TreeShape shape = checked_shape(k, r);
  if (static_cast<std::int64_t>(x.size()) != k.n())
    throw DimensionError("x must have one entry per vertex");
  std::int64_t sum_x = 0;
  for (std::int64_t xi : x) {
    if (xi < 1) throw ContractError("hypertree degrees must be at least 1");
    sum_x += xi;
  }
  if (sum_x != shape.r * shape.t) throw ContractError("x must sum to r*t");
  AsymptoticEstimate est;
  // The containment bound scales with the residual degree sum M(k - x); when
  // x exhausts k there is no finite bound and only the value is meaningful.
  est.error_exponent_bound = k.M() - sum_x > 0
                                 ? beta(k, r, x, shape.t)
                                 : std::numeric_limits<double>::infinity();
  est.regime_ok =
      std::isfinite(est.error_exponent_bound) && est.error_exponent_bound <= threshold;
  BigRat lf = leading_factor(k, r, x, shape.t);
  if (lf == 0) {
    est.log_value = LogReal::zero();
    return est;
  }
  double exponent = to_double(g_exact(k, x, r));
  est.log_value = LogReal::from_rational(lf).times_exp(exponent);
  return est;
}

BigRat hypergeom_falling_moment(std::size_t j, std::int64_t a,
                                const std::vector<std::int64_t>& degrees, std::int64_t t) {
  if (degrees.empty() || j >= degrees.size())
    throw DimensionError("vertex index out of range");
  if (a < 0) throw DomainError("moment order must be non-negative");
  if (t < 1) throw DomainError("t must be at least 1");
  BigInt N = 0;  // (k-1)n = M - n
  for (std::int64_t ki : degrees) {
    if (ki < 0) throw DomainError("degrees must be non-negative");
    N += ki - 1;
  }
  if (N < a) throw DomainError("moment order exceeds (k-1)n");
  BigInt num = falling_factorial(BigInt(t - 1), static_cast<std::uint64_t>(a)) *
               falling_factorial(BigInt(degrees[j] - 1), static_cast<std::uint64_t>(a));
  BigInt den = falling_factorial(N, static_cast<std::uint64_t>(a));
  return BigRat(num, den);
}

BigRat hypergeom_falling_moment(std::size_t j, std::int64_t a, const DegreeSequence& k,
                                std::int64_t t) {
  return hypergeom_falling_moment(j, a, k.degrees(), t);
}

BigRat expected_lambda_exact(const DegreeSequence& k, std::int64_t r) {
  TreeShape shape = checked_shape(k, r);
  BigInt N = k.M() - k.n();
  if (N < 2) throw DomainError("expected_lambda_exact requires (k-1)n >= 2");
  BigInt s(shape.t - 1);
  if (s > N) throw DomainError("t-1 exceeds (k-1)n: the subset model is empty");
  BigInt deficit = k.M() - BigInt(r) * shape.t;  // = N - s
  if (deficit == 0) return BigRat(0);  // X = k a.s., lambda(k) = 0
  BigInt sum_sq = 0;
  for (std::int64_t ki : k.degrees()) sum_sq += BigInt(ki - 1) * (ki - 2);
  return BigRat(BigInt(r - 1) * (deficit - 1) * sum_sq, 2 * N * (N - 1));
}

ClosedFormExponent expected_g_closed_form(const DegreeSequence& k, std::int64_t r) {
  checked_shape(k, r);
  if (k.M() <= k.n())
    throw RegimeError("mean degree must exceed 1 for the closed form");
  ClosedFormExponent out;
  out.value = to_double(closed_form_exponent_exact(k, r));
  out.error_magnitude = to_double(BigRat(BigInt(r) * k.k_max(), k.M()));
  return out;
}

AsymptoticEstimate theorem1_estimate(const DegreeSequence& k, std::int64_t r,
                                     double threshold) {
  checked_shape(k, r);
  AsymptoticEstimate est;
  est.error_exponent_bound = error_exponent(k, r);
  est.regime_ok = est.error_exponent_bound <= threshold;
  if (k.has_zero()) {
    est.log_value = LogReal::zero();
    return est;
  }
  check_regime(k, r);
  double correction = to_double(closed_form_exponent_exact(k, r));
  est.log_value = log_F(k, r).times_exp(correction);
  return est;
}

AsymptoticEstimate regular_estimate(std::int64_t n, std::int64_t k, std::int64_t r,
                                    double threshold) {
  return theorem1_estimate(DegreeSequence::regular(n, k), r, threshold);
}

double concentration_tail_bound(double alpha, std::int64_t s, std::int64_t N, double z) {
  if (alpha < 0.0 || z < 0.0) throw DomainError("alpha and z must be non-negative");
  if (s < 1 || s >= N) throw DomainError("need 1 <= s < N");
  if (alpha == 0.0) return z == 0.0 ? 1.0 : 0.0;
  double m = static_cast<double>(std::min(s, N - s));
  return std::exp(-2.0 * z * z / (m * alpha * alpha));
}

double concentration_k_bound(double alpha, std::int64_t s, std::int64_t N) {
  if (alpha < 0.0) throw DomainError("alpha must be non-negative");
  if (s < 1 || s >= N) throw DomainError("need 1 <= s < N");
  double m = static_cast<double>(std::min(s, N - s));
  return m * alpha * alpha / 8.0;
}

}  // namespace hypertree
