#include "hypertree/special_functions.hpp"

#include <cmath>

#include "hypertree/errors.hpp"

namespace hypertree {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Bernoulli-series coefficients B_{2k} / (2k(2k-1)).
constexpr double kStirling[] = {
    1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,    -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 7.0 / 1092.0,
};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  double shift = 0.0;
  while (x < 16.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  // Stirling series at x >= 16: truncation error below 1e-19 absolute.
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return shift + (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

double log_factorial(double n) {
  if (n < 0.0) throw DomainError("log_factorial requires n >= 0");
  return log_gamma(n + 1.0);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw DomainError("gamma_q requires a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  double log_prefix = a * std::log(x) - x - log_gamma(a);
  if (x < a + 1.0) {
    // Series for P(a, x); Q = 1 - P.
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return 1.0 - sum * std::exp(log_prefix);
  }
  // Modified Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(log_prefix);
}

double chi_square_pvalue(double stat, int dof) {
  if (dof <= 0) throw DomainError("chi_square_pvalue requires dof > 0");
  if (stat < 0.0) return 1.0;
  return gamma_q(0.5 * dof, 0.5 * stat);
}

}  // namespace hypertree
