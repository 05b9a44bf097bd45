#pragma once

// Deterministic special functions: log-gamma (used by the log-space factorial
// reductions) and the regularized incomplete gamma (chi-square p-values).
// Hand-rolled rather than libm-backed so output bytes do not depend on the host
// math library.

namespace hypertree {

// ln Gamma(x) for x > 0. Relative error < 1e-14 across the supported range
// (x up to ~1e15): Stirling series with Bernoulli terms for x >= 16, upward
// recurrence below.
double log_gamma(double x);

// ln n!
double log_factorial(double n);

// Regularized incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a), a > 0, x >= 0.
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic with dof degrees of freedom.
double chi_square_pvalue(double stat, int dof);

}  // namespace hypertree
