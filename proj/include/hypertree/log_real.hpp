#pragma once

// Sign-and-log representation for quantities whose magnitude may overflow double.
// sign 0 forces log_abs to the canonical sentinel -inf so equality is structural.

#include <cmath>
#include <limits>

#include "hypertree/bigint.hpp"

namespace hypertree {

struct LogReal {
  int sign = 0;                                                 // -1, 0, +1
  double log_abs = -std::numeric_limits<double>::infinity();    // ln |value|

  static LogReal zero() { return LogReal{}; }
  static LogReal one() { return LogReal{1, 0.0}; }

  static LogReal from_log(double log_value, int sgn = 1) {
    return sgn == 0 ? zero() : LogReal{sgn < 0 ? -1 : 1, log_value};
  }

  static LogReal from_double(double v) {
    if (v == 0.0) return zero();
    return LogReal{v < 0 ? -1 : 1, std::log(std::fabs(v))};
  }

  static LogReal from_bigint(const BigInt& v) {
    if (v == 0) return zero();
    return LogReal{v < 0 ? -1 : 1, log_bigint(v < 0 ? BigInt(-v) : v)};
  }

  static LogReal from_rational(const BigRat& v) {
    if (v == 0) return zero();
    BigRat a = v < 0 ? BigRat(-v) : v;
    return LogReal{v < 0 ? -1 : 1, log_bigrat(a)};
  }

  bool is_zero() const { return sign == 0; }

  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  double log10() const { return log_abs / M_LN10; }

  // Multiply by exp(e); keeps sign.
  LogReal times_exp(double e) const {
    return sign == 0 ? zero() : LogReal{sign, log_abs + e};
  }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return LogReal{a.sign * b.sign, a.log_abs + b.log_abs};
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign == 0) throw DomainError("LogReal division by zero");
    if (a.sign == 0) return zero();
    return LogReal{a.sign * b.sign, a.log_abs - b.log_abs};
  }
};

}  // namespace hypertree
