#pragma once

// Exact integer/rational arithmetic used on every oracle path. Log-space doubles
// (LogReal) are used on asymptotic paths; conversions between the two are explicit.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

#include "hypertree/errors.hpp"

namespace hypertree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// a(a-1)...(a-b+1); empty product for b = 0. Zero when 0 <= a < b.
inline BigInt falling_factorial(const BigInt& a, std::uint64_t b) {
  BigInt result = 1;
  BigInt factor = a;
  for (std::uint64_t i = 0; i < b; ++i, --factor) result *= factor;
  return result;
}

inline BigInt factorial(std::uint64_t n) { return falling_factorial(BigInt(n), n); }

inline BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n >= 0 && BigInt(k) > n) return 0;
  BigInt num = falling_factorial(n, k);
  return num / factorial(k);
}

inline BigInt int_pow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

// Natural log of a positive big integer, accurate to ~1 ulp even when the value
// itself overflows double.
inline double log_bigint(const BigInt& v) {
  if (v <= 0) throw DomainError("log_bigint requires a positive argument");
  std::size_t bits = boost::multiprecision::msb(v);
  if (bits <= 900) return std::log(v.convert_to<double>());
  std::size_t shift = bits - 512;
  double head = (v >> shift).convert_to<double>();
  return std::log(head) + static_cast<double>(shift) * M_LN2;
}

inline double log_bigrat(const BigRat& v) {
  if (v <= 0) throw DomainError("log_bigrat requires a positive argument");
  return log_bigint(numerator(v)) - log_bigint(denominator(v));
}

inline double to_double(const BigRat& v) {
  if (v == 0) return 0.0;
  double lg = log_bigint(numerator(v) < 0 ? BigInt(-numerator(v)) : numerator(v)) -
              log_bigint(denominator(v));
  if (lg > 700.0 || lg < -745.0) return v < 0 ? -std::exp(lg) : std::exp(lg);
  return v.convert_to<double>();
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace hypertree
