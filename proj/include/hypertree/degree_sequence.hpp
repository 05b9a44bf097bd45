#pragma once

// Prescribed degree sequence. Immutable after construction; derived statistics
// (degree sum M, second falling moment M2, mean, geometric mean, max) are
// computed eagerly so instances are safe to share across threads.

#include <cstdint>
#include <string>
#include <vector>

#include "hypertree/bigint.hpp"

namespace hypertree {

class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> degrees);

  static DegreeSequence regular(std::int64_t n, std::int64_t k);

  // Accepts comma/whitespace separated integers ("2,2,1 1") or the shorthand
  // "k^n" for the regular sequence (k repeated n times).
  static DegreeSequence parse(const std::string& text);

  std::int64_t n() const { return static_cast<std::int64_t>(degrees_.size()); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::int64_t operator[](std::size_t i) const { return degrees_[i]; }

  const BigInt& M() const { return m_; }            // sum of degrees
  const BigInt& M2() const { return m2_; }          // sum of k_i(k_i - 1)
  BigRat mean() const;                              // M / n
  double k_hat() const { return k_hat_; }           // geometric mean
  double sum_log_degrees() const { return sum_log_degrees_; }
  const BigInt& degree_product() const { return degree_product_; }
  std::int64_t k_max() const { return k_max_; }
  bool has_zero() const { return has_zero_; }
  bool is_regular() const { return is_regular_; }

  // Sum over i of (k_i - mean)^2, exact.
  BigRat variance_sum() const;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> degrees_;
  BigInt m_;
  BigInt m2_;
  BigInt degree_product_;
  double k_hat_ = 0.0;
  double sum_log_degrees_ = 0.0;
  std::int64_t k_max_ = 0;
  bool has_zero_ = false;
  bool is_regular_ = true;
};

}  // namespace hypertree
