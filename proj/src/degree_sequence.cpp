#include "hypertree/degree_sequence.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypertree/errors.hpp"

namespace hypertree {

namespace {

// Balanced product tree keeps big-int multiplications near-balanced.
BigInt product_range(const std::vector<std::int64_t>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return BigInt(v[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  return product_range(v, lo, mid) * product_range(v, mid, hi);
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.size() < 3) throw DimensionError("degree sequence needs at least 3 entries");
  m_ = 0;
  m2_ = 0;
  for (std::int64_t k : degrees_) {
    if (k < 0) throw DomainError("degrees must be non-negative");
    m_ += k;
    m2_ += BigInt(k) * (k - 1);
    k_max_ = std::max(k_max_, k);
    has_zero_ = has_zero_ || k == 0;
    is_regular_ = is_regular_ && k == degrees_[0];
  }
  if (has_zero_) {
    degree_product_ = 0;
    k_hat_ = 0.0;
    sum_log_degrees_ = -std::numeric_limits<double>::infinity();
    return;
  }
  degree_product_ = is_regular_ ? int_pow(BigInt(degrees_[0]), degrees_.size())
                                : product_range(degrees_, 0, degrees_.size());
  if (is_regular_) {
    sum_log_degrees_ = static_cast<double>(degrees_.size()) * std::log(double(degrees_[0]));
    k_hat_ = static_cast<double>(degrees_[0]);
  } else {
    double sum = 0.0, comp = 0.0;  // Kahan
    for (std::int64_t k : degrees_) {
      double y = std::log(static_cast<double>(k)) - comp;
      double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    sum_log_degrees_ = sum;
    k_hat_ = std::exp(sum / static_cast<double>(degrees_.size()));
  }
}

DegreeSequence DegreeSequence::regular(std::int64_t n, std::int64_t k) {
  if (n < 3) throw DimensionError("degree sequence needs at least 3 entries");
  if (k < 0) throw DomainError("degrees must be non-negative");
  return DegreeSequence(std::vector<std::int64_t>(static_cast<std::size_t>(n), k));
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
  // "k^n" shorthand.
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    std::istringstream left(text.substr(0, caret));
    std::istringstream right(text.substr(caret + 1));
    std::int64_t k = -1, n = -1;
    char trail;
    if (!(left >> k) || (left >> trail) || !(right >> n) || (right >> trail))
      throw DomainError("cannot parse degree shorthand: " + text);
    return regular(n, k);
  }
  std::string normal = text;
  for (char& c : normal)
    if (c == ',') c = ' ';
  std::istringstream in(normal);
  std::vector<std::int64_t> degrees;
  std::int64_t k;
  while (in >> k) degrees.push_back(k);
  if (!in.eof()) throw DomainError("cannot parse degree sequence: " + text);
  return DegreeSequence(std::move(degrees));
}

BigRat DegreeSequence::mean() const { return BigRat(m_, BigInt(n())); }

BigRat DegreeSequence::variance_sum() const {
  // sum (k_i - M/n)^2 = sum (n k_i - M)^2 / n^2
  BigInt num = 0;
  for (std::int64_t k : degrees_) {
    BigInt d = BigInt(n()) * k - m_;
    num += d * d;
  }
  return BigRat(num, BigInt(n()) * BigInt(n()));
}

std::string DegreeSequence::to_string() const {
  if (is_regular_) {
    std::ostringstream out;
    out << degrees_[0] << "^" << n();
    return out.str();
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) out << ",";
    out << degrees_[i];
  }
  return out.str();
}

}  // namespace hypertree
