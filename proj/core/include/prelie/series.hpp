#pragma once

#include "prelie/integer.hpp"

#include <cstddef>
#include <vector>

namespace prelie {

/// Power series truncated after x^order, exact integer coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, const std::vector<Integer>& coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  Integer& operator[](std::size_t k) { return coeffs_[k]; }

  /// The top coefficient would need x^(order+1) and is left at zero.
  TruncatedSeries derivative() const;
  /// Multiplication by x^k.
  TruncatedSeries shifted(std::size_t k) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

}  // namespace prelie
