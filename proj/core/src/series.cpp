#include "prelie/series.hpp"

#include <algorithm>

namespace prelie {

TruncatedSeries::TruncatedSeries(std::size_t order, const std::vector<Integer>& coeffs)
    : coeffs_(order + 1) {
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), coeffs_.size()), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries out(order());
  for (std::size_t k = 1; k <= order(); ++k) out[k - 1] = coeffs_[k] * k;
  return out;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries out(order());
  for (std::size_t i = 0; i + k <= order(); ++i) out[i + k] = coeffs_[i];
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    for (std::size_t j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace prelie
