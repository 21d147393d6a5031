#include "besov/numerics/summation.h"

#include <stdexcept>

namespace besov {

namespace {

constexpr std::size_t kBlock = 8;

double sum_range(const double* v, std::size_t n) {
  if (n <= kBlock) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return sum_range(v, half) + sum_range(v + half, n - half);
}

double dot_range(const double* w, const double* v, std::size_t n) {
  if (n <= kBlock) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * v[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return dot_range(w, v, half) + dot_range(w + half, v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return sum_range(values.data(), values.size());
}

double pairwise_dot(std::span<const double> weights, std::span<const double> values) {
  if (weights.size() != values.size())
    throw std::invalid_argument("pairwise_dot: length mismatch");
  return dot_range(weights.data(), values.data(), values.size());
}

}  // namespace besov
