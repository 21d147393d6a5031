#pragma once

#include <cstddef>
#include <span>

namespace besov {

/// Fixed-order pairwise (cascade) summation. The reduction tree depends only
/// on the length of the input, so results are bit-stable.
double pairwise_sum(std::span<const double> values);

/// Pairwise sum of weights[i] * values[i].
double pairwise_dot(std::span<const double> weights, std::span<const double> values);

}  // namespace besov
