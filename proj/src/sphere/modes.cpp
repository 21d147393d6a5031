#include "besov/sphere/modes.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace besov {

void require_supported_dimension(int dimension) {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("unsupported dimension N=" + std::to_string(dimension) + " (expected 2 or 3)");
}

bool is_valid_mode(int dimension, ModeIndex mode) {
  if (mode.degree < 0) return false;
  if (dimension == 2) {
    if (mode.degree == 0) return mode.order == 0;
    return mode.order == -1 || mode.order == 1;
  }
  if (dimension == 3) return std::abs(mode.order) <= mode.degree;
  return false;
}

std::size_t mode_count(int dimension, int n_max) {
  require_supported_dimension(dimension);
  if (n_max < 0) throw std::invalid_argument("mode_count: negative truncation degree");
  const auto n = static_cast<std::size_t>(n_max);
  return dimension == 2 ? 2 * n + 1 : (n + 1) * (n + 1);
}

std::size_t degree_multiplicity(int dimension, int n) {
  require_supported_dimension(dimension);
  if (n < 0) throw std::invalid_argument("degree_multiplicity: negative degree");
  if (dimension == 2) return n == 0 ? 1 : 2;
  return static_cast<std::size_t>(2 * n + 1);
}

std::size_t flat_index(int dimension, ModeIndex mode) {
  if (!is_valid_mode(dimension, mode))
    throw std::invalid_argument("invalid mode (n=" + std::to_string(mode.degree) + ", m=" +
                                std::to_string(mode.order) + ") for N=" + std::to_string(dimension));
  const auto n = static_cast<std::size_t>(mode.degree);
  if (dimension == 2) {
    if (n == 0) return 0;
    return 2 * n - 1 + (mode.order > 0 ? 1 : 0);
  }
  return static_cast<std::size_t>(static_cast<long>(n * n + n) + mode.order);
}

ModeIndex mode_at(int dimension, std::size_t flat) {
  require_supported_dimension(dimension);
  if (dimension == 2) {
    if (flat == 0) return {0, 0};
    const int n = static_cast<int>((flat + 1) / 2);
    return {n, (flat % 2 == 1) ? -1 : 1};
  }
  int n = static_cast<int>(std::sqrt(static_cast<double>(flat)));
  while (static_cast<std::size_t>((n + 1) * (n + 1)) <= flat) ++n;
  while (static_cast<std::size_t>(n * n) > flat) --n;
  return {n, static_cast<int>(flat) - n * n - n};
}

std::vector<ModeIndex> enumerate_modes(int dimension, int n_max) {
  const std::size_t count = mode_count(dimension, n_max);
  std::vector<ModeIndex> modes;
  modes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) modes.push_back(mode_at(dimension, i));
  return modes;
}

double eigenvalue(int dimension, int degree) {
  require_supported_dimension(dimension);
  if (degree < 0) throw std::invalid_argument("eigenvalue: negative degree");
  const double n = degree;
  return n * (n + dimension - 2);
}

double a_multiplier(int dimension, int degree) {
  require_supported_dimension(dimension);
  if (degree < 0) throw std::invalid_argument("a_multiplier: negative degree");
  return degree + 0.5 * (dimension - 2);
}

double surface_measure(int dimension) {
  require_supported_dimension(dimension);
  return dimension == 2 ? 2.0 * M_PI : 4.0 * M_PI;
}

}  // namespace besov
