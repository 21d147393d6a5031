#include "besov/distributions/boundary_distribution.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace besov {

BoundaryDistribution::BoundaryDistribution(int dimension, int n_max)
    : dimension_(dimension), n_max_(n_max), coefficients_(mode_count(dimension, n_max), 0.0) {}

BoundaryDistribution::BoundaryDistribution(int dimension, int n_max, std::vector<double> coefficients)
    : dimension_(dimension), n_max_(n_max), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != mode_count(dimension, n_max))
    throw std::invalid_argument("BoundaryDistribution: coefficient count does not match (N, n_max)");
  for (double c : coefficients_)
    if (!std::isfinite(c)) throw std::invalid_argument("BoundaryDistribution: non-finite coefficient");
}

BoundaryDistribution BoundaryDistribution::single_mode(int dimension, int n_max, ModeIndex mode, double value) {
  BoundaryDistribution out(dimension, n_max);
  if (mode.degree > n_max) throw std::invalid_argument("single_mode: degree exceeds truncation");
  out[mode] = value;
  return out;
}

double BoundaryDistribution::operator[](ModeIndex mode) const {
  if (mode.degree > n_max_) throw std::out_of_range("BoundaryDistribution: degree exceeds truncation");
  return coefficients_[flat_index(dimension_, mode)];
}

double& BoundaryDistribution::operator[](ModeIndex mode) {
  if (mode.degree > n_max_) throw std::out_of_range("BoundaryDistribution: degree exceeds truncation");
  return coefficients_[flat_index(dimension_, mode)];
}

double BoundaryDistribution::degree_energy(int degree) const {
  if (degree < 0 || degree > n_max_) return 0.0;
  const std::size_t begin = degree == 0 ? 0 : mode_count(dimension_, degree - 1);
  const std::size_t end = mode_count(dimension_, degree);
  double acc = 0.0;
  for (std::size_t i = begin; i < end; ++i) acc += coefficients_[i] * coefficients_[i];
  return acc;
}

BoundaryDistribution BoundaryDistribution::scaled(double factor) const {
  BoundaryDistribution out(*this);
  for (double& c : out.coefficients_) c *= factor;
  return out;
}

BoundaryDistribution BoundaryDistribution::truncated(int n_max) const {
  BoundaryDistribution out(dimension_, n_max);
  const std::size_t common = std::min(out.coefficients_.size(), coefficients_.size());
  std::copy_n(coefficients_.begin(), common, out.coefficients_.begin());
  return out;
}

double coefficient_pairing(const BoundaryDistribution& x, const BoundaryDistribution& y) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("coefficient_pairing: dimension mismatch");
  const std::size_t common = std::min(x.size(), y.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < common; ++i) acc += x.coefficients()[i] * y.coefficients()[i];
  return acc;
}

}  // namespace besov
