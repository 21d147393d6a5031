#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "besov/sphere/modes.h"

namespace besov {

/// A distribution on S^{N-1}, stored as its coefficients against the real
/// orthonormal Laplace–Beltrami basis up to degree n_max. Storage always
/// covers every mode of degree <= n_max (see flat_index for the layout).
class BoundaryDistribution {
 public:
  /// Zero distribution.
  BoundaryDistribution(int dimension, int n_max);

  /// Throws std::invalid_argument on a size mismatch or non-finite entries.
  BoundaryDistribution(int dimension, int n_max, std::vector<double> coefficients);

  static BoundaryDistribution single_mode(int dimension, int n_max, ModeIndex mode, double value = 1.0);

  int dimension() const { return dimension_; }
  int n_max() const { return n_max_; }
  std::size_t size() const { return coefficients_.size(); }

  std::span<const double> coefficients() const { return coefficients_; }

  double operator[](ModeIndex mode) const;
  double& operator[](ModeIndex mode);

  /// Σ_m c_{n,m}².
  double degree_energy(int degree) const;

  /// Multiplies every degree-n coefficient by multiplier(n).
  template <class F>
  BoundaryDistribution map_degrees(F&& multiplier) const {
    BoundaryDistribution out(*this);
    std::size_t i = 0;
    for (int n = 0; n <= n_max_; ++n) {
      const double factor = multiplier(n);
      const std::size_t count = degree_multiplicity(dimension_, n);
      for (std::size_t j = 0; j < count; ++j, ++i) out.coefficients_[i] *= factor;
    }
    return out;
  }

  BoundaryDistribution scaled(double factor) const;

  /// Copy with a different truncation; extra modes are zero, dropped modes discarded.
  BoundaryDistribution truncated(int n_max) const;

 private:
  int dimension_;
  int n_max_;
  std::vector<double> coefficients_;
};

/// Σ_a x_a y_a over the common modes; dimensions must agree.
double coefficient_pairing(const BoundaryDistribution& x, const BoundaryDistribution& y);

}  // namespace besov
