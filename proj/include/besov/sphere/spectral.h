#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "besov/distributions/boundary_distribution.h"

namespace besov {

/// Point on S^{N-1}. For N = 2 only `theta` (the angle) is used; for N = 3
/// `theta` is the polar angle and `phi` the azimuth.
struct SurfacePoint {
  double theta = 0.0;
  double phi = 0.0;
};

/// Raised when a quadrature cannot resolve the requested degree.
class QuadratureTooCoarse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Product quadrature on S^{N-1}.
///
/// N = 2: M = 2L + 2 equispaced angles. N = 3: L + 1 Gauss–Legendre nodes in
/// cos θ times 2L + 2 equispaced azimuths. Either way the rule integrates
/// every spherical polynomial of degree <= 2L + 1 exactly, L being the band
/// limit it was built for. Points are stored ring-major (ring, azimuth).
class SurfaceQuadrature {
 public:
  static SurfaceQuadrature for_band_limit(int dimension, int band_limit);

  int dimension() const { return dimension_; }
  int band_limit() const { return band_limit_; }
  int design_degree() const { return 2 * band_limit_ + 1; }

  std::size_t size() const { return weights_.size(); }
  std::size_t ring_count() const { return ring_cos_.size(); }
  std::size_t azimuth_count() const { return azimuth_count_; }

  std::span<const double> weights() const { return weights_; }
  std::span<const double> ring_cos_theta() const { return ring_cos_; }
  SurfacePoint point(std::size_t i) const;

  /// Σ w_i values_i, pairwise-summed.
  double integrate(std::span<const double> values) const;

 private:
  SurfaceQuadrature() = default;

  int dimension_ = 2;
  int band_limit_ = 0;
  std::size_t azimuth_count_ = 1;
  std::vector<double> ring_cos_;  // cos θ per ring (single ring at 0 for N=2)
  std::vector<double> weights_;
};

/// Values of every basis function of degree <= n_max at `point`, in
/// flat_index order.
std::vector<double> evaluate_basis(int dimension, int n_max, SurfacePoint point);

double evaluate(const BoundaryDistribution& mu, SurfacePoint point);

/// Σ_a c_a Y_a at every quadrature point.
std::vector<double> synthesize(const BoundaryDistribution& coeffs, const SurfaceQuadrature& quad);

/// Degree-by-degree synthesis, degree-major: entry n·size + i holds
/// Σ_m c_{n,m} Y_{n,m}(x_i). Any degree-diagonal multiplier d_n then gives
/// the synthesized values as Σ_n d_n · entry, e.g. by Horner's rule when
/// d_n = x^n.
std::vector<double> synthesize_by_degree(const BoundaryDistribution& coeffs, const SurfaceQuadrature& quad);

/// Discrete projection onto degrees <= n_max. Throws QuadratureTooCoarse
/// when quad.design_degree() < 2 n_max.
BoundaryDistribution analyze(std::span<const double> values, const SurfaceQuadrature& quad, int n_max);

}  // namespace besov
