#include "besov/poisson/extension.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "besov/numerics/special_functions.h"
#include "besov/numerics/summation.h"

namespace besov {

BoundaryDistribution poisson_extend(const BoundaryDistribution& mu, double r) {
  if (!(r >= 0.0) || !(r < 1.0)) throw std::invalid_argument("poisson_extend: radius must lie in [0, 1)");
  return mu.map_degrees([r](int n) { return n == 0 ? 1.0 : std::pow(r, n); });
}

RadialProfile harmonic_profile(const BoundaryDistribution& mu, ModeIndex mode, std::span<const double> radii) {
  RadialProfile profile{mode, {radii.begin(), radii.end()}, {}};
  const double c = mu[mode];
  profile.values.reserve(radii.size());
  for (double r : radii) profile.values.push_back(c * (mode.degree == 0 ? 1.0 : std::pow(r, mode.degree)));
  return profile;
}

namespace {

// |x|^q by repeated multiplication (and one sqrt) when 2q is a small integer.
void abs_power(std::span<const double> values, double q, std::vector<double>& out) {
  out.resize(values.size());
  const double twice = 2.0 * q;
  if (twice == std::floor(twice) && twice <= 16.0) {
    const int whole = static_cast<int>(q);
    const bool half = twice != 2.0 * whole;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double x = std::abs(values[i]);
      double v = half ? std::sqrt(x) : 1.0;
      for (int j = 0; j < whole; ++j) v *= x;
      out[i] = v;
    }
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::pow(std::abs(values[i]), q);
}

}  // namespace

double surface_power_integral(std::span<const double> values, const SurfaceQuadrature& quad, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("surface norm: q must be >= 1");
  std::vector<double> powered;
  abs_power(values, q, powered);
  return quad.integrate(powered);
}

double slice_power_integral(const BoundaryDistribution& mu, double r, double q, const SurfaceQuadrature& quad) {
  if (quad.band_limit() < mu.n_max())
    throw QuadratureTooCoarse("surface norm: quadrature band limit " + std::to_string(quad.band_limit()) +
                              " below truncation degree " + std::to_string(mu.n_max()));
  return surface_power_integral(synthesize(poisson_extend(mu, r), quad), quad, q);
}

double surface_lq_norm(const BoundaryDistribution& mu, double r, double q, const SurfaceQuadrature& quad) {
  return std::pow(slice_power_integral(mu, r, q, quad), 1.0 / q);
}

double weighted_ball_norm(const BoundaryDistribution& mu, const SpaceParams& params,
                          const QuadratureRule& radial_rule, const SurfaceQuadrature& quad) {
  if (mu.dimension() != params.dimension() || quad.dimension() != params.dimension())
    throw std::invalid_argument("weighted_ball_norm: dimension mismatch");
  if (radial_rule.a != 0.0 || radial_rule.b != 1.0 || radial_rule.weight.beta != 0.0 ||
      std::abs(radial_rule.weight.alpha - params.weight_exponent()) > 1e-14)
    throw std::invalid_argument("weighted_ball_norm: radial rule must carry the weight (1-r)^{sq-1} on (0,1)");
  if (quad.band_limit() < mu.n_max())
    throw QuadratureTooCoarse("weighted_ball_norm: quadrature band limit below truncation degree");
  const double q = params.q();
  const int N = params.dimension();
  const std::size_t width = static_cast<std::size_t>(mu.n_max() + 1);
  const std::vector<double> fields = synthesize_by_degree(mu, quad);
  std::vector<double> slice(quad.size());
  std::vector<double> slices(radial_rule.size());
  for (std::size_t i = 0; i < radial_rule.size(); ++i) {
    const double r = radial_rule.nodes[i];
    const std::size_t P = quad.size();
    std::copy_n(fields.data() + (width - 1) * P, P, slice.data());
    for (std::size_t n = width - 1; n-- > 0;) {
      const double* f = fields.data() + n * P;
      for (std::size_t p = 0; p < P; ++p) slice[p] = slice[p] * r + f[p];
    }
    slices[i] = std::pow(r, N - 1) * surface_power_integral(slice, quad, q);
  }
  return std::pow(pairwise_dot(radial_rule.weights, slices), 1.0 / q);
}

NormEstimate weighted_ball_norm(const BoundaryDistribution& mu, const SpaceParams& params,
                                const BallNormOptions& options) {
  const int N = params.dimension();
  const double q = params.q();
  int radial = std::max(options.radial_nodes, mu.n_max() + N);
  auto evaluate = [&](int nodes, int band) {
    return weighted_ball_norm(mu, params, gauss_jacobi(nodes, params.weight_exponent(), 0.0),
                              SurfaceQuadrature::for_band_limit(N, band));
  };

  NormEstimate est;
  if (q == 2.0) {
    est.value = evaluate(mu.n_max() + N, mu.n_max());
    est.finite = std::isfinite(est.value);
    return est;
  }
  int band = options.oversampling * std::max(mu.n_max(), 1);
  double current = evaluate(radial, band);
  est.converged = false;
  for (int attempt = 0; attempt < options.max_refinements; ++attempt) {
    radial *= 2;
    band *= 2;
    const double refined = evaluate(radial, band);
    est.refinements = attempt + 1;
    est.last_change = std::abs(refined - current) / std::max(std::abs(refined), 1e-300);
    current = refined;
    if (est.last_change < options.tolerance) {
      est.converged = true;
      break;
    }
  }
  est.value = current;
  est.finite = std::isfinite(current);
  if (!est.finite) est.converged = false;
  return est;
}

double per_mode_weighted_integral(int dimension, int degree, double s) {
  require_supported_dimension(dimension);
  if (degree < 0 || !(s > 0.0)) throw std::invalid_argument("per_mode_weighted_integral: invalid arguments");
  return beta_function(2.0 * degree + dimension, 2.0 * s);
}

double weighted_ball_norm_q2(const BoundaryDistribution& mu, double s) {
  std::vector<double> terms(static_cast<std::size_t>(mu.n_max() + 1));
  for (int n = 0; n <= mu.n_max(); ++n)
    terms[static_cast<std::size_t>(n)] = mu.degree_energy(n) * per_mode_weighted_integral(mu.dimension(), n, s);
  return std::sqrt(pairwise_sum(terms));
}

}  // namespace besov
