#pragma once

#include <span>
#include <vector>

#include "besov/distributions/boundary_distribution.h"
#include "besov/distributions/space_params.h"
#include "besov/numerics/quadrature.h"
#include "besov/sphere/spectral.h"

namespace besov {

/// Slice of ℙ(μ) at radius r: degree-n coefficients times r^n. 0 <= r < 1.
BoundaryDistribution poisson_extend(const BoundaryDistribution& mu, double r);

/// Per-mode radial amplitude on a radial grid.
struct RadialProfile {
  ModeIndex mode;
  std::vector<double> radii;
  std::vector<double> values;
};

/// c_a r^n at each radius, for the Poisson extension of μ.
RadialProfile harmonic_profile(const BoundaryDistribution& mu, ModeIndex mode, std::span<const double> radii);

/// Σ w |v|^q over a surface quadrature.
double surface_power_integral(std::span<const double> values, const SurfaceQuadrature& quad, double q);

/// ∫_{S^{N-1}} |ℙ(μ)(r, ·)|^q dσ. Throws QuadratureTooCoarse when the
/// quadrature band limit is below μ's truncation degree.
double slice_power_integral(const BoundaryDistribution& mu, double r, double q, const SurfaceQuadrature& quad);

/// (∫_{S^{N-1}} |ℙ(μ)(r, ·)|^q dσ)^{1/q}.
double surface_lq_norm(const BoundaryDistribution& mu, double r, double q, const SurfaceQuadrature& quad);

/// Outcome of a norm evaluation carrying its own convergence diagnostics.
struct NormEstimate {
  double value = 0.0;
  bool finite = true;
  bool converged = true;
  int refinements = 0;
  double last_change = 0.0;  // relative change at the final refinement
};

struct BallNormOptions {
  int radial_nodes = 128;
  int oversampling = 4;       // surface band limit = oversampling · n_max when q != 2
  double tolerance = 1e-7;    // relative change accepted under doubling
  int max_refinements = 2;
};

/// (∫_B |ℙ(μ)|^q (1 - |x|)^{sq-1} dx)^{1/q} with explicit rules. radial_rule
/// must be the Gauss–Jacobi rule on (0, 1) for (1 - r)^{sq-1}; the volume
/// factor r^{N-1} is applied inside. Non-finite results are returned as-is.
double weighted_ball_norm(const BoundaryDistribution& mu, const SpaceParams& params,
                          const QuadratureRule& radial_rule, const SurfaceQuadrature& quad);

/// Same norm with rules chosen and refined by policy. For q = 2 the rules are
/// exact (radial nodes n_max + N, surface band n_max) and no refinement
/// runs; otherwise radial nodes and surface band are doubled until the
/// relative change drops below options.tolerance or the retries run out.
NormEstimate weighted_ball_norm(const BoundaryDistribution& mu, const SpaceParams& params,
                                const BallNormOptions& options = {});

/// ∫_0^1 r^{2n+N-1} (1 - r)^{2s-1} dr = B(2n + N, 2s).
double per_mode_weighted_integral(int dimension, int degree, double s);

/// Exact q = 2 ball norm: (Σ_n Σ_m c_{n,m}² B(2n + N, 2s))^{1/2}.
double weighted_ball_norm_q2(const BoundaryDistribution& mu, double s);

}  // namespace besov
