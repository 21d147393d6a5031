#pragma once

#include "besov/distributions/boundary_distribution.h"
#include "besov/distributions/space_params.h"
#include "besov/numerics/quadrature.h"
#include "besov/poisson/extension.h"
#include "besov/sphere/spectral.h"

namespace besov {

enum class Smoothness { Negative, Positive };

/// Hilbert-space norm (Σ_n (1 + λ_n)^{±s} Σ_m c_{n,m}²)^{1/2}; the minus sign
/// is the distribution space B^{-s,2}, the plus sign B^{s,2}.
double spectral_norm_q2(const BoundaryDistribution& mu, double s, Smoothness sign);

/// e^{tA} f: degree-n coefficients times exp(-t (n + (N-2)/2)). t >= 0.
BoundaryDistribution semigroup_apply(const BoundaryDistribution& f, double t);

/// Time-integral form of the B^{2k-τ,q} norm,
///   ‖f‖_q^q + ∫_0^1 (t^τ ‖A^{2k} e^{tA} f‖_q)^q dt/t,
/// with the Gauss–Jacobi rule for t^{τq-1} on (0, 1).
class SemigroupNormPlan {
 public:
  /// τ = s, k = choose_k(s): the norm of f = 𝔹^{-1}μ for μ ∈ B^{-s,q}.
  static SemigroupNormPlan make(const SpaceParams& params, int time_nodes = 64);

  /// Norm of B^{σ,q} for σ > 0: k = floor(σ/2) + 1 and τ = 2k - σ ∈ (0, 2].
  static SemigroupNormPlan for_positive_smoothness(int dimension, double sigma, double q, int time_nodes = 64);

  /// Arbitrary (τ, k) with τ > 0; t^{τq-1} must be integrable (always so for τ, q > 0).
  static SemigroupNormPlan with_exponent(int dimension, double tau, int k, double q, int time_nodes = 64);

  int dimension() const { return dimension_; }
  double time_exponent() const { return tau_; }
  double q() const { return q_; }
  int k() const { return k_; }
  const QuadratureRule& time_rule() const { return time_rule_; }

 private:
  SemigroupNormPlan(int dimension, double tau, double q, int k, QuadratureRule rule)
      : dimension_(dimension), tau_(tau), q_(q), k_(k), time_rule_(std::move(rule)) {}

  int dimension_;
  double tau_;
  double q_;
  int k_;
  QuadratureRule time_rule_;
};

/// Explicit-rule evaluation; returns the q-th root.
double semigroup_norm(const BoundaryDistribution& f, const SemigroupNormPlan& plan, const SurfaceQuadrature& quad);

struct SemigroupNormOptions {
  int time_nodes = 64;
  int oversampling = 4;     // surface band = oversampling · n_max when q != 2
  double tolerance = 1e-7;
  int max_refinements = 2;  // time nodes (and for q != 2 the surface band) double each retry
};

/// Policy form: builds the plan and quadrature, doubling time nodes (and for
/// q != 2 the surface band) until the relative change is below tolerance.
NormEstimate semigroup_norm(const BoundaryDistribution& f, double time_exponent, int k, double q,
                            const SemigroupNormOptions& options = {});

/// ‖μ‖_{B^{-s,q}} through f = 𝔹^{-1}μ and the semigroup form of ‖f‖_{B^{2k-s,q}}.
NormEstimate negative_norm_via_lifting(const BoundaryDistribution& mu, const SpaceParams& params,
                                       const SemigroupNormOptions& options = {});

/// ‖f‖_{B^{σ,q}} for σ > 0 through the semigroup form.
NormEstimate positive_besov_norm(const BoundaryDistribution& f, double sigma, double q,
                                 const SemigroupNormOptions& options = {});

struct DifferenceQuotientOptions {
  int oversampling = 4;    // x-grid resolves band oversampling · n_max
  int inner_nodes = 16;    // Gauss–Jacobi nodes on (0, h)
  int outer_panels_per_degree = 2;
  int outer_nodes = 8;
};

/// First-difference B^{r,p}(S^1) norm for 0 < r < 1:
///   (‖f‖_p^p + ∫_{S^1} ∫_{-π}^{π} |f(x+y) - f(x)|^p |y|^{-1-rp} dy dx)^{1/p},
/// |y| the arc distance. The y-range is split at h = π/(8 n_max): on (0, h)
/// the smooth quotient |Δ_y f / y|^p is integrated against y^{p(1-r)-1} by
/// Gauss–Jacobi, beyond h by composite Gauss–Legendre.
/// Rejects N != 2 and r outside (0, 1), integers included.
double difference_quotient_norm_circle(const BoundaryDistribution& f, double r, double p,
                                       const DifferenceQuotientOptions& options = {});

}  // namespace besov
