#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "besov/distributions/boundary_distribution.h"
#include "besov/distributions/space_params.h"
#include "besov/norms/equivalence.h"
#include "besov/poisson/extension.h"

namespace besov {

/// Radial function (1 - r)^{boundary_exponent} · smooth(r) on [0, 1). The
/// singular boundary factor is kept separate so quadrature can absorb it.
struct RadialFunction {
  std::function<double(double)> smooth;
  double boundary_exponent = 0.0;

  explicit operator bool() const { return static_cast<bool>(smooth); }
  double operator()(double r) const;
};

/// A function on the ball given mode by mode: Σ_a profile_a(r) Y_a(σ).
/// Missing profiles are zero.
class BallFunction {
 public:
  BallFunction(int dimension, int n_max);

  static BallFunction single_mode(int dimension, int n_max, ModeIndex mode, RadialFunction profile);

  int dimension() const { return dimension_; }
  int n_max() const { return n_max_; }

  void set_profile(ModeIndex mode, RadialFunction profile);
  const RadialFunction& profile(std::size_t flat) const { return profiles_[flat]; }
  std::size_t mode_count() const { return profiles_.size(); }

  /// Coefficients of the slice at radius r.
  BoundaryDistribution slice(double r) const;

  /// Smooth parts only (boundary factor omitted).
  BoundaryDistribution smooth_slice(double r) const;

  /// Common boundary exponent of the nonzero profiles (0 if all are zero).
  /// Throws std::invalid_argument when profiles disagree.
  double common_boundary_exponent() const;

 private:
  int dimension_;
  int n_max_;
  std::vector<RadialFunction> profiles_;
};

/// Dirichlet Green kernel of the degree-n radial operator
///   -(ζ'' + (N-1)/r ζ' - λ_n/r² ζ) = g,  ζ(1) = 0, ζ regular at 0,
/// with respect to ρ^{N-1} dρ: G(r, ρ) = r_<^n (r_>^{-(n+N-2)} - r_>^n) / (2n + N - 2),
/// and G = -ln r_> for N = 2, n = 0.
double green_kernel(int dimension, int degree, double r, double rho);

/// ∂G/∂r (1, ρ) = -ρ^n.
double green_kernel_boundary_derivative(int dimension, int degree, double rho);

struct GreenOptions {
  int nodes = 64;            // Gauss–Jacobi nodes for the boundary derivative (raised to n+N+16 if needed)
  int panels = 32;           // profile quadrature: panels on [0, 1] split at r
  int nodes_per_panel = 16;
};

struct GreenSolution {
  ModeIndex mode;
  RadialProfile profile;
  double boundary_derivative = 0.0;  // ∂ζ/∂ν at r = 1 (outward normal)
};

/// Solves the degree-n Dirichlet problem with source g by kernel quadrature
/// and samples ζ at `radii` (each in [0, 1]).
GreenSolution green_solve_mode(int dimension, ModeIndex mode, const RadialFunction& source,
                               std::span<const double> radii, const GreenOptions& options = {});

/// ∂ζ/∂ν at r = 1 for the degree-n source, ∫ ∂_r G(1, ρ) g(ρ) ρ^{N-1} dρ.
double green_boundary_derivative(int dimension, int degree, const RadialFunction& source,
                                 const GreenOptions& options = {});

/// ∂/∂ν 𝔾(φ) as a boundary distribution.
BoundaryDistribution green_normal_derivative(const BallFunction& phi, const GreenOptions& options = {});

/// ℙ*(ψ) = -∂/∂ν 𝔾(δ^{sq-1} ψ), δ = 1 - |x|. Throws std::invalid_argument
/// unless sq - 1 + (boundary exponent of ψ) > -1.
BoundaryDistribution adjoint_poisson(const BallFunction& psi, const SpaceParams& params,
                                     const GreenOptions& options = {});

struct PairingCheck {
  double lhs = 0.0;  // ∫_B ℙ(μ) ψ δ^{sq-1} dx by radial × surface quadrature
  double rhs = 0.0;  // ⟨μ, ℙ*ψ⟩ = -⟨μ, ∂ζ/∂ν⟩
  double relative_discrepancy = 0.0;
};

struct PairingOptions {
  int radial_nodes = 72;
  GreenOptions green;
};

PairingCheck duality_pairing_check(const BoundaryDistribution& mu, const BallFunction& psi,
                                   const SpaceParams& params, const PairingOptions& options = {});

struct BallLpOptions {
  int radial_nodes = 96;
  int oversampling = 4;  // surface band for p != 2
};

/// ‖φ‖_{L^p(B; δ^{weight_exponent} dx)}. Returns a non-finite estimate when the
/// combined boundary exponent p·e + weight_exponent is <= -1 (φ not in the space).
NormEstimate weighted_ball_lp_norm(const BallFunction& phi, double weight_exponent, double p,
                                   const BallLpOptions& options = {});

struct BallFamilyMember {
  std::string id;
  int degree = 0;
  BallFunction phi;
};

struct DualReportOptions {
  BallLpOptions lp;
  GreenOptions green;
  SemigroupNormOptions semigroup;  // used for the boundary norm when p != 2
  unsigned threads = 1;
};

/// Route a: ‖φ‖_{L^p(B; δ^{p(1-s)-1} dx)}; route b: ‖∂/∂ν 𝔾(φ)‖_{B^{s,p}(Σ)}
/// (spectral for p = 2, semigroup form otherwise).
EquivalenceReport dual_equivalence_report(std::span<const BallFamilyMember> family, double s, double p,
                                          const DualReportOptions& options = {});

}  // namespace besov
