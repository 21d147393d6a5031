#include "besov/green/green_dual.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "besov/numerics/quadrature.h"
#include "besov/numerics/summation.h"
#include "besov/parallel.h"
#include "besov/sphere/spectral.h"

namespace besov {

double RadialFunction::operator()(double r) const {
  if (!smooth) return 0.0;
  const double v = smooth(r);
  return boundary_exponent == 0.0 ? v : std::pow(1.0 - r, boundary_exponent) * v;
}

BallFunction::BallFunction(int dimension, int n_max)
    : dimension_(dimension), n_max_(n_max), profiles_(besov::mode_count(dimension, n_max)) {}

BallFunction BallFunction::single_mode(int dimension, int n_max, ModeIndex mode, RadialFunction profile) {
  BallFunction out(dimension, n_max);
  out.set_profile(mode, std::move(profile));
  return out;
}

void BallFunction::set_profile(ModeIndex mode, RadialFunction profile) {
  if (mode.degree > n_max_) throw std::invalid_argument("BallFunction: degree exceeds truncation");
  profiles_[flat_index(dimension_, mode)] = std::move(profile);
}

BoundaryDistribution BallFunction::slice(double r) const {
  std::vector<double> c(profiles_.size(), 0.0);
  for (std::size_t i = 0; i < profiles_.size(); ++i) c[i] = profiles_[i](r);
  return BoundaryDistribution(dimension_, n_max_, std::move(c));
}

BoundaryDistribution BallFunction::smooth_slice(double r) const {
  std::vector<double> c(profiles_.size(), 0.0);
  for (std::size_t i = 0; i < profiles_.size(); ++i)
    if (profiles_[i]) c[i] = profiles_[i].smooth(r);
  return BoundaryDistribution(dimension_, n_max_, std::move(c));
}

double BallFunction::common_boundary_exponent() const {
  bool any = false;
  double e = 0.0;
  for (const RadialFunction& f : profiles_) {
    if (!f) continue;
    if (any && f.boundary_exponent != e)
      throw std::invalid_argument("BallFunction: profiles carry different boundary exponents");
    e = f.boundary_exponent;
    any = true;
  }
  return e;
}

double green_kernel(int dimension, int degree, double r, double rho) {
  require_supported_dimension(dimension);
  const double lo = std::min(r, rho);
  const double hi = std::max(r, rho);
  if (dimension == 2 && degree == 0) return -std::log(hi);
  if (hi == 0.0) return 0.0;
  const double n = degree;
  const double wronskian = 2.0 * n + dimension - 2.0;
  // r_<^n r_>^{-(n+N-2)} written as (r_</r_>)^n r_>^{-(N-2)} to avoid overflow
  const double first = std::pow(lo / hi, n) * std::pow(hi, 2.0 - dimension);
  const double second = std::pow(lo * hi, n);
  return (first - second) / wronskian;
}

double green_kernel_boundary_derivative(int dimension, int degree, double rho) {
  require_supported_dimension(dimension);
  return degree == 0 ? -1.0 : -std::pow(rho, degree);
}

namespace {

// ∫_lo^hi G(r, ρ) g(ρ) ρ^{N-1} dρ for a panel on which the kernel is smooth.
double panel_integral(int N, int n, double r, const RadialFunction& source, double lo, double hi,
                      const QuadratureRule& legendre, const QuadratureRule& jacobi_unit) {
  if (!(hi > lo)) return 0.0;
  if (hi >= 1.0 && source.boundary_exponent != 0.0) {
    // boundary factor (1 - ρ)^e absorbed by the Jacobi weight
    const QuadratureRule rule = jacobi_unit.mapped(lo, 1.0);
    return rule.integrate([&](double rho) {
      return green_kernel(N, n, r, rho) * source.smooth(rho) * std::pow(rho, N - 1);
    });
  }
  const QuadratureRule rule = legendre.mapped(lo, hi);
  return rule.integrate([&](double rho) { return green_kernel(N, n, r, rho) * source(rho) * std::pow(rho, N - 1); });
}

std::vector<double> panel_breaks(double r, int panels, bool log_kernel) {
  std::vector<double> breaks;
  for (int j = 0; j <= panels; ++j) breaks.push_back(static_cast<double>(j) / panels);
  if (log_kernel && r == 0.0) {
    // -ln ρ at the origin: geometric panels toward ρ = 0
    for (double d = 0.5 / panels; d > 1e-12; d *= 0.5) breaks.push_back(d);
  }
  if (r > 0.0 && r < 1.0) {
    breaks.push_back(r);
    // geometric grading toward r keeps each panel at least its own length
    // away from the boundary singularity at ρ = 1
    const double gap = 1.0 - r;
    for (double d = gap; r - d > 0.0 && d < 1.0 / panels; d *= 2.0) breaks.push_back(r - d);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-15; }),
               breaks.end());
  return breaks;
}

void require_source(const RadialFunction& source) {
  if (!source) throw std::invalid_argument("Green solve: empty source");
  if (!(source.boundary_exponent > -1.0))
    throw std::invalid_argument("Green solve: boundary weight exponent must exceed -1");
}

}  // namespace

double green_boundary_derivative(int dimension, int degree, const RadialFunction& source,
                                 const GreenOptions& options) {
  require_supported_dimension(dimension);
  require_source(source);
  const int nodes = std::max(options.nodes, degree + dimension + 16);
  const QuadratureRule rule = gauss_jacobi(nodes, source.boundary_exponent, 0.0);
  return rule.integrate([&](double rho) {
    return green_kernel_boundary_derivative(dimension, degree, rho) * source.smooth(rho) * std::pow(rho, dimension - 1);
  });
}

GreenSolution green_solve_mode(int dimension, ModeIndex mode, const RadialFunction& source,
                               std::span<const double> radii, const GreenOptions& options) {
  require_supported_dimension(dimension);
  if (!is_valid_mode(dimension, mode)) throw std::invalid_argument("green_solve_mode: invalid mode");
  require_source(source);
  const QuadratureRule legendre = gauss_legendre(options.nodes_per_panel, 0.0, 1.0);
  const QuadratureRule jacobi_unit = gauss_jacobi(options.nodes_per_panel, source.boundary_exponent, 0.0);

  GreenSolution sol;
  sol.mode = mode;
  sol.profile.mode = mode;
  sol.profile.radii.assign(radii.begin(), radii.end());
  sol.profile.values.reserve(radii.size());
  for (double r : radii) {
    if (!(r >= 0.0) || !(r <= 1.0)) throw std::invalid_argument("green_solve_mode: radius outside [0, 1]");
    const std::vector<double> breaks = panel_breaks(r, options.panels, dimension == 2 && mode.degree == 0);
    std::vector<double> parts;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j)
      parts.push_back(panel_integral(dimension, mode.degree, r, source, breaks[j], breaks[j + 1], legendre, jacobi_unit));
    sol.profile.values.push_back(pairwise_sum(parts));
  }
  sol.boundary_derivative = green_boundary_derivative(dimension, mode.degree, source, options);
  return sol;
}

BoundaryDistribution green_normal_derivative(const BallFunction& phi, const GreenOptions& options) {
  std::vector<double> c(phi.mode_count(), 0.0);
  for (std::size_t i = 0; i < phi.mode_count(); ++i) {
    if (!phi.profile(i)) continue;
    const ModeIndex mode = mode_at(phi.dimension(), i);
    c[i] = green_boundary_derivative(phi.dimension(), mode.degree, phi.profile(i), options);
  }
  return BoundaryDistribution(phi.dimension(), phi.n_max(), std::move(c));
}

BoundaryDistribution adjoint_poisson(const BallFunction& psi, const SpaceParams& params, const GreenOptions& options) {
  if (psi.dimension() != params.dimension()) throw std::invalid_argument("adjoint_poisson: dimension mismatch");
  std::vector<double> c(psi.mode_count(), 0.0);
  for (std::size_t i = 0; i < psi.mode_count(); ++i) {
    const RadialFunction& profile = psi.profile(i);
    if (!profile) continue;
    const double exponent = profile.boundary_exponent + params.weight_exponent();
    if (!(exponent > -1.0)) throw std::invalid_argument("adjoint_poisson: weight exponent must exceed -1");
    const RadialFunction source{profile.smooth, exponent};
    const ModeIndex mode = mode_at(psi.dimension(), i);
    c[i] = -green_boundary_derivative(psi.dimension(), mode.degree, source, options);
  }
  return BoundaryDistribution(psi.dimension(), psi.n_max(), std::move(c));
}

PairingCheck duality_pairing_check(const BoundaryDistribution& mu, const BallFunction& psi,
                                   const SpaceParams& params, const PairingOptions& options) {
  if (mu.dimension() != params.dimension() || psi.dimension() != params.dimension())
    throw std::invalid_argument("duality_pairing_check: dimension mismatch");
  const int N = params.dimension();
  const double exponent = params.weight_exponent() + psi.common_boundary_exponent();
  const int band = std::max(mu.n_max(), psi.n_max());
  const SurfaceQuadrature quad = SurfaceQuadrature::for_band_limit(N, band);
  const int radial = std::max(options.radial_nodes, band + N + 8);
  const QuadratureRule rule = gauss_jacobi(radial, exponent, 0.0);

  std::vector<double> slices(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const std::vector<double> u = synthesize(poisson_extend(mu, r), quad);
    const std::vector<double> v = synthesize(psi.smooth_slice(r), quad);
    std::vector<double> uv(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) uv[j] = u[j] * v[j];
    slices[i] = std::pow(r, N - 1) * quad.integrate(uv);
  }
  PairingCheck check;
  check.lhs = pairwise_dot(rule.weights, slices);
  check.rhs = coefficient_pairing(mu, adjoint_poisson(psi, params, options.green));
  const double scale = std::max(std::abs(check.lhs), std::abs(check.rhs));
  check.relative_discrepancy = scale > 0.0 ? std::abs(check.lhs - check.rhs) / scale : 0.0;
  return check;
}

NormEstimate weighted_ball_lp_norm(const BallFunction& phi, double weight_exponent, double p,
                                   const BallLpOptions& options) {
  if (!(p >= 1.0)) throw std::invalid_argument("weighted_ball_lp_norm: p must be >= 1");
  const int N = phi.dimension();
  const double exponent = p * phi.common_boundary_exponent() + weight_exponent;
  NormEstimate est;
  if (!(exponent > -1.0)) {
    // (1 - r)^{exponent} is not integrable at the boundary
    est.value = std::numeric_limits<double>::infinity();
    est.finite = false;
    est.converged = false;
    return est;
  }
  auto evaluate = [&](int radial, int band) {
    const SurfaceQuadrature quad = SurfaceQuadrature::for_band_limit(N, band);
    const QuadratureRule rule = gauss_jacobi(radial, exponent, 0.0);
    std::vector<double> slices(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double r = rule.nodes[i];
      slices[i] = std::pow(r, N - 1) * surface_power_integral(synthesize(phi.smooth_slice(r), quad), quad, p);
    }
    return std::pow(pairwise_dot(rule.weights, slices), 1.0 / p);
  };
  const int radial = std::max(options.radial_nodes, phi.n_max() + N);
  if (p == 2.0) {
    est.value = evaluate(radial, phi.n_max());
  } else {
    const int band = options.oversampling * std::max(phi.n_max(), 1);
    const double coarse = evaluate(radial, band);
    est.value = evaluate(2 * radial, 2 * band);
    est.refinements = 1;
    est.last_change = std::abs(est.value - coarse) / std::max(std::abs(est.value), 1e-300);
    est.converged = est.last_change < 1e-7;
  }
  est.finite = std::isfinite(est.value);
  return est;
}

EquivalenceReport dual_equivalence_report(std::span<const BallFamilyMember> family, double s, double p,
                                          const DualReportOptions& options) {
  if (!(s > 0.0)) throw std::invalid_argument("dual_equivalence_report: s must be positive");
  if (!(p > 1.0)) throw std::invalid_argument("dual_equivalence_report: p must exceed 1");
  EquivalenceReport report;
  report.route_a = "weighted_lp_phi";
  report.route_b = p == 2.0 ? "boundary_spectral_q2" : "boundary_semigroup";
  report.items.resize(family.size());
  parallel_for(family.size(), options.threads, [&](std::size_t i) {
    const BallFamilyMember& member = family[i];
    const NormEstimate a = weighted_ball_lp_norm(member.phi, p * (1.0 - s) - 1.0, p, options.lp);
    const BoundaryDistribution d = green_normal_derivative(member.phi, options.green);
    NormEstimate b;
    if (p == 2.0) {
      b.value = spectral_norm_q2(d, s, Smoothness::Positive);
      b.finite = std::isfinite(b.value);
    } else {
      b = positive_besov_norm(d, s, p, options.semigroup);
    }
    EquivalenceItem& item = report.items[i];
    item.id = member.id;
    item.degree = member.degree;
    item.norm_a = a.value;
    item.norm_b = b.value;
    item.ratio = a.value / b.value;
    item.converged = a.converged && b.converged && a.finite && b.finite;
  });
  report.summarize();
  return report;
}

}  // namespace besov
