#include "besov/norms/besov_norms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "besov/distributions/lifting.h"
#include "besov/numerics/summation.h"

namespace besov {

namespace {

int surface_band(int n_max, double q, int oversampling) {
  return q == 2.0 ? n_max : oversampling * std::max(n_max, 1);
}

double relative_change(double previous, double current) {
  return std::abs(current - previous) / std::max(std::abs(current), 1e-300);
}

}  // namespace

double spectral_norm_q2(const BoundaryDistribution& mu, double s, Smoothness sign) {
  const double exponent = sign == Smoothness::Negative ? -s : s;
  std::vector<double> terms(static_cast<std::size_t>(mu.n_max() + 1));
  for (int n = 0; n <= mu.n_max(); ++n)
    terms[static_cast<std::size_t>(n)] = std::pow(1.0 + eigenvalue(mu.dimension(), n), exponent) * mu.degree_energy(n);
  return std::sqrt(pairwise_sum(terms));
}

BoundaryDistribution semigroup_apply(const BoundaryDistribution& f, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup_apply: t must be nonnegative");
  return f.map_degrees([&](int n) { return std::exp(-t * a_multiplier(f.dimension(), n)); });
}

SemigroupNormPlan SemigroupNormPlan::with_exponent(int dimension, double tau, int k, double q, int time_nodes) {
  require_supported_dimension(dimension);
  if (k < 1) throw std::invalid_argument("SemigroupNormPlan: k must be positive");
  if (!(q >= 1.0)) throw std::invalid_argument("SemigroupNormPlan: q must be >= 1");
  if (!(tau > 0.0)) throw std::invalid_argument("SemigroupNormPlan: time exponent must be positive");
  return SemigroupNormPlan(dimension, tau, q, k, gauss_jacobi(time_nodes, 0.0, tau * q - 1.0));
}

SemigroupNormPlan SemigroupNormPlan::make(const SpaceParams& params, int time_nodes) {
  return with_exponent(params.dimension(), params.s(), params.k(), params.q(), time_nodes);
}

SemigroupNormPlan SemigroupNormPlan::for_positive_smoothness(int dimension, double sigma, double q, int time_nodes) {
  if (!(sigma > 0.0)) throw std::invalid_argument("positive smoothness must be > 0");
  const int k = static_cast<int>(std::floor(sigma / 2.0)) + 1;
  return with_exponent(dimension, 2.0 * k - sigma, k, q, time_nodes);
}

double semigroup_norm(const BoundaryDistribution& f, const SemigroupNormPlan& plan, const SurfaceQuadrature& quad) {
  if (f.dimension() != plan.dimension() || quad.dimension() != plan.dimension())
    throw std::invalid_argument("semigroup_norm: dimension mismatch");
  if (quad.band_limit() < f.n_max()) throw QuadratureTooCoarse("semigroup_norm: surface quadrature too coarse");
  const double q = plan.q();
  const int two_k = 2 * plan.k();
  const double base = surface_power_integral(synthesize(f, quad), quad, q);

  // a_n^{2k} e^{-t a_n} = e^{-t (N-2)/2} · a_n^{2k} · (e^{-t})^n: fold a_n^{2k}
  // into the degree fields and evaluate the rest by Horner's rule in e^{-t}
  const std::size_t width = static_cast<std::size_t>(f.n_max() + 1);
  std::vector<double> fields = synthesize_by_degree(f, quad);
  for (std::size_t n = 0; n < width; ++n) {
    const double scale = std::pow(a_multiplier(f.dimension(), static_cast<int>(n)), two_k);
    for (std::size_t p = 0; p < quad.size(); ++p) fields[n * quad.size() + p] *= scale;
  }
  const double shift = 0.5 * (f.dimension() - 2);

  const QuadratureRule& rule = plan.time_rule();
  std::vector<double> slice(quad.size());
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double x = std::exp(-t);
    const double front = std::exp(-t * shift);
    const std::size_t P = quad.size();
    std::copy_n(fields.data() + (width - 1) * P, P, slice.data());
    for (std::size_t n = width - 1; n-- > 0;) {
      const double* g = fields.data() + n * P;
      for (std::size_t p = 0; p < P; ++p) slice[p] = slice[p] * x + g[p];
    }
    for (double& v : slice) v *= front;
    terms[i] = surface_power_integral(slice, quad, q);
  }
  return std::pow(base + pairwise_dot(rule.weights, terms), 1.0 / q);
}

NormEstimate semigroup_norm(const BoundaryDistribution& f, double time_exponent, int k, double q,
                            const SemigroupNormOptions& options) {
  const int N = f.dimension();
  int nodes = options.time_nodes;
  int band = surface_band(f.n_max(), q, options.oversampling);
  auto evaluate = [&](int time_nodes, int band_limit) {
    return semigroup_norm(f, SemigroupNormPlan::with_exponent(N, time_exponent, k, q, time_nodes),
                          SurfaceQuadrature::for_band_limit(N, band_limit));
  };

  NormEstimate est;
  double current = evaluate(nodes, band);
  est.converged = false;
  for (int attempt = 0; attempt < options.max_refinements; ++attempt) {
    nodes *= 2;
    if (q != 2.0) band *= 2;
    const double refined = evaluate(nodes, band);
    est.refinements = attempt + 1;
    est.last_change = relative_change(current, refined);
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

NormEstimate negative_norm_via_lifting(const BoundaryDistribution& mu, const SpaceParams& params,
                                       const SemigroupNormOptions& options) {
  const BoundaryDistribution f = invert_lifting(mu, params);
  return semigroup_norm(f, params.s(), params.k(), params.q(), options);
}

NormEstimate positive_besov_norm(const BoundaryDistribution& f, double sigma, double q,
                                 const SemigroupNormOptions& options) {
  if (!(sigma > 0.0)) throw std::invalid_argument("positive_besov_norm: smoothness must be > 0");
  const int k = static_cast<int>(std::floor(sigma / 2.0)) + 1;
  return semigroup_norm(f, 2.0 * k - sigma, k, q, options);
}

double difference_quotient_norm_circle(const BoundaryDistribution& f, double r, double p,
                                       const DifferenceQuotientOptions& options) {
  if (f.dimension() != 2) throw std::invalid_argument("difference_quotient_norm_circle: requires N = 2");
  if (!(r > 0.0) || !(r < 1.0))
    throw std::invalid_argument("difference_quotient_norm_circle: smoothness must lie in (0, 1); "
                                "integer orders need the second-difference norm");
  if (!(p >= 1.0)) throw std::invalid_argument("difference_quotient_norm_circle: p must be >= 1");

  const int n_max = f.n_max();
  const SurfaceQuadrature quad = SurfaceQuadrature::for_band_limit(2, surface_band(n_max, p, options.oversampling));
  const double base = surface_power_integral(synthesize(f, quad), quad, p);
  if (n_max == 0) return std::pow(base, 1.0 / p);

  // G(y) = ∫ |f(x+y) - f(x)|^p dx / y^p, smooth and bounded as y -> 0
  auto quotient_power = [&](double y) {
    BoundaryDistribution diff(2, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const double a = f[{n, 1}];
      const double b = f[{n, -1}];
      const double c = std::cos(n * y);
      const double s = std::sin(n * y);
      diff[{n, 1}] = (a * c + b * s - a) / y;
      diff[{n, -1}] = (b * c - a * s - b) / y;
    }
    return surface_power_integral(synthesize(diff, quad), quad, p);
  };

  const double h = M_PI / (8.0 * n_max);
  const double inner_exponent = p * (1.0 - r) - 1.0;
  const QuadratureRule inner = gauss_jacobi(options.inner_nodes, 0.0, inner_exponent).mapped(0.0, h);
  const double inner_part = inner.integrate(quotient_power);

  const int panels = std::max(4, options.outer_panels_per_degree * n_max);
  const QuadratureRule panel = gauss_legendre(options.outer_nodes, 0.0, 1.0);
  std::vector<double> outer_terms;
  std::vector<double> outer_weights;
  const double width = (M_PI - h) / panels;
  for (int j = 0; j < panels; ++j) {
    for (std::size_t i = 0; i < panel.size(); ++i) {
      const double y = h + (j + panel.nodes[i]) * width;
      outer_weights.push_back(panel.weights[i] * width);
      outer_terms.push_back(quotient_power(y) * std::pow(y, inner_exponent));
    }
  }
  const double outer_part = pairwise_dot(outer_weights, outer_terms);
  return std::pow(base + 2.0 * (inner_part + outer_part), 1.0 / p);
}

}  // namespace besov
