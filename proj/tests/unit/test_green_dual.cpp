#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "besov/distributions/lifting.h"
#include "besov/green/green_dual.h"
#include "besov/numerics/special_functions.h"
#include "besov/sphere/modes.h"

using namespace besov;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

RadialFunction constant_profile(double value) { return {[value](double) { return value; }, 0.0}; }

RadialFunction boundary_power(double exponent) { return {[](double) { return 1.0; }, exponent}; }

ModeIndex representative(int dimension, int n) {
  return (dimension == 2 && n > 0) ? ModeIndex{n, 1} : ModeIndex{n, 0};
}

}  // namespace

TEST_CASE("green kernel properties") {
  for (int dimension : {2, 3}) {
    for (int n : {0, 1, 4}) {
      for (double r : {0.1, 0.5, 0.9}) {
        CHECK(green_kernel(dimension, n, 1.0, r) == doctest::Approx(0.0).epsilon(1e-15));
        for (double rho : {0.2, 0.6, 0.95}) {
          CHECK(std::abs(green_kernel(dimension, n, r, rho) - green_kernel(dimension, n, rho, r)) < 1e-15);
          CHECK(green_kernel(dimension, n, r, rho) > 0.0);
        }
      }
      CHECK(green_kernel_boundary_derivative(dimension, n, 0.5) == -std::pow(0.5, n));
    }
  }
  CHECK(std::abs(green_kernel(2, 0, 0.3, 0.6) + std::log(0.6)) < 1e-15);
  CHECK(std::abs(green_kernel(3, 2, 0.3, 0.6) - 0.09 * (std::pow(0.6, -3) - 0.36) / 5.0) < 1e-15);
}

TEST_CASE("constant source examples") {
  // ζ = (1 - r²)/(2N), ∂ζ/∂ν = -1/N
  const std::vector<double> radii = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int dimension : {2, 3}) {
    const GreenSolution sol = green_solve_mode(dimension, {0, 0}, constant_profile(1.0), radii);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double expected = (1.0 - radii[i] * radii[i]) / (2.0 * dimension);
      CHECK(std::abs(sol.profile.values[i] - expected) < 1e-12);
    }
    CHECK(std::abs(sol.boundary_derivative + 1.0 / dimension) < 1e-13);
    CHECK(std::abs(green_boundary_derivative(dimension, 0, constant_profile(1.0)) + 1.0 / dimension) < 1e-13);
  }
}

TEST_CASE("solution satisfies the radial equation") {
  const RadialFunction g = boundary_power(0.2);
  const double h = 5e-3;
  for (int dimension : {2, 3}) {
    for (int n : {0, 1, 3}) {
      const double lambda = eigenvalue(dimension, n);
      for (double r : {0.3, 0.6, 0.85}) {
        const std::vector<double> radii = {r - 2 * h, r - h, r, r + h, r + 2 * h};
        const GreenSolution sol = green_solve_mode(dimension, representative(dimension, n), g, radii);
        const std::vector<double>& z = sol.profile.values;
        const double d1 = (z[0] - 8 * z[1] + 8 * z[3] - z[4]) / (12 * h);
        const double d2 = (-z[0] + 16 * z[1] - 30 * z[2] + 16 * z[3] - z[4]) / (12 * h * h);
        const double residual = -(d2 + (dimension - 1) / r * d1 - lambda / (r * r) * z[2]) - g(r);
        CAPTURE(dimension);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(std::abs(residual) < 1e-7);
      }
      const std::vector<double> edge = {1.0};
      CHECK(std::abs(green_solve_mode(dimension, representative(dimension, n), g, edge).profile.values[0]) < 1e-15);
    }
  }
}

TEST_CASE("boundary derivative of a boundary power") {
  // -∫ ρ^{n+N-1} (1-ρ)^e dρ = -B(n+N, e+1)
  for (int dimension : {2, 3}) {
    for (int n : {0, 2, 10, 40}) {
      for (double e : {0.0, -0.6, 0.2, 1.5}) {
        const double value = green_boundary_derivative(dimension, n, boundary_power(e));
        CHECK(rel(value, -beta_function(n + dimension, e + 1.0)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(green_boundary_derivative(2, 1, boundary_power(-1.0)), std::invalid_argument);
}

TEST_CASE("adjoint_poisson examples") {
  // ψ = 1 with s q = 1: ℙ*ψ has degree-0 coefficient ∫ ρ^{N-1} dρ · Y_0 / Y_0 = 1/N
  const SpaceParams flat2 = SpaceParams::make(2, 1.0, 1.0);
  const BallFunction one2 = BallFunction::single_mode(2, 3, {0, 0}, constant_profile(1.0));
  const BoundaryDistribution p2 = adjoint_poisson(one2, flat2);
  CHECK(std::abs(p2[{0, 0}] - 0.5) < 1e-14);
  for (std::size_t i = 1; i < p2.size(); ++i) CHECK(p2.coefficients()[i] == 0.0);

  // mode-diagonal: ℙ*ψ_a = B(n+N, sq + e) on the same mode
  const SpaceParams params = SpaceParams::make(3, 0.7, 2.0);
  BallFunction psi(3, 5);
  psi.set_profile({2, -1}, boundary_power(0.3));
  psi.set_profile({5, 4}, {[](double r) { return 2.0 * (1.0 + r); }, 0.3});
  const BoundaryDistribution adj = adjoint_poisson(psi, params);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    const ModeIndex mode = mode_at(3, i);
    if (mode.degree == 2 && mode.order == -1) {
      CHECK(rel(adj.coefficients()[i], beta_function(2 + 3, 0.4 + 0.3 + 1.0)) < 1e-12);
    } else if (mode.degree == 5 && mode.order == 4) {
      const double expected = 2.0 * (beta_function(8, 1.7) + beta_function(9, 1.7));
      CHECK(rel(adj.coefficients()[i], expected) < 1e-12);
    } else {
      CHECK(adj.coefficients()[i] == 0.0);
    }
  }

  // linearity
  BallFunction psi2(3, 5);
  psi2.set_profile({2, -1}, {[](double r) { return -3.0 * r; }, 0.3});
  BallFunction sum(3, 5);
  sum.set_profile({2, -1}, {[](double r) { return 1.0 - 3.0 * r; }, 0.3});
  sum.set_profile({5, 4}, {[](double r) { return 2.0 * (1.0 + r); }, 0.3});
  const BoundaryDistribution adj2 = adjoint_poisson(psi2, params);
  const BoundaryDistribution adj_sum = adjoint_poisson(sum, params);
  for (std::size_t i = 0; i < adj.size(); ++i)
    CHECK(std::abs(adj_sum.coefficients()[i] - adj.coefficients()[i] - adj2.coefficients()[i]) < 1e-14);

  // sq - 1 + e <= -1 is not integrable
  const SpaceParams rough = SpaceParams::make(2, 0.2, 2.0);
  const BallFunction singular = BallFunction::single_mode(2, 1, {1, 1}, boundary_power(-0.6));
  CHECK_THROWS_AS(adjoint_poisson(singular, rough), std::invalid_argument);

  BallFunction mixed(2, 2);
  mixed.set_profile({1, 1}, boundary_power(0.2));
  mixed.set_profile({2, -1}, boundary_power(0.3));
  CHECK_THROWS_AS(mixed.common_boundary_exponent(), std::invalid_argument);
  CHECK_THROWS_AS(mixed.set_profile({1, 0}, boundary_power(0.2)), std::invalid_argument);
}

TEST_CASE("duality pairing") {
  const RadialFunction smooth = {[](double r) { return 1.0 + r + r * r; }, 0.0};
  for (int dimension : {2, 3}) {
    for (double s : {0.5, 1.2}) {
      for (double q : {2.0, 3.0}) {
        const SpaceParams params = SpaceParams::make(dimension, s, q);
        const int n_max = dimension == 2 ? 12 : 6;
        const BoundaryDistribution mu = random_band_limited(7, dimension, n_max, 0.5);
        BallFunction psi(dimension, n_max);
        for (int n = 0; n <= n_max; n += 2) psi.set_profile(representative(dimension, n), smooth);
        const PairingCheck check = duality_pairing_check(mu, psi, params);
        CAPTURE(dimension);
        CAPTURE(s);
        CAPTURE(q);
        CHECK(check.relative_discrepancy < 1e-8);
        CHECK(std::abs(check.lhs - check.rhs) <= 1e-8 * std::abs(check.rhs));
      }
    }
  }

  // disjoint modes pair to zero
  const SpaceParams params = SpaceParams::make(2, 0.5, 2.0);
  const BoundaryDistribution mu = BoundaryDistribution::single_mode(2, 4, {3, 1});
  const BallFunction psi = BallFunction::single_mode(2, 4, {2, -1}, smooth);
  const PairingCheck zero = duality_pairing_check(mu, psi, params);
  CHECK(zero.rhs == 0.0);
  CHECK(std::abs(zero.lhs) < 1e-14);

  // bilinear in μ
  const BoundaryDistribution mu1 = random_band_limited(3, 2, 6, 0.0);
  const BoundaryDistribution mu2 = random_band_limited(4, 2, 6, 0.0);
  std::vector<double> combo(mu1.size());
  for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = 2.0 * mu1.coefficients()[i] - mu2.coefficients()[i];
  BallFunction psi6(2, 6);
  for (int n = 0; n <= 6; ++n) psi6.set_profile(representative(2, n), smooth);
  const double c1 = duality_pairing_check(mu1, psi6, params).rhs;
  const double c2 = duality_pairing_check(mu2, psi6, params).rhs;
  const double c12 = duality_pairing_check(BoundaryDistribution(2, 6, combo), psi6, params).rhs;
  CHECK(std::abs(c12 - (2.0 * c1 - c2)) < 1e-13);
}

TEST_CASE("weighted ball Lp norm") {
  // single mode (1-r)^a Y: ‖φ‖² = B(N, 2a + w + 1)
  for (int dimension : {2, 3}) {
    const BallFunction phi = BallFunction::single_mode(dimension, 3, representative(dimension, 3), boundary_power(0.2));
    const NormEstimate est = weighted_ball_lp_norm(phi, 0.3, 2.0);
    CHECK(est.finite);
    CHECK(rel(est.value, std::sqrt(beta_function(dimension, 0.4 + 0.3 + 1.0))) < 1e-12);
    CHECK_FALSE(weighted_ball_lp_norm(phi, -1.5, 2.0).finite);
  }
  // p = 4 for a constant: (|B| Y_0^4 · ∫ r^{N-1} (1-r)^w dr)^{1/4}
  const BallFunction c = BallFunction::single_mode(2, 0, {0, 0}, constant_profile(1.0));
  const double y0 = 1.0 / std::sqrt(2.0 * M_PI);
  const double expected = std::pow(2.0 * M_PI * std::pow(y0, 4) * beta_function(2, 1.5), 0.25);
  CHECK(rel(weighted_ball_lp_norm(c, 0.5, 4.0).value, expected) < 1e-10);
}

TEST_CASE("dual equivalence report matches the per-mode closed form") {
  const double a = 0.2;
  const double s = 0.5;
  const double p = 2.0;
  for (int dimension : {2, 3}) {
    std::vector<BallFamilyMember> family;
    for (int n = 0; n <= 24; ++n)
      family.push_back({"n" + std::to_string(n), n,
                        BallFunction::single_mode(dimension, n, representative(dimension, n), boundary_power(a))});
    DualReportOptions options;
    options.threads = 3;
    const EquivalenceReport report = dual_equivalence_report(family, s, p, options);
    CHECK(report.route_a == "weighted_lp_phi");
    CHECK(report.route_b == "boundary_spectral_q2");
    REQUIRE(report.items.size() == family.size());
    for (const EquivalenceItem& item : report.items) {
      const int n = item.degree;
      const double left = std::sqrt(beta_function(dimension, 2 * a + p * (1 - s)));
      const double right = std::pow(1.0 + eigenvalue(dimension, n), s / 2) * beta_function(n + dimension, a + 1);
      CAPTURE(n);
      CHECK(rel(item.norm_a, left) < 1e-10);
      CHECK(rel(item.norm_b, right) < 1e-10);
    }

    std::vector<BallFamilyMember> scaled;
    for (int n = 0; n <= 24; ++n)
      scaled.push_back({"n" + std::to_string(n), n,
                        BallFunction::single_mode(dimension, n, representative(dimension, n),
                                                  {[](double) { return -7.0; }, a})});
    const EquivalenceReport r7 = dual_equivalence_report(scaled, s, p, options);
    for (std::size_t i = 0; i < report.items.size(); ++i)
      CHECK(rel(r7.items[i].ratio, report.items[i].ratio) < 1e-12);
  }
}
