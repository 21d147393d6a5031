#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "besov/distributions/lifting.h"
#include "besov/numerics/quadrature.h"
#include "besov/numerics/special_functions.h"
#include "besov/poisson/extension.h"
#include "besov/sphere/spectral.h"

using namespace besov;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("poisson_extend examples") {
  const BoundaryDistribution mu = random_band_limited(2, 3, 5, 0.0);
  const BoundaryDistribution at0 = poisson_extend(mu, 0.0);
  CHECK(at0[{0, 0}] == mu[{0, 0}]);
  for (std::size_t i = 1; i < at0.size(); ++i) CHECK(at0.coefficients()[i] == 0.0);

  const BoundaryDistribution c = BoundaryDistribution::single_mode(2, 4, {0, 0}, 2.5);
  for (double r : {0.0, 0.3, 0.99}) CHECK(poisson_extend(c, r)[{0, 0}] == 2.5);

  const BoundaryDistribution y3 = BoundaryDistribution::single_mode(2, 3, {3, 1});
  CHECK(std::abs(poisson_extend(y3, 0.5)[{3, 1}] - 0.125) < 1e-16);
  CHECK_THROWS_AS(poisson_extend(y3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(poisson_extend(y3, -0.1), std::invalid_argument);
}

TEST_CASE("extension of a degree-3 mode is harmonic") {
  // u(x, y) = r³ cos 3θ / √π; five-point Laplacian in Cartesian coordinates
  const BoundaryDistribution y3 = BoundaryDistribution::single_mode(2, 3, {3, 1});
  auto u = [&](double x, double y) {
    const double r = std::hypot(x, y);
    return evaluate(poisson_extend(y3, r), {std::atan2(y, x), 0.0});
  };
  const double h = 1e-3;
  for (auto [x, y] : {std::pair{0.3, 0.2}, std::pair{-0.5, 0.1}, std::pair{0.1, -0.6}}) {
    const double lap = (u(x + h, y) + u(x - h, y) + u(x, y + h) + u(x, y - h) - 4 * u(x, y)) / (h * h);
    const double scale = 3.0 * 2.0 * std::hypot(x, y) / std::sqrt(std::numbers::pi);  // |u_xx| magnitude
    CHECK(std::abs(lap) <= 1e-8 * std::max(1.0, scale) + 1e-8);
  }
}

TEST_CASE("radial profiles") {
  const BoundaryDistribution mu = random_band_limited(8, 3, 6, 0.0);
  const std::vector<double> radii{0.0, 0.1, 0.5, 0.9, 0.999};
  const ModeIndex mode{5, -3};
  const RadialProfile p = harmonic_profile(mu, mode, radii);
  for (std::size_t i = 0; i < radii.size(); ++i)
    CHECK(std::abs(p.values[i] - mu[mode] * std::pow(radii[i], 5)) <= 1e-12 * std::abs(mu[mode]));

  // composition: extending at r1 then r2 equals extending at r1·r2
  const double r1 = 0.7, r2 = 0.4;
  const BoundaryDistribution twice = poisson_extend(poisson_extend(mu, r1), r2);
  const BoundaryDistribution once = poisson_extend(mu, r1 * r2);
  for (std::size_t i = 0; i < mu.size(); ++i)
    CHECK(std::abs(twice.coefficients()[i] - once.coefficients()[i]) <= 1e-15 * std::abs(mu.coefficients()[i]));
}

TEST_CASE("surface_lq_norm") {
  for (int N : {2, 3}) {
    const SurfaceQuadrature q = SurfaceQuadrature::for_band_limit(N, 8);
    BoundaryDistribution c(N, 4);
    c[{0, 0}] = -1.7 * std::sqrt(surface_measure(N));  // the constant -1.7
    for (double qq : {1.0, 1.5, 2.0, 4.0})
      for (double r : {0.0, 0.6})
        CHECK(rel(surface_lq_norm(c, r, qq, q), 1.7 * std::pow(surface_measure(N), 1.0 / qq)) < 1e-13);

    const BoundaryDistribution mu = random_band_limited(12, N, 8, 0.5);
    for (double r : {0.2, 0.8}) {
      double energy = 0.0;
      for (int n = 0; n <= 8; ++n) energy += mu.degree_energy(n) * std::pow(r, 2 * n);
      CHECK(rel(surface_lq_norm(mu, r, 2.0, q), std::sqrt(energy)) < 1e-10);
    }
    CHECK_THROWS_AS(surface_lq_norm(random_band_limited(1, N, 9, 0.0), 0.5, 2.0, q), QuadratureTooCoarse);
    CHECK_THROWS_AS(surface_lq_norm(mu, 0.5, 0.5, q), std::invalid_argument);
  }
}

TEST_CASE("single-mode q = 4 slice norm against oversampled quadrature") {
  // |Y|^4 is band-limited to degree 4n, so the 4x rule is exact
  for (int N : {2, 3}) {
    const ModeIndex mode = N == 2 ? ModeIndex{5, -1} : ModeIndex{4, 2};
    const BoundaryDistribution y = BoundaryDistribution::single_mode(N, mode.degree, mode);
    const SurfaceQuadrature oracle = SurfaceQuadrature::for_band_limit(N, 8 * mode.degree);
    const SurfaceQuadrature analysis = SurfaceQuadrature::for_band_limit(N, 2 * mode.degree);
    CHECK(rel(surface_lq_norm(y, 0.8, 4.0, analysis), surface_lq_norm(y, 0.8, 4.0, oracle)) < 1e-8);
  }
}

TEST_CASE("per_mode_weighted_integral") {
  CHECK(rel(per_mode_weighted_integral(2, 0, 0.5), 0.5) < 1e-14);
  CHECK(rel(per_mode_weighted_integral(2, 1, 1.0), 1.0 / 20.0) < 1e-14);
  // Γ(2n+N)/Γ(2n+N+2s) = (2n)^{-2s} (1 - s(2N+2s-1)/(2n) + O(n^{-2}))
  for (int N : {2, 3})
    for (double s : {0.3, 1.0, 2.5}) {
      auto ratio = [&](int n) { return per_mode_weighted_integral(N, n, s) / (gamma_function(2 * s) * std::pow(2.0 * n, -2 * s)); };
      const int n = 512;
      CHECK(std::abs(ratio(n) - (1.0 - s * (2 * N + 2 * s - 1) / (2.0 * n))) < 1e-3);
      CHECK(std::abs(ratio(2 * n) - 1.0) < 0.55 * std::abs(ratio(n) - 1.0));
    }
  CHECK_THROWS_AS(per_mode_weighted_integral(2, -1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(per_mode_weighted_integral(2, 1, 0.0), std::invalid_argument);
}

TEST_CASE("weighted_ball_norm examples") {
  SUBCASE("constant, N = 2, s = 1, q = 2") {
    const double c = 1.3;
    BoundaryDistribution mu(2, 0);
    mu[{0, 0}] = c * std::sqrt(2 * std::numbers::pi);
    const NormEstimate e = weighted_ball_norm(mu, SpaceParams::make(2, 1.0, 2.0));
    CHECK(rel(e.value * e.value, c * c * 2 * std::numbers::pi / 6.0) < 1e-12);
    CHECK(e.converged);
  }
  SUBCASE("single mode Beta identity by Gauss-Jacobi") {
    for (int N : {2, 3})
      for (double s : {0.3, 1.0, 1.7})
        for (int n : {0, 3, 17}) {
          const ModeIndex mode{n, N == 2 && n > 0 ? -1 : 0};
          const double c = 0.8;
          const BoundaryDistribution mu = BoundaryDistribution::single_mode(N, n, mode, c);
          const SpaceParams p = SpaceParams::make(N, s, 2.0);
          const double v = weighted_ball_norm(mu, p, gauss_jacobi(n + N + 4, p.weight_exponent(), 0.0),
                                              SurfaceQuadrature::for_band_limit(N, n));
          CHECK(rel(v * v, c * c * per_mode_weighted_integral(N, n, s)) < 1e-11);
        }
  }
  SUBCASE("s = 2/q gives the unit weight") {
    const SpaceParams p = SpaceParams::make(2, 2.0 / 3.0, 3.0);
    CHECK(std::abs(p.weight_exponent() - 1.0) < 1e-15);
  }
  SUBCASE("rule validation") {
    const BoundaryDistribution mu = random_band_limited(1, 2, 4, 0.0);
    const SpaceParams p = SpaceParams::make(2, 1.0, 2.0);
    CHECK_THROWS_AS(weighted_ball_norm(mu, p, gauss_jacobi(20, 0.0, 0.0), SurfaceQuadrature::for_band_limit(2, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_ball_norm(mu, p, gauss_jacobi(20, 1.0, 0.0), SurfaceQuadrature::for_band_limit(2, 3)),
                    QuadratureTooCoarse);
  }
}

TEST_CASE("q = 2 policy agrees with the exact Beta form") {
  for (int N : {2, 3})
    for (double s : {0.3, 0.7, 1.5, 2.5}) {
      const BoundaryDistribution mu = random_band_limited(17, N, N == 2 ? 40 : 12, 0.5);
      const NormEstimate e = weighted_ball_norm(mu, SpaceParams::make(N, s, 2.0));
      CHECK(rel(e.value * e.value, std::pow(weighted_ball_norm_q2(mu, s), 2)) < 1e-9);
    }
}

TEST_CASE("general q policy converges on a smooth case") {
  // q = 4 with a single mode: |u|^4 is band-limited, so refinement changes nothing
  const BoundaryDistribution mu = BoundaryDistribution::single_mode(3, 3, {3, 1}, 2.0);
  const NormEstimate e = weighted_ball_norm(mu, SpaceParams::make(3, 0.7, 4.0));
  CHECK(e.converged);
  CHECK(e.refinements == 1);
  CHECK(e.last_change < 1e-7);
}

TEST_CASE("homogeneity") {
  for (double q : {1.5, 2.0, 3.0}) {
    const SpaceParams p = SpaceParams::make(2, 0.5, q);
    const BoundaryDistribution mu = random_band_limited(31, 2, 12, 1.0);
    const double base = weighted_ball_norm(mu, p).value;
    for (double c : {10.0, -3.0, 1e-3}) CHECK(rel(weighted_ball_norm(mu.scaled(c), p).value, std::abs(c) * base) < 1e-12);
  }
}

TEST_CASE("slice integral monotonicity") {
  for (int N : {2, 3})
    for (double q : {1.5, 2.0, 4.0})
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const BoundaryDistribution mu = random_band_limited(seed, N, 6, 0.5);
        const SurfaceQuadrature quad = SurfaceQuadrature::for_band_limit(N, 24);
        double previous = 0.0;
        for (int j = 0; j < 64; ++j) {
          const double r = (j + 0.5) / 64.0;
          const double v = slice_power_integral(mu, r, q, quad);
          CHECK(v >= previous * (1.0 - 1e-12));
          previous = v;
        }
      }
}
