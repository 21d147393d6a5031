#include "besov/sphere/spectral.h"

#include <cmath>
#include <string>

#include "besov/numerics/quadrature.h"
#include "besov/numerics/summation.h"

namespace besov {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Orthonormal associated Legendre functions P̄_n^m(x), ∫_{-1}^{1} P̄² dx = 1/(2π),
// packed as table[n(n+1)/2 + m] for 0 <= m <= n <= n_max.
std::vector<double> normalized_legendre(int n_max, double x) {
  const double sin_theta = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  std::vector<double> p(static_cast<std::size_t>((n_max + 1) * (n_max + 2) / 2), 0.0);
  auto at = [&](int n, int m) -> double& { return p[static_cast<std::size_t>(n * (n + 1) / 2 + m)]; };
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) pmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sin_theta;
    at(m, m) = pmm;
    if (m + 1 <= n_max) at(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * pmm;
    for (int n = m + 2; n <= n_max; ++n) {
      const double nn = n;
      const double a = std::sqrt((4.0 * nn * nn - 1.0) / (nn * nn - m * m));
      const double b = std::sqrt(((nn - 1.0) * (nn - 1.0) - m * m) / (4.0 * (nn - 1.0) * (nn - 1.0) - 1.0));
      at(n, m) = a * (x * at(n - 1, m) - b * at(n - 2, m));
    }
  }
  return p;
}

// cos/sin(2π k / M) for k = 0..M-1; (m·j mod M) indexes the table exactly.
struct TrigTable {
  std::vector<double> c, s;
  explicit TrigTable(std::size_t count) : c(count), s(count) {
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
      c[k] = std::cos(angle);
      s[k] = std::sin(angle);
    }
  }
};

// cos(mφ_j), sin(mφ_j) for m = 0..n_max, stored row-major by azimuth j.
struct HarmonicTable {
  std::size_t width;
  std::vector<double> c, s;
  HarmonicTable(const TrigTable& trig, std::size_t M, int n_max)
      : width(static_cast<std::size_t>(n_max + 1)), c(M * width), s(M * width) {
    for (std::size_t j = 0; j < M; ++j) {
      std::size_t k = 0;  // (m·j) mod M
      for (std::size_t m = 0; m < width; ++m) {
        c[j * width + m] = trig.c[k];
        s[j * width + m] = trig.s[k];
        k += j;
        if (k >= M) k -= M;
      }
    }
  }
};

void require_match(const BoundaryDistribution& mu, const SurfaceQuadrature& quad) {
  if (mu.dimension() != quad.dimension())
    throw std::invalid_argument("dimension mismatch between distribution and quadrature");
}

}  // namespace

SurfaceQuadrature SurfaceQuadrature::for_band_limit(int dimension, int band_limit) {
  require_supported_dimension(dimension);
  if (band_limit < 0) throw std::invalid_argument("SurfaceQuadrature: negative band limit");
  SurfaceQuadrature q;
  q.dimension_ = dimension;
  q.band_limit_ = band_limit;
  q.azimuth_count_ = static_cast<std::size_t>(2 * band_limit + 2);
  const double dphi = kTwoPi / static_cast<double>(q.azimuth_count_);
  if (dimension == 2) {
    q.ring_cos_ = {0.0};
    q.weights_.assign(q.azimuth_count_, dphi);
  } else {
    const QuadratureRule gl = gauss_legendre(band_limit + 1, -1.0, 1.0);
    // rings ordered north to south (descending cos θ)
    for (std::size_t i = gl.size(); i-- > 0;) q.ring_cos_.push_back(gl.nodes[i]);
    for (std::size_t i = gl.size(); i-- > 0;)
      for (std::size_t j = 0; j < q.azimuth_count_; ++j) q.weights_.push_back(gl.weights[i] * dphi);
  }
  return q;
}

SurfacePoint SurfaceQuadrature::point(std::size_t i) const {
  const std::size_t ring = i / azimuth_count_;
  const std::size_t j = i % azimuth_count_;
  const double angle = kTwoPi * static_cast<double>(j) / static_cast<double>(azimuth_count_);
  if (dimension_ == 2) return {angle, 0.0};
  return {std::acos(ring_cos_[ring]), angle};
}

double SurfaceQuadrature::integrate(std::span<const double> values) const {
  return pairwise_dot(weights_, values);
}

std::vector<double> evaluate_basis(int dimension, int n_max, SurfacePoint point) {
  std::vector<double> out(mode_count(dimension, n_max));
  if (dimension == 2) {
    out[0] = 1.0 / std::sqrt(kTwoPi);
    const double norm = 1.0 / std::sqrt(M_PI);
    for (int n = 1; n <= n_max; ++n) {
      out[flat_index(2, {n, -1})] = norm * std::sin(n * point.theta);
      out[flat_index(2, {n, 1})] = norm * std::cos(n * point.theta);
    }
    return out;
  }
  const std::vector<double> p = normalized_legendre(n_max, std::cos(point.theta));
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t row = static_cast<std::size_t>(n * (n + 1) / 2);
    out[flat_index(3, {n, 0})] = p[row];
    for (int m = 1; m <= n; ++m) {
      const double v = M_SQRT2 * p[row + static_cast<std::size_t>(m)];
      out[flat_index(3, {n, m})] = v * std::cos(m * point.phi);
      out[flat_index(3, {n, -m})] = v * std::sin(m * point.phi);
    }
  }
  return out;
}

double evaluate(const BoundaryDistribution& mu, SurfacePoint point) {
  const std::vector<double> basis = evaluate_basis(mu.dimension(), mu.n_max(), point);
  return pairwise_dot(basis, mu.coefficients());
}

std::vector<double> synthesize(const BoundaryDistribution& coeffs, const SurfaceQuadrature& quad) {
  require_match(coeffs, quad);
  const int n_max = coeffs.n_max();
  const std::size_t M = quad.azimuth_count();
  const HarmonicTable harmonics(TrigTable(M), M, n_max);
  std::vector<double> values(quad.size(), 0.0);

  // per-ring Fourier coefficients: value(φ_j) = Σ_m a_m cos(mφ_j) + b_m sin(mφ_j)
  std::vector<double> a(static_cast<std::size_t>(n_max + 1)), b(static_cast<std::size_t>(n_max + 1));
  for (std::size_t ring = 0; ring < quad.ring_count(); ++ring) {
    if (quad.dimension() == 2) {
      a[0] = coeffs[{0, 0}] / std::sqrt(kTwoPi);
      b[0] = 0.0;
      for (int n = 1; n <= n_max; ++n) {
        a[static_cast<std::size_t>(n)] = coeffs[{n, 1}] / std::sqrt(M_PI);
        b[static_cast<std::size_t>(n)] = coeffs[{n, -1}] / std::sqrt(M_PI);
      }
    } else {
      const std::vector<double> p = normalized_legendre(n_max, quad.ring_cos_theta()[ring]);
      std::fill(a.begin(), a.end(), 0.0);
      std::fill(b.begin(), b.end(), 0.0);
      const std::span<const double> c = coeffs.coefficients();
      for (int n = 0; n <= n_max; ++n) {
        const std::size_t row = static_cast<std::size_t>(n * (n + 1) / 2);
        const std::size_t centre = static_cast<std::size_t>(n * n + n);  // flat index of (n, 0)
        a[0] += c[centre] * p[row];
        for (int m = 1; m <= n; ++m) {
          const double v = M_SQRT2 * p[row + static_cast<std::size_t>(m)];
          a[static_cast<std::size_t>(m)] += c[centre + static_cast<std::size_t>(m)] * v;
          b[static_cast<std::size_t>(m)] += c[centre - static_cast<std::size_t>(m)] * v;
        }
      }
    }
    double* out = values.data() + ring * M;
    for (std::size_t j = 0; j < M; ++j) {
      const double* cj = harmonics.c.data() + j * harmonics.width;
      const double* sj = harmonics.s.data() + j * harmonics.width;
      double acc = 0.0;
      for (std::size_t m = 0; m < harmonics.width; ++m) acc += a[m] * cj[m] + b[m] * sj[m];
      out[j] = acc;
    }
  }
  return values;
}

std::vector<double> synthesize_by_degree(const BoundaryDistribution& coeffs, const SurfaceQuadrature& quad) {
  require_match(coeffs, quad);
  const int n_max = coeffs.n_max();
  const std::size_t width = static_cast<std::size_t>(n_max + 1);
  const std::size_t M = quad.azimuth_count();
  const HarmonicTable harmonics(TrigTable(M), M, n_max);
  const std::span<const double> c = coeffs.coefficients();
  std::vector<double> fields(quad.size() * width, 0.0);

  // a[n·width + m], b[n·width + m]: ring Fourier coefficients of the degree-n part
  std::vector<double> a(width * width), b(width * width);
  for (std::size_t ring = 0; ring < quad.ring_count(); ++ring) {
    std::fill(a.begin(), a.end(), 0.0);
    std::fill(b.begin(), b.end(), 0.0);
    if (quad.dimension() == 2) {
      a[0] = c[0] / std::sqrt(kTwoPi);
      for (std::size_t n = 1; n < width; ++n) {
        a[n * width + n] = c[2 * n] / std::sqrt(M_PI);
        b[n * width + n] = c[2 * n - 1] / std::sqrt(M_PI);
      }
    } else {
      const std::vector<double> p = normalized_legendre(n_max, quad.ring_cos_theta()[ring]);
      for (std::size_t n = 0; n < width; ++n) {
        const std::size_t row = n * (n + 1) / 2;
        const std::size_t centre = n * n + n;
        a[n * width] = c[centre] * p[row];
        for (std::size_t m = 1; m <= n; ++m) {
          const double v = M_SQRT2 * p[row + m];
          a[n * width + m] = c[centre + m] * v;
          b[n * width + m] = c[centre - m] * v;
        }
      }
    }
    for (std::size_t j = 0; j < M; ++j) {
      const double* cj = harmonics.c.data() + j * width;
      const double* sj = harmonics.s.data() + j * width;
      const std::size_t point = ring * M + j;
      for (std::size_t n = 0; n < width; ++n) {
        const double* an = a.data() + n * width;
        const double* bn = b.data() + n * width;
        double acc = 0.0;
        for (std::size_t m = 0; m <= n; ++m) acc += an[m] * cj[m] + bn[m] * sj[m];
        fields[n * quad.size() + point] = acc;
      }
    }
  }
  return fields;
}

BoundaryDistribution analyze(std::span<const double> values, const SurfaceQuadrature& quad, int n_max) {
  if (values.size() != quad.size()) throw std::invalid_argument("analyze: sample count does not match quadrature");
  if (quad.design_degree() < 2 * n_max)
    throw QuadratureTooCoarse("analyze: quadrature of degree " + std::to_string(quad.design_degree()) +
                              " cannot resolve products up to degree " + std::to_string(2 * n_max));
  const int N = quad.dimension();
  const std::size_t M = quad.azimuth_count();
  const TrigTable trig(M);
  BoundaryDistribution out(N, n_max);

  std::vector<double> a(static_cast<std::size_t>(n_max + 1)), b(static_cast<std::size_t>(n_max + 1));
  for (std::size_t ring = 0; ring < quad.ring_count(); ++ring) {
    const double* v = values.data() + ring * M;
    const double w = quad.weights()[ring * M];  // uniform along a ring
    for (std::size_t m = 0; m <= static_cast<std::size_t>(n_max); ++m) {
      double ac = 0.0, as = 0.0;
      const std::size_t step = m % M;
      std::size_t k = 0;  // (m·j) mod M
      for (std::size_t j = 0; j < M; ++j, k = (k + step >= M) ? k + step - M : k + step) {
        ac += v[j] * trig.c[k];
        as += v[j] * trig.s[k];
      }
      a[m] = w * ac;
      b[m] = w * as;
    }
    if (N == 2) {
      out[{0, 0}] += a[0] / std::sqrt(kTwoPi);
      for (int n = 1; n <= n_max; ++n) {
        out[{n, 1}] += a[static_cast<std::size_t>(n)] / std::sqrt(M_PI);
        out[{n, -1}] += b[static_cast<std::size_t>(n)] / std::sqrt(M_PI);
      }
    } else {
      const std::vector<double> p = normalized_legendre(n_max, quad.ring_cos_theta()[ring]);
      for (int n = 0; n <= n_max; ++n) {
        const std::size_t row = static_cast<std::size_t>(n * (n + 1) / 2);
        out[{n, 0}] += a[0] * p[row];
        for (int m = 1; m <= n; ++m) {
          const double y = M_SQRT2 * p[row + static_cast<std::size_t>(m)];
          out[{n, m}] += a[static_cast<std::size_t>(m)] * y;
          out[{n, -m}] += b[static_cast<std::size_t>(m)] * y;
        }
      }
    }
  }
  return out;
}

}  // namespace besov
