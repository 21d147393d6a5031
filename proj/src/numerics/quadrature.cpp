#include "besov/numerics/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "besov/numerics/special_functions.h"
#include "besov/numerics/summation.h"

namespace besov {

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
  return pairwise_dot(weights, values);
}

QuadratureRule QuadratureRule::mapped(double lo, double hi) const {
  if (!(hi > lo)) throw std::invalid_argument("QuadratureRule::mapped: empty interval");
  const double scale = (hi - lo) / (b - a);
  const double wscale = std::pow(scale, 1.0 + weight.alpha + weight.beta);
  QuadratureRule out;
  out.a = lo;
  out.b = hi;
  out.weight = weight;
  out.nodes.resize(nodes.size());
  out.weights.resize(weights.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes[i] = lo + (nodes[i] - a) * scale;
    out.weights[i] = weights[i] * wscale;
  }
  return out;
}

double HalfLineRule::integrate(const std::function<double(double)>& f) const {
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
  return pairwise_dot(weights, values);
}

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal) {
  const std::size_t n = diagonal.size();
  if (n == 0) return {};
  if (off_diagonal.size() + 1 != n)
    throw std::invalid_argument("symmetric_tridiagonal_eigen: off-diagonal must have n-1 entries");

  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(n, 0.0);
  std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());
  // first row of the accumulated rotation matrix
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  constexpr int kMaxIterations = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > kMaxIterations)
          throw std::runtime_error("symmetric_tridiagonal_eigen: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first_component_sq.reserve(n);
  for (std::size_t i : order) {
    out.values.push_back(d[i]);
    out.first_component_sq.push_back(z[i] * z[i]);
  }
  return out;
}

QuadratureRule gauss_jacobi(int npoints, double alpha, double beta) {
  if (npoints < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1 (got alpha=" +
                                std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");

  // Monic Jacobi recurrence on [-1, 1] for (1-x)^a (1+x)^b, then x -> (1+x)/2.
  const double a = alpha;
  const double b = beta;
  const auto n = static_cast<std::size_t>(npoints);
  std::vector<double> diag(n), off(n - 1);
  diag[0] = (b - a) / (a + b + 2.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double s = 2.0 * jj + a + b;
    diag[j] = (b * b - a * a) / (s * (s + 2.0));
  }
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double s = 2.0 * jj + a + b;
    double beta_j;
    if (j == 1) {
      beta_j = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      beta_j = 4.0 * jj * (jj + a) * (jj + b) * (jj + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[j - 1] = std::sqrt(beta_j);
  }

  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, off);
  const double mass = beta_function(a + 1.0, b + 1.0);  // ∫_0^1 (1-y)^a y^b dy

  QuadratureRule rule;
  rule.a = 0.0;
  rule.b = 1.0;
  rule.weight = {alpha, beta};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + eig.values[i]);
    rule.weights[i] = mass * eig.first_component_sq[i];
  }
  return rule;
}

QuadratureRule gauss_legendre(int npoints, double a, double b) {
  return gauss_jacobi(npoints, 0.0, 0.0).mapped(a, b);
}

HalfLineRule gauss_laguerre(int npoints, double gamma) {
  if (npoints < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
  if (!(gamma > -1.0)) throw std::invalid_argument("gauss_laguerre: exponent must exceed -1");
  const auto n = static_cast<std::size_t>(npoints);
  std::vector<double> diag(n), off(n - 1);
  for (std::size_t j = 0; j < n; ++j) diag[j] = 2.0 * static_cast<double>(j) + gamma + 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    off[j - 1] = std::sqrt(jj * (jj + gamma));
  }
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, off);
  const double mass = gamma_function(gamma + 1.0);
  HalfLineRule rule;
  rule.gamma = gamma;
  rule.nodes = eig.values;
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] = mass * eig.first_component_sq[i];
  return rule;
}

}  // namespace besov
