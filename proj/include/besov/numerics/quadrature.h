#pragma once

#include <functional>
#include <span>
#include <vector>

namespace besov {

/// Weight (b - x)^alpha (x - a)^beta on a finite interval (a, b).
struct JacobiWeight {
  double alpha = 0.0;  // exponent at the right endpoint b
  double beta = 0.0;   // exponent at the left endpoint a
};

/// Gaussian rule for a Jacobi-type weight on (a, b). Nodes are strictly
/// interior and increasing, weights positive. An n-point rule integrates
/// polynomials of degree 2n - 1 exactly against the weight.
struct QuadratureRule {
  double a = 0.0;
  double b = 1.0;
  JacobiWeight weight;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  int design_degree() const { return 2 * static_cast<int>(nodes.size()) - 1; }

  /// Σ w_i f(x_i), pairwise-summed.
  double integrate(const std::function<double(double)>& f) const;

  /// Same rule mapped affinely onto (lo, hi); weights rescaled so the mapped
  /// rule integrates against (hi - x)^alpha (x - lo)^beta.
  QuadratureRule mapped(double lo, double hi) const;
};

/// Gauss rule for x^gamma e^{-x} on (0, ∞).
struct HalfLineRule {
  double gamma = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Eigenvalues and squared first eigenvector components of the symmetric
/// tridiagonal matrix with the given diagonal and off-diagonal (size n-1).
/// Implicit-shift QL; eigenvalues returned in increasing order.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> first_component_sq;
};
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal);

/// Gauss–Jacobi rule on (0, 1) for the weight (1 - x)^alpha x^beta, built by
/// Golub–Welsch. Throws std::invalid_argument when an exponent is <= -1 or
/// npoints < 1.
QuadratureRule gauss_jacobi(int npoints, double alpha, double beta);

/// Gauss–Legendre rule on (a, b).
QuadratureRule gauss_legendre(int npoints, double a = -1.0, double b = 1.0);

/// Generalized Gauss–Laguerre rule for x^gamma e^{-x}, gamma > -1.
HalfLineRule gauss_laguerre(int npoints, double gamma = 0.0);

}  // namespace besov
