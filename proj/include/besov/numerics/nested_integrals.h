#pragma once

#include <functional>

namespace besov {

using ScalarFunction = std::function<double(double)>;

struct NestedIntegralOptions {
  double truncation = 60.0;   // each half-line [a, ∞) is cut at a + truncation
  int panels = 30;            // equal-width Gauss–Legendre panels per level
  int nodes_per_panel = 8;
  double decay_tolerance = 1e-10;
};

/// Brute-force nested quadrature of
///   ∫_t^∞ ∫_{t_1}^∞ … ∫_{t_{k-1}}^∞ Π_{j=1..k} (t_j - t_{j-1}) φ(t_k) dt_k … dt_1,
/// with t_0 = t. Cost grows like (panels·nodes)^k, so k ≤ 3.
/// Throws std::invalid_argument if k is outside [1, 3] or if φ fails the
/// exponential-decay test on the truncated domain.
double nested_integral_oracle(int k, double t, const ScalarFunction& phi,
                              const NestedIntegralOptions& options = {});

struct ClosedFormOptions {
  int nodes = 48;
  double rate = 1.0;  // assumed decay rate of φ, used to scale the Laguerre rule
};

/// ∫_t^∞ (s - t)^{2k-1} / (2k-1)! φ(s) ds, evaluated with a generalized
/// Gauss–Laguerre rule carrying the polynomial kernel exactly.
double reduction_closed_form(int k, double t, const ScalarFunction& phi,
                             const ClosedFormOptions& options = {});

}  // namespace besov
