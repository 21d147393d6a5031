#include "besov/numerics/nested_integrals.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "besov/numerics/quadrature.h"
#include "besov/numerics/special_functions.h"
#include "besov/numerics/summation.h"

namespace besov {

namespace {

struct PanelRule {
  std::vector<double> offsets;  // node positions relative to the lower limit
  std::vector<double> weights;
};

PanelRule composite_rule(const NestedIntegralOptions& opt) {
  const QuadratureRule base = gauss_legendre(opt.nodes_per_panel, 0.0, 1.0);
  const double width = opt.truncation / opt.panels;
  PanelRule rule;
  for (int p = 0; p < opt.panels; ++p) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.offsets.push_back((p + base.nodes[i]) * width);
      rule.weights.push_back(base.weights[i] * width);
    }
  }
  return rule;
}

// F_level(a) = ∫_a^{a+T} (τ - a) F_{level+1}(τ) dτ, with F_k = φ.
double nested_level(int remaining, double lower, const PanelRule& rule, const ScalarFunction& phi) {
  std::vector<double> terms(rule.offsets.size());
  for (std::size_t i = 0; i < rule.offsets.size(); ++i) {
    const double tau = lower + rule.offsets[i];
    const double inner = remaining == 1 ? phi(tau) : nested_level(remaining - 1, tau, rule, phi);
    terms[i] = rule.offsets[i] * inner;
  }
  return pairwise_dot(rule.weights, terms);
}

void check_decay(int k, double t, const ScalarFunction& phi, const NestedIntegralOptions& opt) {
  // The kernel weight at the cut, times φ there, must be negligible against
  // the size of φ near the start of the domain.
  double head = 0.0;
  for (int i = 0; i <= 16; ++i) head = std::max(head, std::abs(phi(t + i * 0.25)));
  double tail = 0.0;
  for (double x : {0.9, 1.0}) tail = std::max(tail, std::abs(phi(t + x * opt.truncation)));
  const double kernel = std::exp((2 * k - 1) * std::log(opt.truncation) - log_gamma(2.0 * k));
  if (!(head > 0.0) || !std::isfinite(head) || !(tail * kernel <= opt.decay_tolerance * head))
    throw std::invalid_argument("nested integral: integrand does not decay exponentially on the truncated domain");
}

}  // namespace

double nested_integral_oracle(int k, double t, const ScalarFunction& phi, const NestedIntegralOptions& options) {
  if (k < 1 || k > 3) throw std::invalid_argument("nested_integral_oracle: k must be in [1, 3]");
  if (options.panels < 1 || options.nodes_per_panel < 1 || !(options.truncation > 0.0))
    throw std::invalid_argument("nested_integral_oracle: invalid options");
  check_decay(k, t, phi, options);
  const PanelRule rule = composite_rule(options);
  return nested_level(k, t, rule, phi);
}

double reduction_closed_form(int k, double t, const ScalarFunction& phi, const ClosedFormOptions& options) {
  if (k < 1) throw std::invalid_argument("reduction_closed_form: k must be positive");
  if (!(options.rate > 0.0)) throw std::invalid_argument("reduction_closed_form: rate must be positive");
  const int power = 2 * k - 1;
  const HalfLineRule rule = gauss_laguerre(options.nodes, power);
  const double c = options.rate;
  // s = t + x/c:  ∫ (x/c)^{p} φ(t + x/c) dx/c = c^{-(p+1)} ∫ x^p e^{-x} [e^{x} φ(t + x/c)] dx
  const double scale = std::exp(-(power + 1) * std::log(c) - log_gamma(power + 1.0));
  return scale * rule.integrate([&](double x) { return std::exp(x) * phi(t + x / c); });
}

}  // namespace besov
