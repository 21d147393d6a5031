#include "besov/numerics/special_functions.h"

#include <math.h>

#include <cmath>
#include <stdexcept>

namespace besov {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive and finite");
  // lgamma_r is the reentrant form; std::lgamma writes the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma_function(double x) {
  return std::exp(log_gamma(x));
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: arguments must be positive");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_function(double a, double b) {
  return std::exp(log_beta(a, b));
}

}  // namespace besov
