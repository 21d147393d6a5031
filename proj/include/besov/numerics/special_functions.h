#pragma once

namespace besov {

/// log Γ(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Γ(x) for x > 0.
double gamma_function(double x);

/// log B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Euler Beta function B(a, b) = Γ(a)Γ(b)/Γ(a+b), a, b > 0.
double beta_function(double a, double b);

}  // namespace besov
