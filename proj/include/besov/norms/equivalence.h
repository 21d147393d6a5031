#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "besov/distributions/boundary_distribution.h"
#include "besov/distributions/space_params.h"
#include "besov/norms/besov_norms.h"
#include "besov/poisson/extension.h"

namespace besov {

/// A named way of computing a norm of a boundary distribution.
struct NormRoute {
  std::string name;
  std::function<NormEstimate(const BoundaryDistribution&)> evaluate;
};

NormRoute weighted_ball_route(const SpaceParams& params, const BallNormOptions& options = {});
NormRoute semigroup_lifting_route(const SpaceParams& params, const SemigroupNormOptions& options = {});
NormRoute spectral_route(double s, Smoothness sign);

struct FamilyMember {
  std::string id;
  int degree = 0;  // representative degree (mode degree, or n_max for mixed inputs)
  BoundaryDistribution mu;
};

struct EquivalenceItem {
  std::string id;
  int degree = 0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  double ratio = 0.0;  // norm_a / norm_b
  bool converged = true;
};

/// Paired norms over a family. The bracket is ratio_max / ratio_min over
/// every item; nothing is averaged or trimmed.
struct EquivalenceReport {
  std::string route_a;
  std::string route_b;
  std::vector<EquivalenceItem> items;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double bracket = 0.0;
  bool all_finite = true;
  bool all_converged = true;

  /// Recomputes the summary statistics from `items`.
  void summarize();
};

/// max/min of the ratios of items with degree >= min_degree; +inf if any of
/// them is non-finite or non-positive, NaN if none qualify.
double ratio_bracket(std::span<const EquivalenceItem> items, int min_degree = 0);

/// Evaluates both routes on every member (in parallel, assembled in input order).
EquivalenceReport equivalence_report(std::span<const FamilyMember> family, const NormRoute& route_a,
                                     const NormRoute& route_b, unsigned threads = 1);

}  // namespace besov
