#include "besov/norms/equivalence.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "besov/parallel.h"

namespace besov {

NormRoute weighted_ball_route(const SpaceParams& params, const BallNormOptions& options) {
  return {"weighted_ball", [params, options](const BoundaryDistribution& mu) {
            return weighted_ball_norm(mu, params, options);
          }};
}

NormRoute semigroup_lifting_route(const SpaceParams& params, const SemigroupNormOptions& options) {
  return {"semigroup_lifting", [params, options](const BoundaryDistribution& mu) {
            return negative_norm_via_lifting(mu, params, options);
          }};
}

NormRoute spectral_route(double s, Smoothness sign) {
  return {"spectral_q2", [s, sign](const BoundaryDistribution& mu) {
            NormEstimate est;
            est.value = spectral_norm_q2(mu, s, sign);
            est.finite = std::isfinite(est.value);
            return est;
          }};
}

void EquivalenceReport::summarize() {
  all_finite = true;
  all_converged = true;
  ratio_min = std::numeric_limits<double>::infinity();
  ratio_max = -std::numeric_limits<double>::infinity();
  for (const EquivalenceItem& item : items) {
    all_converged = all_converged && item.converged;
    if (!std::isfinite(item.ratio) || !(item.ratio > 0.0)) {
      all_finite = false;
      continue;
    }
    ratio_min = std::min(ratio_min, item.ratio);
    ratio_max = std::max(ratio_max, item.ratio);
  }
  bracket = ratio_bracket(items);
}

double ratio_bracket(std::span<const EquivalenceItem> items, int min_degree) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const EquivalenceItem& item : items) {
    if (item.degree < min_degree) continue;
    any = true;
    if (!std::isfinite(item.ratio) || !(item.ratio > 0.0)) return std::numeric_limits<double>::infinity();
    lo = std::min(lo, item.ratio);
    hi = std::max(hi, item.ratio);
  }
  return any ? hi / lo : std::numeric_limits<double>::quiet_NaN();
}

EquivalenceReport equivalence_report(std::span<const FamilyMember> family, const NormRoute& route_a,
                                     const NormRoute& route_b, unsigned threads) {
  EquivalenceReport report;
  report.route_a = route_a.name;
  report.route_b = route_b.name;
  report.items.resize(family.size());
  parallel_for(family.size(), threads, [&](std::size_t i) {
    const FamilyMember& member = family[i];
    const NormEstimate a = route_a.evaluate(member.mu);
    const NormEstimate b = route_b.evaluate(member.mu);
    EquivalenceItem& item = report.items[i];
    item.id = member.id;
    item.degree = member.degree;
    item.norm_a = a.value;
    item.norm_b = b.value;
    item.ratio = a.value / b.value;
    item.converged = a.converged && b.converged && a.finite && b.finite;
  });
  report.summarize();
  return report;
}

}  // namespace besov
