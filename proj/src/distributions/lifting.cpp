#include "besov/distributions/lifting.h"

#include <cmath>
#include <stdexcept>

namespace besov {

namespace {

void require_same_dimension(const BoundaryDistribution& x, const SpaceParams& params) {
  if (x.dimension() != params.dimension())
    throw std::invalid_argument("lifting: distribution and space parameters disagree on N");
}

}  // namespace

double lifting_symbol(int dimension, int degree) {
  require_supported_dimension(dimension);
  if (dimension == 2) return 1.0 + static_cast<double>(degree) * degree;
  const double shift = 0.25 * (dimension - 2) * (dimension - 2);
  return shift + eigenvalue(dimension, degree);
}

BoundaryDistribution apply_lifting(const BoundaryDistribution& f, const SpaceParams& params) {
  require_same_dimension(f, params);
  const int k = params.k();
  return f.map_degrees([&](int n) { return std::pow(lifting_symbol(f.dimension(), n), k); });
}

BoundaryDistribution invert_lifting(const BoundaryDistribution& mu, const SpaceParams& params) {
  require_same_dimension(mu, params);
  const int k = params.k();
  return mu.map_degrees([&](int n) { return 1.0 / std::pow(lifting_symbol(mu.dimension(), n), k); });
}

BoundaryDistribution dirac(int dimension, int n_max, SurfacePoint pole) {
  return BoundaryDistribution(dimension, n_max, evaluate_basis(dimension, n_max, pole));
}

BoundaryDistribution random_band_limited(std::uint64_t seed, int dimension, int n_max, double decay) {
  BoundaryDistribution out(dimension, n_max);
  Lcg64 rng(seed);
  std::vector<double> c(out.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ModeIndex mode = mode_at(dimension, i);
    c[i] = (2.0 * rng.next_unit() - 1.0) * std::pow(1.0 + mode.degree, -decay);
  }
  return BoundaryDistribution(dimension, n_max, std::move(c));
}

}  // namespace besov
