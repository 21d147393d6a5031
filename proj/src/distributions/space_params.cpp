#include "besov/distributions/space_params.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "besov/sphere/modes.h"

namespace besov {

int choose_k(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("choose_k: s must be positive");
  // 2(k-1) <= s < 2k  <=>  k - 1 = floor(s/2)
  return static_cast<int>(std::floor(s / 2.0)) + 1;
}

SpaceParams SpaceParams::make(int dimension, double s, double q) {
  require_supported_dimension(dimension);
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("SpaceParams: s must be positive");
  if (!std::isfinite(q) || q < 1.0) throw std::invalid_argument("SpaceParams: q must be >= 1");
  if (q == 1.0 && dimension != 2)
    throw std::invalid_argument("SpaceParams: q = 1 is only admitted for N = 2 (got N=" +
                                std::to_string(dimension) + ")");
  return SpaceParams(dimension, s, q, choose_k(s));
}

}  // namespace besov
