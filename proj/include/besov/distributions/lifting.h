#pragma once

#include <cstdint>

#include "besov/distributions/boundary_distribution.h"
#include "besov/distributions/space_params.h"
#include "besov/sphere/spectral.h"

namespace besov {

/// Symbol of the order-2 lift on degree n: 1 + n² for N = 2 (the operator
/// 1 - d²/dσ²), (N-2)²/4 + λ_n otherwise. Always >= 1/4.
double lifting_symbol(int dimension, int degree);

/// 𝔹f: degree-n coefficients times lifting_symbol(n)^k.
BoundaryDistribution apply_lifting(const BoundaryDistribution& f, const SpaceParams& params);

/// 𝔹^{-1}μ: degree-n coefficients times lifting_symbol(n)^{-k}.
BoundaryDistribution invert_lifting(const BoundaryDistribution& mu, const SpaceParams& params);

/// Band-limited truncation of the Dirac mass at `pole`: c_a = Y_a(pole).
BoundaryDistribution dirac(int dimension, int n_max, SurfacePoint pole);

/// 64-bit linear congruential generator, state <- a·state + c (mod 2^64)
/// with a = 6364136223846793005, c = 1442695040888963407. Each draw advances
/// the state once and returns the top 53 bits as a double in [0, 1).
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_raw() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  double next_unit() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Coefficients drawn in flat_index order, each uniform in [-1, 1) (2u - 1)
/// and scaled by (1 + n)^{-decay}.
BoundaryDistribution random_band_limited(std::uint64_t seed, int dimension, int n_max, double decay);

}  // namespace besov
