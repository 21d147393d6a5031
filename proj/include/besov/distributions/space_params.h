#pragma once

namespace besov {

/// Unique k >= 1 with 2(k-1) <= s < 2k. Throws std::invalid_argument for s <= 0.
int choose_k(double s);

/// Ambient dimension N and the Besov space B^{-s,q}(S^{N-1}).
///
/// Valid when s > 0 and either q > 1, or q = 1 with N = 2. The derived
/// quantities are k = choose_k(s) and the ball weight exponent sq - 1.
class SpaceParams {
 public:
  /// Throws std::invalid_argument when (N, s, q) is outside the valid set.
  static SpaceParams make(int dimension, double s, double q);

  int dimension() const { return dimension_; }
  double s() const { return s_; }
  double q() const { return q_; }
  int k() const { return k_; }
  double weight_exponent() const { return s_ * q_ - 1.0; }

 private:
  SpaceParams(int dimension, double s, double q, int k) : dimension_(dimension), s_(s), q_(q), k_(k) {}

  int dimension_;
  double s_;
  double q_;
  int k_;
};

}  // namespace besov
