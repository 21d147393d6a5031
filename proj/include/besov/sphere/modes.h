#pragma once

#include <cstddef>
#include <vector>

namespace besov {

/// Laplace–Beltrami eigenmode on S^{N-1}.
///
/// N = 3: real spherical harmonic, |order| <= degree; order < 0 selects the
/// sin(|m|φ) member, order > 0 the cos(mφ) member.
/// N = 2: order is 0 for degree 0, otherwise -1 (sin nθ) or +1 (cos nθ).
struct ModeIndex {
  int degree = 0;
  int order = 0;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Throws std::invalid_argument unless N ∈ {2, 3}.
void require_supported_dimension(int dimension);

bool is_valid_mode(int dimension, ModeIndex mode);

/// Number of basis functions of degree <= n_max: 2n_max+1 (N=2), (n_max+1)² (N=3).
std::size_t mode_count(int dimension, int n_max);

/// Number of basis functions of exactly degree n.
std::size_t degree_multiplicity(int dimension, int n);

/// Position of a mode in coefficient storage. Degrees are contiguous and
/// ascending; within a degree orders ascend.
std::size_t flat_index(int dimension, ModeIndex mode);
ModeIndex mode_at(int dimension, std::size_t flat);

std::vector<ModeIndex> enumerate_modes(int dimension, int n_max);

/// λ_n = n(n + N - 2), the eigenvalue of -Δ_σ on degree n.
double eigenvalue(int dimension, int degree);

/// Multiplier of -A on degree n: ((N-2)²/4 + λ_n)^{1/2} = n + (N-2)/2.
double a_multiplier(int dimension, int degree);

/// |S^{N-1}|.
double surface_measure(int dimension);

}  // namespace besov
