#pragma once

#include <filesystem>
#include <string>

#include "besov/distributions/boundary_distribution.h"

namespace besov {

/// Coefficient file schema:
///   {"dimension": 2|3, "n_max": int, "basis": "real-orthonormal",
///    "coefficients": [{"n": int, "m": int, "value": number}, ...]}
/// Modes absent from the list are zero; duplicates and out-of-range modes
/// are rejected with std::invalid_argument.
BoundaryDistribution parse_coefficients(const std::string& json_text);
std::string format_coefficients(const BoundaryDistribution& mu);

BoundaryDistribution read_coefficients(const std::filesystem::path& path);
void write_coefficients(const BoundaryDistribution& mu, const std::filesystem::path& path);

}  // namespace besov
