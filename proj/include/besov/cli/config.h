#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "besov/distributions/space_params.h"
#include "besov/sphere/spectral.h"

namespace besov::cli {

/// Raised for unusable experiment configurations (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  std::string kind = "modes";  // "modes", "random", "dirac" or "file"
  std::optional<std::vector<int>> degrees;  // modes: explicit degrees, else degree_min..degree_max
  int degree_min = 0;
  int degree_max = 32;
  int n_max = 32;              // random/dirac truncation
  std::uint64_t seed = 1;      // random: seeds seed, seed+1, ...
  int count = 20;
  double decay = 1.0;
  SurfacePoint pole;
  std::vector<std::string> files;  // file: coefficient documents
};

struct ResolutionSpec {
  int radial_nodes = 128;
  int time_nodes = 64;
  int oversampling = 4;
  double tolerance = 1e-7;
  int max_refinements = 2;
};

struct DiracSpec {
  std::vector<int> n_max_list{32, 64, 128, 256};
  double threshold = 0.01;
};

struct LemmaSpec {
  std::vector<int> k_list{1, 2, 3};
  std::vector<double> t_list{0.0, 0.7};
  double tolerance = 1e-6;
  double gamma_tolerance = 1e-8;
};

struct DualSpec {
  double p = 2.0;
  double profile_exponent = 0.2;  // φ = (1 - r)^{profile_exponent} Y_n
  int degree_min = 0;
  int degree_max = 64;
  int bracket_min_degree = 16;
  std::optional<double> bracket_limit;
  int pairing_max_degree = 16;
  double pairing_tolerance = 1e-8;
};

struct MonotonicitySpec {
  int count = 50;
  std::vector<double> q_list{1.5, 2.0, 4.0};
  int radial_points = 64;
  double tolerance = 1e-12;
};

struct ExperimentConfig {
  int dimension = 2;
  double s = 1.0;
  double q = 2.0;
  FamilySpec family;
  ResolutionSpec resolution;
  DiracSpec dirac;
  LemmaSpec lemma;
  DualSpec dual;
  MonotonicitySpec monotonicity;
  std::optional<double> bracket_limit;  // verify-equivalence: violation when exceeded
  bool require_convergence = false;     // exit 3 when any estimate is flagged unconverged
  std::filesystem::path output_dir = "besov-out";

  SpaceParams params() const;  // throws ConfigError

  /// Full validation; throws ConfigError.
  void validate() const;
};

/// Command-line overrides (highest precedence).
struct Overrides {
  std::optional<double> s;
  std::optional<double> q;
  std::optional<int> dimension;
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

/// Defaults, then the JSON document, then the overrides.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::optional<std::filesystem::path>& path, const Overrides& overrides);
void apply_overrides(ExperimentConfig& config, const Overrides& overrides);

}  // namespace besov::cli
