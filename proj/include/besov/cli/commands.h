#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "besov/cli/config.h"
#include "besov/norms/equivalence.h"

namespace besov::cli {

enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kInvalidConfig = 2,
  kNonConvergence = 3,
};

struct CommandResult {
  int exit_code = kPass;
  std::vector<std::string> lines;  // human-readable summary, one line each
  std::vector<std::filesystem::path> files;
};

/// The family described by config.family. Throws ConfigError when it is empty
/// or inconsistent with the configured dimension.
std::vector<FamilyMember> build_family(const ExperimentConfig& config);

/// (N - 1)(1 - 1/q): δ belongs to B^{-s,q}(S^{N-1}) exactly when s exceeds it.
double dirac_membership_threshold(int dimension, double q);

/// "converged", "diverging" or "inconclusive".
std::string classify_trajectory(double last_change, double threshold, double s, double analytic_threshold);

CommandResult cmd_verify_equivalence(const ExperimentConfig& config);
CommandResult cmd_dirac_threshold(const ExperimentConfig& config);
CommandResult cmd_lemma_check(const ExperimentConfig& config);
CommandResult cmd_dual_check(const ExperimentConfig& config);
CommandResult cmd_monotonicity(const ExperimentConfig& config);

}  // namespace besov::cli
