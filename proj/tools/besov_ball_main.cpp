#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "besov/cli/commands.h"
#include "besov/cli/config.h"
#include "besov/sphere/spectral.h"

namespace {

using besov::cli::CommandResult;
using besov::cli::ExperimentConfig;

struct CommonFlags {
  std::string config;
  std::optional<double> s, q;
  std::optional<int> dimension, n_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "experiment config (JSON)");
  sub->add_option("--s", f.s, "smoothness s > 0");
  sub->add_option("--q", f.q, "integrability q >= 1");
  sub->add_option("--N", f.dimension, "ambient dimension (2 or 3)");
  sub->add_option("--nmax", f.n_max, "truncation degree for random/dirac families");
  sub->add_option("--seed", f.seed, "first seed of the random family");
  sub->add_option("--out", f.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative-order Besov norms on the unit ball boundary"};
  app.require_subcommand(1);
  CommonFlags flags;
  using Command = CommandResult (*)(const ExperimentConfig&);
  struct Entry {
    const char* name;
    const char* help;
    Command run;
  };
  const Entry entries[] = {
      {"verify-equivalence", "weighted Poisson norm vs lifting/semigroup norm", besov::cli::cmd_verify_equivalence},
      {"dirac-threshold", "weighted norm of truncated Dirac masses", besov::cli::cmd_dirac_threshold},
      {"lemma-check", "nested integral vs single-kernel closed form", besov::cli::cmd_lemma_check},
      {"dual-check", "duality pairing and Green-operator estimate", besov::cli::cmd_dual_check},
      {"monotonicity", "slice integrals of harmonic extensions in r", besov::cli::cmd_monotonicity},
  };
  Command selected = nullptr;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, flags);
    sub->callback([&selected, run = e.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : besov::cli::kInvalidConfig;
  }

  try {
    besov::cli::Overrides overrides{flags.s, flags.q, flags.dimension, flags.n_max, flags.seed, flags.out};
    std::optional<std::filesystem::path> path;
    if (!flags.config.empty()) path = flags.config;
    const ExperimentConfig config = besov::cli::load_config(path, overrides);
    const CommandResult result = selected(config);
    for (const std::string& line : result.lines) std::cout << line << '\n';
    for (const auto& file : result.files) std::cout << "wrote " << file.string() << '\n';
    return result.exit_code;
  } catch (const besov::cli::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return besov::cli::kInvalidConfig;
  } catch (const besov::QuadratureTooCoarse& e) {
    std::cerr << "quadrature: " << e.what() << '\n';
    return besov::cli::kNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return besov::cli::kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return besov::cli::kViolation;
  }
}
