#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "besov/cli/commands.h"
#include "besov/cli/config.h"
#include "besov/cli/output.h"
#include "besov/distributions/lifting.h"

using namespace besov;
using namespace besov::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("besov_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

int run_binary(const std::string& args, const std::string& env = "") {
  const std::string command = env + " \"" + std::string(BESOV_BALL_EXE) + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config precedence: defaults, then file, then flags") {
  const ExperimentConfig defaults = parse_config("{}");
  CHECK(defaults.dimension == 2);
  CHECK(defaults.s == 1.0);
  CHECK(defaults.q == 2.0);
  CHECK(defaults.family.kind == "modes");
  CHECK(defaults.resolution.tolerance == 1e-7);
  CHECK(defaults.dirac.n_max_list == std::vector<int>{32, 64, 128, 256});
  CHECK_FALSE(defaults.require_convergence);

  const fs::path dir = scratch_dir("precedence");
  write_file(dir / "cfg.json",
             R"({"N": 3, "s": 0.7, "q": 3, "family": {"kind": "random", "n_max": 6, "seed": 9, "count": 3},
                 "resolution": {"time_nodes": 32}, "output": {"dir": "from-file"}})");
  const ExperimentConfig file_only = load_config(dir / "cfg.json", {});
  CHECK(file_only.dimension == 3);
  CHECK(file_only.s == 0.7);
  CHECK(file_only.q == 3.0);
  CHECK(file_only.family.kind == "random");
  CHECK(file_only.family.n_max == 6);
  CHECK(file_only.resolution.time_nodes == 32);
  CHECK(file_only.resolution.radial_nodes == 128);
  CHECK(file_only.output_dir == fs::path("from-file"));

  Overrides flags;
  flags.s = 1.4;
  flags.n_max = 4;
  flags.seed = 77;
  flags.out = "from-flag";
  const ExperimentConfig merged = load_config(dir / "cfg.json", flags);
  CHECK(merged.s == 1.4);
  CHECK(merged.q == 3.0);
  CHECK(merged.family.n_max == 4);
  CHECK(merged.family.seed == 77);
  CHECK(merged.output_dir == fs::path("from-flag"));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"s": -1})").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"N": 3, "q": 1})").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"N": 4})").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"family": {"kind": "spiral"}})").validate(), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"resolution": {"tolerance": 0}})").validate(), ConfigError);
  CHECK_THROWS_AS(load_config(fs::path("/nonexistent/besov.json"), {}), ConfigError);
  CHECK_NOTHROW(parse_config(R"({"N": 2, "q": 1, "s": 0.5})").validate());

  const ExperimentConfig empty = parse_config(R"({"family": {"kind": "modes", "degrees": []}})");
  CHECK_THROWS_AS(build_family(empty), ConfigError);
}

TEST_CASE("build_family") {
  ExperimentConfig config = parse_config(R"({"family": {"kind": "modes", "degrees": [0, 3, 5]}})");
  std::vector<FamilyMember> modes = build_family(config);
  REQUIRE(modes.size() == 3);
  CHECK(modes[1].degree == 3);
  CHECK(modes[1].mu[{3, 1}] == 1.0);

  config = parse_config(R"({"N": 3, "family": {"kind": "random", "n_max": 4, "seed": 5, "count": 4, "decay": 0.5}})");
  const std::vector<FamilyMember> random = build_family(config);
  REQUIRE(random.size() == 4);
  const BoundaryDistribution expected = random_band_limited(7, 3, 4, 0.5);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(random[2].mu.coefficients()[i] == expected.coefficients()[i]);

  config = parse_config(R"({"family": {"kind": "dirac", "n_max": 8, "pole": {"theta": 0.4, "phi": 0.0}}})");
  const std::vector<FamilyMember> diracs = build_family(config);
  REQUIRE_FALSE(diracs.empty());
  CHECK(std::abs(diracs.back().mu[{2, -1}] - std::sin(0.8) / std::sqrt(M_PI)) < 1e-15);
}

TEST_CASE("dirac classification") {
  CHECK(dirac_membership_threshold(2, 2.0) == 0.5);
  CHECK(dirac_membership_threshold(3, 2.0) == 1.0);
  CHECK(dirac_membership_threshold(2, 1.0) == 0.0);
  CHECK(classify_trajectory(0.001, 0.01, 0.8, 0.5) == "converged");
  CHECK(classify_trajectory(0.1, 0.01, 0.4, 0.5) == "diverging");
  CHECK(classify_trajectory(0.1, 0.01, 0.5, 0.5) == "inconclusive");
}

TEST_CASE("output formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(NAN) == "nan");

  CsvTable table({"a", "b"});
  table.add_row({"1", "2"});
  CHECK_THROWS_AS(table.add_row({"1"}), std::invalid_argument);
  CHECK(table.str() == "a,b\n1,2\n");
  const fs::path dir = scratch_dir("csv");
  table.write(dir / "nested" / "t.csv");
  CHECK(read_file(dir / "nested" / "t.csv") == "a,b\n1,2\n");

  const std::string svg = line_chart_svg({"title", "x", "y", true, true},
                                         {{"series", {1.0, 10.0, 100.0}, {1.0, -1.0, NAN}}});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("series") != std::string::npos);
}

TEST_CASE("verify-equivalence with q = 1 on the circle") {
  ExperimentConfig config = parse_config(R"({"N": 2, "s": 0.5, "q": 1, "family": {"kind": "modes", "degrees": [0, 1, 4]}})");
  config.output_dir = scratch_dir("q1");
  const CommandResult result = cmd_verify_equivalence(config);
  CHECK(result.exit_code == kPass);
  const std::string csv = read_file(config.output_dir / "verify_equivalence.csv");
  CHECK(csv.rfind("item_id,n,norm_poisson,norm_semigroup", 0) == 0);
  CHECK(csv.find("inf") == std::string::npos);
  CHECK(csv.find("nan") == std::string::npos);
}

TEST_CASE("binary exit codes") {
  const fs::path dir = scratch_dir("exit");
  const std::string out = " --out \"" + dir.string() + "\"";
  write_file(dir / "small.json", R"({"family": {"kind": "random", "n_max": 6, "count": 3}})");
  write_file(dir / "empty.json", R"({"family": {"kind": "modes", "degrees": []}})");
  write_file(dir / "tight.json", R"({"family": {"kind": "modes", "degrees": [1, 8]}, "bracket_limit": 1.0000001})");

  CHECK(run_binary("verify-equivalence --config \"" + (dir / "small.json").string() + "\"" + out) == 0);
  CHECK(run_binary("verify-equivalence --config \"" + (dir / "empty.json").string() + "\"" + out) == 2);
  CHECK(run_binary("verify-equivalence --config \"" + (dir / "tight.json").string() + "\"" + out) == 1);
  CHECK(run_binary("verify-equivalence --s -1" + out) == 2);
  CHECK(run_binary("verify-equivalence --N 3 --q 1" + out) == 2);
  CHECK(run_binary("no-such-command") == 2);
  CHECK(run_binary("lemma-check" + out) == 0);
}

TEST_CASE("outputs do not depend on the thread count") {
  const fs::path one = scratch_dir("threads1");
  const fs::path many = scratch_dir("threads4");
  const std::string args = "verify-equivalence --N 2 --s 0.7 --q 3 --nmax 6 --seed 3 --out ";
  write_file(one / "cfg.json", R"({"family": {"kind": "random", "count": 6}})");
  const std::string cfg = " --config \"" + (one / "cfg.json").string() + "\"";
  REQUIRE(run_binary(args + "\"" + one.string() + "\"" + cfg, "BESOV_BALL_THREADS=1") == 0);
  REQUIRE(run_binary(args + "\"" + many.string() + "\"" + cfg, "BESOV_BALL_THREADS=4") == 0);
  CHECK(read_file(one / "verify_equivalence.csv") == read_file(many / "verify_equivalence.csv"));
  CHECK_FALSE(read_file(one / "verify_equivalence.csv").empty());
}
