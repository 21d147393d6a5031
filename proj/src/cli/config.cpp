#include "besov/cli/config.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace besov::cli {

namespace {

using nlohmann::json;

template <class T>
void read_field(const json& node, const char* key, T& target) {
  const auto it = node.find(key);
  if (it == node.end() || it->is_null()) return;
  try {
    target = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

template <class T>
void read_optional(const json& node, const char* key, std::optional<T>& target) {
  T value{};
  const auto it = node.find(key);
  if (it == node.end() || it->is_null()) return;
  read_field(node, key, value);
  target = value;
}

const json& section(const json& root, const char* key) {
  static const json empty = json::object();
  const auto it = root.find(key);
  if (it == root.end()) return empty;
  if (!it->is_object()) throw ConfigError(std::string("config section '") + key + "' must be an object");
  return *it;
}

void read_family(const json& node, FamilySpec& f) {
  read_field(node, "kind", f.kind);
  read_optional(node, "degrees", f.degrees);
  read_field(node, "degree_min", f.degree_min);
  read_field(node, "degree_max", f.degree_max);
  read_field(node, "n_max", f.n_max);
  read_field(node, "seed", f.seed);
  read_field(node, "count", f.count);
  read_field(node, "decay", f.decay);
  read_field(node, "files", f.files);
  if (node.contains("pole")) {
    const json& pole = node.at("pole");
    if (!pole.is_object()) throw ConfigError("config field 'family.pole' must be an object");
    read_field(pole, "theta", f.pole.theta);
    read_field(pole, "phi", f.pole.phi);
  }
}

}  // namespace

SpaceParams ExperimentConfig::params() const {
  try {
    return SpaceParams::make(dimension, s, q);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void ExperimentConfig::validate() const {
  (void)params();
  const ResolutionSpec& r = resolution;
  if (r.radial_nodes < 1 || r.time_nodes < 1 || r.oversampling < 1 || r.max_refinements < 0 || !(r.tolerance > 0.0))
    throw ConfigError("resolutions must be positive");
  const FamilySpec& f = family;
  if (f.kind != "modes" && f.kind != "random" && f.kind != "dirac" && f.kind != "file")
    throw ConfigError("family.kind must be one of modes, random, dirac, file");
  if (f.kind == "modes" && f.degrees && f.degrees->empty()) throw ConfigError("family is empty");
  if (f.kind == "modes" && !f.degrees && f.degree_max < f.degree_min) throw ConfigError("family: empty degree range");
  if (f.degrees)
    for (int n : *f.degrees)
      if (n < 0) throw ConfigError("family: degrees must be nonnegative");
  if (f.degree_min < 0) throw ConfigError("family: degrees must be nonnegative");
  if (f.kind == "random" && f.count < 1) throw ConfigError("family: random count must be positive");
  if (f.kind == "file" && f.files.empty()) throw ConfigError("family: no coefficient files given");
  if (f.n_max < 0) throw ConfigError("family: n_max must be nonnegative");
  if (dirac.n_max_list.size() < 2) throw ConfigError("dirac: need at least two truncation degrees");
  for (int n : dirac.n_max_list)
    if (n < 1) throw ConfigError("dirac: truncation degrees must be positive");
  if (!(dirac.threshold > 0.0)) throw ConfigError("dirac: threshold must be positive");
  for (int k : lemma.k_list)
    if (k < 1 || k > 3) throw ConfigError("lemma: k must lie in [1, 3]");
  if (lemma.k_list.empty() || lemma.t_list.empty()) throw ConfigError("lemma: empty k or t list");
  if (!(dual.p > 1.0)) throw ConfigError("dual: p must exceed 1");
  if (dual.degree_max < dual.degree_min || dual.degree_min < 0) throw ConfigError("dual: empty degree range");
  if (monotonicity.count < 1 || monotonicity.radial_points < 2 || monotonicity.q_list.empty())
    throw ConfigError("monotonicity: invalid sweep");
  for (double q : monotonicity.q_list)
    if (!(q >= 1.0)) throw ConfigError("monotonicity: q must be >= 1");
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig c;
  read_field(root, "N", c.dimension);
  read_field(root, "s", c.s);
  read_field(root, "q", c.q);
  read_optional(root, "bracket_limit", c.bracket_limit);
  read_field(root, "require_convergence", c.require_convergence);
  if (root.contains("output")) {
    std::string dir;
    read_field(section(root, "output"), "dir", dir);
    if (!dir.empty()) c.output_dir = dir;
  }
  read_family(section(root, "family"), c.family);

  const json& res = section(root, "resolution");
  read_field(res, "radial_nodes", c.resolution.radial_nodes);
  read_field(res, "time_nodes", c.resolution.time_nodes);
  read_field(res, "oversampling", c.resolution.oversampling);
  read_field(res, "tolerance", c.resolution.tolerance);
  read_field(res, "max_refinements", c.resolution.max_refinements);

  const json& dirac = section(root, "dirac");
  read_field(dirac, "n_max_list", c.dirac.n_max_list);
  read_field(dirac, "threshold", c.dirac.threshold);

  const json& lemma = section(root, "lemma");
  read_field(lemma, "k_list", c.lemma.k_list);
  read_field(lemma, "t_list", c.lemma.t_list);
  read_field(lemma, "tolerance", c.lemma.tolerance);
  read_field(lemma, "gamma_tolerance", c.lemma.gamma_tolerance);

  const json& dual = section(root, "dual");
  read_field(dual, "p", c.dual.p);
  read_field(dual, "profile_exponent", c.dual.profile_exponent);
  read_field(dual, "degree_min", c.dual.degree_min);
  read_field(dual, "degree_max", c.dual.degree_max);
  read_field(dual, "bracket_min_degree", c.dual.bracket_min_degree);
  read_optional(dual, "bracket_limit", c.dual.bracket_limit);
  read_field(dual, "pairing_max_degree", c.dual.pairing_max_degree);
  read_field(dual, "pairing_tolerance", c.dual.pairing_tolerance);

  const json& mono = section(root, "monotonicity");
  read_field(mono, "count", c.monotonicity.count);
  read_field(mono, "q_list", c.monotonicity.q_list);
  read_field(mono, "radial_points", c.monotonicity.radial_points);
  read_field(mono, "tolerance", c.monotonicity.tolerance);
  return c;
}

void apply_overrides(ExperimentConfig& config, const Overrides& o) {
  if (o.s) config.s = *o.s;
  if (o.q) config.q = *o.q;
  if (o.dimension) config.dimension = *o.dimension;
  if (o.n_max) config.family.n_max = *o.n_max;
  if (o.seed) config.family.seed = *o.seed;
  if (o.out) config.output_dir = *o.out;
}

ExperimentConfig load_config(const std::optional<std::filesystem::path>& path, const Overrides& overrides) {
  ExperimentConfig config;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open config file " + path->string());
    std::ostringstream text;
    text << in.rdbuf();
    config = parse_config(text.str());
  }
  apply_overrides(config, overrides);
  config.validate();
  return config;
}

}  // namespace besov::cli
