#include "besov/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "besov/cli/output.h"
#include "besov/distributions/coefficient_io.h"
#include "besov/distributions/lifting.h"
#include "besov/green/green_dual.h"
#include "besov/numerics/nested_integrals.h"
#include "besov/parallel.h"

namespace besov::cli {

namespace {

BallNormOptions ball_options(const ResolutionSpec& r) {
  BallNormOptions o;
  o.radial_nodes = r.radial_nodes;
  o.oversampling = r.oversampling;
  o.tolerance = r.tolerance;
  o.max_refinements = r.max_refinements;
  return o;
}

SemigroupNormOptions semigroup_options(const ResolutionSpec& r) {
  SemigroupNormOptions o;
  o.time_nodes = r.time_nodes;
  o.oversampling = r.oversampling;
  o.tolerance = r.tolerance;
  o.max_refinements = r.max_refinements;
  return o;
}

// Zonal (N = 3) or cosine (N = 2) mode of degree n.
ModeIndex representative_mode(int dimension, int n) { return {n, dimension == 2 && n > 0 ? 1 : 0}; }

std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string summary_line(const std::string& label, const EquivalenceReport& r) {
  return label + ": items=" + std::to_string(r.items.size()) + " ratio_min=" + format_number(r.ratio_min) +
         " ratio_max=" + format_number(r.ratio_max) + " bracket=" + format_number(r.bracket) +
         " all_finite=" + yes_no(r.all_finite) + " all_converged=" + yes_no(r.all_converged);
}

std::filesystem::path output_file(const ExperimentConfig& c, const std::string& name) { return c.output_dir / name; }

}  // namespace

std::vector<FamilyMember> build_family(const ExperimentConfig& config) {
  const FamilySpec& f = config.family;
  const int N = config.dimension;
  std::vector<FamilyMember> family;
  if (f.kind == "modes") {
    std::vector<int> degrees;
    if (f.degrees) {
      degrees = *f.degrees;
    } else {
      for (int n = f.degree_min; n <= f.degree_max; ++n) degrees.push_back(n);
    }
    for (int n : degrees)
      family.push_back({"mode_n" + std::to_string(n), n,
                        BoundaryDistribution::single_mode(N, n, representative_mode(N, n))});
  } else if (f.kind == "random") {
    for (int i = 0; i < f.count; ++i) {
      const std::uint64_t seed = f.seed + static_cast<std::uint64_t>(i);
      family.push_back({"seed" + std::to_string(seed), f.n_max, random_band_limited(seed, N, f.n_max, f.decay)});
    }
  } else if (f.kind == "dirac") {
    family.push_back({"dirac_n" + std::to_string(f.n_max), f.n_max, dirac(N, f.n_max, f.pole)});
  } else if (f.kind == "file") {
    for (const std::string& file : f.files) {
      BoundaryDistribution mu = read_coefficients(file);
      if (mu.dimension() != N) throw ConfigError("coefficient file " + file + " has a different dimension");
      family.push_back({std::filesystem::path(file).stem().string(), mu.n_max(), std::move(mu)});
    }
  }
  if (family.empty()) throw ConfigError("family is empty");
  return family;
}

double dirac_membership_threshold(int dimension, double q) { return (dimension - 1) * (1.0 - 1.0 / q); }

std::string classify_trajectory(double last_change, double threshold, double s, double analytic_threshold) {
  if (std::abs(s - analytic_threshold) <= 1e-12 * std::max(1.0, std::abs(analytic_threshold))) return "inconclusive";
  if (!std::isfinite(last_change)) return "diverging";
  return last_change < threshold ? "converged" : "diverging";
}

CommandResult cmd_verify_equivalence(const ExperimentConfig& config) {
  const SpaceParams params = config.params();
  const std::vector<FamilyMember> family = build_family(config);
  const unsigned threads = default_thread_count();
  const NormRoute ball = weighted_ball_route(params, ball_options(config.resolution));
  const NormRoute semigroup = semigroup_lifting_route(params, semigroup_options(config.resolution));
  const EquivalenceReport report = equivalence_report(family, ball, semigroup, threads);
  const bool q2 = params.q() == 2.0;
  EquivalenceReport spectral;
  if (q2) spectral = equivalence_report(family, ball, spectral_route(params.s(), Smoothness::Negative), threads);

  std::vector<std::string> header{"item_id", "n", "norm_poisson", "norm_semigroup"};
  if (q2) header.push_back("norm_spectral");
  header.push_back("ratio");
  header.push_back("converged");
  CsvTable table(header);
  Series ratios{"poisson/semigroup", {}, {}};
  Series spectral_ratios{"poisson/spectral", {}, {}};
  const bool by_degree = config.family.kind == "modes";
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    const EquivalenceItem& item = report.items[i];
    std::vector<std::string> row{item.id, std::to_string(item.degree), format_number(item.norm_a),
                                 format_number(item.norm_b)};
    if (q2) row.push_back(format_number(spectral.items[i].norm_b));
    row.push_back(format_number(item.ratio));
    row.push_back(yes_no(item.converged));
    table.add_row(std::move(row));
    const double x = by_degree ? item.degree : static_cast<double>(i);
    ratios.x.push_back(x);
    ratios.y.push_back(item.ratio);
    if (q2) {
      spectral_ratios.x.push_back(x);
      spectral_ratios.y.push_back(spectral.items[i].ratio);
    }
  }

  CommandResult result;
  const auto csv = output_file(config, "verify_equivalence.csv");
  const auto svg = output_file(config, "verify_equivalence.svg");
  table.write(csv);
  std::vector<Series> plotted{ratios};
  if (q2) plotted.push_back(spectral_ratios);
  write_line_chart(svg,
                   {"Norm ratios, N=" + std::to_string(params.dimension()) + " s=" + format_number(params.s()) +
                        " q=" + format_number(params.q()),
                    by_degree ? "degree n" : "item", "ratio", false, true},
                   plotted);
  result.files = {csv, svg};
  result.lines.push_back(summary_line("poisson vs semigroup", report));
  if (q2) result.lines.push_back(summary_line("poisson vs spectral", spectral));

  bool violation = !report.all_finite || (q2 && !spectral.all_finite);
  if (config.bracket_limit && !(report.bracket <= *config.bracket_limit)) {
    violation = true;
    result.lines.push_back("bracket " + format_number(report.bracket) + " exceeds limit " +
                           format_number(*config.bracket_limit));
  }
  if (violation) {
    result.exit_code = kViolation;
  } else if (config.require_convergence && !report.all_converged) {
    result.exit_code = kNonConvergence;
  }
  return result;
}

CommandResult cmd_dirac_threshold(const ExperimentConfig& config) {
  const SpaceParams params = config.params();
  const std::vector<int>& degrees = config.dirac.n_max_list;
  std::vector<NormEstimate> estimates(degrees.size());
  const BallNormOptions options = ball_options(config.resolution);
  parallel_for(degrees.size(), default_thread_count(), [&](std::size_t i) {
    estimates[i] = weighted_ball_norm(dirac(params.dimension(), degrees[i], config.family.pole), params, options);
  });

  CsvTable table({"n_max", "norm", "relative_change"});
  Series trajectory{"weighted norm", {}, {}};
  double last_change = std::numeric_limits<double>::quiet_NaN();
  bool converged = true;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    double change = std::numeric_limits<double>::quiet_NaN();
    if (i > 0) change = std::abs(estimates[i].value - estimates[i - 1].value) / std::abs(estimates[i].value);
    last_change = change;
    converged = converged && estimates[i].converged && estimates[i].finite;
    table.add_row({std::to_string(degrees[i]), format_number(estimates[i].value), format_number(change)});
    trajectory.x.push_back(degrees[i]);
    trajectory.y.push_back(estimates[i].value);
  }
  const double analytic = dirac_membership_threshold(params.dimension(), params.q());
  const std::string verdict = classify_trajectory(last_change, config.dirac.threshold, params.s(), analytic);

  CommandResult result;
  const auto csv = output_file(config, "dirac_threshold.csv");
  const auto svg = output_file(config, "dirac_threshold.svg");
  table.write(csv);
  write_line_chart(svg, {"Dirac truncation norms, s=" + format_number(params.s()) + " q=" + format_number(params.q()),
                         "n_max", "norm", true, false},
                   {trajectory});
  result.files = {csv, svg};
  result.lines.push_back("last_change=" + format_number(last_change) + " threshold=" +
                         format_number(config.dirac.threshold) + " classification=" + verdict +
                         " analytic_threshold=" + format_number(analytic));
  if (verdict != "inconclusive") {
    const std::string expected = params.s() > analytic ? "converged" : "diverging";
    result.lines.push_back("expected=" + expected);
    if (verdict != expected) result.exit_code = kViolation;
  }
  if (!converged) result.lines.push_back("warning: some truncation norms did not meet the refinement tolerance");
  if (result.exit_code == kPass && config.require_convergence && !converged) result.exit_code = kNonConvergence;
  return result;
}

CommandResult cmd_lemma_check(const ExperimentConfig& config) {
  const LemmaSpec& spec = config.lemma;
  const ScalarFunction phi = [](double tau) { return std::exp(-tau); };
  CsvTable table({"k", "t", "nested", "closed_form", "relative_difference", "pass"});
  CommandResult result;
  int failures = 0;
  for (int k : spec.k_list) {
    for (double t : spec.t_list) {
      const double nested = nested_integral_oracle(k, t, phi);
      const double closed = reduction_closed_form(k, t, phi);
      const double diff = std::abs(nested - closed) / std::abs(closed);
      bool pass = diff <= spec.tolerance;
      if (t == 0.0)
        pass = pass && std::abs(nested - 1.0) <= spec.gamma_tolerance && std::abs(closed - 1.0) <= spec.gamma_tolerance;
      failures += !pass;
      table.add_row({std::to_string(k), format_number(t), format_number(nested), format_number(closed),
                     format_number(diff), yes_no(pass)});
    }
  }
  const auto csv = output_file(config, "lemma_check.csv");
  table.write(csv);
  result.files = {csv};
  result.lines.push_back("cases=" + std::to_string(table.row_count()) + " failures=" + std::to_string(failures));
  if (failures) result.exit_code = kViolation;
  return result;
}

CommandResult cmd_dual_check(const ExperimentConfig& config) {
  const SpaceParams params = config.params();
  const int N = params.dimension();
  const DualSpec& spec = config.dual;
  const unsigned threads = default_thread_count();
  CommandResult result;

  // pairing identity, mode by mode, against a smooth radial profile
  const int pairing_max = spec.pairing_max_degree;
  std::vector<PairingCheck> checks(static_cast<std::size_t>(pairing_max + 1));
  parallel_for(checks.size(), threads, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    const ModeIndex mode = representative_mode(N, n);
    const BoundaryDistribution mu = BoundaryDistribution::single_mode(N, n, mode);
    const BallFunction psi =
        BallFunction::single_mode(N, n, mode, RadialFunction{[](double r) { return 1.0 + r + r * r; }, 0.0});
    checks[i] = duality_pairing_check(mu, psi, params);
  });
  CsvTable pairing({"n", "m", "lhs", "rhs", "relative_discrepancy"});
  double worst = 0.0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const ModeIndex mode = representative_mode(N, static_cast<int>(i));
    pairing.add_row({std::to_string(mode.degree), std::to_string(mode.order), format_number(checks[i].lhs),
                     format_number(checks[i].rhs), format_number(checks[i].relative_discrepancy)});
    if (!(checks[i].relative_discrepancy <= worst)) worst = checks[i].relative_discrepancy;
  }
  const bool pairing_ok = worst <= spec.pairing_tolerance;

  std::vector<BallFamilyMember> family;
  for (int n = spec.degree_min; n <= spec.degree_max; ++n)
    family.push_back({"mode_n" + std::to_string(n), n,
                      BallFunction::single_mode(N, n, representative_mode(N, n),
                                                RadialFunction{[](double) { return 1.0; }, spec.profile_exponent})});
  DualReportOptions options;
  options.semigroup = semigroup_options(config.resolution);
  options.threads = threads;
  const EquivalenceReport report = dual_equivalence_report(family, params.s(), spec.p, options);
  const double bracket = ratio_bracket(report.items, spec.bracket_min_degree);

  CsvTable table({"item_id", "n", "norm_weighted_lp", "norm_boundary", "ratio"});
  Series ratios{"weighted L^p / boundary B^{s,p}", {}, {}};
  for (const EquivalenceItem& item : report.items) {
    table.add_row({item.id, std::to_string(item.degree), format_number(item.norm_a), format_number(item.norm_b),
                   format_number(item.ratio)});
    ratios.x.push_back(item.degree);
    ratios.y.push_back(item.ratio);
  }
  const auto pairing_csv = output_file(config, "dual_pairing.csv");
  const auto csv = output_file(config, "dual_equivalence.csv");
  const auto svg = output_file(config, "dual_equivalence.svg");
  pairing.write(pairing_csv);
  table.write(csv);
  write_line_chart(svg, {"Dual estimate ratios, s=" + format_number(params.s()) + " p=" + format_number(spec.p),
                         "degree n", "ratio", false, true},
                   {ratios});
  result.files = {pairing_csv, csv, svg};
  result.lines.push_back("pairing: modes=" + std::to_string(checks.size()) + " worst_relative_discrepancy=" +
                         format_number(worst) + " tolerance=" + format_number(spec.pairing_tolerance));
  result.lines.push_back(summary_line("dual estimate", report) + " bracket(n>=" +
                         std::to_string(spec.bracket_min_degree) + ")=" + format_number(bracket));

  bool violation = !pairing_ok || !report.all_finite;
  if (spec.bracket_limit && !(bracket <= *spec.bracket_limit)) violation = true;
  if (violation) {
    result.exit_code = kViolation;
  } else if (config.require_convergence && !report.all_converged) {
    result.exit_code = kNonConvergence;
  }
  return result;
}

CommandResult cmd_monotonicity(const ExperimentConfig& config) {
  const int N = config.dimension;
  const MonotonicitySpec& spec = config.monotonicity;
  const int n_max = config.family.n_max;
  std::vector<double> radii(static_cast<std::size_t>(spec.radial_points));
  for (std::size_t j = 0; j < radii.size(); ++j) radii[j] = (static_cast<double>(j) + 0.5) / spec.radial_points;

  struct Case {
    std::uint64_t seed;
    double q;
    std::vector<double> slices;
    double max_violation = 0.0;
  };
  std::vector<Case> cases;
  for (double q : spec.q_list)
    for (int i = 0; i < spec.count; ++i) cases.push_back({config.family.seed + static_cast<std::uint64_t>(i), q, {}});

  parallel_for(cases.size(), default_thread_count(), [&](std::size_t c) {
    Case& item = cases[c];
    const BoundaryDistribution mu = random_band_limited(item.seed, N, n_max, config.family.decay);
    const int band = item.q == 2.0 ? n_max : config.resolution.oversampling * std::max(n_max, 1);
    const SurfaceQuadrature quad = SurfaceQuadrature::for_band_limit(N, band);
    for (double r : radii) item.slices.push_back(slice_power_integral(mu, r, item.q, quad));
    for (std::size_t j = 0; j + 1 < item.slices.size(); ++j) {
      const double drop = (item.slices[j] - item.slices[j + 1]) / item.slices[j];
      item.max_violation = std::max(item.max_violation, drop);
    }
  });

  CsvTable table({"seed", "q", "slice_min", "slice_max", "max_relative_decrease", "pass"});
  std::vector<Series> curves;
  int failures = 0;
  for (const Case& item : cases) {
    const bool pass = item.max_violation <= spec.tolerance;
    failures += !pass;
    table.add_row({std::to_string(item.seed), format_number(item.q), format_number(item.slices.front()),
                   format_number(item.slices.back()), format_number(item.max_violation), yes_no(pass)});
    if (item.seed == config.family.seed) curves.push_back({"q=" + format_number(item.q), radii, item.slices});
  }
  CommandResult result;
  const auto csv = output_file(config, "monotonicity.csv");
  const auto svg = output_file(config, "monotonicity.svg");
  table.write(csv);
  write_line_chart(svg, {"Slice power integrals, seed " + std::to_string(config.family.seed), "r",
                         "integral of |u|^q over the sphere", false, true},
                   curves);
  result.files = {csv, svg};
  result.lines.push_back("cases=" + std::to_string(cases.size()) + " failures=" + std::to_string(failures));
  if (failures) result.exit_code = kViolation;
  return result;
}

}  // namespace besov::cli
