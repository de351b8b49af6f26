// nibb: CDFs of the restricted maximum of non-intersecting Brownian bridges,
// exact identity checks, samplers and theory-vs-samples comparisons.
//
// Exit codes: 0 success, 1 check or comparison failed, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nibb/compare.hpp"
#include "nibb/errors.hpp"
#include "nibb/exactcheck.hpp"
#include "nibb/fredholm.hpp"
#include "nibb/io.hpp"
#include "nibb/kernels.hpp"
#include "nibb/montecarlo.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr const char* kOutputDirEnv = "NIBB_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;
};

GridSpec parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = (a == std::string::npos) ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos) throw UsageError("--grid must be min:max:points");
  GridSpec g;
  try {
    g.lo = std::stod(text.substr(0, a));
    g.hi = std::stod(text.substr(a + 1, b - a - 1));
    g.points = std::stoi(text.substr(b + 1));
  } catch (const std::exception&) {
    throw UsageError("--grid must be min:max:points, got '" + text + "'");
  }
  if (g.points < 2) throw UsageError("--grid needs at least 2 points");
  if (!(g.hi > g.lo)) throw UsageError("--grid needs max > min");
  return g;
}

// Resolves where a command writes: --output wins, then $NIBB_OUTPUT_DIR/<name>,
// otherwise stdout.
void emit(const std::string& text, const std::string& output, const std::string& default_name) {
  std::string path = output;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / default_name).string();
    }
  }
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  nibb::write_file(path, text);
  std::cerr << "wrote " << path << "\n";
}

std::string fmt_name(double v) {
  std::string s = nibb::format_real(v);
  for (auto& ch : s)
    if (ch == '.') ch = 'p';
  return s;
}

struct Common {
  std::string output;
  std::string format = "csv";
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool has_csv = true) {
  cmd->add_option("-o,--output", c.output, "Output file ('-' for stdout; default $NIBB_OUTPUT_DIR/<name> or stdout)");
  if (has_csv) cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

// ------------------------------------------------------------------ cdf

struct CdfArgs {
  Common common;
  std::string model;
  int N = 1;
  double p = 0.5;
  int m = 1;
  double a = 0.5;
  std::string method = "hermite";
  std::string grid;
};

int run_cdf(const CdfArgs& args) {
  std::optional<GridSpec> g;
  if (!args.grid.empty()) g = parse_grid(args.grid);
  auto grid_or = [&](std::vector<double> fallback) {
    return g ? nibb::linear_grid(g->lo, g->hi, g->points) : fallback;
  };
  nibb::CdfCurve curve;
  std::string name;
  if (args.model == "restricted-max") {
    if (!(args.p > 0.0 && args.p < 1.0)) throw UsageError("--p must lie in (0, 1)");
    nibb::ParitySplit::of(args.N);
    curve = nibb::restricted_max_curve(args.N, args.p, grid_or(nibb::default_grid_restricted_max(args.N, args.p)));
    name = "cdf-restricted-max-N" + std::to_string(args.N) + "-p" + fmt_name(args.p);
  } else if (args.model == "limit") {
    nibb::ParitySplit::of(args.N);
    curve = nibb::limit_curve(args.N, args.method, grid_or(nibb::default_grid_limit(args.N)));
    name = "cdf-limit-" + args.method + "-N" + std::to_string(args.N);
  } else {
    if (args.m < 1) throw UsageError("--m must be at least 1");
    if (!(args.a > -1.0)) throw UsageError("--a must exceed -1");
    curve = nibb::lue_curve(args.m, args.a, grid_or(nibb::default_grid_lue(args.m, args.a)));
    name = "cdf-lue-m" + std::to_string(args.m) + "-a" + fmt_name(args.a);
  }
  if (const std::string bad = nibb::check_curve(curve); !bad.empty()) {
    std::cerr << "nibb: computed curve violates CDF invariants: " << bad << "\n";
    return kFailed;
  }
  const bool json = args.common.format == "json";
  emit(json ? nibb::curve_to_json(curve) : nibb::curve_to_csv(curve), args.common.output, name + (json ? ".json" : ".csv"));
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string output;
  int n_max = -1;
  std::vector<std::string> radii;
  std::string suite = "all";
  int lemma1_m_max = -1;
  int lemma1_d_max = -1;
  int lemma2_max = -1;
  int aux_n_max = -1;
};

int run_verify(const VerifyArgs& args) {
  nibb::VerifyConfig cfg;
  if (args.n_max >= 0) {
    if (args.n_max < 1) throw UsageError("--N-max must be at least 1");
    cfg.n_max_props = args.n_max;
    cfg.n_max_sqt = args.n_max;
  }
  if (!args.radii.empty()) {
    cfg.radii.clear();
    for (const auto& r : args.radii) {
      try {
        cfg.radii.push_back(nibb::parse_rational(r));
      } catch (const std::invalid_argument& e) {
        throw UsageError("--r: " + std::string(e.what()));
      }
    }
  }
  if (args.lemma1_m_max >= 0) cfg.lemma1_m_max = args.lemma1_m_max;
  if (args.lemma1_d_max >= 0) cfg.lemma1_d_max = args.lemma1_d_max;
  if (args.lemma2_max >= 0) cfg.lemma2_max = args.lemma2_max;
  if (args.aux_n_max >= 0) cfg.aux_n_max = args.aux_n_max;
  if (args.suite != "all") {
    cfg.propositions = args.suite == "propositions";
    cfg.lemmas = args.suite == "lemmas";
    cfg.auxiliary = args.suite == "auxiliary";
  }
  const auto results = nibb::run_verification(cfg);
  std::size_t failures = 0;
  for (const auto& r : results)
    if (!r.pass) {
      ++failures;
      std::cerr << "FAIL " << r.identity << " [" << r.parameters << "] " << r.counterexample.value_or("") << "\n";
    }
  emit(nibb::identity_report_json(results), args.output, "verify-report.json");
  std::cerr << results.size() - failures << "/" << results.size() << " identities hold\n";
  return failures == 0 ? kOk : kFailed;
}

// -------------------------------------------------------------- simulate

struct SimulateArgs {
  Common common;
  std::string model;
  int N = 1;
  double p = 0.5;
  int steps = 4096;
  int n = 2;
  int m = -1;
  int count = 1000;
  std::uint64_t seed = 1;
  std::string max_mode = "bridge";
  std::vector<double> times;
};

int run_simulate(const SimulateArgs& args) {
  nibb::SampleBatch batch;
  if (args.model == "nibb") {
    nibb::MatrixBridgeConfig cfg;
    cfg.N = args.N;
    cfg.p = args.p;
    cfg.steps = args.steps;
    cfg.seed = args.seed;
    cfg.threads = args.common.threads;
    cfg.max_mode = args.max_mode == "grid" ? nibb::MaxMode::grid : nibb::MaxMode::bridge;
    batch = nibb::sample_nibb_restricted_max(cfg, args.count);
  } else if (args.model == "antige") {
    batch = nibb::sample_antige_top(args.n, args.count, args.seed, args.common.threads);
  } else if (args.model == "wishart") {
    batch = nibb::sample_wishart_loe_top(args.N, args.m < 0 ? args.N + 1 : args.m, args.count, args.seed,
                                         args.common.threads);
  } else if (args.model == "dyson") {
    const auto times = args.times.empty() ? nibb::dyson_times_for_bridge(args.p, args.steps) : args.times;
    batch = nibb::sample_dyson_stationary_top(args.N, times, args.count, args.seed, args.common.threads);
  } else {
    batch = nibb::sample_gue_top(args.N, args.count, args.seed, args.common.threads);
  }
  const bool json = args.common.format == "json";
  const std::string name = "samples-" + args.model + "-seed" + std::to_string(args.seed) + (json ? ".json" : ".csv");
  emit(json ? nibb::samples_to_json(batch) : nibb::samples_to_csv(batch), args.common.output, name);
  return kOk;
}

// --------------------------------------------------------------- compare

struct CompareArgs {
  std::string output;
  std::string pairing;
  int N = 1;
  std::optional<double> p;
  std::optional<int> steps;
  nibb::CompareOptions opt;
};

int run_compare(CompareArgs args) {
  double p = 0.5;
  if (args.pairing == "corollary1-smallp") {
    p = args.p.value_or(1e-3);
    args.opt.steps = args.steps.value_or(8192);
  } else {
    p = args.p.value_or(0.5);
    args.opt.steps = args.steps.value_or(4096);
  }
  const nibb::Comparison c = nibb::run_comparison(args.pairing, args.N, p, args.opt);
  std::fprintf(stderr, "%s: KS = %.5f, threshold %.4f -> %s\n", c.pairing.c_str(), c.ks, c.threshold,
               c.pass ? "pass" : "FAIL");
  emit(nibb::comparison_json(c), args.output, "compare-" + c.pairing + "-N" + std::to_string(args.N) + ".json");
  return c.pass ? kOk : kFailed;
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
  std::string output;
  std::string kind;
  int N = 1;
  double r = 0.0;
  double alpha = 0.0;
  int m = 1;
  double a = 0.5;
  double x = 0.0;
};

int run_matrix(const MatrixArgs& args) {
  auto make = [&]() -> nibb::KernelMatrix {
    if (args.kind == "q") return nibb::q_matrix_closed(args.N, args.r);
    if (args.kind == "q-quadrature") return nibb::q_matrix_quadrature(args.N, args.r);
    if (args.kind == "f") return nibb::f_matrix(args.N, args.r);
    if (args.kind == "s") return nibb::s_matrix(args.N, args.r);
    if (args.kind == "t") return nibb::t_matrix(args.N, args.r);
    if (args.kind == "a") return nibb::a_matrix(args.N, args.r);
    if (args.kind == "m") return nibb::m_matrix_general_p(args.N, args.r, args.alpha);
    return nibb::laguerre_kernel_matrix(args.m, args.a, args.x);
  };
  emit(make().to_csv(), args.output, "matrix-" + args.kind + ".csv");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted maxima of non-intersecting Brownian bridges: CDFs, exact checks, sampling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nibb 0.3.0");

  CdfArgs cdf;
  auto* cdf_cmd = app.add_subcommand("cdf", "Tabulate a CDF on a grid");
  cdf_cmd->add_option("model", cdf.model, "restricted-max | limit | lue")
      ->required()
      ->check(CLI::IsMember({"restricted-max", "limit", "lue"}));
  cdf_cmd->add_option("--N", cdf.N, "Number of paths");
  cdf_cmd->add_option("--p", cdf.p, "Interval end p in (0,1)");
  cdf_cmd->add_option("--m", cdf.m, "LUE size");
  cdf_cmd->add_option("--a", cdf.a, "LUE exponent a > -1");
  cdf_cmd->add_option("--method", cdf.method, "Limit evaluation route")->check(CLI::IsMember({"hermite", "laguerre"}));
  cdf_cmd->add_option("--grid", cdf.grid, "min:max:points (default: model grid)");
  add_common(cdf_cmd, cdf.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the exact identities in rational arithmetic");
  verify_cmd->alias("verify-identities");
  verify_cmd->add_option("--N-max", verify.n_max, "Largest N for the matrix identities");
  verify_cmd->add_option("--r", verify.radii, "Rational r values (p/q), repeatable");
  verify_cmd->add_option("--suite", verify.suite, "Which checks to run")
      ->check(CLI::IsMember({"all", "propositions", "lemmas", "auxiliary"}));
  verify_cmd->add_option("--lemma1-m-max", verify.lemma1_m_max);
  verify_cmd->add_option("--lemma1-d-max", verify.lemma1_d_max);
  verify_cmd->add_option("--lemma2-max", verify.lemma2_max);
  verify_cmd->add_option("--aux-n-max", verify.aux_n_max);
  verify_cmd->add_option("-o,--output", verify.output, "Report file (JSON)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Draw samples from a random-matrix model");
  sim_cmd->add_option("model", sim.model, "nibb | antige | wishart | dyson | gue")
      ->required()
      ->check(CLI::IsMember({"nibb", "antige", "wishart", "dyson", "gue"}));
  sim_cmd->add_option("--N", sim.N, "Paths / matrix size");
  sim_cmd->add_option("--p", sim.p, "Interval end p");
  sim_cmd->add_option("--steps", sim.steps, "Grid cells over [0,p]");
  sim_cmd->add_option("--n", sim.n, "AntiGE matrix size");
  sim_cmd->add_option("--m", sim.m, "Wishart columns (default N+1)");
  sim_cmd->add_option("--count", sim.count, "Number of draws");
  sim_cmd->add_option("--seed", sim.seed, "Random seed");
  sim_cmd->add_option("--max-mode", sim.max_mode, "Running maximum: bridge | grid")
      ->check(CLI::IsMember({"bridge", "grid"}));
  sim_cmd->add_option("--times", sim.times, "Observation times for the Dyson sampler");
  add_common(sim_cmd, sim.common);

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare samples with the theoretical CDF");
  cmp_cmd->add_option("pairing", cmp.pairing)->required()->check(CLI::IsMember(nibb::comparison_names()));
  cmp_cmd->add_option("--N", cmp.N, "Number of paths");
  cmp_cmd->add_option("--p", cmp.p, "Interval end p");
  cmp_cmd->add_option("--steps", cmp.steps, "Grid cells over [0,p]");
  cmp_cmd->add_option("--count", cmp.opt.count, "Number of draws");
  cmp_cmd->add_option("--seed", cmp.opt.seed, "Random seed");
  cmp_cmd->add_option("--threshold", cmp.opt.threshold, "KS threshold (default per pairing)");
  cmp_cmd->add_option("--threads", cmp.opt.threads, "Worker threads (0 = all cores)");
  cmp_cmd->add_option("-o,--output", cmp.output, "Report file (JSON)");

  MatrixArgs mat;
  auto* mat_cmd = app.add_subcommand("matrix", "Dump a kernel matrix as CSV");
  mat_cmd->add_option("kind", mat.kind)
      ->required()
      ->check(CLI::IsMember({"q", "q-quadrature", "f", "s", "t", "a", "m", "laguerre"}));
  mat_cmd->add_option("--N", mat.N);
  mat_cmd->add_option("--r", mat.r);
  mat_cmd->add_option("--alpha", mat.alpha);
  mat_cmd->add_option("--m", mat.m);
  mat_cmd->add_option("--a", mat.a);
  mat_cmd->add_option("--x", mat.x);
  mat_cmd->add_option("-o,--output", mat.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cdf_cmd) return run_cdf(cdf);
    if (*verify_cmd) return run_verify(verify);
    if (*sim_cmd) return run_simulate(sim);
    if (*cmp_cmd) return run_compare(cmp);
    if (*mat_cmd) return run_matrix(mat);
  } catch (const UsageError& e) {
    std::cerr << "nibb: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // DimensionError, ConfigError and malformed values: bad parameters.
    std::cerr << "nibb: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "nibb: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "nibb: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
