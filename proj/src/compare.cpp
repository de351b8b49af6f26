#include "nibb/compare.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "nibb/errors.hpp"
#include "nibb/fredholm.hpp"
#include "nibb/montecarlo.hpp"

namespace nibb {

namespace {

Comparison finish(std::string pairing, std::map<std::string, double> params, const CompareOptions& opt, double ks,
                  double default_threshold) {
  Comparison c;
  c.pairing = std::move(pairing);
  c.params = std::move(params);
  c.params["count"] = opt.count;
  c.seed = opt.seed;
  c.ks = ks;
  c.threshold = opt.threshold > 0.0 ? opt.threshold : default_threshold;
  c.pass = ks < c.threshold;
  return c;
}

MatrixBridgeConfig bridge_config(int N, double p, const CompareOptions& opt) {
  MatrixBridgeConfig cfg;
  cfg.N = N;
  cfg.p = p;
  cfg.steps = opt.steps;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  return cfg;
}

}  // namespace

Comparison compare_theorem1(int N, const CompareOptions& opt) {
  if (N < 1) throw ConfigError("theorem1: N must be at least 1");
  SampleBatch b = sample_antige_top(N + 1, opt.count, opt.seed, opt.threads);
  for (auto& v : b.values) v *= std::sqrt(2.0);
  const double ks = ks_distance(b, [N](double x) { return limit_cdf_laguerre(N, x); });
  return finish("theorem1", {{"N", N}}, opt, ks, 0.02);
}

Comparison compare_corollary1_smallp(int N, double p, const CompareOptions& opt) {
  SampleBatch b = sample_nibb_restricted_max(bridge_config(N, p, opt), opt.count);
  const double scale = 1.0 / std::sqrt(p);
  for (auto& v : b.values) v *= scale;
  const double ks = ks_distance(b, [N](double x) { return limit_cdf_laguerre(N, x); });
  return finish("corollary1-smallp", {{"N", N}, {"p", p}, {"steps", opt.steps}}, opt, ks, 0.03);
}

Comparison compare_nibm_loe(int N, const CompareOptions& opt) {
  SampleBatch b = sample_nibb_restricted_max(bridge_config(N, 1.0, opt), opt.count);
  for (auto& v : b.values) v = 4.0 * v * v;
  const SampleBatch w = sample_wishart_loe_top(N, N + 1, opt.count, opt.seed + 1, opt.threads);
  const double ks = ks_two_sample(b.values, w.values);
  return finish("nibm-loe", {{"N", N}, {"steps", opt.steps}}, opt, ks, 0.03);
}

Comparison compare_prop2_selfcheck(int N, double p, const CompareOptions& opt) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("prop2-selfcheck: p must lie in (0, 1)");
  const SampleBatch b = sample_nibb_restricted_max(bridge_config(N, p, opt), opt.count);
  const double ks = ks_distance(b, [N, p](double r) { return restricted_max_cdf(N, p, r); });
  return finish("prop2-selfcheck", {{"N", N}, {"p", p}, {"steps", opt.steps}}, opt, ks, 0.02);
}

Comparison compare_dyson_bridge(int N, double p, const CompareOptions& opt) {
  const SampleBatch d = sample_dyson_stationary_top(N, dyson_times_for_bridge(p, opt.steps), opt.count, opt.seed + 1,
                                                    opt.threads);
  SampleBatch b = sample_nibb_restricted_max(bridge_config(N, p, opt), opt.count);
  for (auto& v : b.values) v *= std::sqrt(2.0);
  const double ks = ks_two_sample(d.values, b.values);
  return finish("dyson-bridge", {{"N", N}, {"p", p}, {"steps", opt.steps}}, opt, ks, 0.04);
}

std::vector<std::string> comparison_names() {
  return {"theorem1", "corollary1-smallp", "nibm-loe", "prop2-selfcheck", "dyson-bridge"};
}

Comparison run_comparison(const std::string& pairing, int N, double p, const CompareOptions& opt) {
  if (pairing == "theorem1") return compare_theorem1(N, opt);
  if (pairing == "corollary1-smallp") return compare_corollary1_smallp(N, p, opt);
  if (pairing == "nibm-loe") return compare_nibm_loe(N, opt);
  if (pairing == "prop2-selfcheck") return compare_prop2_selfcheck(N, p, opt);
  if (pairing == "dyson-bridge") return compare_dyson_bridge(N, p, opt);
  throw std::invalid_argument("unknown pairing '" + pairing + "'");
}

std::string comparison_json(const Comparison& c) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  const nlohmann::json j = {
      {"meta", {{"pairing", c.pairing}, {"seed", c.seed}, {"params", params}}},
      {"data", {{"ks", c.ks}, {"threshold", c.threshold}, {"pass", c.pass}}}};
  return j.dump(1) + "\n";
}

}  // namespace nibb
