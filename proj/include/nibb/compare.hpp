#pragma once

// Named theory-versus-samples pairings. Each draws a batch, measures a KS
// distance against the exact CDF (or against a second batch) and compares it
// with a threshold.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nibb {

struct Comparison {
  std::string pairing;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  double ks = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct CompareOptions {
  int count = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int steps = 4096;
  double threshold = 0.0;  // 0 = the pairing's default
};

// sqrt(2) * top AntiGE(N+1) value against limit_cdf_laguerre(N, .). Default threshold 0.02.
Comparison compare_theorem1(int N, const CompareOptions& opt);

// M_N(p)/sqrt(p) from the bridge sampler against limit_cdf_laguerre(N, .). Default threshold 0.03.
Comparison compare_corollary1_smallp(int N, double p, const CompareOptions& opt);

// Two-sample: 4 M_N(1)^2 against top eigenvalues of N x (N+1) Wishart
// matrices (drawn with seed + 1). Default threshold 0.03.
Comparison compare_nibm_loe(int N, const CompareOptions& opt);

// M_N(p) from the bridge sampler against restricted_max_cdf(N, p, .). Default threshold 0.02.
Comparison compare_prop2_selfcheck(int N, double p, const CompareOptions& opt);

// Two-sample: sup over the Dyson times of lambda_N / cosh against
// sqrt(2) M_N(p) from the bridge sampler. Default threshold 0.04.
Comparison compare_dyson_bridge(int N, double p, const CompareOptions& opt);

std::vector<std::string> comparison_names();

// Dispatch by pairing name; unknown names throw std::invalid_argument.
Comparison run_comparison(const std::string& pairing, int N, double p, const CompareOptions& opt);

std::string comparison_json(const Comparison& c);

}  // namespace nibb
