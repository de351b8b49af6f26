#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nibb {

// Monte Carlo draws of a scalar statistic. The same (model, seed, n) always
// yields identical values.
struct SampleBatch {
  std::vector<double> values;
  std::string model;                     // e.g. "antige", "nibb", "wishart", "dyson"
  std::map<std::string, double> params;  // model parameters (N, p, steps, ...)
  std::uint64_t seed = 0;

  std::size_t n() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

}  // namespace nibb
