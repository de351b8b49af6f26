#pragma once

// Samplers for the random-matrix models: non-intersecting Brownian bridges
// realized as eigenvalues of a Hermitian matrix Brownian bridge, the
// antisymmetric Gaussian ensemble, real Wishart (LOE) matrices, and the
// stationary Hermitian Ornstein-Uhlenbeck (Dyson) process.
//
// Every draw owns a random stream seeded from (seed, draw index), so batches
// are identical for any thread count.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "nibb/samples.hpp"

namespace nibb {

// How the running maximum of the top path is recorded.
//   grid:   maximum over grid times only (undershoots by O(sqrt(dt))).
//   bridge: between consecutive grid times the top eigenvalue is treated as
//           a unit-rate Brownian bridge and its maximum is sampled exactly.
enum class MaxMode { grid, bridge };

struct MatrixBridgeConfig {
  int N = 1;
  double p = 0.5;
  int steps = 4096;  // grid cells over [0, p]
  std::uint64_t seed = 1;
  MaxMode max_mode = MaxMode::bridge;
  unsigned threads = 0;  // 0 = hardware concurrency

  // Throws ConfigError when N < 1, steps < 2 or p outside (0, 1].
  void validate() const;
};

// Per-draw engine: std::mt19937_64 seeded through std::seed_seq from the
// batch seed and the draw index.
std::mt19937_64 draw_engine(std::uint64_t seed, std::uint64_t index);

// Runs draw(index, engine) for index = 0..count-1 across threads and returns
// the values in index order.
std::vector<double> parallel_draws(int count, std::uint64_t seed, unsigned threads,
                                   const std::function<double(std::mt19937_64&)>& draw);

// Largest eigenvalue of a real symmetric or complex Hermitian matrix.
// Throws DomainError if the matrix is not square or not (conjugate-)symmetric
// to 1e-12 relative to its largest entry.
double symmetric_top_eigenvalue(const Eigen::MatrixXd& a);
double symmetric_top_eigenvalue(const Eigen::MatrixXcd& a);

// All eigenvalues in increasing order (same preconditions).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& a);

// One draw of the full eigenvalue paths at the grid times t_i = i p / steps,
// i = 0..steps; paths[i] holds the N eigenvalues at t_i in increasing order.
std::vector<Eigen::VectorXd> bridge_eigenvalue_paths(const MatrixBridgeConfig& cfg, std::uint64_t draw_index);

// Samples of M_N(p) = max over [0, p] of the top path.
SampleBatch sample_nibb_restricted_max(const MatrixBridgeConfig& cfg, int count);

// Largest singular value of (X - X^T)/2 for an n x n standard Gaussian X.
SampleBatch sample_antige_top(int n, int count, std::uint64_t seed, unsigned threads = 0);

// Largest eigenvalue of X X^T with X an N x m standard Gaussian matrix. When
// traces is non-null it receives trace(X X^T) for each draw.
SampleBatch sample_wishart_loe_top(int N, int m, int count, std::uint64_t seed, unsigned threads = 0,
                                   std::vector<double>* traces = nullptr);

// Stationary Hermitian OU process (unit-rate diagonal, rate-1/2 real and
// imaginary off-diagonal parts, mean reversion 1), observed at increasing
// times; records max_i lambda_N(t_i) / cosh(t_i).
SampleBatch sample_dyson_stationary_top(int N, const std::vector<double>& times, int count, std::uint64_t seed,
                                        unsigned threads = 0);

// Top eigenvalue of the stationary law of the process above (a GUE matrix with
// diagonal variance 1/2 and off-diagonal real/imaginary variance 1/4).
SampleBatch sample_gue_top(int N, int count, std::uint64_t seed, unsigned threads = 0);

// Times t_i = log(s_i / (1 - s_i)) / 2 for s_i = i p / steps, i = 1..steps;
// the Dyson-side image of the bridge grid on (0, p].
std::vector<double> dyson_times_for_bridge(double p, int steps);

}  // namespace nibb
