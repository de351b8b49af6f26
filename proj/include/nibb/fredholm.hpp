#pragma once

// Probabilities from kernel matrices: det(I - M), the restricted-maximum CDF
// of N non-intersecting Brownian bridges, its small-p limit on both the
// Hermite and the Laguerre side, the generalized LUE top-charge CDF, and
// Kolmogorov-Smirnov distances for comparing them with samples.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nibb/kernels.hpp"
#include "nibb/samples.hpp"

namespace nibb {

enum class CdfModel { restricted_max, limit, lue, empirical };

std::string to_string(CdfModel model);
CdfModel cdf_model_from_string(const std::string& name);

struct CdfMeta {
  CdfModel model = CdfModel::limit;
  std::string method;
  std::map<std::string, double> params;
};

// A sampled CDF r_i -> F(r_i).
struct CdfCurve {
  std::vector<double> grid;
  std::vector<double> values;
  CdfMeta meta;

  // Linear interpolation inside the grid; clamps to the end values outside.
  double operator()(double r) const;
};

inline constexpr double kCdfRangeSlack = 1e-9;
inline constexpr double kCdfMonotoneSlack = 1e-8;

// Empty string when the curve satisfies the CdfCurve invariants, otherwise a
// description of the first violation.
std::string check_curve(const CdfCurve& curve);

std::vector<double> linear_grid(double lo, double hi, int points);

// Evaluates fn on the grid, splitting grid points over `threads` workers
// (0 = hardware concurrency). Output order always follows the grid.
CdfCurve tabulate(const std::vector<double>& grid, const std::function<double(double)>& fn, CdfMeta meta,
                  unsigned threads = 0);

// det(I - M) by partially pivoted LU. Throws DimensionError for non-square M.
double det_id_minus(const KernelMatrix& m);

// P(M_N(p) <= r) = det(I - M(N, sqrt(2) r, alpha)), alpha = log(p/(1-p))/2.
double restricted_max_cdf(int N, double p, double r);

// P(M^_N(0) <= x) = U_N(x / sqrt 2) with U_N(r) = det(I - Q F).
double limit_cdf_hermite(int N, double x);

// U_N(r) itself: the small-p determinant before the x / sqrt 2 rescaling.
double limit_determinant(int N, double r);

// Largest-charge CDF of the size-m generalized LUE with weight x^a e^{-x}.
double lue_cdf(int m, double a, double x);

// F^{(a)}_{LUE,m}(x^2/2) with m = floor((N+1)/2), a = (-1)^N / 2.
double limit_cdf_laguerre(int N, double x);

// One-sample KS distance sup |F_n - F| over the sorted sample points.
// Throws DomainError on an empty sample.
double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf);
double ks_distance(const SampleBatch& sample, const std::function<double(double)>& cdf);
double ks_distance(const SampleBatch& sample, const CdfCurve& curve);

// Two-sample KS distance sup |F_n - G_m|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Critical value c(alpha) / sqrt(n_eff) of the asymptotic Kolmogorov law;
// alpha = 0.01 gives 1.628 / sqrt(n_eff).
double ks_critical(double n_eff, double alpha = 0.01);

// Default grids reaching past the 1 - 1e-6 quantile.
std::vector<double> default_grid_restricted_max(int N, double p, int points = 81);
std::vector<double> default_grid_limit(int N, int points = 81);
std::vector<double> default_grid_lue(int m, double a, int points = 81);

CdfCurve restricted_max_curve(int N, double p, const std::vector<double>& grid);
CdfCurve limit_curve(int N, const std::string& method, const std::vector<double>& grid);
CdfCurve lue_curve(int m, double a, const std::vector<double>& grid);
CdfCurve empirical_curve(const SampleBatch& sample);

}  // namespace nibb
