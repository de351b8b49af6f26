#include "nibb/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "nibb/errors.hpp"

namespace nibb {

std::string to_string(CdfModel model) {
  switch (model) {
    case CdfModel::restricted_max: return "restricted_max";
    case CdfModel::limit: return "limit";
    case CdfModel::lue: return "lue";
    case CdfModel::empirical: return "empirical";
  }
  return "unknown";
}

CdfModel cdf_model_from_string(const std::string& name) {
  if (name == "restricted_max") return CdfModel::restricted_max;
  if (name == "limit") return CdfModel::limit;
  if (name == "lue") return CdfModel::lue;
  if (name == "empirical") return CdfModel::empirical;
  throw std::invalid_argument("unknown CDF model '" + name + "'");
}

double CdfCurve::operator()(double r) const {
  if (grid.empty()) throw DomainError("CdfCurve: empty curve");
  if (r <= grid.front()) return values.front();
  if (r >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  const auto i = static_cast<std::size_t>(it - grid.begin());
  const double t = (r - grid[i - 1]) / (grid[i] - grid[i - 1]);
  return values[i - 1] + t * (values[i] - values[i - 1]);
}

std::string check_curve(const CdfCurve& curve) {
  if (curve.grid.size() != curve.values.size()) return "grid and values differ in length";
  if (curve.grid.empty()) return "empty curve";
  for (std::size_t i = 1; i < curve.grid.size(); ++i)
    if (!(curve.grid[i] > curve.grid[i - 1])) return "grid not strictly increasing at index " + std::to_string(i);
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const double v = curve.values[i];
    if (!std::isfinite(v) || v < -kCdfRangeSlack || v > 1.0 + kCdfRangeSlack)
      return "value out of [0,1] at index " + std::to_string(i);
    if (i > 0 && v < curve.values[i - 1] - kCdfMonotoneSlack)
      return "values decrease at index " + std::to_string(i);
  }
  return {};
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw ConfigError("grid needs at least 2 points");
  if (!(hi > lo)) throw ConfigError("grid needs max > min");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  g.back() = hi;
  return g;
}

CdfCurve tabulate(const std::vector<double>& grid, const std::function<double(double)>& fn, CdfMeta meta,
                  unsigned threads) {
  CdfCurve curve;
  curve.grid = grid;
  curve.values.assign(grid.size(), 0.0);
  curve.meta = std::move(meta);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) curve.values[i] = fn(grid[i]);
    return curve;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < grid.size(); i += threads) curve.values[i] = fn(grid[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return curve;
}

double det_id_minus(const KernelMatrix& m) {
  if (!m.is_square()) throw DimensionError("det_id_minus: matrix '" + m.label() + "' is not square");
  const Eigen::Index n = m.entries().rows();
  if (n == 0) return 1.0;
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - m.entries();
  return a.partialPivLu().determinant();
}

double restricted_max_cdf(int N, double p, double r) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("restricted_max_cdf: p must lie in (0, 1)");
  if (!(r >= 0.0)) throw DomainError("restricted_max_cdf: r must be nonnegative");
  const double alpha = 0.5 * std::log(p / (1.0 - p));
  return det_id_minus(m_matrix_general_p(N, std::numbers::sqrt2 * r, alpha));
}

double limit_determinant(int N, double r) {
  return det_id_minus(multiply(q_matrix_closed(N, r), f_matrix(N, r), "QF"));
}

double limit_cdf_hermite(int N, double x) {
  if (!(x >= 0.0)) throw DomainError("limit_cdf_hermite: x must be nonnegative");
  return limit_determinant(N, x / std::numbers::sqrt2);
}

double lue_cdf(int m, double a, double x) {
  if (!(x >= 0.0)) throw DomainError("lue_cdf: x must be nonnegative");
  return det_id_minus(laguerre_kernel_matrix(m, a, x));
}

double limit_cdf_laguerre(int N, double x) {
  if (!(x >= 0.0)) throw DomainError("limit_cdf_laguerre: x must be nonnegative");
  const ParitySplit ps = ParitySplit::of(N);
  const double a = (N % 2 == 0) ? 0.5 : -0.5;
  return lue_cdf(ps.half, a, 0.5 * x * x);
}

double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw DomainError("ks_distance: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    // Ties share one CDF evaluation; the empirical jump spans the whole run.
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double f = cdf(sorted[i]);
    d = std::max(d, std::max(static_cast<double>(j + 1) / n - f, f - static_cast<double>(i) / n));
    i = j + 1;
  }
  return d;
}

double ks_distance(const SampleBatch& sample, const std::function<double(double)>& cdf) {
  return ks_distance(std::span<const double>(sample.values), cdf);
}

double ks_distance(const SampleBatch& sample, const CdfCurve& curve) {
  return ks_distance(std::span<const double>(sample.values), [&](double r) { return curve(r); });
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

double ks_critical(double n_eff, double alpha) {
  if (!(n_eff > 0.0) || !(alpha > 0.0 && alpha < 1.0)) throw DomainError("ks_critical: bad arguments");
  // Asymptotic Kolmogorov quantile: P(K > c) ~ 2 exp(-2 c^2).
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c / std::sqrt(n_eff);
}

std::vector<double> default_grid_restricted_max(int N, double p, int points) {
  return linear_grid(0.0, std::sqrt(p) * (2.0 * std::sqrt(static_cast<double>(N)) + 6.0), points);
}

std::vector<double> default_grid_limit(int N, int points) {
  return linear_grid(0.0, 2.0 * std::sqrt(static_cast<double>(N)) + 6.0, points);
}

std::vector<double> default_grid_lue(int m, double /*a*/, int points) {
  return linear_grid(0.0, 4.0 * m + 10.0 * std::sqrt(static_cast<double>(m)) + 14.0, points);
}

CdfCurve restricted_max_curve(int N, double p, const std::vector<double>& grid) {
  CdfMeta meta{CdfModel::restricted_max, "fredholm-reflected", {{"N", N}, {"p", p}}};
  if (!(p > 0.0 && p < 1.0)) throw DomainError("restricted_max_curve: p must lie in (0, 1)");
  return tabulate(grid, [=](double r) { return restricted_max_cdf(N, p, r); }, std::move(meta));
}

CdfCurve limit_curve(int N, const std::string& method, const std::vector<double>& grid) {
  CdfMeta meta{CdfModel::limit, method, {{"N", N}}};
  ParitySplit::of(N);
  if (method == "hermite") return tabulate(grid, [=](double x) { return limit_cdf_hermite(N, x); }, std::move(meta));
  if (method == "laguerre") return tabulate(grid, [=](double x) { return limit_cdf_laguerre(N, x); }, std::move(meta));
  throw std::invalid_argument("limit_curve: method must be 'hermite' or 'laguerre'");
}

CdfCurve lue_curve(int m, double a, const std::vector<double>& grid) {
  CdfMeta meta{CdfModel::lue, "laguerre-kernel", {{"m", m}, {"a", a}}};
  if (m < 1) throw DomainError("lue_curve: m must be at least 1");
  if (!(a > -1.0)) throw DomainError("lue_curve: a must exceed -1");
  return tabulate(grid, [=](double x) { return lue_cdf(m, a, x); }, std::move(meta));
}

CdfCurve empirical_curve(const SampleBatch& sample) {
  if (sample.empty()) throw DomainError("empirical_curve: empty sample");
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  CdfCurve curve;
  curve.meta.model = CdfModel::empirical;
  curve.meta.method = sample.model;
  curve.meta.params = sample.params;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!curve.grid.empty() && sorted[i] == curve.grid.back()) {
      curve.values.back() = static_cast<double>(i + 1) / n;
    } else {
      curve.grid.push_back(sorted[i]);
      curve.values.push_back(static_cast<double>(i + 1) / n);
    }
  }
  return curve;
}

}  // namespace nibb
