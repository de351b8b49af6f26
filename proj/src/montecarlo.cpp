#include "nibb/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <thread>

#include "nibb/errors.hpp"

namespace nibb {

namespace {

// Real diagonal plus complex strictly-upper entries, row-major over i < j.
struct HermitianState {
  int n = 0;
  std::vector<double> diag;
  std::vector<double> re;
  std::vector<double> im;

  explicit HermitianState(int size)
      : n(size), diag(static_cast<std::size_t>(size), 0.0),
        re(static_cast<std::size_t>(size * (size - 1) / 2), 0.0),
        im(static_cast<std::size_t>(size * (size - 1) / 2), 0.0) {}

  Eigen::MatrixXcd matrix() const {
    Eigen::MatrixXcd m(n, n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      m(i, i) = diag[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j, ++k) {
        m(i, j) = {re[k], im[k]};
        m(j, i) = {re[k], -im[k]};
      }
    }
    return m;
  }

  double top() const {
    switch (n) {
      case 1: return diag[0];
      case 2: {
        const double mid = 0.5 * (diag[0] + diag[1]);
        const double half = 0.5 * (diag[0] - diag[1]);
        return mid + std::sqrt(half * half + re[0] * re[0] + im[0] * im[0]);
      }
      case 3: return top3();
      default: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix(), Eigen::EigenvaluesOnly);
        return es.eigenvalues()(n - 1);
      }
    }
  }

  // Trigonometric solution of the characteristic cubic.
  double top3() const {
    const double x = diag[0], y = diag[1], z = diag[2];
    const std::complex<double> u(re[0], im[0]), v(re[1], im[1]), w(re[2], im[2]);
    const double q = (x + y + z) / 3.0;
    const double off = std::norm(u) + std::norm(v) + std::norm(w);
    const double xs = x - q, ys = y - q, zs = z - q;
    const double p2 = xs * xs + ys * ys + zs * zs + 2.0 * off;
    if (p2 <= 0.0) return q;
    const double pp = std::sqrt(p2 / 6.0);
    const double det = xs * ys * zs - xs * std::norm(w) - ys * std::norm(v) - zs * std::norm(u) +
                       2.0 * std::real(u * w * std::conj(v));
    const double half_det = std::clamp(det / (pp * pp * pp) / 2.0, -1.0, 1.0);
    return q + 2.0 * pp * std::cos(std::acos(half_det) / 3.0);
  }
};

double uniform_open(std::mt19937_64& eng) {
  // (0, 1]: keeps log finite.
  return 1.0 - std::generate_canonical<double, 53>(eng);
}

void check_hermitian(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw DomainError("matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("matrix is not symmetric/Hermitian");
}

void check_count(int count) {
  if (count < 1) throw ConfigError("sample count must be at least 1");
}

}  // namespace

void MatrixBridgeConfig::validate() const {
  if (N < 1) throw ConfigError("N must be at least 1");
  if (steps < 2) throw ConfigError("steps must be at least 2");
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("p must lie in (0, 1]");
}

std::mt19937_64 draw_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6e696262u};
  return std::mt19937_64(seq);
}

namespace {

// Calls fill(index, engine) for every draw index, split over threads.
void for_each_draw(int count, std::uint64_t seed, unsigned threads,
                   const std::function<void(std::size_t, std::mt19937_64&)>& fill) {
  check_count(count);
  const auto n = static_cast<std::size_t>(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += threads) {
      auto eng = draw_engine(seed, i);
      fill(i, eng);
    }
  };
  if (threads <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        run(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<double> parallel_draws(int count, std::uint64_t seed, unsigned threads,
                                   const std::function<double(std::mt19937_64&)>& draw) {
  check_count(count);
  std::vector<double> out(static_cast<std::size_t>(count));
  for_each_draw(count, seed, threads, [&](std::size_t i, std::mt19937_64& eng) { out[i] = draw(eng); });
  return out;
}

double symmetric_top_eigenvalue(const Eigen::MatrixXd& a) {
  return symmetric_top_eigenvalue(Eigen::MatrixXcd(a.cast<std::complex<double>>()));
}

double symmetric_top_eigenvalue(const Eigen::MatrixXcd& a) {
  check_hermitian(a);
  if (a.rows() == 0) throw DomainError("matrix is empty");
  if (a.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(a.rows() - 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(a.rows() - 1);
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& a) {
  check_hermitian(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

namespace {

// Advances every entry of the matrix bridge from grid time t0 to t1.
void bridge_step(HermitianState& s, double t0, double t1, std::mt19937_64& eng,
                 std::normal_distribution<double>& normal) {
  const double shrink = (1.0 - t1) / (1.0 - t0);
  const double sd = std::sqrt(std::max(0.0, (t1 - t0) * shrink));
  const double sd_off = sd * (0.5 * std::numbers::sqrt2);
  for (auto& d : s.diag) d = d * shrink + sd * normal(eng);
  for (std::size_t k = 0; k < s.re.size(); ++k) {
    s.re[k] = s.re[k] * shrink + sd_off * normal(eng);
    s.im[k] = s.im[k] * shrink + sd_off * normal(eng);
  }
}

double grid_time(const MatrixBridgeConfig& cfg, int i) {
  return (i == cfg.steps) ? cfg.p : cfg.p * static_cast<double>(i) / cfg.steps;
}

double bridge_max_draw(const MatrixBridgeConfig& cfg, std::mt19937_64& eng) {
  std::normal_distribution<double> normal;
  HermitianState s(cfg.N);
  double prev_top = 0.0;
  double best = 0.0;
  for (int i = 1; i <= cfg.steps; ++i) {
    const double t0 = grid_time(cfg, i - 1), t1 = grid_time(cfg, i);
    bridge_step(s, t0, t1, eng, normal);
    const double top = s.top();
    if (cfg.max_mode == MaxMode::bridge) {
      const double gap = top - prev_top;
      const double peak = 0.5 * (prev_top + top + std::sqrt(gap * gap - 2.0 * (t1 - t0) * std::log(uniform_open(eng))));
      best = std::max(best, peak);
    } else {
      best = std::max(best, top);
    }
    prev_top = top;
  }
  return best;
}

}  // namespace

std::vector<Eigen::VectorXd> bridge_eigenvalue_paths(const MatrixBridgeConfig& cfg, std::uint64_t draw_index) {
  cfg.validate();
  auto eng = draw_engine(cfg.seed, draw_index);
  std::normal_distribution<double> normal;
  HermitianState s(cfg.N);
  std::vector<Eigen::VectorXd> paths;
  paths.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  paths.push_back(Eigen::VectorXd::Zero(cfg.N));
  for (int i = 1; i <= cfg.steps; ++i) {
    bridge_step(s, grid_time(cfg, i - 1), grid_time(cfg, i), eng, normal);
    paths.push_back(hermitian_eigenvalues(s.matrix()));
  }
  return paths;
}

SampleBatch sample_nibb_restricted_max(const MatrixBridgeConfig& cfg, int count) {
  cfg.validate();
  SampleBatch batch;
  batch.model = "nibb";
  batch.seed = cfg.seed;
  batch.params = {{"N", cfg.N}, {"p", cfg.p}, {"steps", cfg.steps},
                  {"bridge_max", cfg.max_mode == MaxMode::bridge ? 1.0 : 0.0}};
  batch.values = parallel_draws(count, cfg.seed, cfg.threads, [&](std::mt19937_64& eng) { return bridge_max_draw(cfg, eng); });
  return batch;
}

SampleBatch sample_antige_top(int n, int count, std::uint64_t seed, unsigned threads) {
  if (n < 2) throw ConfigError("antige: n must be at least 2");
  SampleBatch batch;
  batch.model = "antige";
  batch.seed = seed;
  batch.params = {{"n", n}};
  batch.values = parallel_draws(count, seed, threads, [n](std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = normal(eng);
    const Eigen::MatrixXd a = 0.5 * (x - x.transpose());
    if (n == 2) return std::abs(a(0, 1));
    if (n == 3) return std::sqrt(a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2));
    // i A is Hermitian with spectrum {+-sigma_j}.
    const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(n - 1);
  });
  return batch;
}

SampleBatch sample_wishart_loe_top(int N, int m, int count, std::uint64_t seed, unsigned threads,
                                   std::vector<double>* traces) {
  if (N < 1 || m < N) throw ConfigError("wishart: need m >= N >= 1");
  SampleBatch batch;
  batch.model = "wishart";
  batch.seed = seed;
  batch.params = {{"N", N}, {"m", m}};
  check_count(count);
  batch.values.resize(static_cast<std::size_t>(count));
  if (traces) traces->assign(static_cast<std::size_t>(count), 0.0);
  for_each_draw(count, seed, threads, [&](std::size_t i, std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd x(N, m);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < m; ++c) x(r, c) = normal(eng);
    const Eigen::MatrixXd w = x * x.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
    batch.values[i] = es.eigenvalues()(N - 1);
    if (traces) (*traces)[i] = w.trace();
  });
  return batch;
}

SampleBatch sample_dyson_stationary_top(int N, const std::vector<double>& times, int count, std::uint64_t seed,
                                        unsigned threads) {
  if (N < 1) throw ConfigError("dyson: N must be at least 1");
  if (times.empty()) throw ConfigError("dyson: times must be nonempty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw ConfigError("dyson: times must be finite");
    if (i > 0 && !(times[i] > times[i - 1])) throw ConfigError("dyson: times must be increasing");
  }
  SampleBatch batch;
  batch.model = "dyson";
  batch.seed = seed;
  batch.params = {{"N", N}, {"times", static_cast<double>(times.size())}};
  constexpr double kDiagVar = 0.5, kOffVar = 0.25;
  batch.values = parallel_draws(count, seed, threads, [&](std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    HermitianState s(N);
    for (auto& d : s.diag) d = std::sqrt(kDiagVar) * normal(eng);
    for (std::size_t k = 0; k < s.re.size(); ++k) {
      s.re[k] = std::sqrt(kOffVar) * normal(eng);
      s.im[k] = std::sqrt(kOffVar) * normal(eng);
    }
    double best = s.top() / std::cosh(times[0]);
    for (std::size_t i = 1; i < times.size(); ++i) {
      const double h = times[i] - times[i - 1];
      const double decay = std::exp(-h);
      const double keep = -std::expm1(-2.0 * h);
      const double sd_diag = std::sqrt(kDiagVar * keep), sd_off = std::sqrt(kOffVar * keep);
      for (auto& d : s.diag) d = decay * d + sd_diag * normal(eng);
      for (std::size_t k = 0; k < s.re.size(); ++k) {
        s.re[k] = decay * s.re[k] + sd_off * normal(eng);
        s.im[k] = decay * s.im[k] + sd_off * normal(eng);
      }
      best = std::max(best, s.top() / std::cosh(times[i]));
    }
    return best;
  });
  return batch;
}

SampleBatch sample_gue_top(int N, int count, std::uint64_t seed, unsigned threads) {
  if (N < 1) throw ConfigError("gue: N must be at least 1");
  SampleBatch batch;
  batch.model = "gue";
  batch.seed = seed;
  batch.params = {{"N", N}};
  batch.values = parallel_draws(count, seed, threads, [N](std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    HermitianState s(N);
    for (auto& d : s.diag) d = std::sqrt(0.5) * normal(eng);
    for (std::size_t k = 0; k < s.re.size(); ++k) {
      s.re[k] = 0.5 * normal(eng);
      s.im[k] = 0.5 * normal(eng);
    }
    return s.top();
  });
  return batch;
}

std::vector<double> dyson_times_for_bridge(double p, int steps) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("dyson times: p must lie in (0, 1)");
  if (steps < 1) throw ConfigError("dyson times: steps must be positive");
  std::vector<double> t(static_cast<std::size_t>(steps));
  for (int i = 1; i <= steps; ++i) {
    const double s = p * static_cast<double>(i) / steps;
    t[static_cast<std::size_t>(i - 1)] = 0.5 * std::log(s / (1.0 - s));
  }
  return t;
}

}  // namespace nibb
