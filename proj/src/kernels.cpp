#include "nibb/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "nibb/errors.hpp"
#include "nibb/orthopoly.hpp"

namespace nibb {

namespace {

using LD = long double;

void require_size(int N, const char* who) {
  if (N < 1) throw DomainError(std::string(who) + ": N must be at least 1");
}

void require_radius(double r, const char* who) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError(std::string(who) + ": r must be finite and nonnegative");
}

LD factorial_ld(int n) {
  LD f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// 1/n! with the convention 1/n! = 0 for n < 0.
LD inv_factorial(int n) { return n < 0 ? 0.0L : 1.0L / factorial_ld(n); }

LD binom_ld(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  LD out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

IndexRange range_of(int n) { return {0, n - 1}; }

}  // namespace

KernelMatrix::KernelMatrix(std::string label, IndexRange rows, IndexRange cols, Eigen::MatrixXd entries)
    : label_(std::move(label)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_.size() < 0 || cols_.size() < 0 || entries_.rows() != rows_.size() || entries_.cols() != cols_.size())
    throw DimensionError("KernelMatrix '" + label_ + "': entries do not match the declared index ranges");
  if (!entries_.allFinite()) throw DomainError("KernelMatrix '" + label_ + "': non-finite entry");
}

double KernelMatrix::at(int i, int j) const {
  if (i < rows_.lo || i > rows_.hi || j < cols_.lo || j > cols_.hi)
    throw DimensionError("KernelMatrix '" + label_ + "': index out of range");
  return entries_(i - rows_.lo, j - cols_.lo);
}

std::string KernelMatrix::to_csv() const {
  std::string out = "# " + label_ + " rows " + std::to_string(rows_.lo) + ".." + std::to_string(rows_.hi) +
                    " cols " + std::to_string(cols_.lo) + ".." + std::to_string(cols_.hi) + "\n";
  char buf[40];
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17e", entries_(i, j));
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

KernelMatrix multiply(const KernelMatrix& a, const KernelMatrix& b, std::string label) {
  if (!(a.col_range() == b.row_range()))
    throw DimensionError("multiply: column range of '" + a.label() + "' does not match row range of '" + b.label() + "'");
  if (label.empty()) label = a.label() + "*" + b.label();
  return KernelMatrix(std::move(label), a.row_range(), b.col_range(), a.entries() * b.entries());
}

KernelMatrix scaled(const KernelMatrix& m, double factor, std::string label) {
  if (label.empty()) label = m.label();
  return KernelMatrix(std::move(label), m.row_range(), m.col_range(), factor * m.entries());
}

ParitySplit ParitySplit::of(int N) {
  require_size(N, "ParitySplit");
  ParitySplit p;
  p.N = N;
  p.b = (N % 2 == 1) ? 1 : 2;
  p.half = (N - p.b) / 2 + 1;
  return p;
}

KernelMatrix m_matrix_reflected(int N, double c, double s) {
  require_size(N, "m_matrix_reflected");
  if (!std::isfinite(c) || !std::isfinite(s)) throw DomainError("m_matrix_reflected: non-finite parameters");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);

  // First term: int_c^inf phi_j phi_k dz, product decays like e^{-z^2}.
  {
    const double lo = c;
    const double hi = std::max(c, 0.0) + 12.0;
    const QuadratureRule rule = composite_legendre(lo, hi, 24, 20);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto phi = hermite_functions(N, rule.nodes[q]);
      const double w = rule.weights[q];
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m(j, k) += w * phi[static_cast<std::size_t>(j)] * phi[static_cast<std::size_t>(k)];
    }
  }

  // Reflected term, with z -> c + z:
  //   C_j C_k e^{s^2 - c^2} int_0^inf H_j(c+z) H_k(c-z) e^{-(z-s)^2} dz.
  {
    const double centre = std::max(s, 0.0);
    const double lo = std::max(0.0, s - 12.0);
    const double hi = centre + 12.0;
    const QuadratureRule rule = composite_legendre(lo, hi, 24, 20);
    std::vector<LD> norm(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) norm[static_cast<std::size_t>(j)] = std::sqrt(hermite_norm_sq(j));
    const LD prefactor = std::exp(static_cast<LD>(s) * s - static_cast<LD>(c) * c);
    std::vector<LD> hp(static_cast<std::size_t>(N)), hm(static_cast<std::size_t>(N));
    Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic> acc = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>::Zero(N, N);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const LD z = rule.nodes[q];
      const LD gauss = std::exp(-(z - s) * (z - s));
      const LD w = rule.weights[q] * gauss;
      if (w == 0) continue;
      const LD xp = c + z, xm = c - z;
      // Hermite polynomials at c +- z by recurrence, scaled by C_j.
      LD p0 = 1, p1 = 2 * xp, m0 = 1, m1 = 2 * xm;
      for (int j = 0; j < N; ++j) {
        LD vp, vm;
        if (j == 0) {
          vp = p0;
          vm = m0;
        } else if (j == 1) {
          vp = p1;
          vm = m1;
        } else {
          const LD p2 = 2 * xp * p1 - 2 * LD(j - 1) * p0;
          const LD m2 = 2 * xm * m1 - 2 * LD(j - 1) * m0;
          p0 = p1;
          p1 = p2;
          m0 = m1;
          m1 = m2;
          vp = p2;
          vm = m2;
        }
        hp[static_cast<std::size_t>(j)] = vp * norm[static_cast<std::size_t>(j)];
        hm[static_cast<std::size_t>(j)] = vm * norm[static_cast<std::size_t>(j)];
      }
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) acc(j, k) += w * hp[static_cast<std::size_t>(j)] * hm[static_cast<std::size_t>(k)];
    }
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) m(j, k) += static_cast<double>(prefactor * acc(j, k));
  }
  return KernelMatrix("M", range_of(N), range_of(N), std::move(m));
}

KernelMatrix m_matrix_general_p(int N, double r, double alpha) {
  require_size(N, "m_matrix_general_p");
  require_radius(r, "m_matrix_general_p");
  if (!std::isfinite(alpha)) throw DomainError("m_matrix_general_p: alpha must be finite");
  return m_matrix_reflected(N, r * std::cosh(alpha), r * std::sinh(alpha));
}

KernelMatrix q_matrix_closed(int N, double r) {
  require_size(N, "q_matrix_closed");
  require_radius(r, "q_matrix_closed");
  const LD rl = r;
  const LD gauss = std::exp(-rl * rl);
  const LD half_erfc = 0.5L * std::erfc(rl);
  const LD inv_sqrt_pi = 1.0L / std::sqrt(std::numbers::pi_v<LD>);
  std::vector<LD> h(static_cast<std::size_t>(2 * N), 0.0L);
  for (int l = 0; l < 2 * N; ++l) h[static_cast<std::size_t>(l)] = hermite_poly(l, rl);
  auto H = [&](int l) { return l < 0 ? 0.0L : h[static_cast<std::size_t>(l)]; };

  Eigen::MatrixXd q(N, N);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      // C_j^2 2^l l! = 2^{l-j} l! / (j! sqrt(pi))
      LD sum = 0;
      for (int l = 0; l <= std::min(j, k); ++l) {
        const LD coef = std::ldexp(factorial_ld(l) / factorial_ld(j), l - j) * binom_ld(j, l) * binom_ld(k, l);
        sum += coef * H(j + k - 2 * l - 1);
      }
      LD value = sum * gauss * inv_sqrt_pi;
      if (j == k) value += half_erfc;
      q(j, k) = static_cast<double>(value);
    }
  }
  return KernelMatrix("Q", range_of(N), range_of(N), std::move(q));
}

KernelMatrix q_matrix_quadrature(int N, double r) {
  require_size(N, "q_matrix_quadrature");
  require_radius(r, "q_matrix_quadrature");
  std::vector<LD> x, w;
  constexpr int kOrder = 24;
  constexpr int kPanels = 48;
  gauss_legendre<LD>(kOrder, x, w);
  const LD lo = r;
  const LD width = LD(12) / kPanels;
  Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic> acc = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>::Zero(N, N);
  std::vector<LD> h(static_cast<std::size_t>(N));
  for (int p = 0; p < kPanels; ++p) {
    const LD left = lo + width * p;
    for (int i = 0; i < kOrder; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const LD z = left + 0.5L * width * (x[iu] + 1);
      const LD weight = 0.5L * width * w[iu] * std::exp(-z * z);
      for (int j = 0; j < N; ++j) h[static_cast<std::size_t>(j)] = hermite_poly(j, z);
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) acc(j, k) += weight * h[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k)];
    }
  }
  Eigen::MatrixXd q(N, N);
  for (int j = 0; j < N; ++j) {
    const LD cj2 = hermite_norm_sq(j);
    for (int k = 0; k < N; ++k) q(j, k) = static_cast<double>(cj2 * acc(j, k));
  }
  return KernelMatrix("Q", range_of(N), range_of(N), std::move(q));
}

KernelMatrix f_matrix(int N, double r) {
  require_size(N, "f_matrix");
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(N, N);
  const LD four_r = 4.0L * r;
  for (int j = 0; j < N; ++j) {
    for (int k = j; k < N; ++k) {
      const LD sign = (j % 2 == 0) ? 1.0L : -1.0L;
      f(j, k) = static_cast<double>(binom_ld(k, j) * std::pow(four_r, k - j) * sign);
    }
    f(j, j) += 1.0;
  }
  return KernelMatrix("F", range_of(N), range_of(N), std::move(f));
}

KernelMatrix s_matrix(int N, double r) {
  const ParitySplit ps = ParitySplit::of(N);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(ps.half, N);
  for (int j = 0; j < ps.half; ++j) {
    for (int t = 0; t < N; ++t) {
      const int m = t - N + 2 * j + ps.b;
      if (m < 0) continue;
      LD ratio = 1;  // t!/m!
      for (int i = m + 1; i <= t; ++i) ratio *= i;
      s(j, t) = static_cast<double>(std::ldexp(ratio, -2 * j) * hermite_poly(m, static_cast<LD>(r)));
    }
  }
  return KernelMatrix("S", range_of(ps.half), range_of(N), std::move(s));
}

KernelMatrix t_matrix(int N, double r) {
  const ParitySplit ps = ParitySplit::of(N);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(N, ps.half);
  for (int u = 0; u < N; ++u) {
    for (int k = 0; k < ps.half; ++k) {
      const int m = N - 2 * k - ps.b - u;
      if (m < 0) continue;
      const LD sign = (u % 2 == 0) ? 1.0L : -1.0L;
      t(u, k) = static_cast<double>(sign * std::ldexp(inv_factorial(u) * inv_factorial(m), 2 * k) *
                                    hermite_imag_reduced(m, static_cast<LD>(r)));
    }
  }
  return KernelMatrix("T", range_of(N), range_of(ps.half), std::move(t));
}

KernelMatrix t_matrix_complex(int N, double r, double* max_imag) {
  using C = std::complex<LD>;
  const ParitySplit ps = ParitySplit::of(N);
  const int h = ps.half - 1;
  const C i_unit(0, 1);
  auto hermite_complex = [](int n, C x) {
    if (n < 0) return C(0);
    C h0 = 1;
    if (n == 0) return h0;
    C h1 = LD(2) * x;
    for (int l = 2; l <= n; ++l) {
      C h2 = LD(2) * x * h1 - LD(2 * (l - 1)) * h0;
      h0 = h1;
      h1 = h2;
    }
    return h1;
  };
  auto ipow = [](C base, int e) {
    C out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  };
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(N, ps.half);
  LD worst = 0;
  for (int u = 0; u < N; ++u) {
    for (int k = 0; k <= h; ++k) {
      const int m = N - 2 * k - ps.b - u;
      if (m < 0) continue;
      const LD sign = ((h + k) % 2 == 0) ? 1.0L : -1.0L;
      const C value = sign * ipow(-i_unit, u) * std::ldexp(inv_factorial(u) * inv_factorial(m), 2 * k) *
                      hermite_complex(m, C(0, r));
      t(u, k) = static_cast<double>(value.real());
      worst = std::max(worst, std::abs(value.imag()));
    }
  }
  if (max_imag != nullptr) *max_imag = static_cast<double>(worst);
  return KernelMatrix("T", range_of(N), range_of(ps.half), std::move(t));
}

KernelMatrix a_matrix(int N, double r) {
  const ParitySplit ps = ParitySplit::of(N);
  const KernelMatrix q = q_matrix_closed(N, r);
  Eigen::MatrixXd a(ps.half, ps.half);
  for (int j = 0; j < ps.half; ++j)
    for (int k = 0; k < ps.half; ++k) a(j, k) = 2.0 * q.at(2 * j + ps.b - 1, 2 * k + ps.b - 1);
  return KernelMatrix("A", range_of(ps.half), range_of(ps.half), std::move(a));
}

KernelMatrix laguerre_kernel_matrix(int m, double a, double x) {
  if (m < 1) throw DomainError("laguerre_kernel_matrix: m must be at least 1");
  if (!(a > -1.0)) throw DomainError("laguerre_kernel_matrix: a must exceed -1");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("laguerre_kernel_matrix: x must be finite and nonnegative");
  const LD u0 = std::sqrt(static_cast<LD>(x));
  // The charges live below u^2 ~ 4m; past u0 + span the Gaussian kills everything.
  const LD span = 10.0L + 2.0L * std::sqrt(static_cast<LD>(m));
  const int panels = static_cast<int>(std::ceil(span / 0.5L));
  constexpr int kOrder = 20;
  std::vector<LD> gx, gw;
  gauss_legendre<LD>(kOrder, gx, gw);
  std::vector<LD> norm(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) norm[static_cast<std::size_t>(k)] = 1.0L / std::sqrt(laguerre_norm_ratio(k, a));
  const LD al = a;
  Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic> acc = Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m);
  std::vector<LD> lag(static_cast<std::size_t>(m));
  const LD width = span / panels;
  for (int p = 0; p < panels; ++p) {
    const LD left = u0 + width * p;
    for (int i = 0; i < kOrder; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const LD u = left + 0.5L * width * (gx[iu] + 1);
      const LD z = u * u;
      const LD weight = 0.5L * width * gw[iu] * 2 * std::pow(u, 1 + 2 * al) * std::exp(-z);
      LD l0 = 1, l1 = 1 + al - z;
      for (int k = 0; k < m; ++k) {
        LD v;
        if (k == 0) {
          v = l0;
        } else if (k == 1) {
          v = l1;
        } else {
          const LD l2 = ((2 * (k - 1) + 1 + al - z) * l1 - ((k - 1) + al) * l0) / k;
          l0 = l1;
          l1 = l2;
          v = l2;
        }
        lag[static_cast<std::size_t>(k)] = v * norm[static_cast<std::size_t>(k)];
      }
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) acc(j, k) += weight * lag[static_cast<std::size_t>(j)] * lag[static_cast<std::size_t>(k)];
    }
  }
  Eigen::MatrixXd g(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) g(j, k) = static_cast<double>(acc(j, k));
  return KernelMatrix("G", range_of(m), range_of(m), std::move(g));
}

}  // namespace nibb
