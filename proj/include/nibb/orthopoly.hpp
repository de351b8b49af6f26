#pragma once

// Hermite and generalized Laguerre polynomials/functions, erfc, and the
// quadrature rules used to evaluate integrals over [r, infinity).
//
// Everything here is a pure function of its arguments.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nibb/rational.hpp"

namespace nibb {

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_l = 2x H_{l-1} - 2(l-1) H_{l-2}. Returns 0 for n < 0, which is the
// zero convention used by the reduction matrices.
double hermite_poly(int n, double x);
long double hermite_poly(int n, long double x);

// Integer-coefficient H_n; degree n with leading coefficient 2^n.
RationalPoly hermite_poly_exact(int n);

// P_n with H_n(i r) = i^n P_n(r). All coefficients are nonnegative integers:
// P_n(r) = sum_j n!/(j!(n-2j)!) (2r)^{n-2j}, equivalently P_n = 2r P_{n-1} + 2(n-1) P_{n-2}.
RationalPoly hermite_imag_reduced(int n);
double hermite_imag_reduced(int n, double r);
long double hermite_imag_reduced(int n, long double r);

// phi_n(x) = value * exp(log_scale). log_scale is zero whenever the plain
// value is representable (always the case for n <= 30, |x| <= 10).
struct HermiteEval {
  int n = 0;
  double value = 0.0;
  double log_scale = 0.0;

  double resolved() const { return value * std::exp(log_scale); }
};

// Orthonormal Hermite function phi_n(x) = C_n e^{-x^2/2} H_n(x),
// C_n = (sqrt(pi) 2^n n!)^{-1/2}, computed by the normalized recurrence
//   phi_n = sqrt(2/n) x phi_{n-1} - sqrt((n-1)/n) phi_{n-2}
// with an exponent ledger so that neither C_n nor H_n is ever formed.
HermiteEval hermite_function_scaled(int n, double x);
double hermite_function(int n, double x);

// phi_0 .. phi_{count-1} at x in one recurrence pass (plain values).
std::vector<double> hermite_functions(int count, double x);

// C_n^2 = 1/(sqrt(pi) 2^n n!).
long double hermite_norm_sq(int n);

// Gamma(k + a + 1) / k! for a = -1/2, 1/2 (exact half-integer recursion from
// Gamma(1/2) = sqrt(pi)); other a > -1 fall back to lgamma.
long double laguerre_norm_ratio(int k, double a);

// Generalized Laguerre polynomial L_k^{(a)}(x) by the standard recurrence.
double laguerre_poly(int k, double a, double x);
long double laguerre_poly(int k, long double a, long double x);

// Orthonormal generalized Laguerre function
//   psi_k^{(a)}(x) = sqrt(k!/Gamma(k+a+1)) x^{a/2} e^{-x/2} L_k^{(a)}(x).
// Throws DomainError for x < 0 or a <= -1; returns +infinity at the pole x = 0, a < 0.
double laguerre_function(int k, double a, double x);

// Complementary error function; delegates to the C library's erfc.
double erfc(double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;
  int degree = 0;  // plain Legendre rules integrate polynomials up to this degree exactly
  std::string description;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += static_cast<long double>(weights[i]) * f(nodes[i]);
    return static_cast<double>(acc);
  }
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
template <class Real>
void gauss_legendre(int order, std::vector<Real>& nodes, std::vector<Real>& weights) {
  nodes.assign(static_cast<std::size_t>(order), Real(0));
  weights.assign(static_cast<std::size_t>(order), Real(0));
  const int half = (order + 1) / 2;
  const Real pi = std::numbers::pi_v<Real>;
  for (int i = 0; i < half; ++i) {
    Real z = std::cos(pi * (Real(i) + Real(0.75)) / (Real(order) + Real(0.5)));
    Real dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = z;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1;
      dp = Real(order) * (z * p1 - p0) / (z * z - 1);
      const Real step = p1 / dp;
      z -= step;
      if (std::abs(step) <= std::numeric_limits<Real>::epsilon() * 4) break;
    }
    {
      Real p0 = 1, p1 = z;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = Real(order) * (z * p1 - p0) / (z * z - 1);
    }
    const Real w = 2 / ((1 - z * z) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -z;
    nodes[static_cast<std::size_t>(order - 1 - i)] = z;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
}

// Composite Gauss-Legendre rule for the plain integral over [a, b].
QuadratureRule composite_legendre(double a, double b, int panels, int order);

// Rule for int_r^inf f(z) e^{-z^2} dz: the weights carry the Gaussian factor.
// Composite Gauss-Legendre on [r, r + T], T = max(8, 8 - r), split into
// panels of at most 20 nodes. Throws ConfigError for points < 2.
inline constexpr int kDefaultQuadraturePoints = 200;
QuadratureRule semi_infinite_rule(double r, int points = kDefaultQuadraturePoints);

}  // namespace nibb
