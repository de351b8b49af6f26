#include "nibb/orthopoly.hpp"

#include <algorithm>
#include <limits>

#include "nibb/errors.hpp"

namespace nibb {

namespace {

template <class Real>
Real hermite_recurrence(int n, Real x) {
  if (n < 0) return Real(0);
  Real h0 = 1;
  if (n == 0) return h0;
  Real h1 = 2 * x;
  for (int l = 2; l <= n; ++l) {
    const Real h2 = 2 * x * h1 - 2 * Real(l - 1) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

template <class Real>
Real imag_reduced_recurrence(int n, Real r) {
  if (n < 0) return Real(0);
  Real p0 = 1;
  if (n == 0) return p0;
  Real p1 = 2 * r;
  for (int l = 2; l <= n; ++l) {
    const Real p2 = 2 * r * p1 + 2 * Real(l - 1) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

template <class Real>
Real laguerre_recurrence(int k, Real a, Real x) {
  if (k < 0) return Real(0);
  Real l0 = 1;
  if (k == 0) return l0;
  Real l1 = 1 + a - x;
  for (int n = 1; n < k; ++n) {
    const Real l2 = ((2 * n + 1 + a - x) * l1 - (n + a) * l0) / (n + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

constexpr double kRescaleAbove = 1e150;
constexpr double kPlainExponentLimit = 300.0;

}  // namespace

double hermite_poly(int n, double x) { return hermite_recurrence(n, x); }
long double hermite_poly(int n, long double x) { return hermite_recurrence(n, x); }

RationalPoly hermite_poly_exact(int n) {
  if (n < 0) return {};
  RationalPoly h0 = RationalPoly::constant(1);
  if (n == 0) return h0;
  const RationalPoly two_x = RationalPoly::monomial(2, 1);
  RationalPoly h1 = two_x;
  for (int l = 2; l <= n; ++l) {
    RationalPoly h2 = two_x * h1 - h0 * Rational(2 * (l - 1));
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

RationalPoly hermite_imag_reduced(int n) {
  if (n < 0) return {};
  RationalPoly p0 = RationalPoly::constant(1);
  if (n == 0) return p0;
  const RationalPoly two_r = RationalPoly::monomial(2, 1);
  RationalPoly p1 = two_r;
  for (int l = 2; l <= n; ++l) {
    RationalPoly p2 = two_r * p1 + p0 * Rational(2 * (l - 1));
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

double hermite_imag_reduced(int n, double r) { return imag_reduced_recurrence(n, r); }
long double hermite_imag_reduced(int n, long double r) { return imag_reduced_recurrence(n, r); }

HermiteEval hermite_function_scaled(int n, double x) {
  HermiteEval out;
  out.n = n;
  if (n < 0) return out;
  const double half_sq = 0.5 * x * x;
  const double quarter_pi = std::pow(std::numbers::pi, -0.25);
  double log_scale = 0.0;
  double p0 = quarter_pi;
  if (half_sq <= kPlainExponentLimit) {
    p0 *= std::exp(-half_sq);
  } else {
    log_scale = -half_sq;
  }
  if (n == 0) {
    out.value = p0;
    out.log_scale = log_scale;
    return out;
  }
  double p1 = std::sqrt(2.0) * x * p0;
  for (int k = 2; k <= n; ++k) {
    const double p2 = std::sqrt(2.0 / k) * x * p1 - std::sqrt((k - 1.0) / k) * p0;
    p0 = p1;
    p1 = p2;
    if (std::abs(p1) > kRescaleAbove) {
      p0 /= kRescaleAbove;
      p1 /= kRescaleAbove;
      log_scale += std::log(kRescaleAbove);
    }
  }
  out.value = p1;
  out.log_scale = log_scale;
  if (log_scale != 0.0 && out.value != 0.0) {
    // Fold the ledger back in when the plain value is representable.
    const double mag = std::log(std::abs(out.value)) + log_scale;
    if (mag > -700.0 && mag < 700.0) {
      out.value = out.resolved();
      out.log_scale = 0.0;
    }
  }
  return out;
}

double hermite_function(int n, double x) { return hermite_function_scaled(n, x).resolved(); }

std::vector<double> hermite_functions(int count, double x) {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  if (count <= 0) return out;
  out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (count > 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 2; k < count; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out[ku] = std::sqrt(2.0 / k) * x * out[ku - 1] - std::sqrt((k - 1.0) / k) * out[ku - 2];
  }
  return out;
}

long double hermite_norm_sq(int n) {
  long double v = 1.0L / std::sqrt(std::numbers::pi_v<long double>);
  for (int k = 1; k <= n; ++k) v /= 2.0L * k;
  return v;
}

long double laguerre_norm_ratio(int k, double a) {
  // Gamma(a + 1) first, then multiply by (a + i) / i for i = 1..k.
  long double gamma_a1 = 0.0L;
  const long double sqrt_pi = std::sqrt(std::numbers::pi_v<long double>);
  if (a == -0.5) {
    gamma_a1 = sqrt_pi;
  } else if (a == 0.5) {
    gamma_a1 = sqrt_pi / 2.0L;
  } else {
    gamma_a1 = std::tgamma(static_cast<long double>(a) + 1.0L);
  }
  long double ratio = gamma_a1;
  for (int i = 1; i <= k; ++i) ratio *= (static_cast<long double>(a) + i) / i;
  return ratio;
}

double laguerre_poly(int k, double a, double x) { return laguerre_recurrence(k, a, x); }
long double laguerre_poly(int k, long double a, long double x) { return laguerre_recurrence(k, a, x); }

double laguerre_function(int k, double a, double x) {
  if (!(a > -1.0)) throw DomainError("laguerre_function: parameter a must exceed -1");
  if (x < 0.0 || std::isnan(x)) throw DomainError("laguerre_function: x must be nonnegative");
  if (k < 0) return 0.0;
  if (x == 0.0) {
    if (a < 0.0) return std::numeric_limits<double>::infinity();
    if (a > 0.0) return 0.0;
  }
  const long double norm = 1.0L / std::sqrt(laguerre_norm_ratio(k, a));
  const long double xl = x;
  const long double weight = (x == 0.0) ? 1.0L : std::exp(0.5L * a * std::log(xl) - 0.5L * xl);
  return static_cast<double>(norm * weight * laguerre_recurrence<long double>(k, a, xl));
}

double erfc(double x) { return std::erfc(x); }

QuadratureRule composite_legendre(double a, double b, int panels, int order) {
  if (panels < 1 || order < 1) throw ConfigError("composite_legendre: panels and order must be positive");
  if (!(b > a)) throw ConfigError("composite_legendre: empty interval");
  std::vector<long double> x, w;
  gauss_legendre<long double>(order, x, w);
  QuadratureRule rule;
  rule.lower = a;
  rule.degree = 2 * order - 1;
  rule.description = "composite Gauss-Legendre " + std::to_string(panels) + "x" + std::to_string(order);
  const long double width = (static_cast<long double>(b) - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const long double left = a + width * p;
    for (int i = 0; i < order; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      rule.nodes.push_back(static_cast<double>(left + 0.5L * width * (x[iu] + 1.0L)));
      rule.weights.push_back(static_cast<double>(0.5L * width * w[iu]));
    }
  }
  return rule;
}

QuadratureRule semi_infinite_rule(double r, int points) {
  if (points < 2) throw ConfigError("semi_infinite_rule: need at least 2 points");
  if (!std::isfinite(r)) throw ConfigError("semi_infinite_rule: lower limit must be finite");
  const int panels = (points + 19) / 20;
  const int order = (points + panels - 1) / panels;
  const double span = std::max(8.0, 8.0 - r);
  QuadratureRule rule = composite_legendre(r, r + span, panels, order);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const long double z = rule.nodes[i];
    rule.weights[i] = static_cast<double>(rule.weights[i] * std::exp(-z * z));
  }
  rule.lower = r;
  rule.description = "Gaussian-weighted " + rule.description + " on [r, r+" + std::to_string(span) + "]";
  return rule;
}

}  // namespace nibb
