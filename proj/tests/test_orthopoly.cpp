#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "nibb/errors.hpp"
#include "nibb/orthopoly.hpp"

using doctest::Approx;
using nibb::Rational;
using nibb::RationalPoly;

namespace {

// sum |c_i| |x|^i: the natural scale for rounding error in a polynomial value.
double poly_scale(const RationalPoly& p, double x) {
  double s = 0.0;
  for (int i = 0; i <= p.degree(); ++i) s += std::abs(p.coeff(i).get_d()) * std::pow(std::abs(x), i);
  return std::max(s, 1.0);
}

nibb::QuadratureRule real_line_rule() { return nibb::composite_legendre(-16.0, 16.0, 64, 20); }

}  // namespace

TEST_CASE("hermite_poly values") {
  CHECK(nibb::hermite_poly(0, 0.7) == 1.0);
  CHECK(nibb::hermite_poly(1, 0.5) == Approx(1.0));
  CHECK(nibb::hermite_poly(4, 1.0) == Approx(-20.0));
  CHECK(nibb::hermite_poly(-1, 1.0) == 0.0);
}

TEST_CASE("hermite_poly_exact coefficients") {
  CHECK(nibb::hermite_poly_exact(0) == RationalPoly({1}));
  CHECK(nibb::hermite_poly_exact(2) == RationalPoly({-2, 0, 4}));
  CHECK(nibb::hermite_poly_exact(5).coeff(5) == 32);
  CHECK(nibb::hermite_poly_exact(4) == RationalPoly({12, 0, -48, 0, 16}));
}

TEST_CASE("hermite_imag_reduced coefficients") {
  CHECK(nibb::hermite_imag_reduced(0) == RationalPoly({1}));
  CHECK(nibb::hermite_imag_reduced(2) == RationalPoly({2, 0, 4}));
  CHECK(nibb::hermite_imag_reduced(3) == RationalPoly({0, 12, 0, 8}));
  CHECK(nibb::hermite_imag_reduced(3, 0.5) == Approx(7.0));
}

TEST_CASE("recurrence agrees with the exact polynomial") {
  for (int n = 0; n <= 30; ++n) {
    const RationalPoly h = nibb::hermite_poly_exact(n);
    for (double x = -5.0; x <= 5.0; x += 0.25) {
      const double exact = h(Rational(x)).get_d();
      CHECK(std::abs(nibb::hermite_poly(n, x) - exact) <= 1e-12 * poly_scale(h, x));
    }
  }
}

TEST_CASE("Hermite parity") {
  for (int n = 0; n <= 25; ++n)
    for (double x : {0.1, 0.9, 2.3, 4.4}) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(nibb::hermite_poly(n, -x) == Approx(sign * nibb::hermite_poly(n, x)).epsilon(1e-14));
    }
}

TEST_CASE("i-power reduction against complex-rational Horner evaluation") {
  // H_n(ir) via the recurrence in Q[i], compared with i^n P_n(r).
  for (const Rational& r : {Rational(0), Rational(1, 2), Rational(-3, 7), Rational(5, 2)}) {
    Rational re0 = 1, im0 = 0, re1 = 0, im1 = 2 * r;
    for (int n = 0; n <= 20; ++n) {
      Rational re = re0, im = im0;
      if (n == 1) {
        re = re1;
        im = im1;
      } else if (n >= 2) {
        const Rational re2 = -2 * r * im1 - 2 * (n - 1) * re0;
        const Rational im2 = 2 * r * re1 - 2 * (n - 1) * im0;
        re0 = re1;
        im0 = im1;
        re1 = re2;
        im1 = im2;
        re = re1;
        im = im1;
      }
      const Rational pn = nibb::hermite_imag_reduced(n)(r);
      switch (n % 4) {
        case 0: CHECK((re == pn && im == 0)); break;
        case 1: CHECK((re == 0 && im == pn)); break;
        case 2: CHECK((re == -pn && im == 0)); break;
        default: CHECK((re == 0 && im == -pn)); break;
      }
    }
  }
}

TEST_CASE("hermite_function values") {
  CHECK(nibb::hermite_function(0, 0.0) == Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-14));
  CHECK(nibb::hermite_function(0, 0.0) == Approx(0.7511255).epsilon(1e-7));
  CHECK(nibb::hermite_function(1, 0.0) == 0.0);
  const auto all = nibb::hermite_functions(6, 1.3);
  REQUIRE(all.size() == 6);
  for (int n = 0; n < 6; ++n) CHECK(all[static_cast<std::size_t>(n)] == Approx(nibb::hermite_function(n, 1.3)));
}

TEST_CASE("hermite_function is normalized for n <= 50") {
  const auto rule = real_line_rule();
  for (int n = 0; n <= 50; ++n) {
    const double mass = rule.integrate([n](double x) {
      const double v = nibb::hermite_function(n, x);
      return v * v;
    });
    CHECK(mass == Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("hermite functions are orthonormal") {
  const auto rule = real_line_rule();
  for (int m = 0; m <= 20; m += 3)
    for (int n = 0; n <= 20; ++n) {
      const double ip = rule.integrate([&](double x) { return nibb::hermite_function(m, x) * nibb::hermite_function(n, x); });
      CHECK(std::abs(ip - (m == n ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("scaled Hermite evaluation survives large degree") {
  const auto e = nibb::hermite_function_scaled(200, 1.0);
  CHECK(e.resolved() == Approx(nibb::hermite_function(200, 1.0)).epsilon(1e-10));
  const auto far = nibb::hermite_function_scaled(400, 35.0);
  CHECK(std::isfinite(far.value));
  CHECK(std::isfinite(far.log_scale));
  CHECK(far.n == 400);
}

TEST_CASE("laguerre_function values and domain") {
  CHECK(nibb::laguerre_function(0, -0.5, 1.0) ==
        Approx(std::pow(std::numbers::pi, -0.25) * std::exp(-0.5)).epsilon(1e-14));
  CHECK(nibb::laguerre_function(0, -0.5, 1.0) == Approx(0.455581).epsilon(1e-6));
  CHECK(nibb::laguerre_function(0, 0.5, 0.0) == 0.0);
  CHECK(std::isinf(nibb::laguerre_function(0, -0.5, 0.0)));
  CHECK_THROWS_AS(nibb::laguerre_function(0, -0.5, -1.0), nibb::DomainError);
  CHECK_THROWS_AS(nibb::laguerre_function(0, -1.5, 1.0), nibb::DomainError);
}

TEST_CASE("laguerre_norm_ratio uses the half-integer Gamma recursion") {
  // Gamma(k + a + 1) / k!
  CHECK(static_cast<double>(nibb::laguerre_norm_ratio(0, -0.5)) == Approx(std::sqrt(std::numbers::pi)));
  CHECK(static_cast<double>(nibb::laguerre_norm_ratio(0, 0.5)) == Approx(std::sqrt(std::numbers::pi) / 2));
  CHECK(static_cast<double>(nibb::laguerre_norm_ratio(3, 0.5)) == Approx(std::tgamma(4.5) / 6.0).epsilon(1e-14));
  CHECK(static_cast<double>(nibb::laguerre_norm_ratio(4, 0.0)) == Approx(1.0));
}

TEST_CASE("Laguerre functions are orthonormal for a = +-1/2") {
  // x = u^2 removes the x^{-1/2} singularity at a = -1/2.
  const auto rule = nibb::composite_legendre(0.0, 16.0, 64, 20);
  for (double a : {-0.5, 0.5}) {
    for (int k = 0; k <= 30; ++k) {
      const double mass = rule.integrate([&](double u) {
        const double v = nibb::laguerre_function(k, a, u * u);
        return 2.0 * u * v * v;
      });
      CHECK(mass == Approx(1.0).epsilon(1e-9));
    }
    for (int j = 0; j <= 10; ++j)
      for (int k = j + 1; k <= 10; ++k) {
        const double ip = rule.integrate([&](double u) {
          return 2.0 * u * nibb::laguerre_function(j, a, u * u) * nibb::laguerre_function(k, a, u * u);
        });
        CHECK(std::abs(ip) < 1e-9);
      }
  }
}

TEST_CASE("erfc") {
  CHECK(nibb::erfc(0.0) == 1.0);
  CHECK(nibb::erfc(10.0) < 3e-44);
  CHECK(nibb::erfc(1.0) == Approx(0.157299207).epsilon(1e-9));
}

TEST_CASE("quadrature rules are well formed") {
  for (double r : {0.0, 1.0, 3.5}) {
    const auto rule = nibb::semi_infinite_rule(r);
    REQUIRE(rule.nodes.size() == rule.weights.size());
    CHECK(rule.size() == 200);
    CHECK(rule.lower == r);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(rule.weights[i] > 0.0);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
  }
  CHECK_THROWS_AS(nibb::semi_infinite_rule(0.0, 1), nibb::ConfigError);
}

TEST_CASE("composite Legendre integrates monomials up to its degree") {
  const auto rule = nibb::composite_legendre(-1.0, 2.0, 3, 10);
  REQUIRE(rule.degree == 19);
  for (int k = 0; k <= rule.degree; ++k) {
    const double exact = (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
    const double got = rule.integrate([k](double x) { return std::pow(x, k); });
    CHECK(got == Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("semi_infinite_rule against closed forms") {
  const double half_root_pi = std::sqrt(std::numbers::pi) / 2.0;
  CHECK(std::abs(nibb::semi_infinite_rule(0.0).integrate([](double) { return 1.0; }) - half_root_pi) < 1e-12);
  CHECK(std::abs(nibb::semi_infinite_rule(1.0).integrate([](double) { return 1.0; }) - half_root_pi * std::erfc(1.0)) <
        1e-12);
  const double h3 = nibb::semi_infinite_rule(0.5).integrate([](double z) { return nibb::hermite_poly(3, z); });
  CHECK(std::abs(h3 - nibb::hermite_poly(2, 0.5) * std::exp(-0.25)) < 1e-10);
}

TEST_CASE("Gaussian antiderivative of H_l") {
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    const auto rule = nibb::semi_infinite_rule(r);
    for (int l = 1; l <= 20; ++l) {
      const double got = rule.integrate([l](double z) { return nibb::hermite_poly(l, z); });
      const double want = nibb::hermite_poly(l - 1, r) * std::exp(-r * r);
      // Scale: int_r^inf |H_l| e^{-z^2}, the size of the terms being summed.
      const double scale = rule.integrate([l](double z) { return std::abs(nibb::hermite_poly(l, z)); });
      CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, scale));
    }
  }
}
