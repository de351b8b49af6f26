#include "doctest.h"

#include <cmath>
#include <numbers>

#include "nibb/errors.hpp"
#include "nibb/fredholm.hpp"
#include "nibb/kernels.hpp"
#include "nibb/orthopoly.hpp"

using doctest::Approx;
using nibb::KernelMatrix;

namespace {

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

double max_abs(const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); }

const double kRadii[] = {0.0, 0.3, 1.0, 2.5};

}  // namespace

TEST_CASE("KernelMatrix validates shape and entries") {
  CHECK_THROWS_AS(KernelMatrix("x", {0, 1}, {0, 1}, Eigen::MatrixXd::Zero(3, 2)), nibb::DimensionError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(1, 0) = std::nan("");
  CHECK_THROWS_AS(KernelMatrix("x", {0, 1}, {0, 1}, bad), nibb::DomainError);
  const KernelMatrix m("m", {1, 2}, {0, 0}, Eigen::MatrixXd::Constant(2, 1, 3.0));
  CHECK(m.at(2, 0) == 3.0);
  CHECK_THROWS_AS(m.at(0, 0), nibb::DimensionError);
  CHECK(m.to_csv().find("3.00000000000000000e+00") != std::string::npos);
}

TEST_CASE("multiply rejects mismatched index ranges") {
  const auto s = nibb::s_matrix(4, 0.5);  // rows 0..1, cols 0..3
  const auto t = nibb::t_matrix(4, 0.5);  // rows 0..3, cols 0..1
  CHECK_NOTHROW(nibb::multiply(s, t));
  CHECK_THROWS_AS(nibb::multiply(s, s), nibb::DimensionError);
  CHECK_THROWS_AS(nibb::multiply(nibb::f_matrix(3, 0.5), t), nibb::DimensionError);
}

TEST_CASE("ParitySplit") {
  for (int N = 1; N <= 20; ++N) {
    const auto ps = nibb::ParitySplit::of(N);
    CHECK(ps.b == (N % 2 == 1 ? 1 : 2));
    CHECK((N - ps.b) % 2 == 0);
    CHECK(N - ps.b >= 0);
    CHECK(ps.half == (N + 1) / 2);
    CHECK(ps.last() == (N - ps.b) / 2);
  }
  CHECK_THROWS_AS(nibb::ParitySplit::of(0), nibb::DomainError);
}

TEST_CASE("m_matrix examples") {
  for (double alpha : {-2.0, 0.0, 1.3})
    CHECK(nibb::m_matrix_general_p(1, 0.0, alpha).at(0, 0) == Approx(1.0).epsilon(1e-12));
  for (double r : {0.0, 0.4, 1.7})
    CHECK(nibb::m_matrix_reflected(1, r, -r).at(0, 0) == Approx(std::erfc(r)).epsilon(1e-12));
  for (int N : {1, 4, 8}) CHECK(max_abs(nibb::m_matrix_general_p(N, 8.0, -0.4).entries()) < 1e-10);
  CHECK_THROWS_AS(nibb::m_matrix_general_p(2, 1.0, std::numeric_limits<double>::infinity()), nibb::DomainError);
}

TEST_CASE("M at the small-p scaling converges to the reflected limit") {
  const double p = 1e-6;
  const double alpha = 0.5 * std::log(p / (1.0 - p));
  for (int N : {1, 2, 3, 5})
    for (double r : {0.2, 0.8, 1.5}) {
      const auto m = nibb::m_matrix_general_p(N, 2.0 * std::sqrt(p) * r, alpha);
      const auto lim = nibb::m_matrix_reflected(N, r, -r);
      CHECK(max_abs_diff(m.entries(), lim.entries()) < 1e-4);
    }
}

TEST_CASE("reflected M and Q F share the Fredholm determinant") {
  for (int N = 1; N <= 8; ++N)
    for (double r : {0.3, 1.0, 2.0})
      CHECK(nibb::det_id_minus(nibb::m_matrix_reflected(N, r, -r)) ==
            Approx(nibb::limit_determinant(N, r)).epsilon(1e-9));
}

TEST_CASE("Q closed form examples") {
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    const auto q = nibb::q_matrix_closed(3, r);
    CHECK(q.at(0, 0) == Approx(0.5 * std::erfc(r)).epsilon(1e-14));
    CHECK(q.at(0, 1) == Approx(std::exp(-r * r) / std::sqrt(std::numbers::pi)).epsilon(1e-14));
  }
}

TEST_CASE("Q closed form matches direct quadrature") {
  for (int N = 1; N <= 12; ++N)
    for (double r : {0.0, 0.5, 1.0, 2.0})
      CHECK(max_abs_diff(nibb::q_matrix_closed(N, r).entries(), nibb::q_matrix_quadrature(N, r).entries()) < 1e-11);
}

TEST_CASE("F examples") {
  const double r = 0.7;
  const auto f = nibb::f_matrix(3, r);
  CHECK(f.at(0, 0) == 2.0);
  CHECK(f.at(1, 1) == 0.0);
  CHECK(f.at(2, 2) == 2.0);
  CHECK(f.at(0, 1) == Approx(4 * r));
  CHECK(f.at(1, 2) == Approx(-8 * r));
  CHECK(f.at(0, 2) == Approx(16 * r * r));
  CHECK(f.at(2, 0) == 0.0);
}

TEST_CASE("S and T examples") {
  const double r = 0.8;
  const auto s2 = nibb::s_matrix(2, r);
  REQUIRE(s2.rows() == 1);
  REQUIRE(s2.cols() == 2);
  CHECK(s2.at(0, 0) == Approx(1.0));
  CHECK(s2.at(0, 1) == Approx(2 * r));
  const auto s3 = nibb::s_matrix(3, r);
  CHECK(s3.at(0, 0) == 0.0);
  CHECK(s3.at(0, 1) == 0.0);
  CHECK(s3.at(0, 2) == Approx(2.0));
  for (int N = 1; N <= 9; ++N) {
    const auto ps = nibb::ParitySplit::of(N);
    const auto s = nibb::s_matrix(N, r);
    for (int j = 0; j < ps.half; ++j)
      for (int t = 0; t < N - 2 * j - ps.b; ++t) CHECK(s.at(j, t) == 0.0);
  }
  const auto t2 = nibb::t_matrix(2, r);
  REQUIRE(t2.rows() == 2);
  REQUIRE(t2.cols() == 1);
  CHECK(t2.at(0, 0) == Approx(1.0));
  CHECK(t2.at(1, 0) == 0.0);
  CHECK(nibb::multiply(s2, t2).at(0, 0) == Approx(1.0));
  const auto ts = nibb::scaled(nibb::multiply(t2, s2), 2.0);
  CHECK(max_abs_diff(ts.entries(), nibb::f_matrix(2, r).entries()) < 1e-14);
}

TEST_CASE("real-form T agrees with the complex evaluation") {
  for (int N = 1; N <= 14; ++N)
    for (double r : kRadii) {
      double max_imag = -1.0;
      const auto tc = nibb::t_matrix_complex(N, r, &max_imag);
      const auto t = nibb::t_matrix(N, r);
      CHECK(max_imag >= 0.0);
      CHECK(max_imag <= 1e-12 * std::max(1.0, max_abs(t.entries())));
      CHECK(max_abs_diff(t.entries(), tc.entries()) <= 1e-12 * std::max(1.0, max_abs(t.entries())));
    }
}

// The entries of S, T and F grow like (4r)^N, so products carry rounding
// error proportional to their largest term; tolerances are relative to it.
TEST_CASE("2TS = F and ST = I in floating point") {
  for (int N = 1; N <= 14; ++N)
    for (double r : kRadii) {
      const auto s = nibb::s_matrix(N, r);
      const auto t = nibb::t_matrix(N, r);
      const auto f = nibb::f_matrix(N, r);
      const Eigen::MatrixXd ts = 2.0 * t.entries() * s.entries();
      const double scale = std::max(1.0, (t.entries().cwiseAbs() * s.entries().cwiseAbs()).maxCoeff());
      CHECK(max_abs_diff(ts, f.entries()) < 1e-10 * scale);
      const Eigen::MatrixXd st = s.entries() * t.entries();
      const double st_scale = std::max(1.0, (s.entries().cwiseAbs() * t.entries().cwiseAbs()).maxCoeff());
      CHECK(max_abs_diff(st, Eigen::MatrixXd::Identity(st.rows(), st.cols())) < 1e-10 * st_scale);
    }
}

TEST_CASE("2SQT = A in floating point") {
  for (int N = 1; N <= 14; ++N)
    for (double r : kRadii) {
      const auto s = nibb::s_matrix(N, r);
      const auto t = nibb::t_matrix(N, r);
      const auto q = nibb::q_matrix_closed(N, r);
      const Eigen::MatrixXd sqt = 2.0 * s.entries() * q.entries() * t.entries();
      const double scale =
          std::max(1.0, (s.entries().cwiseAbs() * q.entries().cwiseAbs() * t.entries().cwiseAbs()).maxCoeff());
      CHECK(max_abs_diff(sqt, nibb::a_matrix(N, r).entries()) < 1e-9 * scale);
    }
}

TEST_CASE("Q F has rank floor((N+1)/2)") {
  for (int N = 1; N <= 12; ++N)
    for (double r : {0.0, 0.3, 1.0}) {
      const Eigen::MatrixXd qf = nibb::q_matrix_closed(N, r).entries() * nibb::f_matrix(N, r).entries();
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(qf).singularValues();
      const int rank = (N + 1) / 2;
      CHECK(sv(rank - 1) > 1e-10 * sv(0));
      for (int i = rank; i < N; ++i) CHECK(sv(i) < 1e-10 * sv(0));
    }
}

TEST_CASE("det(I - QF) = det(I - FQ)") {
  for (int N = 1; N <= 10; ++N)
    for (double r : {0.2, 1.0, 2.0}) {
      const auto q = nibb::q_matrix_closed(N, r);
      const auto f = nibb::f_matrix(N, r);
      CHECK(std::abs(nibb::det_id_minus(nibb::multiply(q, f)) - nibb::det_id_minus(nibb::multiply(f, q))) < 1e-10);
    }
}

TEST_CASE("A examples") {
  for (double r : {0.0, 0.6, 1.4}) {
    CHECK(nibb::a_matrix(1, r).at(0, 0) == Approx(std::erfc(r)).epsilon(1e-14));
    CHECK(nibb::a_matrix(2, r).at(0, 0) == Approx(2.0 * nibb::q_matrix_closed(2, r).at(1, 1)).epsilon(1e-14));
  }
}

// With Q normalized by C_j^2, A is similar (not equal) to a symmetric matrix:
// D^{-1} A D with D = diag(C_{2j+b-1}) is, up to the signs (-1)^{j+k}, the
// Laguerre Gram matrix G(floor((N+1)/2), (-1)^N/2, r^2).
TEST_CASE("A is diagonally similar to the Laguerre Gram matrix") {
  for (int N = 1; N <= 12; ++N)
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      const auto ps = nibb::ParitySplit::of(N);
      const auto a = nibb::a_matrix(N, r);
      const auto g = nibb::laguerre_kernel_matrix(ps.half, (N % 2 == 0) ? 0.5 : -0.5, r * r);
      for (int j = 0; j < ps.half; ++j)
        for (int k = 0; k < ps.half; ++k) {
          const double cj = std::sqrt(static_cast<double>(nibb::hermite_norm_sq(2 * j + ps.b - 1)));
          const double ck = std::sqrt(static_cast<double>(nibb::hermite_norm_sq(2 * k + ps.b - 1)));
          const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
          CHECK(std::abs(sign * a.at(j, k) * ck / cj - g.at(j, k)) < 1e-10);
          CHECK(std::abs(a.at(j, k) * ck / cj - a.at(k, j) * cj / ck) < 1e-10);
        }
    }
}

TEST_CASE("Laguerre Gram matrix examples") {
  CHECK(nibb::laguerre_kernel_matrix(1, -0.5, 0.0).at(0, 0) == Approx(1.0).epsilon(1e-12));
  for (double x : {0.1, 0.7, 2.0, 5.0}) {
    CHECK(nibb::laguerre_kernel_matrix(1, -0.5, x).at(0, 0) == Approx(std::erfc(std::sqrt(x))).epsilon(1e-11));
    const double gamma32_tail = 1.0 - (std::erf(std::sqrt(x)) - 2.0 / std::sqrt(std::numbers::pi) * std::sqrt(x) * std::exp(-x));
    CHECK(nibb::laguerre_kernel_matrix(1, 0.5, x).at(0, 0) == Approx(gamma32_tail).epsilon(1e-11));
  }
  for (int m : {2, 5})
    CHECK(max_abs_diff(nibb::laguerre_kernel_matrix(m, 0.5, 0.0).entries(), Eigen::MatrixXd::Identity(m, m)) < 1e-11);
}
