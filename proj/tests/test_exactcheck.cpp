#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "nibb/errors.hpp"
#include "nibb/exactcheck.hpp"
#include "nibb/kernels.hpp"
#include "nibb/orthopoly.hpp"

using nibb::Rational;
using nibb::RatMatrix;

namespace {

bool all_pass(const std::vector<nibb::IdentityResult>& res) {
  return std::all_of(res.begin(), res.end(), [](const auto& r) { return r.pass; });
}

}  // namespace

TEST_CASE("RatMatrix arithmetic") {
  RatMatrix a("a", {0, 1}, {0, 1});
  a(0, 0) = 1;
  a(0, 1) = Rational(1, 2);
  a(1, 1) = 3;
  const RatMatrix id = RatMatrix::identity("I", 2);
  CHECK(a * id == a);
  CHECK((a - a)(0, 1) == 0);
  CHECK((Rational(2) * a)(0, 1) == 1);
  RatMatrix b = a;
  b(1, 0) = Rational(1, 7);
  const auto diff = RatMatrix::first_difference(a, b);
  REQUIRE(diff.has_value());
  CHECK(diff->find("(1,0)") != std::string::npos);
  CHECK_FALSE(RatMatrix::first_difference(a, a).has_value());
  CHECK_THROWS_AS(a * RatMatrix("c", {0, 2}, {0, 0}), nibb::DimensionError);
  CHECK(a.to_string().find("1/2") != std::string::npos);
}

TEST_CASE("BiPolyRat arithmetic") {
  using nibb::BiPolyRat;
  using nibb::RationalPoly;
  const BiPolyRat x = BiPolyRat::in_x(RationalPoly::monomial(1, 1));
  const BiPolyRat y = BiPolyRat::in_y(RationalPoly::monomial(1, 1));
  const BiPolyRat sq = (x + y) * (x + y);
  CHECK(sq.coeff(2, 0) == 1);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(0, 2) == 1);
  CHECK(sq.coeff(5, 5) == 0);
  CHECK((sq - sq).is_zero());
  CHECK(Rational(3) * x == x + x + x);
  CHECK_FALSE(x == y);
}

TEST_CASE("exact 2TS = F") {
  CHECK(nibb::exact_ts_is_f(2, Rational(1, 2)));
  const RatMatrix ts = Rational(2) * (nibb::exact_t(2, Rational(1, 2)) * nibb::exact_s(2, Rational(1, 2)));
  CHECK(ts(0, 0) == 2);
  CHECK(ts(0, 1) == 2);
  CHECK(ts(1, 0) == 0);
  CHECK(ts(1, 1) == 0);
  CHECK(nibb::exact_ts_is_f(3, Rational(0)));
  for (int N = 1; N <= 8; ++N) CHECK(nibb::exact_ts_is_f(N, Rational(7, 3)));
}

TEST_CASE("exact ST = I") {
  CHECK(nibb::exact_st_is_identity(2, Rational(1, 2)));
  CHECK(nibb::exact_st_is_identity(5, Rational(7, 3)));
  CHECK(nibb::exact_st_is_identity(12, Rational(1)));
}

TEST_CASE("exact 2SQT = A") {
  CHECK(nibb::exact_sqt_is_a(1, Rational(1, 2)));
  CHECK(nibb::exact_sqt_is_a(2, Rational(1)));
  const auto res = nibb::check_sqt_is_a(6, Rational(-5, 3));
  CHECK(res.pass);
  CHECK(res.identity == "2SQT=A");
  CHECK(res.parameters == "N=6, r=-5/3");
}

TEST_CASE("a corrupted matrix is reported with its entry") {
  const Rational r(1, 2);
  RatMatrix f = nibb::exact_f(3, r);
  f(0, 2) += 1;
  const RatMatrix ts = Rational(2) * (nibb::exact_t(3, r) * nibb::exact_s(3, r));
  const auto diff = RatMatrix::first_difference(ts, f);
  REQUIRE(diff.has_value());
  CHECK(diff->rfind("(0,2)", 0) == 0);
}

TEST_CASE("exact matrices agree with the floating-point kernels") {
  const Rational r(1, 2);
  for (int N = 1; N <= 10; ++N) {
    const auto s = nibb::s_matrix(N, 0.5);
    const auto t = nibb::t_matrix(N, 0.5);
    const auto f = nibb::f_matrix(N, 0.5);
    const RatMatrix es = nibb::exact_s(N, r), et = nibb::exact_t(N, r), ef = nibb::exact_f(N, r);
    for (int i = 0; i < es.rows(); ++i)
      for (int j = 0; j < es.cols(); ++j) CHECK(std::abs(s.at(i, j) - es(i, j).get_d()) < 1e-13 * std::max(1.0, std::abs(es(i, j).get_d())));
    for (int i = 0; i < et.rows(); ++i)
      for (int j = 0; j < et.cols(); ++j) CHECK(std::abs(t.at(i, j) - et(i, j).get_d()) < 1e-13 * std::max(1.0, std::abs(et(i, j).get_d())));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) CHECK(std::abs(f.at(i, j) - ef(i, j).get_d()) < 1e-13 * std::max(1.0, std::abs(ef(i, j).get_d())));
  }
}

TEST_CASE("reduced Q matches sqrt(pi) e^{r^2} (Q - erfc/2 I)") {
  const double r = 0.5;
  const auto q = nibb::q_matrix_closed(5, r);
  const RatMatrix rq = nibb::exact_q_reduced(5, Rational(1, 2));
  const double factor = std::sqrt(M_PI) * std::exp(r * r);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) {
      const double tilde = q.at(j, k) - (j == k ? 0.5 * std::erfc(r) : 0.0);
      CHECK(std::abs(factor * tilde - rq(j, k).get_d()) < 1e-12 * std::max(1.0, std::abs(rq(j, k).get_d())));
    }
}

TEST_CASE("lemma 1 examples") {
  const auto m0 = nibb::lemma1_checks(0, 0);
  REQUIRE(m0.size() == 2);  // part 1 needs m > 0
  CHECK(all_pass(m0));
  const auto m1 = nibb::lemma1_checks(1, 0);
  CHECK(all_pass(m1));
  CHECK(std::any_of(m1.begin(), m1.end(), [](const auto& r) { return r.identity == "lemma1.1-odd"; }));
  CHECK(nibb::lemma1_identities(2, 0));
  CHECK(nibb::lemma1_identities(5, -5));
  CHECK(nibb::lemma1_identities(7, 3));
  CHECK_THROWS_AS(nibb::lemma1_checks(-1, 0), nibb::DomainError);
  CHECK_THROWS_AS(nibb::lemma1_checks(2, -3), nibb::DomainError);
}

TEST_CASE("lemma 2 examples") {
  CHECK(nibb::lemma2_identities(2, 0, 0, 0));
  for (int t = 0; t <= 6; ++t)
    for (int h = 0; h <= 6; ++h) CHECK(nibb::lemma2_identities(t, 0, 0, h));
  CHECK(nibb::lemma2_checks(1, 3, 1, 1).size() == 1);  // part (i) skipped for t < m + 1
  CHECK(nibb::lemma2_identities(9, 4, 5, 7));
  CHECK_THROWS_AS(nibb::lemma2_checks(-1, 0, 0, 0), nibb::DomainError);
}

TEST_CASE("auxiliary identities") {
  const auto res = nibb::auxiliary_identities(8);
  CHECK(all_pass(res));
  std::vector<std::string> names;
  for (const auto& r : res) names.push_back(r.identity);
  for (const char* want : {"hermite-product", "hermite-translation", "gamma-scaling", "umbral-binomial", "hockey-stick",
                           "gaussian-antiderivative", "laguerre-hermite", "i-power-reduction"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("run_verification honours its switches") {
  nibb::VerifyConfig cfg;
  cfg.n_max_props = 4;
  cfg.n_max_sqt = 4;
  cfg.radii = {Rational(1, 2)};
  cfg.lemmas = false;
  cfg.auxiliary = false;
  const auto res = nibb::run_verification(cfg);
  CHECK(res.size() == 12);
  CHECK(all_pass(res));
}
