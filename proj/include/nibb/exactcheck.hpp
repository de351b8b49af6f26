#pragma once

// Exact verification of the matrix identities 2TS = F, ST = I, 2SQT = A and
// of the Hermite/binomial lemmas behind them. All arithmetic is in GMP
// rationals; no floating-point value is created anywhere in this module.
//
// Values of H_n at imaginary arguments are carried in reduced form,
// H_n(ir) = i^n P_n(r) with P_n real, so every object stays real-rational up
// to an explicit power of i.

#include <optional>
#include <string>
#include <vector>

#include "nibb/kernels.hpp"
#include "nibb/rational.hpp"

namespace nibb {

class RatMatrix {
 public:
  RatMatrix(std::string label, IndexRange rows, IndexRange cols);

  static RatMatrix identity(std::string label, int n);

  const std::string& label() const { return label_; }
  IndexRange row_range() const { return rows_; }
  IndexRange col_range() const { return cols_; }
  int rows() const { return rows_.size(); }
  int cols() const { return cols_.size(); }

  Rational& operator()(int i, int j);
  const Rational& operator()(int i, int j) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  // First differing entry as "(i,j): lhs vs rhs", or nullopt when equal.
  static std::optional<std::string> first_difference(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;

 private:
  std::string label_;
  IndexRange rows_;
  IndexRange cols_;
  std::vector<Rational> entries_;
};

// Polynomial in two indeterminates x, y with rational coefficients;
// coefficient (i, j) multiplies x^i y^j.
class BiPolyRat {
 public:
  BiPolyRat() = default;

  static BiPolyRat in_x(const RationalPoly& p);
  static BiPolyRat in_y(const RationalPoly& p);

  Rational coeff(int i, int j) const;
  bool is_zero() const;

  BiPolyRat& operator+=(const BiPolyRat& rhs);
  BiPolyRat& operator-=(const BiPolyRat& rhs);
  friend BiPolyRat operator+(BiPolyRat a, const BiPolyRat& b) { return a += b; }
  friend BiPolyRat operator-(BiPolyRat a, const BiPolyRat& b) { return a -= b; }
  friend BiPolyRat operator*(const BiPolyRat& a, const BiPolyRat& b);
  friend BiPolyRat operator*(const Rational& c, BiPolyRat a);
  friend bool operator==(const BiPolyRat& a, const BiPolyRat& b) { return (a - b).is_zero(); }

 private:
  void set(int i, int j, const Rational& v);
  std::vector<std::vector<Rational>> c_;  // c_[i][j]
};

// Exact S, T, F, R = sqrt(pi) e^{r^2} (Q - erfc(r)/2 I) and
// R_A = sqrt(pi) e^{r^2} (A - erfc(r) I) at rational r.
RatMatrix exact_s(int N, const Rational& r);
RatMatrix exact_t(int N, const Rational& r);
RatMatrix exact_f(int N, const Rational& r);
RatMatrix exact_q_reduced(int N, const Rational& r);
RatMatrix exact_a_reduced(int N, const Rational& r);

bool exact_ts_is_f(int N, const Rational& r);
bool exact_st_is_identity(int N, const Rational& r);
// Asserts ST = I first (the erfc parts cancel through it), then 2 S R T = R_A.
bool exact_sqt_is_a(int N, const Rational& r);

struct IdentityResult {
  std::string identity;
  std::string parameters;
  bool pass = true;
  std::optional<std::string> counterexample;
};

IdentityResult check_ts_is_f(int N, const Rational& r);
IdentityResult check_st_is_identity(int N, const Rational& r);
IdentityResult check_sqt_is_a(int N, const Rational& r);

// Hermite binomial sums, checked as polynomial identities in r.
//   part 1 (m > 0): the odd and even sums equal (1/2) i^{m-1} (4r)^m and (1/2) i^m (4r)^m
//   part 2: sum_t (-i)^t binom(m,t) H_t(r) H_{m-t}(ir) = delta_{m,0}
//   part 3 (d + m >= 0): sum_u binom(m,u) (-i)^u H_{m-u}(ir) H_{u+m+d}(r) = i^m 2^m (m+d)!/d! H_d(r)
// Throws DomainError for m < 0 or d + m < 0.
std::vector<IdentityResult> lemma1_checks(int m, int d);
bool lemma1_identities(int m, int d);

//   (i)  t >= m+1: sum_l (-1)^l binom(t,l) binom(t-l-1, m-l) = (-1)^m
//   (ii) sum_u (-1)^u (t+u)! / (u! (k-u)! (t+u-h)!) = (-1)^k (h!/k!) binom(t, h-k)
// Part (i) is skipped when t < m + 1. Throws DomainError on negative input.
std::vector<IdentityResult> lemma2_checks(int t, int m, int k, int h);
bool lemma2_identities(int t, int m, int k, int h);

// Product formula, translation formula, the gamma-scaling identity (at
// gamma = i and a few rational gammas), the umbral H^[alpha] binomial
// identity for alpha in {+-1/2, +-1}, the hockey-stick identity, the
// Gaussian antiderivative of H_l and the i-power reduction, for degrees up
// to n_max.
std::vector<IdentityResult> auxiliary_identities(int n_max);

struct VerifyConfig {
  int n_max_props = 12;       // exact_ts_is_f / exact_st_is_identity
  int n_max_sqt = 10;         // exact_sqt_is_a
  std::vector<Rational> radii{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};
  int lemma1_m_max = 20;
  int lemma1_d_max = 10;
  int lemma2_max = 20;
  int aux_n_max = 15;
  bool propositions = true;
  bool lemmas = true;
  bool auxiliary = true;
};

std::vector<IdentityResult> run_verification(const VerifyConfig& config);

}  // namespace nibb
