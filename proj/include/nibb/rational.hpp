#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nibb {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalisation). Throws
// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

BigInt factorial(long n);
BigInt binomial(long n, long k);  // zero outside 0 <= k <= n

// Dense univariate polynomial with exact rational coefficients; coeffs()[i]
// multiplies x^i. Trailing zero coefficients are never stored, so the zero
// polynomial has an empty coefficient vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;

  Rational operator()(const Rational& x) const;

  // p(c*x)
  RationalPoly scale_argument(const Rational& c) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(RationalPoly a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace nibb
