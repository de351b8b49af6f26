#include "nibb/exactcheck.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nibb/errors.hpp"
#include "nibb/orthopoly.hpp"

namespace nibb {

namespace {

// H_n and P_n polynomials are reused across every check; build them once.
class PolyCache {
 public:
  const RationalPoly& hermite(int n) { return get(hermite_, n, [](int k) { return hermite_poly_exact(k); }); }
  const RationalPoly& imag_reduced(int n) { return get(imag_, n, [](int k) { return hermite_imag_reduced(k); }); }

 private:
  template <class Make>
  const RationalPoly& get(std::map<int, RationalPoly>& store, int n, Make make) {
    std::lock_guard lock(mutex_);
    auto it = store.find(n);
    if (it == store.end()) it = store.emplace(n, make(n)).first;
    return it->second;
  }
  std::mutex mutex_;
  std::map<int, RationalPoly> hermite_;
  std::map<int, RationalPoly> imag_;
};

PolyCache& cache() {
  static PolyCache c;
  return c;
}

const RationalPoly kZeroPoly;

const RationalPoly& H(int n) { return n < 0 ? kZeroPoly : cache().hermite(n); }
const RationalPoly& P(int n) { return n < 0 ? kZeroPoly : cache().imag_reduced(n); }

Rational inv_factorial(long n) { return n < 0 ? Rational(0) : Rational(BigInt(1), factorial(n)); }
Rational fact(long n) { return Rational(factorial(n)); }
Rational pow2(long e) {
  Rational out = 1;
  if (e >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<unsigned long>(-e));
  }
  return out;
}
Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// a (re) + i b (im) with polynomial parts; add_phase adds i^e * p.
struct GaussPoly {
  RationalPoly re;
  RationalPoly im;

  void add_phase(long e, const RationalPoly& p) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += p; break;
      case 1: im += p; break;
      case 2: re -= p; break;
      default: im -= p; break;
    }
  }
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) { return a.re == b.re && a.im == b.im; }
  std::string to_string() const { return "(" + re.to_string() + ") + i(" + im.to_string() + ")"; }
};

IdentityResult compare(std::string identity, std::string params, const RatMatrix& lhs, const RatMatrix& rhs) {
  IdentityResult res{std::move(identity), std::move(params), true, std::nullopt};
  if (lhs.row_range() != rhs.row_range() || lhs.col_range() != rhs.col_range()) {
    res.pass = false;
    res.counterexample = "shape mismatch";
    return res;
  }
  if (auto diff = RatMatrix::first_difference(lhs, rhs)) {
    res.pass = false;
    res.counterexample = *diff;
  }
  return res;
}

std::string nr_params(int N, const Rational& r) { return "N=" + std::to_string(N) + ", r=" + to_string(r); }

RationalPoly derivative(const RationalPoly& p) {
  std::vector<Rational> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * i);
  return RationalPoly(std::move(out));
}

RationalPoly umbral(int n, const Rational& alpha) {
  // H^[alpha]_n(x) = (alpha/2)^{n/2} H_n(x / sqrt(2 alpha))
  //               = sum_j (-1)^j n!/(j!(n-2j)!) (alpha/2)^j x^{n-2j}
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Rational power = 1;
  for (int j = 0; 2 * j <= n; ++j) {
    c[static_cast<std::size_t>(n - 2 * j)] = sign(j) * fact(n) * inv_factorial(j) * inv_factorial(n - 2 * j) * power;
    power *= alpha / 2;
  }
  return RationalPoly(std::move(c));
}

void record(IdentityResult& agg, bool ok, const std::string& where) {
  if (!ok && agg.pass) {
    agg.pass = false;
    agg.counterexample = where;
  }
}

}  // namespace

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::string label, IndexRange rows, IndexRange cols)
    : label_(std::move(label)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(std::max(rows.size(), 0) * std::max(cols.size(), 0))) {}

RatMatrix RatMatrix::identity(std::string label, int n) {
  RatMatrix m(std::move(label), {0, n - 1}, {0, n - 1});
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational& RatMatrix::operator()(int i, int j) {
  return entries_[static_cast<std::size_t>((i - rows_.lo) * cols() + (j - cols_.lo))];
}

const Rational& RatMatrix::operator()(int i, int j) const {
  return entries_[static_cast<std::size_t>((i - rows_.lo) * cols() + (j - cols_.lo))];
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("RatMatrix product: '" + a.label_ + "' and '" + b.label_ + "' do not chain");
  RatMatrix out(a.label_ + "*" + b.label_, a.rows_, b.cols_);
  for (int i = a.rows_.lo; i <= a.rows_.hi; ++i)
    for (int k = a.cols_.lo; k <= a.cols_.hi; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = b.cols_.lo; j <= b.cols_.hi; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatMatrix operator*(const Rational& c, RatMatrix m) {
  for (auto& e : m.entries_) e *= c;
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RatMatrix difference: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::optional<std::string> RatMatrix::first_difference(const RatMatrix& a, const RatMatrix& b) {
  for (int i = a.rows_.lo; i <= a.rows_.hi; ++i)
    for (int j = a.cols_.lo; j <= a.cols_.hi; ++j)
      if (a(i, j) != b(i, j))
        return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + a(i, j).get_str() + " vs " + b(i, j).get_str();
  return std::nullopt;
}

std::string RatMatrix::to_string() const {
  std::string out = label_ + " [";
  for (int i = rows_.lo; i <= rows_.hi; ++i) {
    out += (i == rows_.lo) ? "[" : ", [";
    for (int j = cols_.lo; j <= cols_.hi; ++j) {
      if (j > cols_.lo) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

// ----------------------------------------------------------------- BiPolyRat

void BiPolyRat::set(int i, int j, const Rational& v) {
  if (static_cast<int>(c_.size()) <= i) c_.resize(static_cast<std::size_t>(i) + 1);
  auto& row = c_[static_cast<std::size_t>(i)];
  if (static_cast<int>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
  row[static_cast<std::size_t>(j)] = v;
}

BiPolyRat BiPolyRat::in_x(const RationalPoly& p) {
  BiPolyRat out;
  for (int i = 0; i <= p.degree(); ++i) out.set(i, 0, p.coeff(i));
  return out;
}

BiPolyRat BiPolyRat::in_y(const RationalPoly& p) {
  BiPolyRat out;
  for (int j = 0; j <= p.degree(); ++j) out.set(0, j, p.coeff(j));
  return out;
}

Rational BiPolyRat::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return 0;
  const auto& row = c_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

bool BiPolyRat::is_zero() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

BiPolyRat& BiPolyRat::operator+=(const BiPolyRat& rhs) {
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_[i].size(); ++j)
      set(static_cast<int>(i), static_cast<int>(j), coeff(static_cast<int>(i), static_cast<int>(j)) + rhs.c_[i][j]);
  return *this;
}

BiPolyRat& BiPolyRat::operator-=(const BiPolyRat& rhs) {
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_[i].size(); ++j)
      set(static_cast<int>(i), static_cast<int>(j), coeff(static_cast<int>(i), static_cast<int>(j)) - rhs.c_[i][j]);
  return *this;
}

BiPolyRat operator*(const BiPolyRat& a, const BiPolyRat& b) {
  BiPolyRat out;
  for (std::size_t i1 = 0; i1 < a.c_.size(); ++i1)
    for (std::size_t j1 = 0; j1 < a.c_[i1].size(); ++j1) {
      if (a.c_[i1][j1] == 0) continue;
      for (std::size_t i2 = 0; i2 < b.c_.size(); ++i2)
        for (std::size_t j2 = 0; j2 < b.c_[i2].size(); ++j2) {
          if (b.c_[i2][j2] == 0) continue;
          const int i = static_cast<int>(i1 + i2), j = static_cast<int>(j1 + j2);
          out.set(i, j, out.coeff(i, j) + a.c_[i1][j1] * b.c_[i2][j2]);
        }
    }
  return out;
}

BiPolyRat operator*(const Rational& c, BiPolyRat a) {
  for (auto& row : a.c_)
    for (auto& v : row) v *= c;
  return a;
}

// ------------------------------------------------------ exact reduction matrices

RatMatrix exact_s(int N, const Rational& r) {
  const ParitySplit ps = ParitySplit::of(N);
  RatMatrix s("S", {0, ps.last()}, {0, N - 1});
  for (int j = 0; j < ps.half; ++j)
    for (int t = 0; t < N; ++t) {
      const int m = t - N + 2 * j + ps.b;
      if (m < 0) continue;
      s(j, t) = fact(t) * inv_factorial(m) * pow2(-2 * j) * H(m)(r);
    }
  return s;
}

RatMatrix exact_t(int N, const Rational& r) {
  const ParitySplit ps = ParitySplit::of(N);
  RatMatrix t("T", {0, N - 1}, {0, ps.last()});
  for (int u = 0; u < N; ++u)
    for (int k = 0; k < ps.half; ++k) {
      const int m = N - 2 * k - ps.b - u;
      if (m < 0) continue;
      t(u, k) = sign(u) * pow2(2 * k) * inv_factorial(u) * inv_factorial(m) * P(m)(r);
    }
  return t;
}

RatMatrix exact_f(int N, const Rational& r) {
  ParitySplit::of(N);
  RatMatrix f("F", {0, N - 1}, {0, N - 1});
  const Rational four_r = 4 * r;
  for (int j = 0; j < N; ++j) {
    Rational power = 1;
    for (int k = j; k < N; ++k) {
      f(j, k) = Rational(binomial(k, j)) * power * sign(j);
      power *= four_r;
    }
    f(j, j) += 1;
  }
  return f;
}

RatMatrix exact_q_reduced(int N, const Rational& r) {
  ParitySplit::of(N);
  RatMatrix q("R", {0, N - 1}, {0, N - 1});
  std::vector<Rational> h(static_cast<std::size_t>(2 * N));
  for (int l = 0; l < 2 * N; ++l) h[static_cast<std::size_t>(l)] = H(l)(r);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      Rational sum = 0;
      for (int l = 0; l <= std::min(j, k); ++l) {
        const int deg = j + k - 2 * l - 1;
        if (deg < 0) continue;
        sum += pow2(l) * fact(l) * Rational(binomial(j, l) * binomial(k, l)) * h[static_cast<std::size_t>(deg)];
      }
      q(j, k) = sum * pow2(-j) * inv_factorial(j);
    }
  return q;
}

RatMatrix exact_a_reduced(int N, const Rational& r) {
  const ParitySplit ps = ParitySplit::of(N);
  const RatMatrix q = exact_q_reduced(N, r);
  RatMatrix a("R_A", {0, ps.last()}, {0, ps.last()});
  for (int j = 0; j < ps.half; ++j)
    for (int k = 0; k < ps.half; ++k) a(j, k) = 2 * q(2 * j + ps.b - 1, 2 * k + ps.b - 1);
  return a;
}

IdentityResult check_ts_is_f(int N, const Rational& r) {
  return compare("2TS=F", nr_params(N, r), Rational(2) * (exact_t(N, r) * exact_s(N, r)), exact_f(N, r));
}

IdentityResult check_st_is_identity(int N, const Rational& r) {
  const ParitySplit ps = ParitySplit::of(N);
  return compare("ST=I", nr_params(N, r), exact_s(N, r) * exact_t(N, r), RatMatrix::identity("I", ps.half));
}

IdentityResult check_sqt_is_a(int N, const Rational& r) {
  IdentityResult st = check_st_is_identity(N, r);
  if (!st.pass) {
    st.identity = "2SQT=A";
    st.counterexample = "ST=I fails first: " + st.counterexample.value_or("");
    return st;
  }
  const RatMatrix s = exact_s(N, r);
  const RatMatrix t = exact_t(N, r);
  return compare("2SQT=A", nr_params(N, r), Rational(2) * (s * exact_q_reduced(N, r) * t), exact_a_reduced(N, r));
}

bool exact_ts_is_f(int N, const Rational& r) { return check_ts_is_f(N, r).pass; }
bool exact_st_is_identity(int N, const Rational& r) { return check_st_is_identity(N, r).pass; }
bool exact_sqt_is_a(int N, const Rational& r) { return check_sqt_is_a(N, r).pass; }

// ------------------------------------------------------------------ lemmas

namespace {

RationalPoly four_r_pow(int m) { return RationalPoly::monomial(pow2(2 * m), m); }

std::vector<IdentityResult> lemma1_part1(int m) {
  const std::string params = "m=" + std::to_string(m);
  GaussPoly odd, even;
  for (int s = 0; 2 * s + 1 <= m; ++s)
    odd.add_phase(m - 2 * s - 1, Rational(binomial(m, 2 * s + 1)) * sign(s) * (P(m - 2 * s - 1) * H(2 * s + 1)));
  for (int s = 0; 2 * s <= m; ++s)
    even.add_phase(m - 2 * s, Rational(binomial(m, 2 * s)) * sign(s) * (P(m - 2 * s) * H(2 * s)));
  GaussPoly odd_rhs, even_rhs;
  odd_rhs.add_phase(m - 1, Rational(1, 2) * four_r_pow(m));
  even_rhs.add_phase(m, Rational(1, 2) * four_r_pow(m));
  IdentityResult a{"lemma1.1-odd", params, odd == odd_rhs, std::nullopt};
  if (!a.pass) a.counterexample = "lhs " + odd.to_string() + " vs rhs " + odd_rhs.to_string();
  IdentityResult b{"lemma1.1-even", params, even == even_rhs, std::nullopt};
  if (!b.pass) b.counterexample = "lhs " + even.to_string() + " vs rhs " + even_rhs.to_string();
  return {a, b};
}

IdentityResult lemma1_part2(int m) {
  GaussPoly lhs;
  for (int t = 0; t <= m; ++t) lhs.add_phase(m + 2 * t, Rational(binomial(m, t)) * (H(t) * P(m - t)));
  GaussPoly rhs;
  if (m == 0) rhs.re = RationalPoly::constant(1);
  IdentityResult res{"lemma1.2", "m=" + std::to_string(m), lhs == rhs, std::nullopt};
  if (!res.pass) res.counterexample = "lhs " + lhs.to_string();
  return res;
}

IdentityResult lemma1_part3(int m, int d) {
  GaussPoly lhs;
  for (int u = 0; u <= m; ++u) lhs.add_phase(m + 2 * u, Rational(binomial(m, u)) * (P(m - u) * H(u + m + d)));
  GaussPoly rhs;
  if (d >= 0) rhs.add_phase(m, pow2(m) * fact(m + d) * inv_factorial(d) * H(d));
  IdentityResult res{"lemma1.3", "m=" + std::to_string(m) + ", d=" + std::to_string(d), lhs == rhs, std::nullopt};
  if (!res.pass) res.counterexample = "lhs " + lhs.to_string() + " vs rhs " + rhs.to_string();
  return res;
}

IdentityResult lemma2_part_i(int t, int m) {
  Rational lhs = 0;
  for (int l = 0; l <= m; ++l) lhs += sign(l) * Rational(binomial(t, l) * binomial(t - l - 1, m - l));
  IdentityResult res{"lemma2.i", "t=" + std::to_string(t) + ", m=" + std::to_string(m), lhs == sign(m), std::nullopt};
  if (!res.pass) res.counterexample = "lhs " + lhs.get_str();
  return res;
}

IdentityResult lemma2_part_ii(int t, int k, int h) {
  Rational lhs = 0;
  for (int u = 0; u <= k; ++u)
    lhs += sign(u) * fact(t + u) * inv_factorial(u) * inv_factorial(k - u) * inv_factorial(t + u - h);
  const Rational rhs = sign(k) * fact(h) * inv_factorial(k) * Rational(binomial(t, h - k));
  IdentityResult res{"lemma2.ii", "t=" + std::to_string(t) + ", k=" + std::to_string(k) + ", h=" + std::to_string(h),
                     lhs == rhs, std::nullopt};
  if (!res.pass) res.counterexample = "lhs " + lhs.get_str() + " vs rhs " + rhs.get_str();
  return res;
}

}  // namespace

std::vector<IdentityResult> lemma1_checks(int m, int d) {
  if (m < 0) throw DomainError("lemma1: m must be nonnegative");
  if (d + m < 0) throw DomainError("lemma1: part 3 needs d + m >= 0");
  std::vector<IdentityResult> out;
  if (m > 0) {
    for (auto& r : lemma1_part1(m)) out.push_back(std::move(r));
  }
  out.push_back(lemma1_part2(m));
  out.push_back(lemma1_part3(m, d));
  return out;
}

bool lemma1_identities(int m, int d) {
  const auto res = lemma1_checks(m, d);
  return std::all_of(res.begin(), res.end(), [](const IdentityResult& r) { return r.pass; });
}

std::vector<IdentityResult> lemma2_checks(int t, int m, int k, int h) {
  if (t < 0 || m < 0 || k < 0 || h < 0) throw DomainError("lemma2: parameters must be nonnegative");
  std::vector<IdentityResult> out;
  if (t >= m + 1) out.push_back(lemma2_part_i(t, m));
  out.push_back(lemma2_part_ii(t, k, h));
  return out;
}

bool lemma2_identities(int t, int m, int k, int h) {
  const auto res = lemma2_checks(t, m, k, h);
  return std::all_of(res.begin(), res.end(), [](const IdentityResult& r) { return r.pass; });
}

// ------------------------------------------------------------- auxiliary

std::vector<IdentityResult> auxiliary_identities(int n_max) {
  if (n_max < 1) throw DomainError("auxiliary_identities: n_max must be at least 1");
  const std::string params = "n_max=" + std::to_string(n_max);
  std::vector<IdentityResult> out;

  {
    IdentityResult agg{"hermite-product", params, true, std::nullopt};
    for (int j = 0; j <= n_max; ++j)
      for (int k = 0; k <= n_max; ++k) {
        RationalPoly rhs;
        for (int l = 0; l <= std::min(j, k); ++l)
          rhs += pow2(l) * fact(l) * Rational(binomial(j, l) * binomial(k, l)) * H(j + k - 2 * l);
        record(agg, H(j) * H(k) == rhs, "j=" + std::to_string(j) + ", k=" + std::to_string(k));
      }
    out.push_back(std::move(agg));
  }

  {
    IdentityResult agg{"hermite-translation", params, true, std::nullopt};
    const BiPolyRat two_sum = BiPolyRat::in_x(RationalPoly::monomial(2, 1)) + BiPolyRat::in_y(RationalPoly::monomial(2, 1));
    BiPolyRat h0 = BiPolyRat::in_x(RationalPoly::constant(1));
    BiPolyRat h1 = two_sum;
    for (int n = 0; n <= n_max; ++n) {
      BiPolyRat lhs;
      if (n == 0) {
        lhs = h0;
      } else if (n == 1) {
        lhs = h1;
      } else {
        BiPolyRat h2 = two_sum * h1 - Rational(2 * (n - 1)) * h0;
        h0 = h1;
        h1 = h2;
        lhs = h1;
      }
      BiPolyRat rhs;
      for (int k = 0; k <= n; ++k)
        rhs += Rational(binomial(n, k)) *
               (BiPolyRat::in_x(H(k)) * BiPolyRat::in_y(RationalPoly::monomial(pow2(n - k), n - k)));
      record(agg, lhs == rhs, "n=" + std::to_string(n));
    }
    out.push_back(std::move(agg));
  }

  {
    IdentityResult agg{"gamma-scaling", params + ", gamma in {i, 2, 1/3, -3/2}", true, std::nullopt};
    for (int n = 0; n <= n_max; ++n) {
      // gamma = i: i^{n-2l} (i^2 - 1)^l = i^n 2^l, so P_n = sum_l 2^l binom(n,2l) (2l)!/l! H_{n-2l}.
      RationalPoly rhs;
      for (int l = 0; 2 * l <= n; ++l)
        rhs += pow2(l) * Rational(binomial(n, 2 * l)) * fact(2 * l) * inv_factorial(l) * H(n - 2 * l);
      record(agg, P(n) == rhs, "gamma=i, n=" + std::to_string(n));
      for (const Rational& g : {Rational(2), Rational(1, 3), Rational(-3, 2)}) {
        RationalPoly grhs;
        Rational g2m1 = g * g - 1;
        for (int l = 0; 2 * l <= n; ++l) {
          Rational coef = Rational(binomial(n, 2 * l)) * fact(2 * l) * inv_factorial(l);
          for (int e = 0; e < n - 2 * l; ++e) coef *= g;
          for (int e = 0; e < l; ++e) coef *= g2m1;
          grhs += coef * H(n - 2 * l);
        }
        record(agg, H(n).scale_argument(g) == grhs, "gamma=" + to_string(g) + ", n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(agg));
  }

  {
    IdentityResult agg{"umbral-binomial", params + ", alpha in {1/2, -1/2, 1, -1}", true, std::nullopt};
    for (const Rational& alpha : {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1)}) {
      for (int n = 0; n <= n_max; ++n) {
        BiPolyRat lhs;
        for (int s = 0; s <= n; ++s)
          lhs += Rational(binomial(n, s)) * (BiPolyRat::in_x(umbral(s, alpha)) * BiPolyRat::in_y(umbral(n - s, -alpha)));
        BiPolyRat rhs;  // (x + y)^n
        for (int s = 0; s <= n; ++s)
          rhs += Rational(binomial(n, s)) *
                 (BiPolyRat::in_x(RationalPoly::monomial(1, s)) * BiPolyRat::in_y(RationalPoly::monomial(1, n - s)));
        record(agg, lhs == rhs, "alpha=" + to_string(alpha) + ", n=" + std::to_string(n));
      }
    }
    for (int n = 0; n <= n_max; ++n) {
      // H_n(r) = 2^n H^[1/2]_n(r) and H_n(ir) = (-i)^n 2^n H^[-1/2]_n(-r).
      record(agg, H(n) == pow2(n) * umbral(n, Rational(1, 2)), "H=2^n H^[1/2], n=" + std::to_string(n));
      record(agg, P(n) == sign(n) * pow2(n) * umbral(n, Rational(-1, 2)).scale_argument(-1),
             "H(ir)=(-i)^n 2^n H^[-1/2](-r), n=" + std::to_string(n));
    }
    out.push_back(std::move(agg));
  }

  {
    IdentityResult agg{"hockey-stick", params, true, std::nullopt};
    for (int s = 0; s <= n_max; ++s)
      for (int t = 0; t <= s; ++t) {
        BigInt lhs = 0;
        for (int i = t; i <= s; ++i) lhs += binomial(i, t);
        record(agg, lhs == binomial(s + 1, t + 1), "s=" + std::to_string(s) + ", t=" + std::to_string(t));
      }
    out.push_back(std::move(agg));
  }

  {
    // d/dr [H_{l-1} e^{-r^2}] = -H_l e^{-r^2}, i.e. int_r^inf H_l e^{-z^2} = H_{l-1}(r) e^{-r^2};
    // also H_l' = 2 l H_{l-1}.
    IdentityResult agg{"gaussian-antiderivative", params, true, std::nullopt};
    const RationalPoly two_r = RationalPoly::monomial(2, 1);
    for (int l = 1; l <= n_max; ++l) {
      record(agg, derivative(H(l - 1)) - two_r * H(l - 1) == -H(l), "l=" + std::to_string(l));
      record(agg, derivative(H(l)) == Rational(2 * l) * H(l - 1), "derivative, l=" + std::to_string(l));
    }
    out.push_back(std::move(agg));
  }

  {
    // L_n^{(-1/2)}(u) = (-1)^n 4^{-n}/n! H_{2n}(sqrt u),
    // L_n^{(1/2)}(u)  = (-1)^n 2^{-2n-1}/n! H_{2n+1}(sqrt u)/sqrt u.
    IdentityResult agg{"laguerre-hermite", params, true, std::nullopt};
    for (const Rational& a : {Rational(-1, 2), Rational(1, 2)}) {
      const int b = (a < 0) ? 1 : 2;
      RationalPoly l0 = RationalPoly::constant(1);
      RationalPoly l1({1 + a, -1});
      for (int n = 0; 2 * n + b - 1 <= n_max; ++n) {
        RationalPoly lag;
        if (n == 0) {
          lag = l0;
        } else if (n == 1) {
          lag = l1;
        } else {
          RationalPoly l2 = Rational(1, n) * (RationalPoly({Rational(2 * n - 1) + a, -1}) * l1 - (Rational(n - 1) + a) * l0);
          l0 = l1;
          l1 = l2;
          lag = l1;
        }
        // Even/odd part of H_{2n+b-1} as a polynomial in u = x^2 (dropping one x when odd).
        const RationalPoly& h = H(2 * n + b - 1);
        std::vector<Rational> in_u;
        for (int i = b - 1; i <= h.degree(); i += 2) in_u.push_back(h.coeff(i));
        const RationalPoly rhs = sign(n) * pow2(-2 * n - b + 1) * inv_factorial(n) * RationalPoly(std::move(in_u));
        record(agg, lag == rhs, "a=" + to_string(a) + ", n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(agg));
  }

  {
    IdentityResult agg{"i-power-reduction", params, true, std::nullopt};
    for (int n = 0; n <= n_max; ++n) {
      std::vector<Rational> closed(static_cast<std::size_t>(n) + 1);
      for (int j = 0; 2 * j <= n; ++j)
        closed[static_cast<std::size_t>(n - 2 * j)] = fact(n) * inv_factorial(j) * inv_factorial(n - 2 * j) * pow2(n - 2 * j);
      record(agg, P(n) == RationalPoly(std::move(closed)), "closed form, n=" + std::to_string(n));
    }
    // Complex-rational recurrence for H_n(ir) against i^n P_n(r).
    for (const Rational& r : {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3), Rational(-5, 4)}) {
      Rational re0 = 1, im0 = 0, re1 = 0, im1 = 2 * r;
      for (int n = 0; n <= n_max; ++n) {
        Rational re, im;
        if (n == 0) {
          re = re0;
          im = im0;
        } else if (n == 1) {
          re = re1;
          im = im1;
        } else {
          // H_n = 2 (ir) H_{n-1} - 2(n-1) H_{n-2}
          Rational re2 = -2 * r * im1 - 2 * (n - 1) * re0;
          Rational im2 = 2 * r * re1 - 2 * (n - 1) * im0;
          re0 = re1;
          im0 = im1;
          re1 = re2;
          im1 = im2;
          re = re1;
          im = im1;
        }
        const Rational pn = P(n)(r);
        Rational want_re = 0, want_im = 0;
        switch (n % 4) {
          case 0: want_re = pn; break;
          case 1: want_im = pn; break;
          case 2: want_re = -pn; break;
          default: want_im = -pn; break;
        }
        record(agg, re == want_re && im == want_im, "r=" + to_string(r) + ", n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(agg));
  }

  return out;
}

std::vector<IdentityResult> run_verification(const VerifyConfig& config) {
  std::vector<IdentityResult> out;
  if (config.propositions) {
    for (int N = 1; N <= std::max(config.n_max_props, config.n_max_sqt); ++N)
      for (const Rational& r : config.radii) {
        if (N <= config.n_max_props) {
          out.push_back(check_ts_is_f(N, r));
          out.push_back(check_st_is_identity(N, r));
        }
        if (N <= config.n_max_sqt) out.push_back(check_sqt_is_a(N, r));
      }
  }
  if (config.lemmas) {
    for (int m = 0; m <= config.lemma1_m_max; ++m) {
      if (m > 0) {
        for (auto& r : lemma1_part1(m)) out.push_back(std::move(r));
      }
      out.push_back(lemma1_part2(m));
      IdentityResult part3{"lemma1.3", "m=" + std::to_string(m) + ", d in [" + std::to_string(-m) + "," +
                                           std::to_string(config.lemma1_d_max) + "]",
                           true, std::nullopt};
      for (int d = -m; d <= config.lemma1_d_max; ++d) {
        const IdentityResult r = lemma1_part3(m, d);
        if (!r.pass) record(part3, false, r.parameters + ": " + r.counterexample.value_or(""));
      }
      out.push_back(std::move(part3));
    }
    const int top = config.lemma2_max;
    IdentityResult part_i{"lemma2.i", "t,m <= " + std::to_string(top) + ", t >= m+1", true, std::nullopt};
    for (int t = 0; t <= top; ++t)
      for (int m = 0; m + 1 <= t && m <= top; ++m) {
        const IdentityResult r = lemma2_part_i(t, m);
        if (!r.pass) record(part_i, false, r.parameters + ": " + r.counterexample.value_or(""));
      }
    out.push_back(std::move(part_i));
    IdentityResult part_ii{"lemma2.ii", "t,k,h <= " + std::to_string(top), true, std::nullopt};
    for (int t = 0; t <= top; ++t)
      for (int k = 0; k <= top; ++k)
        for (int h = 0; h <= top; ++h) {
          const IdentityResult r = lemma2_part_ii(t, k, h);
          if (!r.pass) record(part_ii, false, r.parameters + ": " + r.counterexample.value_or(""));
        }
    out.push_back(std::move(part_ii));
  }
  if (config.auxiliary) {
    for (auto& r : auxiliary_identities(config.aux_n_max)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nibb
