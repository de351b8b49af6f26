#pragma once

// Finite matrices that reduce the Fredholm determinants of the Hermite and
// Laguerre kernels to ordinary determinants.
//
// Index conventions: the Hermite-side matrices (Q, F, M) are indexed by
// 0..N-1. The rank-reduction matrices S (rows 0..h) and T (cols 0..h) and the
// Laguerre-side matrix A use h = (N-b)/2 with the parity constant b = 1 for
// odd N and b = 2 for even N, so the reduced size is floor((N+1)/2).

#include <Eigen/Dense>

#include <string>

namespace nibb {

struct IndexRange {
  int lo = 0;
  int hi = -1;  // inclusive

  int size() const { return hi - lo + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Labeled dense real matrix with explicit index ranges. Immutable once built;
// construction rejects non-finite entries and shape/range mismatches.
class KernelMatrix {
 public:
  KernelMatrix(std::string label, IndexRange rows, IndexRange cols, Eigen::MatrixXd entries);

  const std::string& label() const { return label_; }
  IndexRange row_range() const { return rows_; }
  IndexRange col_range() const { return cols_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  int rows() const { return rows_.size(); }
  int cols() const { return cols_.size(); }
  bool is_square() const { return rows_ == cols_; }

  // Access by the declared (not storage) indices.
  double at(int i, int j) const;

  std::string to_csv() const;

 private:
  std::string label_;
  IndexRange rows_;
  IndexRange cols_;
  Eigen::MatrixXd entries_;
};

// Product a*b; throws DimensionError unless a's column range equals b's row range.
KernelMatrix multiply(const KernelMatrix& a, const KernelMatrix& b, std::string label = {});
KernelMatrix scaled(const KernelMatrix& m, double factor, std::string label = {});

struct ParitySplit {
  int N = 1;
  int b = 1;
  int half = 1;  // floor((N+1)/2) = (N-b)/2 + 1

  static ParitySplit of(int N);
  int last() const { return half - 1; }  // (N-b)/2
};

// M_{jk} = int_c^inf phi_j phi_k dz + int_c^inf e^{2s(z-c)} phi_j(z) phi_k(2c-z) dz
// with c = r cosh(alpha), s = r sinh(alpha), indices 0..N-1. Evaluated by
// composite Gauss-Legendre quadrature with the Gaussian exponent combined
// analytically, so large |s| (p close to 0 or 1) stays finite.
KernelMatrix m_matrix_general_p(int N, double r, double alpha);

// Same integrands with (c, s) given directly. c = r, s = -r is the small-p limit.
KernelMatrix m_matrix_reflected(int N, double c, double s);

// Q_{jk} = C_j^2 int_r^inf H_j H_k e^{-z^2} dz through the Hermite product
// expansion and int_r^inf H_l e^{-z^2} = H_{l-1}(r) e^{-r^2}; Q_jj carries the
// 1/2 erfc(r) term from l = j.
KernelMatrix q_matrix_closed(int N, double r);

// Direct quadrature of the defining integral (extended precision); oracle for
// q_matrix_closed.
KernelMatrix q_matrix_quadrature(int N, double r);

// F_{jk} = binom(k,j) (4r)^{k-j} (-1)^j [j <= k] + delta_jk.
KernelMatrix f_matrix(int N, double r);

// S_{j,t} = t! / (4^j (t-N+2j+b)!) H_{t-N+2j+b}(r), rows 0..h, cols 0..N-1.
KernelMatrix s_matrix(int N, double r);

// T_{u,k} = (-1)^u 4^k P_{N-2k-b-u}(r) / (u! (N-2k-b-u)!), rows 0..N-1,
// cols 0..h, where H_m(ir) = i^m P_m(r). This is the real form of
// (-1)^{h+k} (-i)^u 4^k H_m(ir) / (u! m!).
KernelMatrix t_matrix(int N, double r);

// The complex-arithmetic evaluation of the defining T formula. Returns the
// largest imaginary part encountered through max_imag when non-null.
KernelMatrix t_matrix_complex(int N, double r, double* max_imag = nullptr);

// A_{jk} = 2 Q_{2j+b-1, 2k+b-1}, square with indices 0..h.
KernelMatrix a_matrix(int N, double r);

// G_{jk} = int_x^inf psi_j^{(a)} psi_k^{(a)} dz for j, k < m. Integrated in
// u = sqrt(z), which turns the integrand into 2 u^{1+2a} e^{-u^2} times a
// polynomial (smooth for a = +-1/2).
KernelMatrix laguerre_kernel_matrix(int m, double a, double x);

}  // namespace nibb
