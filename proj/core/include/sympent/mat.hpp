//! @file mat.hpp
//! Dense complex matrices with the few factorizations the rest of the
//! library needs: Hermitian eigendecomposition (cyclic Jacobi), SVD
//! (one-sided Jacobi, accurate small singular values), numerical rank
//! and the Hermitian matrix exponential.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace sympent {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative shape");
  }
  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  cvec& data() { return data_; }
  const cvec& data() const { return data_; }

  CMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  double fro_norm() const;

  //! max|A - A†| <= rel_tol * max|A| (zero matrix counts as Hermitian)
  bool is_hermitian(double rel_tol = 1e-12) const;

 private:
  int rows_ = 0, cols_ = 0;
  cvec data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);
cvec operator*(const CMatrix& a, const cvec& x);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // unitary, column j <-> eigenvalues[j]
};

//! A = V diag(lambda) V†, eigenvalues ascending. Throws on non-square or
//! non-Hermitian input.
EigResult herm_eig(const CMatrix& a);

struct SvdResult {
  CMatrix u;                  // rows x min(rows,cols), orthonormal columns
  std::vector<double> sigma;  // min(rows,cols) values, nonincreasing
  CMatrix v;                  // cols x cols, unitary (kernel = trailing columns)
};

SvdResult svd(const CMatrix& a);

struct RankPolicy {
  double rel = 1e-10;
  //! Reference scale floored into the threshold: tau = rel * max(sigma_max,
  //! scale_floor) * max(rows, cols). Zero keeps the pure relative policy;
  //! callers working with unit-scale data may pass 1 so that matrices that
  //! are zero up to roundoff get rank 0.
  double scale_floor = 0.0;
};

struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;  // nonincreasing
  double tolerance_used = 0.0;
  //! false when some singular value lies within a factor 100 of the
  //! threshold, i.e. the integer rank is numerically ambiguous
  bool stable = true;
};

RankResult numerical_rank(const CMatrix& a, RankPolicy policy = {});

//! Same thresholding given precomputed singular values of a rows x cols matrix.
RankResult rank_from_singular_values(const std::vector<double>& sigma, int rows, int cols,
                                     RankPolicy policy = {});

//! e^{-iHt} computed through herm_eig; unitary to ~1e-10.
CMatrix expm_i_herm(const CMatrix& h, double t);

}  // namespace sympent
