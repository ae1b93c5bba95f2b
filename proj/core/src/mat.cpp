#include "sympent/mat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sympent {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx CMatrix::trace() const {
  cplx t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::fro_norm() const {
  double s = 0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::is_hermitian(double rel_tol) const {
  if (rows_ != cols_) return false;
  double scale = max_abs();
  double dev = 0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return dev <= rel_tol * std::max(scale, 1e-300);
}

static void check_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b);
  CMatrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b);
  CMatrix c = a;
  for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  CMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      cplx aik = a(i, k);
      if (aik == cplx{0.0}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix c = a;
  for (auto& z : c.data()) z *= s;
  return c;
}

cvec operator*(const CMatrix& a, const cvec& x) {
  if (static_cast<size_t>(a.cols()) != x.size())
    throw std::invalid_argument("matrix-vector shape mismatch");
  cvec y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    cplx s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition: cyclic complex Jacobi.

EigResult herm_eig(const CMatrix& a_in) {
  if (a_in.rows() != a_in.cols()) throw std::invalid_argument("herm_eig: non-square input");
  if (!a_in.is_hermitian(1e-12)) throw std::invalid_argument("herm_eig: input not Hermitian");
  const int n = a_in.rows();

  // symmetrize to kill roundoff asymmetry before iterating
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (a_in(i, j) + std::conj(a_in(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double scale = std::max(a.fro_norm(), 1e-300);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2 * off) <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-18 * scale) continue;
        const cplx phase = apq / g;  // apq = g * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // unitary J: col p <- c*col_p - s*conj(phase)*col_q
        //            col q <- s*phase*col_p + c*col_q   (applied as A <- J† A J)
        const cplx sp = s * phase;
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - std::conj(sp) * aiq;
          a(i, q) = sp * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - sp * aqj;
          a(q, j) = std::conj(sp) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(sp) * viq;
          v(i, q) = sp * vip + c * viq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

  EigResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    r.eigenvalues[j] = diag[order[j]];
    for (int i = 0; i < n; ++i) r.eigenvectors(i, j) = v(i, order[j]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// SVD: one-sided (Hestenes) Jacobi on columns. Singular values are column
// norms at convergence, so tiny ones keep absolute accuracy ~eps*sigma_max.

SvdResult svd(const CMatrix& a) {
  if (a.empty()) throw std::invalid_argument("svd: empty matrix");
  const int m = a.rows(), n = a.cols();
  CMatrix b = a;
  CMatrix v = CMatrix::identity(n);

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0;
        cplx gamma = 0;
        for (int i = 0; i < m; ++i) {
          alpha += std::norm(b(i, p));
          beta += std::norm(b(i, q));
          gamma += std::conj(b(i, p)) * b(i, q);
        }
        const double g = std::abs(gamma);
        // the second guard keeps gamma out of the denormal range, where
        // gamma / |gamma| is no longer unit modulus and the rotation would
        // stop being unitary; such columns are numerically zero anyway
        if (g <= 1e-15 * std::sqrt(alpha * beta) || g < 1e-290) continue;
        rotated = true;
        const cplx phase = gamma / g;  // rotate q by conj(phase) to make overlap real
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx cp = std::conj(phase);
        for (int i = 0; i < m; ++i) {
          const cplx bp = b(i, p), bq = cp * b(i, q);
          b(i, p) = c * bp - s * bq;
          b(i, q) = s * bp + c * bq;
        }
        for (int i = 0; i < n; ++i) {
          const cplx vp = v(i, p), vq = cp * v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    if (!rotated) break;
  }

  std::vector<double> norms(n);
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += std::norm(b(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });

  const int r = std::min(m, n);
  SvdResult out;
  out.sigma.resize(r);
  out.u = CMatrix(m, r);
  out.v = CMatrix(n, n);
  const double smax = norms.empty() ? 0.0 : norms[order[0]];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, order[j]);
  int filled = 0;
  for (int j = 0; j < r; ++j) {
    out.sigma[j] = norms[order[j]];
    if (out.sigma[j] > 1e-14 * std::max(smax, 1e-300) && filled == j) {
      for (int i = 0; i < m; ++i) out.u(i, j) = b(i, order[j]) / out.sigma[j];
      ++filled;
    }
  }
  // complete U for (near-)zero singular values: Gram-Schmidt canonical basis
  for (int j = filled; j < r; ++j) {
    for (int e = 0; e < m; ++e) {
      cvec cand(m, 0.0);
      cand[e] = 1.0;
      for (int k = 0; k < j; ++k) {
        cplx ov = 0;
        for (int i = 0; i < m; ++i) ov += std::conj(out.u(i, k)) * cand[i];
        for (int i = 0; i < m; ++i) cand[i] -= ov * out.u(i, k);
      }
      double nn = 0;
      for (int i = 0; i < m; ++i) nn += std::norm(cand[i]);
      nn = std::sqrt(nn);
      if (nn > 0.5) {
        for (int i = 0; i < m; ++i) out.u(i, j) = cand[i] / nn;
        break;
      }
    }
  }
  return out;
}

RankResult rank_from_singular_values(const std::vector<double>& sigma, int rows, int cols,
                                     RankPolicy policy) {
  RankResult r;
  r.singular_values = sigma;
  const double smax = sigma.empty() ? 0.0 : sigma[0];
  r.tolerance_used = policy.rel * std::max(smax, policy.scale_floor) * std::max(rows, cols);
  for (double sv : sigma) {
    if (sv > r.tolerance_used) ++r.rank;
    if (r.tolerance_used > 0 && sv >= r.tolerance_used / 100.0 && sv <= r.tolerance_used * 100.0)
      r.stable = false;
  }
  return r;
}

RankResult numerical_rank(const CMatrix& a, RankPolicy policy) {
  if (a.empty()) throw std::invalid_argument("numerical_rank: empty matrix");
  return rank_from_singular_values(svd(a).sigma, a.rows(), a.cols(), policy);
}

CMatrix expm_i_herm(const CMatrix& h, double t) {
  EigResult e = herm_eig(h);  // rejects non-Hermitian input
  const int n = h.rows();
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s = 0;
      for (int k = 0; k < n; ++k)
        s += e.eigenvectors(i, k) * std::exp(cplx(0, -e.eigenvalues[k] * t)) *
             std::conj(e.eigenvectors(j, k));
      out(i, j) = s;
    }
  return out;
}

}  // namespace sympent
