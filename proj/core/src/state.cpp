#include "sympent/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace sympent {

namespace {

int product_of(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

MultipartiteState::MultipartiteState(std::vector<int> dims, cvec amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (dims_.empty()) throw std::invalid_argument("state: no factors");
  for (int d : dims_)
    if (d < 2) throw std::invalid_argument("state: factor dimension must be >= 2");
  if (static_cast<int>(amps_.size()) != product_of(dims_))
    throw std::invalid_argument("state: amplitude count does not match dims");

  double norm2 = 0;
  for (const auto& z : amps_) norm2 += std::norm(z);
  const double norm = std::sqrt(norm2);
  if (norm <= 1e-12) throw std::invalid_argument("state: zero vector");

  // normalize, then rotate the first nonzero amplitude onto the positive reals
  for (auto& z : amps_) z /= norm;
  for (const auto& z : amps_) {
    const double a = std::abs(z);
    if (a > 1e-12) {
      const cplx phase = std::conj(z) / a;
      for (auto& w : amps_) w *= phase;
      break;
    }
  }
}

CMatrix partial_trace(const MultipartiteState& state, int subsystem) {
  const auto& dims = state.dims();
  if (subsystem < 0 || subsystem >= state.factors())
    throw std::out_of_range("partial_trace: subsystem index out of range");
  const int dk = dims[subsystem];
  int left = 1, right = 1;
  for (int i = 0; i < subsystem; ++i) left *= dims[i];
  for (int i = subsystem + 1; i < state.factors(); ++i) right *= dims[i];

  const auto& psi = state.amps();
  CMatrix rho(dk, dk);
  for (int l = 0; l < left; ++l)
    for (int a = 0; a < dk; ++a)
      for (int b = 0; b < dk; ++b) {
        cplx s = 0;
        const int ia = (l * dk + a) * right;
        const int ib = (l * dk + b) * right;
        for (int r = 0; r < right; ++r) s += psi[ia + r] * std::conj(psi[ib + r]);
        rho(a, b) += s;
      }
  return rho;
}

DensityTuple momentum_map(const MultipartiteState& state) {
  DensityTuple rhos;
  rhos.reserve(state.factors());
  for (int k = 0; k < state.factors(); ++k) rhos.push_back(partial_trace(state, k));
  return rhos;
}

SchmidtDecomposition schmidt(const MultipartiteState& state) {
  if (state.factors() != 2) throw std::invalid_argument("schmidt: state is not bipartite");
  const int d1 = state.dims()[0], d2 = state.dims()[1];
  CMatrix a(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) a(i, j) = state.amps()[i * d2 + j];
  SvdResult s = svd(a);
  SchmidtDecomposition out;
  const int r = static_cast<int>(s.sigma.size());
  out.coefficients.resize(r);
  for (int i = 0; i < r; ++i) out.coefficients[i] = s.sigma[i] * s.sigma[i];
  out.left_basis = s.u;
  // psi = sum_s sigma_s |u_s> x |conj(v_s)>
  out.right_basis = CMatrix(d2, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d2; ++i) out.right_basis(i, j) = std::conj(s.v(i, j));
  return out;
}

double overlap(const MultipartiteState& a, const MultipartiteState& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("overlap: shape mismatch");
  cplx s = 0;
  for (int i = 0; i < a.dim_total(); ++i) s += std::conj(a.amps()[i]) * b.amps()[i];
  return std::abs(s);
}

bool projective_equal(const MultipartiteState& a, const MultipartiteState& b, double tol) {
  return overlap(a, b) >= 1.0 - tol;
}

MultipartiteState apply_local_unitary(const MultipartiteState& state,
                                      const std::vector<CMatrix>& unitaries) {
  const auto& dims = state.dims();
  if (static_cast<int>(unitaries.size()) != state.factors())
    throw std::invalid_argument("apply_local_unitary: factor count mismatch");
  cvec psi = state.amps();
  for (int k = 0; k < state.factors(); ++k) {
    const CMatrix& u = unitaries[k];
    const int dk = dims[k];
    if (u.rows() != dk || u.cols() != dk)
      throw std::invalid_argument("apply_local_unitary: factor shape mismatch");
    CMatrix residual = u * u.adjoint() - CMatrix::identity(dk);
    if (residual.max_abs() > 1e-10)
      throw std::invalid_argument("apply_local_unitary: factor not unitary");

    int left = 1, right = 1;
    for (int i = 0; i < k; ++i) left *= dims[i];
    for (int i = k + 1; i < state.factors(); ++i) right *= dims[i];
    cvec out(psi.size());
    for (int l = 0; l < left; ++l)
      for (int a = 0; a < dk; ++a)
        for (int r = 0; r < right; ++r) {
          cplx s = 0;
          for (int b = 0; b < dk; ++b) s += u(a, b) * psi[(l * dk + b) * right + r];
          out[(l * dk + a) * right + r] = s;
        }
    psi = std::move(out);
  }
  return MultipartiteState(dims, std::move(psi));
}

MultipartiteState make_ghz(int num_factors, int local_dim) {
  if (num_factors < 2 || local_dim < 2) throw std::invalid_argument("ghz: need L >= 2, d >= 2");
  int total = 1;
  for (int k = 0; k < num_factors; ++k) total *= local_dim;
  cvec psi(total);
  int stride = 0;  // index of |ii...i> advances by sum of place values
  for (int k = 0, pv = 1; k < num_factors; ++k, pv *= local_dim) stride += pv;
  for (int i = 0; i < local_dim; ++i) psi[static_cast<size_t>(i) * stride] = 1.0;
  return MultipartiteState(std::vector<int>(num_factors, local_dim), std::move(psi));
}

MultipartiteState make_w(int num_factors) {
  if (num_factors < 2) throw std::invalid_argument("w: need L >= 2");
  cvec psi(size_t{1} << num_factors);
  for (int k = 0; k < num_factors; ++k) psi[size_t{1} << k] = 1.0;
  return MultipartiteState(std::vector<int>(num_factors, 2), std::move(psi));
}

MultipartiteState make_dicke(int num_factors, int excitations) {
  if (num_factors < 2 || excitations < 0 || excitations > num_factors)
    throw std::invalid_argument("dicke: need L >= 2 and 0 <= k <= L");
  cvec psi(size_t{1} << num_factors);
  for (size_t i = 0; i < psi.size(); ++i)
    if (std::popcount(i) == excitations) psi[i] = 1.0;
  return MultipartiteState(std::vector<int>(num_factors, 2), std::move(psi));
}

MultipartiteState make_product(const std::vector<cvec>& factor_vectors) {
  if (factor_vectors.empty()) throw std::invalid_argument("product: no factors");
  std::vector<int> dims;
  cvec psi{1.0};
  for (const auto& f : factor_vectors) {
    dims.push_back(static_cast<int>(f.size()));
    cvec next(psi.size() * f.size());
    for (size_t i = 0; i < psi.size(); ++i)
      for (size_t j = 0; j < f.size(); ++j) next[i * f.size() + j] = psi[i] * f[j];
    psi = std::move(next);
  }
  return MultipartiteState(std::move(dims), std::move(psi));
}

MultipartiteState make_schmidt_state(const std::vector<double>& weights) {
  const int d = static_cast<int>(weights.size());
  if (d < 2) throw std::invalid_argument("schmidt_state: need at least two weights");
  double sum = 0;
  for (double w : weights) {
    if (w < -1e-12) throw std::invalid_argument("schmidt_state: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("schmidt_state: weights must sum to 1");
  cvec psi(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) psi[static_cast<size_t>(i) * d + i] = std::sqrt(std::max(weights[i], 0.0));
  return MultipartiteState({d, d}, std::move(psi));
}

}  // namespace sympent
