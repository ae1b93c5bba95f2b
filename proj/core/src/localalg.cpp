#include "sympent/localalg.hpp"

#include <cmath>

namespace sympent {

void validate_local_hamiltonian(const LocalHamiltonian& f) {
  if (f.factors.empty()) throw std::invalid_argument("local hamiltonian: no factors");
  for (const auto& m : f.factors) {
    if (!m.is_hermitian(1e-12)) throw std::invalid_argument("local hamiltonian: factor not Hermitian");
    if (std::abs(m.trace()) > 1e-12 * std::max(1.0, m.max_abs()))
      throw std::invalid_argument("local hamiltonian: factor not traceless");
  }
}

std::vector<CMatrix> su_basis(int d) {
  if (d < 2) throw std::invalid_argument("su_basis: d must be >= 2");
  std::vector<CMatrix> out;
  out.reserve(static_cast<size_t>(d) * d - 1);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix sym(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      out.push_back(sym);
      CMatrix asym(d, d);
      asym(j, k) = cplx(0, -1);
      asym(k, j) = cplx(0, 1);
      out.push_back(asym);
    }
  for (int l = 1; l < d; ++l) {
    CMatrix diag(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int i = 0; i < l; ++i) diag(i, i) = c;
    diag(l, l) = -l * c;
    out.push_back(diag);
  }
  return out;
}

std::vector<LocalHamiltonian> local_algebra_basis(const std::vector<int>& dims) {
  std::vector<LocalHamiltonian> out;
  for (size_t k = 0; k < dims.size(); ++k) {
    for (auto& t : su_basis(dims[k])) {
      LocalHamiltonian f;
      for (size_t j = 0; j < dims.size(); ++j)
        f.factors.push_back(j == k ? t : CMatrix(dims[j], dims[j]));
      out.push_back(std::move(f));
    }
  }
  return out;
}

static void check_factor_shapes(const LocalHamiltonian& f, const std::vector<int>& dims) {
  if (f.factors.size() != dims.size())
    throw std::invalid_argument("local hamiltonian: factor count mismatch");
  for (size_t k = 0; k < dims.size(); ++k)
    if (f.factors[k].rows() != dims[k] || f.factors[k].cols() != dims[k])
      throw std::invalid_argument("local hamiltonian: factor shape mismatch");
}

CMatrix embed_full(const LocalHamiltonian& f, const std::vector<int>& dims) {
  check_factor_shapes(f, dims);
  int total = 1;
  for (int d : dims) total *= d;
  CMatrix h(total, total);
  for (size_t k = 0; k < dims.size(); ++k) {
    int left = 1, right = 1;
    for (size_t i = 0; i < k; ++i) left *= dims[i];
    for (size_t i = k + 1; i < dims.size(); ++i) right *= dims[i];
    const CMatrix& m = f.factors[k];
    const int dk = dims[k];
    for (int l = 0; l < left; ++l)
      for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
          if (m(a, b) == cplx{0.0}) continue;
          for (int r = 0; r < right; ++r)
            h((l * dk + a) * right + r, (l * dk + b) * right + r) += m(a, b);
        }
  }
  return h;
}

cvec apply_factor(const CMatrix& m, int subsystem, const cvec& psi, const std::vector<int>& dims) {
  const int dk = dims[subsystem];
  if (m.rows() != dk || m.cols() != dk) throw std::invalid_argument("apply_factor: shape mismatch");
  int left = 1, right = 1;
  for (int i = 0; i < subsystem; ++i) left *= dims[i];
  for (size_t i = subsystem + 1; i < dims.size(); ++i) right *= dims[i];
  cvec out(psi.size());
  for (int l = 0; l < left; ++l)
    for (int a = 0; a < dk; ++a)
      for (int r = 0; r < right; ++r) {
        cplx s = 0;
        for (int b = 0; b < dk; ++b) s += m(a, b) * psi[(l * dk + b) * right + r];
        out[(l * dk + a) * right + r] = s;
      }
  return out;
}

cvec apply_embedded(const LocalHamiltonian& f, const MultipartiteState& state) {
  check_factor_shapes(f, state.dims());
  cvec out(state.dim_total());
  for (int k = 0; k < state.factors(); ++k) {
    cvec part = apply_factor(f.factors[k], k, state.amps(), state.dims());
    for (size_t i = 0; i < out.size(); ++i) out[i] += part[i];
  }
  return out;
}

static cvec horizontal_tangent(const cvec& hpsi, const cvec& psi) {
  cplx expectation = 0;
  for (size_t i = 0; i < psi.size(); ++i) expectation += std::conj(psi[i]) * hpsi[i];
  cvec v(psi.size());
  for (size_t i = 0; i < psi.size(); ++i) v[i] = cplx(0, -1) * (hpsi[i] - expectation * psi[i]);
  return v;
}

cvec tangent_vector(const MultipartiteState& state, const LocalHamiltonian& f) {
  return horizontal_tangent(apply_embedded(f, state), state.amps());
}

cvec tangent_vector_full(const MultipartiteState& state, const CMatrix& h) {
  if (h.rows() != state.dim_total() || h.cols() != state.dim_total())
    throw std::invalid_argument("tangent_vector_full: shape mismatch");
  return horizontal_tangent(h * state.amps(), state.amps());
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator: shape mismatch");
  return a * b - b * a;
}

}  // namespace sympent
