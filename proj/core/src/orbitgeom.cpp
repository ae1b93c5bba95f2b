#include "sympent/orbitgeom.hpp"

#include <cmath>

#include "sympent/spectramap.hpp"

namespace sympent {

namespace {

// columns are realified complex vectors (Re block above Im block)
CMatrix stack_realified(const std::vector<cvec>& cols) {
  if (cols.empty()) return CMatrix();
  const int n = static_cast<int>(cols[0].size());
  CMatrix m(2 * n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) {
      m(i, static_cast<int>(j)) = cols[j][i].real();
      m(n + i, static_cast<int>(j)) = cols[j][i].imag();
    }
  return m;
}

cplx inner(const cvec& a, const cvec& b) {  // <a|b>, antilinear in a
  cplx s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_of(const cvec& a) { return std::sqrt(inner(a, a).real()); }

RankPolicy policy_of(const GeomOptions& opt) { return RankPolicy{opt.rank_rel, 1.0}; }

}  // namespace

void GeomDiag::merge(const RankResult& r, const std::string& where) {
  if (!r.stable) {
    rank_stable = false;
    warnings.push_back("rank-unstable singular spectrum in " + where);
  }
}

double fs_form_operators_full(const MultipartiteState& state, const CMatrix& f, const CMatrix& g) {
  const cvec fpsi = f * state.amps();
  const cvec gpsi = g * state.amps();
  // i<[F,G]> = i(<F psi|... ) computed as i(<psi|FG|psi> - <psi|GF|psi>)
  const cplx val = cplx(0, 1) * (inner(fpsi, gpsi) - inner(gpsi, fpsi));
  if (std::abs(val.imag()) > 1e-10)
    throw std::invalid_argument("fs_form_operators: imaginary residue (non-Hermitian input?)");
  return val.real();
}

double fs_form_operators(const MultipartiteState& state, const LocalHamiltonian& f,
                         const LocalHamiltonian& g) {
  const cvec fpsi = apply_embedded(f, state);
  const cvec gpsi = apply_embedded(g, state);
  const cplx val = cplx(0, 1) * (inner(fpsi, gpsi) - inner(gpsi, fpsi));
  if (std::abs(val.imag()) > 1e-10)
    throw std::invalid_argument("fs_form_operators: imaginary residue (non-Hermitian input?)");
  return val.real();
}

double fs_form_vectors(const MultipartiteState& state, const cvec& u, const cvec& v) {
  if (u.size() != state.amps().size() || v.size() != state.amps().size())
    throw std::invalid_argument("fs_form_vectors: shape mismatch");
  const double tol = 1e-10 * std::max({1.0, norm_of(u), norm_of(v)});
  if (std::abs(inner(state.amps(), u)) > tol || std::abs(inner(state.amps(), v)) > tol)
    throw std::invalid_argument("fs_form_vectors: non-horizontal input");
  return 2.0 * inner(v, u).imag();
}

SymplecticGram orbit_gram(const MultipartiteState& state) {
  const auto basis = local_algebra_basis(state.dims());
  std::vector<cvec> tangents;
  tangents.reserve(basis.size());
  for (const auto& f : basis) tangents.push_back(tangent_vector(state, f));
  const int n = static_cast<int>(basis.size());
  SymplecticGram g;
  g.matrix = CMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double w = 2.0 * inner(tangents[b], tangents[a]).imag();
      g.matrix(a, b) = w;
      g.matrix(b, a) = -w;
    }
  return g;
}

int stab_dim_state(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  const auto basis = local_algebra_basis(state.dims());
  std::vector<cvec> tangents;
  for (const auto& f : basis) tangents.push_back(tangent_vector(state, f));
  RankResult r = numerical_rank(stack_realified(tangents), policy_of(opt));
  if (diag) diag->merge(r, "stab_dim_state");
  return static_cast<int>(basis.size()) - r.rank;
}

namespace {

// kernel of f -> [rho, f] over su(d), as coefficient vectors in su_basis order
std::vector<std::vector<double>> commutant_kernel(const CMatrix& rho, const GeomOptions& opt,
                                                  GeomDiag* diag) {
  const int d = rho.rows();
  const auto basis = su_basis(d);
  std::vector<cvec> cols;
  for (const auto& t : basis) {
    CMatrix c = commutator(rho, t);
    cols.push_back(c.data());
  }
  CMatrix m = stack_realified(cols);
  SvdResult s = svd(m);
  RankResult r = rank_from_singular_values(s.sigma, m.rows(), m.cols(), policy_of(opt));
  if (diag) diag->merge(r, "commutant_kernel");
  std::vector<std::vector<double>> kernel;
  const int n = static_cast<int>(basis.size());
  for (int j = r.rank; j < n; ++j) {
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = s.v(i, j).real();  // real matrix, real V
    kernel.push_back(std::move(c));
  }
  return kernel;
}

}  // namespace

int stab_dim_mu(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  int kernel_route = 0;
  int multiplicity_route = 0;
  for (int k = 0; k < state.factors(); ++k) {
    const CMatrix rho = partial_trace(state, k);
    kernel_route += static_cast<int>(commutant_kernel(rho, opt, diag).size());
    EigResult e = herm_eig(rho);
    std::vector<double> spectrum(e.eigenvalues.rbegin(), e.eigenvalues.rend());
    int sq = 0;
    for (int m : group_multiplicities(spectrum, opt.group_tol)) sq += m * m;
    multiplicity_route += sq - 1;
  }
  if (kernel_route != multiplicity_route)
    throw std::runtime_error("stab_dim_mu: commutant kernel (" + std::to_string(kernel_route) +
                             ") disagrees with multiplicity closed form (" +
                             std::to_string(multiplicity_route) +
                             "); eigenvalue grouping is ambiguous here");
  return kernel_route;
}

OrbitDims orbit_dims(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  int n = 0;
  for (int d : state.dims()) n += d * d - 1;
  OrbitDims out;
  out.stab_state = stab_dim_state(state, opt, diag);
  out.stab_mu = stab_dim_mu(state, opt, diag);
  out.dim_orbit = n - out.stab_state;
  out.dim_adjoint_orbit = n - out.stab_mu;
  return out;
}

NullBasis null_basis(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  const auto& dims = state.dims();
  // candidates: per-factor commutant kernels, factor-major order
  std::vector<LocalHamiltonian> candidates;
  for (int k = 0; k < state.factors(); ++k) {
    const CMatrix rho = partial_trace(state, k);
    const auto basis = su_basis(dims[k]);
    for (const auto& coeff : commutant_kernel(rho, opt, diag)) {
      CMatrix f(dims[k], dims[k]);
      for (size_t a = 0; a < basis.size(); ++a)
        for (size_t i = 0; i < f.data().size(); ++i) f.data()[i] += coeff[a] * basis[a].data()[i];
      LocalHamiltonian lh;
      for (int j = 0; j < state.factors(); ++j)
        lh.factors.push_back(j == k ? f : CMatrix(dims[j], dims[j]));
      candidates.push_back(std::move(lh));
    }
  }

  // column-pivoted selection of a maximal set of tangent vectors that is
  // independent over the reals, ties broken by candidate order
  std::vector<cvec> tangents;
  for (const auto& f : candidates) tangents.push_back(tangent_vector(state, f));
  NullBasis out;
  const int total = state.dim_total();
  std::vector<std::vector<double>> residuals;
  for (const auto& t : tangents) {
    std::vector<double> r(2 * total);
    for (int i = 0; i < total; ++i) {
      r[i] = t[i].real();
      r[total + i] = t[i].imag();
    }
    residuals.push_back(std::move(r));
  }
  auto rdot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  const double tol = opt.rank_rel * 100.0;  // generators are unit-scale
  std::vector<bool> used(candidates.size(), false);
  while (true) {
    int best = -1;
    double best_norm = tol;
    for (size_t i = 0; i < residuals.size(); ++i) {
      if (used[i]) continue;
      const double n = std::sqrt(rdot(residuals[i], residuals[i]));
      if (n > best_norm * (1.0 + 1e-12)) {
        best = static_cast<int>(i);
        best_norm = n;
      }
    }
    if (best < 0) break;
    used[best] = true;
    std::vector<double> q = residuals[best];
    for (auto& x : q) x /= best_norm;
    out.generators.push_back(candidates[best]);
    out.tangents.push_back(tangents[best]);
    for (size_t i = 0; i < residuals.size(); ++i) {
      if (used[i]) continue;
      const double ov = rdot(q, residuals[i]);
      for (size_t j = 0; j < q.size(); ++j) residuals[i][j] -= ov * q[j];
    }
  }

  const OrbitDims od = orbit_dims(state, opt, diag);
  const int expected = od.dim_orbit - od.dim_adjoint_orbit;
  if (static_cast<int>(out.generators.size()) != expected)
    throw std::runtime_error("null_basis: selected " + std::to_string(out.generators.size()) +
                             " generators but orbit dimension difference is " +
                             std::to_string(expected));
  return out;
}

std::vector<cvec> ker_dmu_basis(const MultipartiteState& state, const GeomOptions& opt,
                                GeomDiag* diag) {
  const auto& dims = state.dims();
  const int total = state.dim_total();
  const cvec& psi = state.amps();

  // orthonormal basis of the horizontal space psi-perp
  std::vector<cvec> perp;
  for (int e = 0; e < total && static_cast<int>(perp.size()) < total - 1; ++e) {
    cvec cand(total, 0.0);
    cand[e] = 1.0;
    cplx ov = inner(psi, cand);
    for (int i = 0; i < total; ++i) cand[i] -= ov * psi[i];
    for (const auto& p : perp) {
      ov = inner(p, cand);
      for (int i = 0; i < total; ++i) cand[i] -= ov * p[i];
    }
    const double n = norm_of(cand);
    if (n > 0.1) {
      for (auto& z : cand) z /= n;
      perp.push_back(std::move(cand));
    }
  }

  // real-linear map: real coords (a_j, b_j) of v = sum (a_j + i b_j) e_j to
  // the tuple of partial traces of |v><psi| + |psi><v|
  auto dmu_column = [&](const cvec& v) {
    std::vector<double> col;
    for (int k = 0; k < state.factors(); ++k) {
      int left = 1, right = 1;
      for (int i = 0; i < k; ++i) left *= dims[i];
      for (int i = k + 1; i < state.factors(); ++i) right *= dims[i];
      const int dk = dims[k];
      CMatrix p(dk, dk);
      for (int l = 0; l < left; ++l)
        for (int a = 0; a < dk; ++a)
          for (int b = 0; b < dk; ++b) {
            cplx s = 0;
            for (int r = 0; r < right; ++r)
              s += v[(l * dk + a) * right + r] * std::conj(psi[(l * dk + b) * right + r]);
            p(a, b) += s;
          }
      for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
          const cplx h = p(a, b) + std::conj(p(b, a));
          col.push_back(h.real());
          col.push_back(h.imag());
        }
    }
    return col;
  };

  const int ncols = 2 * (total - 1);
  std::vector<std::vector<double>> cols;
  for (const auto& e : perp) {
    cols.push_back(dmu_column(e));
    cvec ie(e.size());
    for (size_t i = 0; i < e.size(); ++i) ie[i] = cplx(0, 1) * e[i];
    cols.push_back(dmu_column(ie));
  }
  CMatrix m(static_cast<int>(cols[0].size()), ncols);
  for (int j = 0; j < ncols; ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m(static_cast<int>(i), j) = cols[j][i];

  SvdResult s = svd(m);
  RankResult r = rank_from_singular_values(s.sigma, m.rows(), m.cols(), policy_of(opt));
  if (diag) diag->merge(r, "ker_dmu_basis");

  std::vector<cvec> kernel;
  for (int j = r.rank; j < ncols; ++j) {
    cvec v(total, 0.0);
    for (int e = 0; e < total - 1; ++e) {
      const cplx c(s.v(2 * e, j).real(), s.v(2 * e + 1, j).real());
      for (int i = 0; i < total; ++i) v[i] += c * perp[e][i];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

int degeneracy_direct(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  std::vector<cvec> span = ker_dmu_basis(state, opt, diag);
  for (const auto& f : local_algebra_basis(state.dims()))
    span.push_back(tangent_vector(state, f));

  CMatrix m = stack_realified(span);
  SvdResult s = svd(m);
  RankResult r = rank_from_singular_values(s.sigma, m.rows(), m.cols(), policy_of(opt));
  if (diag) diag->merge(r, "degeneracy_direct span");
  const int dim_w = r.rank;
  const int n = state.dim_total();

  // orthonormal real basis of W from the left singular vectors
  std::vector<cvec> w;
  for (int j = 0; j < dim_w; ++j) {
    cvec v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx(s.u(i, j).real(), s.u(n + i, j).real());
    w.push_back(std::move(v));
  }
  CMatrix omega(dim_w, dim_w);
  for (int a = 0; a < dim_w; ++a)
    for (int b = a + 1; b < dim_w; ++b) {
      const double x = 2.0 * inner(w[b], w[a]).imag();
      omega(a, b) = x;
      omega(b, a) = -x;
    }
  RankResult ro = dim_w > 0 ? numerical_rank(omega, policy_of(opt)) : RankResult{};
  if (diag && dim_w > 0) diag->merge(ro, "degeneracy_direct form rank");
  return dim_w - ro.rank;
}

}  // namespace sympent
