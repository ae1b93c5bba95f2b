#include "sympent/flows.hpp"

#include <cmath>
#include <ostream>

#include "sympent/spectramap.hpp"

namespace sympent {

namespace {

cplx inner(const cvec& a, const cvec& b) {
  cplx s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vnorm(const cvec& a) { return std::sqrt(inner(a, a).real()); }

std::vector<std::vector<double>> reduced_spectra(const MultipartiteState& s) {
  std::vector<std::vector<double>> out;
  for (int k = 0; k < s.factors(); ++k) {
    EigResult e = herm_eig(partial_trace(s, k));
    out.emplace_back(e.eigenvalues.rbegin(), e.eigenvalues.rend());
  }
  return out;
}

void push_sample(Trajectory& t, double time, const cvec& raw, const std::vector<int>& dims,
                 const CMatrix& h, const cvec* ref_raw) {
  t.times.push_back(time);
  t.norm_deviation.push_back(std::abs(vnorm(raw) - 1.0));
  t.energy.push_back(inner(raw, h * raw).real());
  MultipartiteState s(dims, raw);
  t.spectra.push_back(reduced_spectra(s));
  // An unperturbed step reproduces the reference bit-for-bit; keep the
  // recorded fidelity exactly 1 there instead of 1 +/- one ulp of roundoff.
  t.fidelity.push_back(ref_raw && raw != *ref_raw ? std::abs(inner(raw, *ref_raw)) : 1.0);
  t.states.push_back(std::move(s));
}

CMatrix haar_unitary(int d, std::uint64_t& rng_state) {
  CMatrix a(d, d);
  for (auto& z : a.data()) z = cplx(gauss(rng_state), gauss(rng_state));
  // Gram-Schmidt columns
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < j; ++k) {
      cplx ov = 0;
      for (int i = 0; i < d; ++i) ov += std::conj(a(i, k)) * a(i, j);
      for (int i = 0; i < d; ++i) a(i, j) -= ov * a(i, k);
    }
    double n = 0;
    for (int i = 0; i < d; ++i) n += std::norm(a(i, j));
    n = std::sqrt(n);
    for (int i = 0; i < d; ++i) a(i, j) /= n;
  }
  return a;
}

}  // namespace

double classical_hamiltonian(const MultipartiteState& state, const CMatrix& h) {
  if (h.rows() != state.dim_total() || h.cols() != state.dim_total())
    throw std::invalid_argument("classical_hamiltonian: shape mismatch");
  return inner(state.amps(), h * state.amps()).real();
}

double classical_hamiltonian(const MultipartiteState& state, const LocalHamiltonian& h) {
  return inner(state.amps(), apply_embedded(h, state)).real();
}

Trajectory flow(const MultipartiteState& initial, const CMatrix& h, double duration, int steps) {
  if (steps < 1) throw std::invalid_argument("flow: need at least one step");
  if (duration <= 0) throw std::invalid_argument("flow: duration must be positive");
  EigResult e = herm_eig(h);
  const int n = h.rows();
  const cvec& psi0 = initial.amps();
  // coefficients of psi0 in the eigenbasis, reused for every sample
  cvec coeff(n);
  for (int k = 0; k < n; ++k) {
    cplx s = 0;
    for (int i = 0; i < n; ++i) s += std::conj(e.eigenvectors(i, k)) * psi0[i];
    coeff[k] = s;
  }
  Trajectory t;
  for (int j = 0; j <= steps; ++j) {
    const double time = duration * j / steps;
    cvec raw(n);
    for (int k = 0; k < n; ++k) {
      const cplx ck = coeff[k] * std::exp(cplx(0, -e.eigenvalues[k] * time));
      for (int i = 0; i < n; ++i) raw[i] += e.eigenvectors(i, k) * ck;
    }
    push_sample(t, time, raw, initial.dims(), h, nullptr);
  }
  return t;
}

AdmissibilityResult admissibility_check(const MultipartiteState& state, const CMatrix& h,
                                        double tol, const GeomOptions& opt) {
  if (h.rows() != state.dim_total() || h.cols() != state.dim_total())
    throw std::invalid_argument("admissibility_check: shape mismatch");
  // the state itself plus fixed-seed local-unitary translates in its stratum
  std::vector<MultipartiteState> points{state};
  std::uint64_t rng = 0xA5A5A5A55A5A5A5AULL;
  for (int r = 0; r < 8; ++r) {
    std::vector<CMatrix> us;
    for (int d : state.dims()) us.push_back(haar_unitary(d, rng));
    points.push_back(apply_local_unitary(state, us));
  }
  AdmissibilityResult out;
  for (const auto& p : points) {
    NullBasis nb = null_basis(p, opt);
    const cvec hp = h * p.amps();
    for (const auto& v : nb.tangents) {
      const double n = vnorm(v);
      if (n <= 1e-12) continue;
      const double violation = std::abs(2.0 * inner(v, hp).real()) / n;
      out.max_violation = std::max(out.max_violation, violation);
    }
  }
  out.admissible = out.max_violation <= tol;
  return out;
}

FlowPair null_perturbed_flow(const MultipartiteState& initial, const LocalHamiltonian& h,
                             double eps, double duration, int steps, const GeomOptions& opt) {
  if (steps < 1) throw std::invalid_argument("null_perturbed_flow: need at least one step");
  if (eps < 0) throw std::invalid_argument("null_perturbed_flow: eps must be nonnegative");
  validate_local_hamiltonian(h);
  const CMatrix hfull = embed_full(h, initial.dims());
  const double dt = duration / steps;
  const CMatrix step_ref = expm_i_herm(hfull, dt);

  FlowPair out;
  // the reference is stepped with the same cached unitary the perturbed flow
  // uses whenever its null basis is empty, so the separable case coincides
  // bit for bit
  cvec raw_ref = initial.amps();
  cvec raw = initial.amps();
  push_sample(out.reference, 0.0, raw_ref, initial.dims(), hfull, nullptr);
  push_sample(out.perturbed, 0.0, raw, initial.dims(), hfull, &raw_ref);
  for (int j = 0; j < steps; ++j) {
    const MultipartiteState current(initial.dims(), raw);
    NullBasis nb = null_basis(current, opt);
    out.null_dims.push_back(static_cast<int>(nb.generators.size()));
    if (eps != 0.0 && !nb.generators.empty()) {
      const CMatrix g = hfull + cplx(eps) * embed_full(nb.generators.front(), initial.dims());
      raw = expm_i_herm(g, dt) * raw;
    } else {
      raw = step_ref * raw;
    }
    raw_ref = step_ref * raw_ref;
    push_sample(out.reference, dt * (j + 1), raw_ref, initial.dims(), hfull, nullptr);
    push_sample(out.perturbed, dt * (j + 1), raw, initial.dims(), hfull, &raw_ref);
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "t,norm_dev,energy,fidelity";
  if (!t.spectra.empty())
    for (size_t k = 0; k < t.spectra[0].size(); ++k)
      for (size_t i = 0; i < t.spectra[0][k].size(); ++i)
        os << ",spec_" << k + 1 << "_" << i + 1;
  os << "\n";
  os.precision(17);
  for (size_t j = 0; j < t.times.size(); ++j) {
    os << t.times[j] << "," << t.norm_deviation[j] << "," << t.energy[j] << "," << t.fidelity[j];
    for (const auto& spec : t.spectra[j])
      for (double v : spec) os << "," << v;
    os << "\n";
  }
}

}  // namespace sympent
