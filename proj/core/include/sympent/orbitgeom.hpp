//! @file orbitgeom.hpp
//! Fubini-Study symplectic form, the symplectic Gram matrix of the local
//! unitary orbit, stabilizer kernels, null directions and the kernel of the
//! momentum-map differential. All integer dimensions flow through a single
//! rank policy; inputs are unit-scale (normalized states, Tr(T^2)=2
//! generators) so the rank threshold uses scale_floor = 1.
#pragma once

#include <string>

#include "sympent/localalg.hpp"
#include "sympent/mat.hpp"
#include "sympent/state.hpp"

namespace sympent {

struct GeomOptions {
  double rank_rel = 1e-10;
  double group_tol = 1e-8;  // eigenvalue multiplicity grouping (spectramap convention)
};

//! Diagnostics accumulated across rank decisions.
struct GeomDiag {
  bool rank_stable = true;
  std::vector<std::string> warnings;
  void merge(const RankResult& r, const std::string& where);
};

//! omega_psi(V_F, V_G) = i<[F,G]>_psi. Throws if the imaginary residue of
//! the expectation exceeds 1e-10 (non-Hermitian input).
double fs_form_operators(const MultipartiteState& state, const LocalHamiltonian& f,
                         const LocalHamiltonian& g);
double fs_form_operators_full(const MultipartiteState& state, const CMatrix& f, const CMatrix& g);

//! The form on horizontal representatives: 2 Im<v|u> (antilinear in the
//! first slot of the inner product). Matches fs_form_operators on
//! Hamiltonian-generated tangent vectors. Throws on non-horizontal input.
double fs_form_vectors(const MultipartiteState& state, const cvec& u, const cvec& v);

struct SymplecticGram {
  CMatrix matrix;  // real antisymmetric, indexed by local_algebra_basis order
};

//! G_ab = i<[F_a, F_b]>_psi over the local algebra basis.
SymplecticGram orbit_gram(const MultipartiteState& state);

//! dim of {F in su-local : tangent_vector(psi, F) = 0}.
int stab_dim_state(const MultipartiteState& state, const GeomOptions& opt = {},
                   GeomDiag* diag = nullptr);

//! sum_k dim of the su(d_k) commutant of rho^k; cross-checked against the
//! eigenvalue-multiplicity closed form sum_j n_kj^2 - 1. Throws on mismatch.
int stab_dim_mu(const MultipartiteState& state, const GeomOptions& opt = {},
                GeomDiag* diag = nullptr);

struct OrbitDims {
  int dim_orbit = 0;
  int dim_adjoint_orbit = 0;
  int stab_state = 0;
  int stab_mu = 0;
};

OrbitDims orbit_dims(const MultipartiteState& state, const GeomOptions& opt = {},
                     GeomDiag* diag = nullptr);

//! Local Hamiltonians commuting with every rho^k whose tangent vectors are
//! linearly independent; |generators| = dim_orbit - dim_adjoint_orbit.
struct NullBasis {
  std::vector<LocalHamiltonian> generators;
  std::vector<cvec> tangents;  // tangent_vector(state, generators[i])
};

NullBasis null_basis(const MultipartiteState& state, const GeomOptions& opt = {},
                     GeomDiag* diag = nullptr);

//! Orthonormal (w.r.t. Re<.|.>) horizontal vectors v with
//! Tr_khat(|v><psi| + |psi><v|) = 0 for every k.
std::vector<cvec> ker_dmu_basis(const MultipartiteState& state, const GeomOptions& opt = {},
                                GeomDiag* diag = nullptr);

//! E measured directly: builds W = span(ker dmu + orbit tangents), returns
//! dim W - rank of the symplectic form restricted to W.
int degeneracy_direct(const MultipartiteState& state, const GeomOptions& opt = {},
                      GeomDiag* diag = nullptr);

}  // namespace sympent
