//! @file localalg.hpp
//! The local Lie algebra su(d_1) + ... + su(d_L): generalized Gell-Mann
//! bases, embeddings into the full tensor space and tangent vectors of the
//! local unitary action.
#pragma once

#include "sympent/mat.hpp"
#include "sympent/state.hpp"

namespace sympent {

//! Tuple (F_1, ..., F_L) of traceless Hermitian factors.
struct LocalHamiltonian {
  std::vector<CMatrix> factors;
};

//! Throws unless every factor is Hermitian and traceless to 1e-12.
void validate_local_hamiltonian(const LocalHamiltonian& f);

//! Generalized Gell-Mann basis of su(d): d^2-1 traceless Hermitian matrices
//! with Tr(T_a T_b) = 2 delta_ab. Order: for each pair j<k the symmetric then
//! the antisymmetric generator, then the d-1 diagonal ones.
std::vector<CMatrix> su_basis(int d);

//! Factor-major basis of the local algebra: all generators acting on
//! subsystem 0 first, and so on. Size = sum_k (d_k^2 - 1).
std::vector<LocalHamiltonian> local_algebra_basis(const std::vector<int>& dims);

//! sum_k I x ... x F_k x ... x I as a dense matrix on the full space.
CMatrix embed_full(const LocalHamiltonian& f, const std::vector<int>& dims);

//! (I x ... x M x ... x I)|psi> without forming the full matrix.
cvec apply_factor(const CMatrix& m, int subsystem, const cvec& psi, const std::vector<int>& dims);

//! embed_full(f)|psi>, computed factor by factor.
cvec apply_embedded(const LocalHamiltonian& f, const MultipartiteState& state);

//! Horizontal tangent vector v = -i(F - <F>)|psi>; satisfies <psi|v> = 0.
cvec tangent_vector(const MultipartiteState& state, const LocalHamiltonian& f);
cvec tangent_vector_full(const MultipartiteState& state, const CMatrix& h);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

}  // namespace sympent
