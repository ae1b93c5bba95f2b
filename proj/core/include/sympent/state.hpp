//! @file state.hpp
//! Multipartite pure states on S_1 x ... x S_L, projective equivalence,
//! partial traces, Schmidt decomposition and named state constructors.
//!
//! Index convention: subsystem 0 is the slowest-varying tensor index
//! (big-endian kets), i.e. |q_1 q_2 ... q_L> has amplitude index
//! q_1*d_2*...*d_L + ... + q_L.
#pragma once

#include <vector>

#include "sympent/mat.hpp"

namespace sympent {

class MultipartiteState {
 public:
  //! Normalizes and fixes the global phase (first nonzero amplitude made
  //! real positive). Throws if the vector norm is below 1e-12 or the
  //! amplitude count does not match the factor dimensions.
  MultipartiteState(std::vector<int> dims, cvec amplitudes);

  const std::vector<int>& dims() const { return dims_; }
  const cvec& amps() const { return amps_; }
  int factors() const { return static_cast<int>(dims_.size()); }
  int dim_total() const { return static_cast<int>(amps_.size()); }

 private:
  std::vector<int> dims_;
  cvec amps_;
};

using DensityTuple = std::vector<CMatrix>;

//! rho^k = Tr_{all but k} |psi><psi|, subsystem index 0-based.
CMatrix partial_trace(const MultipartiteState& state, int subsystem);

//! mu(psi) = (rho^1, ..., rho^L).
DensityTuple momentum_map(const MultipartiteState& state);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // squared singular values, nonincreasing, sum 1
  CMatrix left_basis;                // d1 x r orthonormal columns
  CMatrix right_basis;               // d2 x r orthonormal columns
};

//! Bipartite only (L = 2).
SchmidtDecomposition schmidt(const MultipartiteState& state);

//! |<a|b>|, shapes must match.
double overlap(const MultipartiteState& a, const MultipartiteState& b);
bool projective_equal(const MultipartiteState& a, const MultipartiteState& b, double tol);

//! Image state (U_1 x ... x U_L)|psi>; each factor must be unitary to 1e-10.
MultipartiteState apply_local_unitary(const MultipartiteState& state,
                                      const std::vector<CMatrix>& unitaries);

// named constructors
MultipartiteState make_ghz(int num_factors, int local_dim);
MultipartiteState make_w(int num_factors);
MultipartiteState make_dicke(int num_factors, int excitations);
MultipartiteState make_product(const std::vector<cvec>& factor_vectors);
//! Sum_i sqrt(p_i)|ii> on C^d x C^d with d = weights.size().
MultipartiteState make_schmidt_state(const std::vector<double>& weights);

}  // namespace sympent
