//! @file flows.hpp
//! Schroedinger evolution as Hamiltonian flow: exact-unitary stepping,
//! conserved-quantity monitors, admissibility of Hamiltonian functions and
//! null-perturbed flows that exhibit the dynamical ambiguity at entangled
//! states.
#pragma once

#include <iosfwd>
#include <optional>

#include "sympent/orbitgeom.hpp"

namespace sympent {

struct Trajectory {
  std::vector<double> times;
  std::vector<MultipartiteState> states;
  std::vector<double> norm_deviation;                     // | ||psi|| - 1 | of the raw step output
  std::vector<double> energy;                             // <H> at each sample
  std::vector<std::vector<std::vector<double>>> spectra;  // [sample][subsystem] nonincreasing
  std::vector<double> fidelity;                           // |<psi|ref>|; 1 for a reference run
};

//! <psi|H|psi> for a full Hermitian operator.
double classical_hamiltonian(const MultipartiteState& state, const CMatrix& h);
//! Local case; also the sum of Tr(rho^k H_k).
double classical_hamiltonian(const MultipartiteState& state, const LocalHamiltonian& h);

//! psi_j = e^{-iH jT/n} psi_0, one eigendecomposition reused. n+1 samples
//! including t = 0.
Trajectory flow(const MultipartiteState& initial, const CMatrix& h, double duration, int steps);

struct AdmissibilityResult {
  bool admissible = true;
  double max_violation = 0.0;
};

//! max |dH(v)| = |2 Re<v|H|psi>| over unit null directions, evaluated at the
//! state and at a few fixed-seed local-unitary translates of it (the
//! translates stay inside the isospectral stratum; a single point can sit at
//! an accidental zero of dH).
AdmissibilityResult admissibility_check(const MultipartiteState& state, const CMatrix& h,
                                        double tol = 1e-9, const GeomOptions& opt = {});

struct FlowPair {
  Trajectory reference;
  Trajectory perturbed;
  std::vector<int> null_dims;  // null-basis size seen at each perturbed step
};

//! Reference flow under embed_full(h) against a flow perturbed per step by
//! eps times the first null generator at the current state (skipped when the
//! null basis is empty, in which case the trajectories coincide exactly).
FlowPair null_perturbed_flow(const MultipartiteState& initial, const LocalHamiltonian& h,
                             double eps, double duration, int steps, const GeomOptions& opt = {});

//! CSV schema: header "t,norm_dev,energy,fidelity,spec_k_i..." with (k, i)
//! lexicographic; one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

}  // namespace sympent
