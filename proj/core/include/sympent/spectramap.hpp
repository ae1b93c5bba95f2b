//! @file spectramap.hpp
//! Ordered local spectra (the Psi map), eigenvalue multiplicity grouping and
//! Kirwan-polytope point-cloud sampling.
#pragma once

#include <cstdint>
#include <iosfwd>

#include "sympent/state.hpp"

namespace sympent {

//! Single-link grouping of a nonincreasing value list: a gap joins the
//! running group when it is below tol relative to the larger value (with a
//! 1e-12 absolute floor so that near-zero clusters group).
std::vector<int> group_multiplicities(const std::vector<double>& sorted_desc, double tol);

struct SpectraPoint {
  //! per subsystem: nonincreasing spectrum truncated to the first d_k - 1
  //! entries (the last is implied by unit trace)
  std::vector<std::vector<double>> truncated_spectra;
  //! per subsystem: grouped multiplicities of the full spectrum, summing to d_k
  std::vector<std::vector<int>> multiplicities;
  double group_tol_used = 0.0;
};

SpectraPoint psi_map(const MultipartiteState& state, double group_tol = 1e-8);

//! Haar-random state (normalized complex standard normals), deterministic in
//! the generator state.
MultipartiteState haar_state(const std::vector<int>& dims, std::uint64_t& rng_state);

//! xorshift-based generator used for all seeded sampling, so outputs are
//! bit-identical across platforms and standard library versions.
double gauss(std::uint64_t& rng_state);

std::vector<SpectraPoint> sample_polytope(int num_factors, int local_dim, int samples,
                                          std::uint64_t seed, double group_tol = 1e-8);

//! CSV schema: header "sample,k,lambda_1..lambda_{d-1}"; rows in sample-major,
//! subsystem-minor order.
void write_polytope_csv(std::ostream& os, const std::vector<SpectraPoint>& points);

}  // namespace sympent
