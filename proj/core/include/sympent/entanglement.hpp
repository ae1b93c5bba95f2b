//! @file entanglement.hpp
//! The three routes to the symplectic entanglement indicator E and their
//! cross-validation: orbit-dimension difference, Gram-rank degeneracy of the
//! orbit form, direct degeneracy on the stratum tangent space, plus the
//! bipartite Schmidt closed form.
#pragma once

#include <optional>

#include "sympent/orbitgeom.hpp"

namespace sympent {

struct EntanglementReport {
  int e_theorem = 0;
  int e_gram = 0;
  int e_direct = 0;
  std::optional<int> e_bipartite;  // L = 2 only
  std::optional<std::vector<double>> schmidt_coefficients;
  std::optional<std::vector<int>> schmidt_multiplicities;
  OrbitDims orbit_dims;
  int gram_rank = 0;
  bool separable = false;
  bool rank_stable = true;
  std::vector<std::string> warnings;
};

int e_theorem(const MultipartiteState& state, const GeomOptions& opt = {}, GeomDiag* diag = nullptr);
int e_gram(const MultipartiteState& state, const GeomOptions& opt = {}, GeomDiag* diag = nullptr);

//! sum_i m_i^2 - 1 over multiplicities of the distinct nonzero Schmidt
//! weights (zero = below 1e-10). Throws if no weight survives.
int e_bipartite(const std::vector<double>& schmidt_weights, double group_tol = 1e-8);

//! All routes; throws std::runtime_error when routes disagree at a
//! rank-stable state.
EntanglementReport analyze(const MultipartiteState& state, const GeomOptions& opt = {});

}  // namespace sympent
