#include "sympent/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "sympent/spectramap.hpp"

namespace sympent {

int e_theorem(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  const OrbitDims d = orbit_dims(state, opt, diag);
  return d.dim_orbit - d.dim_adjoint_orbit;
}

int e_gram(const MultipartiteState& state, const GeomOptions& opt, GeomDiag* diag) {
  const OrbitDims d = orbit_dims(state, opt, diag);
  RankResult r = numerical_rank(orbit_gram(state).matrix, RankPolicy{opt.rank_rel, 1.0});
  if (diag) diag->merge(r, "orbit_gram rank");
  return d.dim_orbit - r.rank;
}

int e_bipartite(const std::vector<double>& schmidt_weights, double group_tol) {
  std::vector<double> nonzero;
  for (double w : schmidt_weights) {
    if (w < -1e-10) throw std::invalid_argument("e_bipartite: negative weight");
    if (w > 1e-10) nonzero.push_back(w);
  }
  if (nonzero.empty()) throw std::invalid_argument("e_bipartite: no nonzero Schmidt weights");
  std::sort(nonzero.rbegin(), nonzero.rend());
  int sq = 0;
  for (int m : group_multiplicities(nonzero, group_tol)) sq += m * m;
  return sq - 1;
}

EntanglementReport analyze(const MultipartiteState& state, const GeomOptions& opt) {
  EntanglementReport rep;
  GeomDiag diag;

  rep.orbit_dims = orbit_dims(state, opt, &diag);
  rep.e_theorem = rep.orbit_dims.dim_orbit - rep.orbit_dims.dim_adjoint_orbit;

  RankResult gr = numerical_rank(orbit_gram(state).matrix, RankPolicy{opt.rank_rel, 1.0});
  diag.merge(gr, "orbit_gram rank");
  rep.gram_rank = gr.rank;
  rep.e_gram = rep.orbit_dims.dim_orbit - gr.rank;

  rep.e_direct = degeneracy_direct(state, opt, &diag);

  if (state.factors() == 2) {
    SchmidtDecomposition sd = schmidt(state);
    rep.schmidt_coefficients = sd.coefficients;
    std::vector<double> nonzero;
    for (double w : sd.coefficients)
      if (w > 1e-10) nonzero.push_back(w);
    rep.schmidt_multiplicities = group_multiplicities(nonzero, opt.group_tol);
    rep.e_bipartite = e_bipartite(sd.coefficients, opt.group_tol);
  }

  rep.rank_stable = diag.rank_stable;
  rep.warnings = diag.warnings;
  rep.separable = rep.e_theorem == 0;

  const bool agree = rep.e_theorem == rep.e_gram && rep.e_theorem == rep.e_direct &&
                     (!rep.e_bipartite || *rep.e_bipartite == rep.e_theorem);
  if (!agree && rep.rank_stable) {
    std::string msg = "analyze: route disagreement at rank-stable state: e_theorem=" +
                      std::to_string(rep.e_theorem) + " e_gram=" + std::to_string(rep.e_gram) +
                      " e_direct=" + std::to_string(rep.e_direct);
    if (rep.e_bipartite) msg += " e_bipartite=" + std::to_string(*rep.e_bipartite);
    msg += " (dim_orbit=" + std::to_string(rep.orbit_dims.dim_orbit) +
           ", dim_adjoint_orbit=" + std::to_string(rep.orbit_dims.dim_adjoint_orbit) +
           ", gram_rank=" + std::to_string(rep.gram_rank) + ")";
    throw std::runtime_error(msg);
  }
  return rep;
}

}  // namespace sympent
