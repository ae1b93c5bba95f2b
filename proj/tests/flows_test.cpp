#include <doctest.h>

#include <sstream>

#include "sympent/flows.hpp"
#include "sympent/spectramap.hpp"
#include "sympent/statexpr.hpp"
#include "test_util.hpp"

using namespace sympent;

namespace {
LocalHamiltonian random_local(const std::vector<int>& dims, std::uint64_t& rng) {
  LocalHamiltonian h;
  for (int d : dims) {
    CMatrix m = testutil::random_hermitian(d, rng);
    const cplx shift = m.trace() / static_cast<double>(d);
    for (int i = 0; i < d; ++i) m(i, i) -= shift;
    h.factors.push_back(std::move(m));
  }
  return h;
}
}  // namespace

TEST_CASE("flow conserves norm, energy and reduced spectra") {
  std::uint64_t rng = 1;
  const MultipartiteState s = haar_state({2, 2, 2}, rng);
  const LocalHamiltonian h = random_local(s.dims(), rng);
  const CMatrix hfull = embed_full(h, s.dims());
  const Trajectory t = flow(s, hfull, 10.0, 200);
  REQUIRE(t.times.size() == 201);
  const double e0 = t.energy.front();
  for (size_t j = 0; j < t.times.size(); ++j) {
    CHECK(t.norm_deviation[j] <= 1e-12);
    CHECK(std::abs(t.energy[j] - e0) <= 1e-11);
    // local evolution keeps every reduced spectrum fixed
    for (size_t k = 0; k < t.spectra[j].size(); ++k)
      for (size_t i = 0; i < t.spectra[j][k].size(); ++i)
        CHECK(std::abs(t.spectra[j][k][i] - t.spectra[0][k][i]) < 1e-10);
  }
}

TEST_CASE("classical_hamiltonian overloads agree") {
  std::uint64_t rng = 6;
  const MultipartiteState s = haar_state({2, 3}, rng);
  const LocalHamiltonian h = random_local(s.dims(), rng);
  CHECK(classical_hamiltonian(s, h) ==
        doctest::Approx(classical_hamiltonian(s, embed_full(h, s.dims()))).epsilon(1e-12));
}

TEST_CASE("admissibility dichotomy") {
  const MultipartiteState w3 = eval_state("w(3)");
  std::uint64_t rng = 12;
  const LocalHamiltonian h = random_local(w3.dims(), rng);
  const AdmissibilityResult local = admissibility_check(w3, embed_full(h, w3.dims()));
  CHECK(local.admissible);
  CHECK(local.max_violation <= 1e-9);

  // the projector onto ghz(3,2) is not a local observable
  const MultipartiteState ghz = eval_state("ghz(3,2)");
  CMatrix proj(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) proj(i, j) = ghz.amps()[i] * std::conj(ghz.amps()[j]);
  const AdmissibilityResult nonlocal = admissibility_check(w3, proj);
  CHECK_FALSE(nonlocal.admissible);
  CHECK(nonlocal.max_violation > 1e-3);
}

TEST_CASE("null-perturbed flow coincides exactly on separable states") {
  const MultipartiteState sep = eval_state("|000>");
  std::uint64_t rng = 17;
  const FlowPair pair = null_perturbed_flow(sep, random_local(sep.dims(), rng), 0.5, 2.0, 40);
  for (size_t j = 0; j < pair.reference.times.size(); ++j) {
    CHECK(pair.reference.states[j].amps() == pair.perturbed.states[j].amps());
    CHECK(pair.perturbed.fidelity[j] == 1.0);
  }
  for (int nd : pair.null_dims) CHECK(nd == 0);
}

TEST_CASE("null-perturbed flow moves entangled states without moving spectra") {
  const MultipartiteState w3 = eval_state("w(3)");
  std::uint64_t rng = 29;
  const FlowPair pair = null_perturbed_flow(w3, random_local(w3.dims(), rng), 0.1, 10.0, 200);
  double drift = 0, final_fid = pair.perturbed.fidelity.back();
  for (size_t j = 0; j < pair.reference.times.size(); ++j)
    for (size_t k = 0; k < 3; ++k)
      for (size_t i = 0; i < pair.reference.spectra[j][k].size(); ++i)
        drift = std::max(drift, std::abs(pair.reference.spectra[j][k][i] -
                                         pair.perturbed.spectra[j][k][i]));
  CHECK(drift <= 1e-6);
  CHECK(final_fid < 1.0 - 1e-3);
}

TEST_CASE("trajectory csv schema") {
  const MultipartiteState s = eval_state("|00>");
  const Trajectory t = flow(s, CMatrix(4, 4), 1.0, 2);
  std::ostringstream os;
  write_trajectory_csv(os, t);
  const std::string text = os.str();
  CHECK(text.rfind("t,norm_dev,energy,fidelity,spec_1_1,spec_1_2,spec_2_1,spec_2_2", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 samples
}
