#include <doctest.h>

#include "sympent/orbitgeom.hpp"
#include "sympent/spectramap.hpp"
#include "sympent/statexpr.hpp"
#include "test_util.hpp"

using namespace sympent;

namespace {
LocalHamiltonian single_factor(const CMatrix& m, int slot, const std::vector<int>& dims) {
  LocalHamiltonian f;
  for (size_t k = 0; k < dims.size(); ++k)
    f.factors.push_back(static_cast<int>(k) == slot ? m : CMatrix(dims[k], dims[k]));
  return f;
}
}  // namespace

TEST_CASE("fs_form_operators Pauli anchor") {
  // at |00>: i<[X x I, Y x I]> = i<2iZ x I> = -2<Z x I> = -2
  const MultipartiteState s = eval_state("|00>");
  const auto p = su_basis(2);
  const LocalHamiltonian fx = single_factor(p[0], 0, {2, 2});
  const LocalHamiltonian fy = single_factor(p[1], 0, {2, 2});
  CHECK(fs_form_operators(s, fx, fy) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fs_form_operators(s, fy, fx) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("fs_form_vectors matches the operator form") {
  std::uint64_t rng = 19;
  const MultipartiteState s = haar_state({2, 3}, rng);
  const auto basis = local_algebra_basis(s.dims());
  for (size_t a = 0; a < basis.size(); a += 3) {
    for (size_t b = 1; b < basis.size(); b += 4) {
      const double op = fs_form_operators(s, basis[a], basis[b]);
      const double vec =
          fs_form_vectors(s, tangent_vector(s, basis[a]), tangent_vector(s, basis[b]));
      CHECK(op == doctest::Approx(vec).epsilon(1e-9));
    }
  }
}

TEST_CASE("fs_form_vectors complex-structure normalization") {
  std::uint64_t rng = 8;
  const MultipartiteState s = haar_state({2, 2}, rng);
  const cvec w = tangent_vector(s, local_algebra_basis(s.dims())[0]);
  cvec iw(w.size());
  for (size_t i = 0; i < w.size(); ++i) iw[i] = cplx(0, 1) * w[i];
  double norm2 = 0;
  for (const cplx& z : w) norm2 += std::norm(z);
  CHECK(fs_form_vectors(s, iw, w) == doctest::Approx(2.0 * norm2).epsilon(1e-12));
  CHECK(std::abs(fs_form_vectors(s, w, w)) < 1e-12);
}

TEST_CASE("orbit dimensions of the named states") {
  const OrbitDims bell = orbit_dims(eval_state("ghz(2,2)"));
  CHECK(bell.dim_orbit == 3);
  CHECK(bell.dim_adjoint_orbit == 0);
  CHECK(bell.stab_state == 3);
  CHECK(bell.stab_mu == 6);

  const OrbitDims ghz3 = orbit_dims(eval_state("ghz(3,2)"));
  CHECK(ghz3.dim_orbit == 7);
  CHECK(ghz3.dim_adjoint_orbit == 0);

  const OrbitDims w3 = orbit_dims(eval_state("w(3)"));
  CHECK(w3.dim_orbit == 8);
  CHECK(w3.dim_adjoint_orbit == 6);

  const OrbitDims sep = orbit_dims(eval_state("|000>"));
  CHECK(sep.dim_orbit == 6);
  CHECK(sep.dim_adjoint_orbit == 6);
}

TEST_CASE("stabilizer of mu equals the multiplicity closed form by construction") {
  // schmidt_state(1/2,1/2,0): each reduced spectrum is (1/2,1/2,0), so each
  // su(3) commutant has dim 2^2 + 1^2 - 1 = 4 and stab_mu = 8
  CHECK(stab_dim_mu(eval_state("schmidt_state(0.5,0.5,0)")) == 8);
  CHECK(stab_dim_mu(eval_state("ghz(2,2)")) == 6);
}

TEST_CASE("gram rank equals adjoint orbit dimension") {
  for (const char* text : {"ghz(2,2)", "ghz(3,2)", "w(3)", "|000>", "schmidt_state(0.5,0.5,0)"}) {
    const MultipartiteState s = eval_state(text);
    const RankResult r = numerical_rank(orbit_gram(s).matrix, {1e-10, 1.0});
    CHECK(r.rank == orbit_dims(s).dim_adjoint_orbit);
  }
}

TEST_CASE("null basis size is the orbit dimension gap") {
  CHECK(null_basis(eval_state("w(3)")).generators.size() == 2);
  CHECK(null_basis(eval_state("ghz(2,2)")).generators.size() == 3);
  CHECK(null_basis(eval_state("|000>")).generators.size() == 0);
  // generators commute with every reduced density matrix
  const MultipartiteState w3 = eval_state("w(3)");
  const auto mu = momentum_map(w3);
  for (const auto& gen : null_basis(w3).generators)
    for (size_t k = 0; k < mu.size(); ++k)
      CHECK(commutator(mu[k], gen.factors[k]).max_abs() < 1e-9);
}

TEST_CASE("kernel of d mu") {
  CHECK(ker_dmu_basis(eval_state("ghz(2,2)")).size() == 3);
  CHECK(ker_dmu_basis(eval_state("ghz(3,2)")).size() >= 7);
}

TEST_CASE("degeneracy_direct on anchors") {
  CHECK(degeneracy_direct(eval_state("ghz(2,2)")) == 3);
  CHECK(degeneracy_direct(eval_state("w(3)")) == 2);
  CHECK(degeneracy_direct(eval_state("|000>")) == 0);
}
