#include <doctest.h>

#include "sympent/localalg.hpp"
#include "sympent/spectramap.hpp"
#include "test_util.hpp"

using namespace sympent;

TEST_CASE("su_basis is an orthogonal traceless Hermitian basis") {
  for (int d : {2, 3, 4}) {
    const auto basis = su_basis(d);
    REQUIRE(static_cast<int>(basis.size()) == d * d - 1);
    for (size_t a = 0; a < basis.size(); ++a) {
      CHECK(basis[a].is_hermitian());
      CHECK(std::abs(basis[a].trace()) < 1e-14);
      for (size_t b = 0; b <= a; ++b) {
        const cplx tr = (basis[a] * basis[b]).trace();
        CHECK(std::abs(tr - (a == b ? cplx(2.0) : cplx(0.0))) < 1e-13);
      }
    }
  }
}

TEST_CASE("su(2) basis is the Pauli triple") {
  const auto b = su_basis(2);
  CHECK(std::abs(b[0](0, 1) - cplx(1.0)) < 1e-15);          // X
  CHECK(std::abs(b[1](0, 1) - cplx(0.0, -1.0)) < 1e-15);    // Y
  CHECK(std::abs(b[2](0, 0) - cplx(1.0)) < 1e-15);          // Z
}

TEST_CASE("local_algebra_basis is factor-major with the right size") {
  const auto basis = local_algebra_basis({2, 3});
  REQUIRE(basis.size() == 3 + 8);
  // first three act only on factor 0
  for (int a = 0; a < 3; ++a) CHECK(basis[a].factors[1].max_abs() == 0.0);
  for (int a = 3; a < 11; ++a) CHECK(basis[a].factors[0].max_abs() == 0.0);
}

TEST_CASE("apply_embedded agrees with the dense embedding") {
  std::uint64_t rng = 31;
  const std::vector<int> dims{2, 3, 2};
  const MultipartiteState s = haar_state(dims, rng);
  LocalHamiltonian f;
  for (int d : dims) {
    CMatrix h = testutil::random_hermitian(d, rng);
    const cplx shift = h.trace() / static_cast<double>(d);
    for (int i = 0; i < d; ++i) h(i, i) -= shift;
    f.factors.push_back(std::move(h));
  }
  const cvec dense = embed_full(f, dims) * s.amps();
  const cvec lazy = apply_embedded(f, s);
  for (size_t i = 0; i < dense.size(); ++i) CHECK(std::abs(dense[i] - lazy[i]) < 1e-12);
}

TEST_CASE("tangent vectors are horizontal") {
  std::uint64_t rng = 63;
  const MultipartiteState s = haar_state({2, 2, 2}, rng);
  for (const auto& f : local_algebra_basis(s.dims())) {
    const cvec v = tangent_vector(s, f);
    cplx ip = 0;
    for (size_t i = 0; i < v.size(); ++i) ip += std::conj(s.amps()[i]) * v[i];
    CHECK(std::abs(ip) < 1e-12);
  }
}

TEST_CASE("validate_local_hamiltonian") {
  LocalHamiltonian ok{{su_basis(2)[0], su_basis(2)[2]}};
  CHECK_NOTHROW(validate_local_hamiltonian(ok));
  LocalHamiltonian traced{{CMatrix::identity(2), su_basis(2)[0]}};
  CHECK_THROWS(validate_local_hamiltonian(traced));
}

TEST_CASE("commutator identities") {
  const auto p = su_basis(2);
  // [X, Y] = 2iZ
  CHECK(testutil::mat_dist(commutator(p[0], p[1]), cplx(0, 2) * p[2]) < 1e-14);
  CHECK(testutil::mat_dist(commutator(p[2], p[2]), CMatrix(2, 2)) < 1e-15);
}
