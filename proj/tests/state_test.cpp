#include <doctest.h>

#include "sympent/spectramap.hpp"
#include "sympent/state.hpp"
#include "test_util.hpp"

using namespace sympent;

TEST_CASE("construction normalizes and fixes phase") {
  MultipartiteState s({2, 2}, {cplx(0, 2), 0, 0, cplx(0, 2)});
  CHECK(s.amps()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(s.amps()[0].imag()) < 1e-15);

  CHECK_THROWS(MultipartiteState({2, 2}, cvec(3)));
  CHECK_THROWS(MultipartiteState({2, 2}, cvec(4)));  // zero vector
}

TEST_CASE("partial traces are density matrices summing the state") {
  std::uint64_t rng = 3;
  const MultipartiteState s = haar_state({2, 3, 2}, rng);
  for (int k = 0; k < 3; ++k) {
    const CMatrix rho = partial_trace(s, k);
    CHECK(rho.rows() == s.dims()[k]);
    CHECK(rho.is_hermitian(1e-12));
    CHECK(std::abs(rho.trace() - cplx(1.0)) < 1e-12);
    // positive semidefinite: all eigenvalues >= -eps
    for (double lam : herm_eig(rho).eigenvalues) CHECK(lam > -1e-12);
  }
}

TEST_CASE("momentum map of a product state is a tuple of pure projectors") {
  const MultipartiteState s = make_product({{1, 0}, {0.6, cplx(0, 0.8)}, {1, 1}});
  for (const CMatrix& rho : momentum_map(s)) {
    CHECK(testutil::mat_dist(rho * rho, rho) < 1e-12);  // rho^2 = rho
  }
}

TEST_CASE("schmidt coefficients are the reduced spectrum") {
  std::uint64_t rng = 9;
  const MultipartiteState s = haar_state({3, 4}, rng);
  const SchmidtDecomposition dec = schmidt(s);
  const auto lam = herm_eig(partial_trace(s, 0)).eigenvalues;  // ascending
  REQUIRE(dec.coefficients.size() == 3);
  double sum = 0;
  for (size_t i = 0; i < 3; ++i) {
    CHECK(dec.coefficients[i] == doctest::Approx(lam[2 - i]).epsilon(1e-10));
    sum += dec.coefficients[i];
  }
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("schmidt bases reconstruct the state") {
  std::uint64_t rng = 41;
  const MultipartiteState s = haar_state({2, 3}, rng);
  const SchmidtDecomposition dec = schmidt(s);
  cvec recon(6);
  for (size_t k = 0; k < dec.coefficients.size(); ++k) {
    const double m = std::sqrt(dec.coefficients[k]);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) recon[i * 3 + j] += m * dec.left_basis(i, k) * dec.right_basis(j, k);
  }
  CHECK(projective_equal(s, MultipartiteState({2, 3}, recon), 1e-10));
}

TEST_CASE("named constructors") {
  const MultipartiteState ghz = make_ghz(3, 2);
  CHECK(std::abs(ghz.amps()[0] - cplx(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(ghz.amps()[7] - cplx(1 / std::sqrt(2.0))) < 1e-15);

  const MultipartiteState w = make_w(3);
  for (int idx : {1, 2, 4}) CHECK(std::abs(w.amps()[idx] - cplx(1 / std::sqrt(3.0))) < 1e-15);
  CHECK(projective_equal(w, make_dicke(3, 1), 1e-12));

  // big-endian convention: |01> is amplitude index 1 on 2x2
  const MultipartiteState p = make_product({{1, 0}, {0, 1}});
  CHECK(std::abs(p.amps()[1] - cplx(1.0)) < 1e-15);

  const MultipartiteState sch = make_schmidt_state({0.5, 0.3, 0.2});
  const auto dec = schmidt(sch);
  CHECK(dec.coefficients[0] == doctest::Approx(0.5));
  CHECK(dec.coefficients[2] == doctest::Approx(0.2));
}

TEST_CASE("local unitaries preserve overlap structure") {
  std::uint64_t rng = 15;
  const MultipartiteState a = haar_state({2, 2, 2}, rng);
  const MultipartiteState b = haar_state({2, 2, 2}, rng);
  std::vector<CMatrix> us;
  for (int k = 0; k < 3; ++k) us.push_back(testutil::random_unitary(2, rng));
  CHECK(overlap(apply_local_unitary(a, us), apply_local_unitary(b, us)) ==
        doctest::Approx(overlap(a, b)).epsilon(1e-10));
  CMatrix not_unitary(2, 2);
  not_unitary(0, 0) = 2.0;
  CHECK_THROWS(apply_local_unitary(a, {us[0], us[1], not_unitary}));
}
