#include <doctest.h>

#include "sympent/mat.hpp"
#include "test_util.hpp"

using namespace sympent;
using testutil::mat_dist;
using testutil::random_hermitian;

TEST_CASE("herm_eig reconstructs the input") {
  std::uint64_t rng = 11;
  for (int n : {2, 3, 5, 8}) {
    const CMatrix a = random_hermitian(n, rng);
    const EigResult e = herm_eig(a);
    CMatrix recon(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          recon(i, j) += e.eigenvectors(i, k) * e.eigenvalues[k] * std::conj(e.eigenvectors(j, k));
    CHECK(mat_dist(a, recon) < 1e-12 * (1.0 + a.max_abs()));
    // eigenvalues ascending, eigenvectors unitary
    for (size_t k = 1; k < e.eigenvalues.size(); ++k)
      CHECK(e.eigenvalues[k] >= e.eigenvalues[k - 1]);
    CHECK(mat_dist(e.eigenvectors.adjoint() * e.eigenvectors, CMatrix::identity(n)) < 1e-12);
  }
}

TEST_CASE("herm_eig rejects bad input") {
  CHECK_THROWS(herm_eig(CMatrix(2, 3)));
  CMatrix a(2, 2);
  a(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS(herm_eig(a));
}

TEST_CASE("svd reconstructs and orthogonalizes") {
  std::uint64_t rng = 23;
  for (auto [m, n] : {std::pair{4, 4}, {6, 3}, {3, 6}, {5, 2}}) {
    CMatrix a(m, n);
    for (auto& z : a.data()) z = cplx(gauss(rng), gauss(rng));
    const SvdResult s = svd(a);
    const int r = static_cast<int>(s.sigma.size());
    CMatrix recon(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < r; ++k) recon(i, j) += s.u(i, k) * s.sigma[k] * std::conj(s.v(j, k));
    CHECK(mat_dist(a, recon) < 1e-12 * (1.0 + a.max_abs()));
    CHECK(mat_dist(s.u.adjoint() * s.u, CMatrix::identity(r)) < 1e-12);
    CHECK(mat_dist(s.v.adjoint() * s.v, CMatrix::identity(n)) < 1e-12);
    for (int k = 1; k < r; ++k) CHECK(s.sigma[k] <= s.sigma[k - 1]);
  }
}

TEST_CASE("svd resolves tiny singular values absolutely") {
  // diag(1, 1e-13, 0): a Golub-Kahan style bidiagonalization would smear the
  // middle value; one-sided Jacobi keeps it to near machine accuracy.
  CMatrix a(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-13;
  const SvdResult s = svd(a);
  CHECK(s.sigma[1] == doctest::Approx(1e-13).epsilon(1e-3));
  CHECK(s.sigma[2] < 1e-15);
}

TEST_CASE("numerical_rank policy") {
  CMatrix z(4, 4);
  CHECK(numerical_rank(z).rank == 0);
  CHECK(numerical_rank(CMatrix::identity(5)).rank == 5);

  // a matrix that is zero only up to roundoff: pure relative thresholding
  // sees full rank, the unit scale floor sees rank 0
  CMatrix eps(3, 3);
  eps(0, 0) = 1e-15;
  eps(1, 2) = -3e-16;
  CHECK(numerical_rank(eps, {1e-10, 0.0}).rank == 2);
  CHECK(numerical_rank(eps, {1e-10, 1.0}).rank == 0);
}

TEST_CASE("rank is unitarily invariant") {
  std::uint64_t rng = 5;
  CMatrix a(4, 4);
  for (auto& z : a.data()) z = cplx(gauss(rng), gauss(rng));
  a(3, 0) = a(0, 0);  // force a dependent row
  a(3, 1) = a(0, 1);
  a(3, 2) = a(0, 2);
  a(3, 3) = a(0, 3);
  const int r0 = numerical_rank(a).rank;
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix u = testutil::random_unitary(4, rng);
    CHECK(numerical_rank(u * a).rank == r0);
    CHECK(numerical_rank(a * u).rank == r0);
  }
}

TEST_CASE("rank stability flag") {
  CMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 5e-10;  // within a factor 100 of tau = 1e-10 * 2
  const RankResult r = numerical_rank(a, {1e-10, 0.0});
  CHECK_FALSE(r.stable);
}

TEST_CASE("expm_i_herm inverse product and semigroup") {
  std::uint64_t rng = 77;
  for (int trial = 0; trial < 4; ++trial) {
    const CMatrix h = random_hermitian(4, rng);
    const double t = 0.3 + trial;
    CHECK(mat_dist(expm_i_herm(h, t) * expm_i_herm(h, -t), CMatrix::identity(4)) < 1e-10);
    CHECK(mat_dist(expm_i_herm(h, t + 0.7), expm_i_herm(h, t) * expm_i_herm(h, 0.7)) < 1e-10);
  }
}
