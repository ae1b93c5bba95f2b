#include <doctest.h>

#include <sstream>

#include "sympent/spectramap.hpp"
#include "sympent/statexpr.hpp"

using namespace sympent;

TEST_CASE("group_multiplicities") {
  CHECK(group_multiplicities({1.0}, 1e-8) == std::vector<int>{1});
  CHECK(group_multiplicities({0.5, 0.5, 0.0}, 1e-8) == std::vector<int>{2, 1});
  CHECK(group_multiplicities({0.7, 0.2, 0.1}, 1e-8) == std::vector<int>{1, 1, 1});
  // relative gap: 0.5 vs 0.5 + 1e-12 groups, 0.5 vs 0.6 does not
  CHECK(group_multiplicities({0.5 + 1e-12, 0.5}, 1e-8) == std::vector<int>{2});
  // near-zero cluster joins through the absolute floor
  CHECK(group_multiplicities({1e-14, 0.0}, 1e-8) == std::vector<int>{2});
}

TEST_CASE("psi_map truncates and orders spectra") {
  const SpectraPoint p = psi_map(eval_state("w(3)"));
  REQUIRE(p.truncated_spectra.size() == 3);
  for (const auto& spec : p.truncated_spectra) {
    REQUIRE(spec.size() == 1);  // d - 1 entries per qubit
    CHECK(spec[0] == doctest::Approx(2.0 / 3.0));
  }
  for (const auto& m : p.multiplicities) CHECK(m == std::vector<int>{1, 1});
}

TEST_CASE("haar_state is deterministic in the generator state") {
  std::uint64_t a = 42, b = 42;
  const MultipartiteState sa = haar_state({2, 2}, a);
  const MultipartiteState sb = haar_state({2, 2}, b);
  CHECK(sa.amps() == sb.amps());
  CHECK(a == b);
  // and the stream advances
  const MultipartiteState sc = haar_state({2, 2}, a);
  CHECK(sa.amps() != sc.amps());
}

TEST_CASE("sample_polytope shape and bipartite symmetry") {
  const auto cloud = sample_polytope(2, 3, 25, 11);
  REQUIRE(cloud.size() == 25);
  for (const auto& p : cloud) {
    REQUIRE(p.truncated_spectra.size() == 2);
    for (const auto& spec : p.truncated_spectra) {
      REQUIRE(spec.size() == 2);
      CHECK(spec[0] >= spec[1]);
      CHECK(spec[0] <= 1.0 + 1e-12);
    }
    // both marginals of a bipartite pure state share a spectrum
    for (size_t i = 0; i < 2; ++i)
      CHECK(p.truncated_spectra[0][i] == doctest::Approx(p.truncated_spectra[1][i]).epsilon(1e-10));
  }
}

TEST_CASE("polytope csv is reproducible and well-formed") {
  const auto cloud = sample_polytope(3, 2, 10, 5);
  std::ostringstream a, b;
  write_polytope_csv(a, cloud);
  write_polytope_csv(b, sample_polytope(3, 2, 10, 5));
  const std::string text = a.str();
  CHECK(text == b.str());
  CHECK(text.rfind("sample,k,lambda_1", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 10 * 3);
}

TEST_CASE("seed zero is remapped, not degenerate") {
  const auto c0 = sample_polytope(2, 2, 3, 0);
  CHECK(c0.front().truncated_spectra[0][0] > 0.0);
}
