#include "sympent/spectramap.hpp"

#include <cmath>
#include <ostream>

namespace sympent {

std::vector<int> group_multiplicities(const std::vector<double>& sorted_desc, double tol) {
  std::vector<int> groups;
  for (size_t i = 0; i < sorted_desc.size(); ++i) {
    if (i > 0 && sorted_desc[i - 1] - sorted_desc[i] <=
                     tol * std::max(std::abs(sorted_desc[i - 1]), std::abs(sorted_desc[i])) + 1e-12)
      ++groups.back();
    else
      groups.push_back(1);
  }
  return groups;
}

SpectraPoint psi_map(const MultipartiteState& state, double group_tol) {
  SpectraPoint out;
  out.group_tol_used = group_tol;
  for (int k = 0; k < state.factors(); ++k) {
    EigResult e = herm_eig(partial_trace(state, k));
    std::vector<double> spec(e.eigenvalues.rbegin(), e.eigenvalues.rend());
    out.multiplicities.push_back(group_multiplicities(spec, group_tol));
    spec.pop_back();  // last entry implied by unit trace
    out.truncated_spectra.push_back(std::move(spec));
  }
  return out;
}

// xorshift64* core; splitmix-style scramble for gaussians via Box-Muller
static std::uint64_t next_u64(std::uint64_t& s) {
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  return s * 0x2545F4914F6CDD1DULL;
}

double gauss(std::uint64_t& rng_state) {
  // Box-Muller on two uniforms in (0,1)
  const double u1 =
      (static_cast<double>(next_u64(rng_state) >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  const double u2 =
      (static_cast<double>(next_u64(rng_state) >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

MultipartiteState haar_state(const std::vector<int>& dims, std::uint64_t& rng_state) {
  int total = 1;
  for (int d : dims) total *= d;
  cvec amps(total);
  for (auto& z : amps) {
    const double re = gauss(rng_state);
    const double im = gauss(rng_state);
    z = cplx(re, im);
  }
  return MultipartiteState(dims, std::move(amps));
}

std::vector<SpectraPoint> sample_polytope(int num_factors, int local_dim, int samples,
                                          std::uint64_t seed, double group_tol) {
  if (samples < 1) throw std::invalid_argument("sample_polytope: need at least one sample");
  std::uint64_t s = seed ? seed : 0x9E3779B97F4A7C15ULL;
  std::vector<int> dims(num_factors, local_dim);
  std::vector<SpectraPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) out.push_back(psi_map(haar_state(dims, s), group_tol));
  return out;
}

void write_polytope_csv(std::ostream& os, const std::vector<SpectraPoint>& points) {
  if (points.empty()) return;
  const size_t dm1 = points[0].truncated_spectra.empty() ? 0 : points[0].truncated_spectra[0].size();
  os << "sample,k";
  for (size_t i = 1; i <= dm1; ++i) os << ",lambda_" << i;
  os << "\n";
  os.precision(17);
  for (size_t n = 0; n < points.size(); ++n)
    for (size_t k = 0; k < points[n].truncated_spectra.size(); ++k) {
      os << n << "," << k + 1;
      for (double v : points[n].truncated_spectra[k]) os << "," << v;
      os << "\n";
    }
}

}  // namespace sympent
