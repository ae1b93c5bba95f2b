#include "sympent_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sympent/entanglement.hpp"
#include "sympent/flows.hpp"
#include "sympent/spectramap.hpp"
#include "sympent/statexpr.hpp"
#include "sympent_cli/hamspec.hpp"

namespace sympent {

namespace {

using nlohmann::json;

struct CaseSpec {
  int factors = 0;
  int local_dim = 0;
  int count = 0;
};

// "2x2:100,3x2:100"
std::vector<CaseSpec> parse_cases(const std::string& text) {
  std::vector<CaseSpec> cases;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    CaseSpec c;
    char x = 0, colon = 0;
    std::stringstream is(item);
    if (!(is >> c.factors >> x >> c.local_dim >> colon >> c.count) || x != 'x' || colon != ':' ||
        c.factors < 2 || c.local_dim < 2 || c.count < 1)
      throw std::invalid_argument("bad --cases entry '" + item + "' (want LxD:count)");
    cases.push_back(c);
  }
  if (cases.empty()) throw std::invalid_argument("--cases is empty");
  return cases;
}

json report_to_json(const std::string& state_text, const MultipartiteState& state,
                    const EntanglementReport& r) {
  json j;
  j["state"] = state_text;
  j["dims"] = state.dims();
  j["e_theorem"] = r.e_theorem;
  j["e_gram"] = r.e_gram;
  j["e_direct"] = r.e_direct;
  if (r.e_bipartite) j["e_bipartite"] = *r.e_bipartite;
  if (r.schmidt_coefficients) j["schmidt"] = *r.schmidt_coefficients;
  if (r.schmidt_multiplicities) j["multiplicities"] = *r.schmidt_multiplicities;
  j["dim_orbit"] = r.orbit_dims.dim_orbit;
  j["dim_adjoint_orbit"] = r.orbit_dims.dim_adjoint_orbit;
  j["gram_rank"] = r.gram_rank;
  j["separable"] = r.separable;
  j["rank_stable"] = r.rank_stable;
  j["warnings"] = r.warnings;
  return j;
}

void emit(const std::string& out_path, std::ostream& fallback, const std::string& payload) {
  if (out_path.empty()) {
    fallback << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << payload;
}

std::uint64_t resolve_seed(std::uint64_t flag_seed, bool flag_given) {
  if (flag_given) return flag_seed;
  if (const char* env = std::getenv("SYMPENT_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

int cmd_analyze(const std::string& state_text, const GeomOptions& opt, const std::string& out_path,
                const std::string& format, std::ostream& out) {
  const MultipartiteState state = eval_state(state_text);
  const EntanglementReport r = analyze(state, opt);
  const json j = report_to_json(state_text, state, r);
  std::string payload;
  if (format == "csv") {
    std::ostringstream ss;
    ss << "key,value\n";
    for (const auto& [key, value] : j.items()) ss << key << "," << value.dump() << "\n";
    payload = ss.str();
  } else {
    payload = j.dump(2) + "\n";
  }
  emit(out_path, out, payload);
  return 0;
}

int cmd_verify(const std::string& cases_text, std::uint64_t seed, const GeomOptions& opt,
               const std::string& out_path, std::ostream& out) {
  const auto cases = parse_cases(cases_text);
  std::uint64_t rng = seed ? seed : 0x9E3779B97F4A7C15ULL;
  json table = json::array();
  int total = 0, agreed = 0;
  bool any_disagreement = false;
  for (const auto& c : cases) {
    const std::vector<int> dims(static_cast<size_t>(c.factors), c.local_dim);
    int case_agree = 0, case_warn = 0, bipartite_agree = 0;
    for (int i = 0; i < c.count; ++i) {
      const MultipartiteState state = haar_state(dims, rng);
      const EntanglementReport r = analyze(state, opt);  // throws on stable disagreement
      const bool ok = r.e_theorem == r.e_gram && r.e_gram == r.e_direct;
      if (!ok) any_disagreement = true;
      case_agree += ok ? 1 : 0;
      case_warn += r.rank_stable ? 0 : 1;
      if (r.e_bipartite && *r.e_bipartite == r.e_theorem) ++bipartite_agree;
    }
    json row;
    row["case"] = std::to_string(c.factors) + "x" + std::to_string(c.local_dim);
    row["samples"] = c.count;
    row["route_agreements"] = case_agree;
    row["rank_warnings"] = case_warn;
    if (c.factors == 2) row["bipartite_agreements"] = bipartite_agree;
    table.push_back(row);
    total += c.count;
    agreed += case_agree;
  }
  json j;
  j["seed"] = seed;
  j["cases"] = table;
  j["total_samples"] = total;
  j["total_agreements"] = agreed;
  emit(out_path, out, j.dump(2) + "\n");
  return any_disagreement ? 3 : 0;
}

int cmd_flow(const std::string& state_text, const std::string& ham_text, double eps, double duration,
             int steps, const GeomOptions& opt, const std::string& out_base, std::ostream& out) {
  if (steps < 1) throw std::invalid_argument("--n must be >= 1");
  if (duration <= 0) throw std::invalid_argument("--T must be positive");
  const MultipartiteState state = eval_state(state_text);
  const LocalHamiltonian h = parse_local_hamiltonian(ham_text, state.dims());
  const FlowPair pair = null_perturbed_flow(state, h, eps, duration, steps, opt);
  const std::string base = out_base.empty() ? "flow" : out_base;
  const std::string ref_path = base + ".ref.csv";
  const std::string pert_path = base + ".pert.csv";
  {
    std::ofstream f(ref_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + ref_path + "'");
    write_trajectory_csv(f, pair.reference);
  }
  {
    std::ofstream f(pert_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + pert_path + "'");
    write_trajectory_csv(f, pair.perturbed);
  }
  double max_drift = 0.0;
  for (size_t s = 0; s < pair.reference.spectra.size(); ++s)
    for (size_t k = 0; k < pair.reference.spectra[s].size(); ++k)
      for (size_t i = 0; i < pair.reference.spectra[s][k].size(); ++i)
        max_drift = std::max(max_drift, std::abs(pair.reference.spectra[s][k][i] -
                                                 pair.perturbed.spectra[s][k][i]));
  json j;
  j["reference_csv"] = ref_path;
  j["perturbed_csv"] = pert_path;
  j["max_spectra_drift"] = max_drift;
  j["final_fidelity"] = pair.perturbed.fidelity.back();
  j["max_null_dim"] = pair.null_dims.empty()
                          ? 0
                          : *std::max_element(pair.null_dims.begin(), pair.null_dims.end());
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_polytope(int factors, int local_dim, int samples, std::uint64_t seed, double group_tol,
                 const std::string& out_path, std::ostream& out) {
  const auto points = sample_polytope(factors, local_dim, samples, seed, group_tol);
  std::ostringstream ss;
  write_polytope_csv(ss, points);
  emit(out_path, out, ss.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symplectic entanglement indicator"};
  app.require_subcommand(1);

  GeomOptions opt;
  std::string state_text, ham_text, cases_text, out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  double eps = 0.0, duration = 10.0;
  int steps = 1000, factors = 3, local_dim = 2, samples = 100;

  auto add_tols = [&](CLI::App* cmd) {
    cmd->add_option("--rank-tol", opt.rank_rel, "relative rank threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--group-tol", opt.group_tol, "eigenvalue grouping tolerance")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* an = app.add_subcommand("analyze", "entanglement indicator of one state");
  an->add_option("--state", state_text, "state expression")->required();
  an->add_option("--out", out_path, "output file (default: stdout)");
  an->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_tols(an);

  CLI::App* ve = app.add_subcommand("verify", "route agreement on Haar-random samples");
  ve->add_option("--cases", cases_text, "comma list of LxD:count")->required();
  CLI::Option* ve_seed = ve->add_option("--seed", seed, "RNG seed");
  ve->add_option("--out", out_path, "output file (default: stdout)");
  add_tols(ve);

  CLI::App* fl = app.add_subcommand("flow", "reference vs null-perturbed trajectory");
  fl->add_option("--state", state_text, "state expression")->required();
  fl->add_option("--ham", ham_text, "local Hamiltonian (Pauli names or matrix literals)")
      ->required();
  fl->add_option("--eps", eps, "perturbation strength");
  fl->add_option("--T", duration, "total evolution time");
  fl->add_option("--n", steps, "number of steps");
  fl->add_option("--out", out_path, "CSV base path (writes <out>.ref.csv, <out>.pert.csv)");
  add_tols(fl);

  CLI::App* po = app.add_subcommand("polytope", "Kirwan polytope point cloud");
  po->add_option("--L", factors, "number of subsystems")->check(CLI::Range(2, 16));
  po->add_option("--d", local_dim, "local dimension")->check(CLI::Range(2, 64));
  po->add_option("--N", samples, "sample count")->check(CLI::PositiveNumber);
  CLI::Option* po_seed = po->add_option("--seed", seed, "RNG seed");
  po->add_option("--out", out_path, "output file (default: stdout)");
  po->add_option("--group-tol", opt.group_tol, "eigenvalue grouping tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) return cmd_analyze(state_text, opt, out_path, format, out);
    if (ve->parsed())
      return cmd_verify(cases_text, resolve_seed(seed, !ve_seed->empty()), opt, out_path, out);
    if (fl->parsed()) return cmd_flow(state_text, ham_text, eps, duration, steps, opt, out_path, out);
    if (po->parsed())
      return cmd_polytope(factors, local_dim, samples, resolve_seed(seed, !po_seed->empty()),
                          opt.group_tol, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace sympent
