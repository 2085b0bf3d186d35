#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "lagplace/degree.hpp"
#include "lagplace/error.hpp"
#include "lagplace/random.hpp"

#ifndef LAGPLACE_VERSION
#define LAGPLACE_VERSION "unknown"
#endif

namespace lagplace::cli {
namespace {

struct Settings {
  SolverConfig solver;
  BaseLocusSearchOptions base_locus;
  BijectionOptions bijection;
};

BijectionOptions bijection_options_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("bijection config must be a JSON object");
  BijectionOptions o;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const Json& v = item.value();
    if (key == "initial_epsilon" && v.is_number()) {
      o.initial_epsilon = v.get<double>();
    } else if (key == "max_halvings" && v.is_number_integer()) {
      o.max_halvings = v.get<int>();
    } else if (key == "independence_tolerance" && v.is_number()) {
      o.independence_tolerance = v.get<double>();
    } else {
      throw InputError("invalid field \"" + key + "\" in bijection config");
    }
  }
  if (!(o.initial_epsilon > 0.0) || o.max_halvings < 1 || !(o.independence_tolerance > 0.0)) {
    throw InputError("bijection options must be positive");
  }
  return o;
}

Json bijection_options_to_json(const BijectionOptions& o) {
  return Json{{"initial_epsilon", o.initial_epsilon},
              {"max_halvings", o.max_halvings},
              {"independence_tolerance", o.independence_tolerance}};
}

Json base_locus_options_to_json(const BaseLocusSearchOptions& o) {
  return Json{{"starts", o.starts},
              {"max_iterations", o.max_iterations},
              {"residual_tolerance", o.residual_tolerance}};
}

Settings load_settings(const std::string& path) {
  Settings s;
  if (path.empty()) return s;
  const Json j = read_json_file(path);
  if (!j.is_object()) throw InputError(path + ": config must be a JSON object");
  for (const auto& item : j.items()) {
    if (item.key() == "solver") {
      s.solver = solver_config_from_json(item.value());
    } else if (item.key() == "base_locus") {
      s.base_locus = base_locus_options_from_json(item.value());
    } else if (item.key() == "bijection") {
      s.bijection = bijection_options_from_json(item.value());
    } else {
      throw InputError(path + ": unknown config section \"" + item.key() + "\"");
    }
  }
  return s;
}

Json settings_to_json(const Settings& s) {
  return Json{{"solver", to_json(s.solver)},
              {"base_locus", base_locus_options_to_json(s.base_locus)},
              {"bijection", bijection_options_to_json(s.bijection)}};
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
  Json result;
  int exit_code = kExitSuccess;
};

std::string decimal(const BigInt& v) { return v.str(); }

Outcome cmd_degree(int n, RunManifest& manifest) {
  if (n < 1 || n > kMaxDegreeArgument) {
    throw InputError("degree needs 1 <= n <= " + std::to_string(kMaxDegreeArgument));
  }
  Stopwatch clock;
  Json result{{"n", n},
              {"d", decimal(degree_lagrangian(n))},
              {"d_tilde", decimal(degree_spinor(n))}};
  manifest.timings_ms["degree"] = clock.lap_ms();
  return {std::move(result)};
}

Outcome cmd_place(const std::string& system_path, const std::string& target_path,
                  const Settings& settings, std::uint64_t seed, RunManifest& manifest) {
  Stopwatch clock;
  PlacementProblem prob(system_from_json(read_json_file(system_path)),
                        target_from_json(read_json_file(target_path)));
  manifest.timings_ms["load"] = clock.lap_ms();
  const SolutionSet set = track_all_paths(prob, seed, settings.solver);
  manifest.timings_ms["solve"] = clock.lap_ms();
  Outcome o;
  o.result = Json{{"problem", to_json(prob)}, {"solutions", to_json(set)}};
  o.exit_code = set.finite_count() > 0 ? kExitSuccess : kExitNoSolution;
  return o;
}

// Transfer function diag(1/s, ..., 1/s^n), compared through Markov
// parameters up to twice the McMillan degree.
bool is_canonical_diagonal(const StateSpace& sys) {
  const int n = sys.inputs();
  if (sys.delta() != symmetric_dimension(n) || sys.C.rows() != n) return false;
  const StateSpace canonical = diagonal_companion_realization(n);
  const int count = 2 * sys.delta();
  const auto mine = markov_parameters(sys, count);
  const auto theirs = markov_parameters(canonical, count);
  for (int k = 0; k < count; ++k) {
    const double scale = std::max(1.0, max_abs(theirs[k]));
    if (max_abs(mine[k] - theirs[k]) > 1e-10 * scale) return false;
  }
  return true;
}

Outcome cmd_check(const std::string& system_path, RunManifest& manifest) {
  Stopwatch clock;
  const Json input = read_json_file(system_path);
  if (!input.is_object() || !input.contains("type") || !input["type"].is_string()) {
    throw InputError("system documents need a string \"type\" field");
  }
  const std::string type = input["type"].get<std::string>();
  Json result{{"type", type}};
  StateSpace raw;
  if (type == "symmetric") {
    const ComplexMatrix b = matrix_from_json(input.at("B"));
    raw = {matrix_from_json(input.at("A")), b, b.transpose()};
  } else {
    raw = state_space_from_json(input);
  }
  raw.check_dimensions();
  result["delta"] = raw.delta();
  result["inputs"] = raw.inputs();
  result["minimality"] = to_json(is_minimal(raw));

  std::optional<AnySystem> system;
  if (type == "symmetric") {
    result["structure"] = Json{{"a_asymmetry", asymmetry(raw.A)}};
    system = SymmetricSystem(raw.A, raw.B);
  } else if (type == "hamiltonian") {
    HamiltonianSystem h(raw.A, raw.B, raw.C);
    result["structure"] = to_json(validate_hamiltonian(h));
    system = h;
  } else if (type == "state_space") {
    try {
      system = symmetrize_realization(raw);
      result["structure"] = Json{{"symmetrizable", true}};
    } catch (const Error& e) {
      result["structure"] = Json{{"symmetrizable", false}, {"reason", e.what()}};
    }
  } else {
    throw InputError("system type must be symmetric, hamiltonian or state_space");
  }

  if (system) {
    const bool hamiltonian = is_hamiltonian(*system);
    const int n = system_inputs(*system);
    const int delta = system_delta(*system);
    const ComplexMatrix jac =
        hamiltonian ? jacobian_psi_at_zero(std::get<HamiltonianSystem>(*system))
                    : jacobian_phi_at_zero(std::get<SymmetricSystem>(*system));
    const int rank = numerical_rank(jac);
    const int full = static_cast<int>(std::min(jac.rows(), jac.cols()));
    result["jacobian_at_zero"] = Json{{"rows", jac.rows()},
                                      {"cols", jac.cols()},
                                      {"rank", rank},
                                      {"full_rank", rank == full}};
    const auto verdict = degeneracy_dimension_check(n, delta, hamiltonian);
    result["degeneracy"] =
        verdict == DegeneracyVerdict::kDegenerate ? "degenerate" : "possible";
    if (!hamiltonian && is_canonical_diagonal(raw)) {
      result["nondegeneracy_certificate"] = to_json(nondegeneracy_certificate_diagonal(n));
    }
  }
  manifest.timings_ms["check"] = clock.lap_ms();
  return {std::move(result)};
}

Outcome cmd_census(int n, int trials, bool hamiltonian, const Settings& settings,
                   std::uint64_t seed, RunManifest& manifest) {
  if (n < 1 || n > (hamiltonian ? 2 : 3)) {
    throw InputError(hamiltonian ? "census supports 1 <= n <= 2 for Hamiltonian systems"
                                 : "census supports 1 <= n <= 3");
  }
  if (trials < 1) throw InputError("census needs at least one trial");
  Stopwatch clock;
  const int delta = hamiltonian ? n * (n + 1) : symmetric_dimension(n);
  const BigInt expected = degree_lagrangian(n);
  Json table = Json::array();
  int hits = 0;
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t trial_seed =
        Rng::derive(seed, "census", static_cast<std::uint64_t>(k)).next_u64();
    Json row{{"trial", k}, {"seed", trial_seed}};
    try {
      PlacementProblem prob(random_generic_system(n, delta, hamiltonian, trial_seed),
                            random_target(delta, hamiltonian, trial_seed));
      const SolutionSet set = track_all_paths(prob, trial_seed, settings.solver);
      double max_residual = 0.0;
      for (double r : set.residuals) max_residual = std::max(max_residual, r);
      row["finite_count"] = set.finite_count();
      row["diverged"] = set.paths_diverged;
      row["failed"] = set.paths_failed;
      row["max_residual"] = max_residual;
      if (BigInt(set.finite_count()) == expected) ++hits;
    } catch (const Error& e) {
      row["finite_count"] = 0;
      row["error"] = e.what();
    }
    table.push_back(std::move(row));
  }
  manifest.timings_ms["census"] = clock.lap_ms();
  Json summary{{"n", n},
               {"hamiltonian", hamiltonian},
               {"delta", delta},
               {"expected", decimal(expected)},
               {"trials", trials},
               {"hits", hits},
               {"pass", hits == trials}};
  return {Json{{"summary", std::move(summary)}, {"table", std::move(table)}}};
}

Outcome cmd_lemma3(const std::string& basis_path, const Settings& settings,
                   RunManifest& manifest) {
  Stopwatch clock;
  const SymmetricMatrixSpace space = space_from_json(read_json_file(basis_path));
  const BijectionResult r = make_diag_projection_bijective(space, settings.bijection);
  const auto size = r.S.rows();
  const double orthogonality =
      max_abs(r.S * r.S.transpose() - ComplexMatrix::Identity(size, size));
  manifest.timings_ms["lemma3"] = clock.lap_ms();
  Json result = to_json(r);
  result["orthogonality_error"] = orthogonality;
  return {std::move(result)};
}

Outcome cmd_certify(int n, bool search, const Settings& settings, std::uint64_t seed,
                    RunManifest& manifest) {
  if (n < 1 || n > kMaxCofactorSize) {
    throw InputError("certify needs 1 <= n <= " + std::to_string(kMaxCofactorSize));
  }
  Stopwatch clock;
  Json result{{"certificate", to_json(nondegeneracy_certificate_diagonal(n))}};
  manifest.timings_ms["certificate"] = clock.lap_ms();
  if (search) {
    const PolyMatrix dn = canonical_denominator(n);
    std::vector<int> left(n), right(n);
    for (int i = 0; i < n; ++i) {
      left[i] = i;
      right[i] = n + i;
    }
    BaseLocusSearchOptions options = settings.base_locus;
    options.seed = seed;
    const auto chi_fn =
        characteristic_function(dn.select_columns(left), dn.select_columns(right));
    result["base_locus_search"] = to_json(base_locus_search(n, chi_fn, options));
    manifest.timings_ms["base_locus_search"] = clock.lap_ms();
  }
  return {std::move(result)};
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::kUnreliableRun ? kExitUnreliable : kExitInput;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pole placement by symmetric output feedback", "lagplace"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "Root seed of every randomized phase");
  app.add_option("--config", config_path, "JSON file with solver, base_locus and bijection sections");
  app.add_option("--out", out_path, "Write the JSON document here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

  int degree_n = 0;
  auto* degree = app.add_subcommand("degree", "Degree d(n) of the Lagrangian Grassmannian");
  degree->add_option("n", degree_n)->required();

  std::string system_path;
  std::string target_path;
  auto* place = app.add_subcommand("place", "All symmetric gains placing the target poles");
  place->add_option("system", system_path)->required()->check(CLI::ExistingFile);
  place->add_option("target", target_path)->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Structure, minimality and rank report");
  check->add_option("system", system_path)->required()->check(CLI::ExistingFile);

  int census_n = 0;
  int trials = 5;
  bool hamiltonian = false;
  auto* census = app.add_subcommand("census", "Solution counts over random generic instances");
  census->add_option("n", census_n)->required();
  census->add_option("--trials", trials, "Number of random instances");
  census->add_flag("--hamiltonian", hamiltonian, "Use Hamiltonian systems");

  std::string basis_path;
  auto* lemma3 = app.add_subcommand("lemma3", "Orthogonal change making the diagonal projection bijective");
  lemma3->add_option("basis", basis_path)->required()->check(CLI::ExistingFile);

  int certify_n = 0;
  bool search = false;
  auto* certify = app.add_subcommand("certify", "Nondegeneracy certificate of diag(1/s, ..., 1/s^n)");
  certify->add_option("n", certify_n)->required();
  certify->add_flag("--search", search, "Also run the randomized base-locus search");

  for (auto* sub : {degree, place, check, census, lemma3, certify}) sub->fallthrough();

  std::vector<const char*> argv{"lagplace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInput;
  }

  try {
    const Settings settings = load_settings(config_path);
    RunManifest manifest;
    manifest.version = LAGPLACE_VERSION;
    manifest.seed = seed;
    manifest.config = settings_to_json(settings);
    Outcome outcome;
    if (degree->parsed()) {
      manifest.command = "degree";
      outcome = cmd_degree(degree_n, manifest);
    } else if (place->parsed()) {
      manifest.command = "place";
      outcome = cmd_place(system_path, target_path, settings, seed, manifest);
    } else if (check->parsed()) {
      manifest.command = "check";
      outcome = cmd_check(system_path, manifest);
    } else if (census->parsed()) {
      manifest.command = "census";
      outcome = cmd_census(census_n, trials, hamiltonian, settings, seed, manifest);
    } else if (lemma3->parsed()) {
      manifest.command = "lemma3";
      outcome = cmd_lemma3(basis_path, settings, manifest);
    } else {
      manifest.command = "certify";
      outcome = cmd_certify(certify_n, search, settings, seed, manifest);
    }
    const std::string text =
        dump(Json{{"manifest", to_json(manifest)}, {"result", std::move(outcome.result)}});
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << text)) throw InputError("cannot write " + out_path);
    }
    if (outcome.exit_code == kExitNoSolution) err << "no finite solution found\n";
    return outcome.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lagplace::cli
