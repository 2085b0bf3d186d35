#include "json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lagplace::cli {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a JSON array");
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

template <typename T>
T integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (!j.is_number_unsigned()) {
      throw InputError(std::string(what) + " must be non-negative");
    }
  }
  return j.get<T>();
}

// Rejects keys outside `allowed` so that misspelled options do not pass
// silently.
void only_keys(const Json& j, std::initializer_list<const char*> allowed,
               const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : j.items()) {
    if (!keys.count(item.key())) {
      throw InputError(std::string("unknown field \"") + item.key() + "\" in " + what);
    }
  }
}

Json matrix_list(const std::vector<ComplexMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<ComplexMatrix> matrix_list_from_json(const Json& j) {
  expect_array(j, "matrix list");
  std::vector<ComplexMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const SymmetricGain& f) {
  return Json{{"n", f.size()},
              {"parameters", to_json(f.parameters())},
              {"matrix", to_json(f.matrix())}};
}

Json to_json(const StateSpace& sys) {
  return Json{{"type", "state_space"},
              {"A", to_json(sys.A)},
              {"B", to_json(sys.B)},
              {"C", to_json(sys.C)}};
}

Json to_json(const SymmetricSystem& sys) {
  return Json{{"type", "symmetric"}, {"A", to_json(sys.A())}, {"B", to_json(sys.B())}};
}

Json to_json(const HamiltonianSystem& sys) {
  return Json{{"type", "hamiltonian"},
              {"A", to_json(sys.A())},
              {"B", to_json(sys.B())},
              {"C", to_json(sys.C())}};
}

Json to_json(const AnySystem& sys) {
  return std::visit([](const auto& s) { return to_json(s); }, sys);
}

Json to_json(const PlacementProblem& prob) {
  return Json{{"system", to_json(prob.system())}, {"target", to_json(prob.target())}};
}

Json to_json(const SymmetricMatrixSpace& space) {
  return Json{{"basis", matrix_list(space.basis())}};
}

Json graph_to_json(const std::vector<std::vector<bool>>& adjacency) {
  Json edges = Json::array();
  const int size = static_cast<int>(adjacency.size());
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (adjacency[i][j]) edges.push_back(Json::array({i, j}));
    }
  }
  return Json{{"vertices", size}, {"edges", std::move(edges)}};
}

Json to_json(const CharacteristicData& cd) {
  Json cofactors = Json::array();
  for (const Poly& p : cd.cofactors) cofactors.push_back(to_json(p));
  return Json{{"n", cd.n},
              {"delta", cd.delta},
              {"column_sets", cd.column_sets},
              {"cofactors", std::move(cofactors)}};
}

Json to_json(const SolverConfig& c) {
  return Json{{"initial_step", c.initial_step},
              {"min_step", c.min_step},
              {"max_step", c.max_step},
              {"max_corrector_iterations", c.max_corrector_iterations},
              {"corrector_trust", c.corrector_trust},
              {"successes_before_expand", c.successes_before_expand},
              {"corrector_tolerance", c.corrector_tolerance},
              {"corrector_noise_floor", c.corrector_noise_floor},
              {"divergence_norm", c.divergence_norm},
              {"cluster_radius", c.cluster_radius},
              {"polish_tolerance", c.polish_tolerance},
              {"polish_iterations", c.polish_iterations},
              {"accept_residual", c.accept_residual},
              {"max_paths", c.max_paths},
              {"max_steps_per_path", c.max_steps_per_path},
              {"failure_rate_limit", c.failure_rate_limit},
              {"retrack_rounds", c.retrack_rounds},
              {"threads", c.threads}};
}

Json to_json(const SolutionSet& set) {
  Json solutions = Json::array();
  for (std::size_t i = 0; i < set.gains.size(); ++i) {
    Json s{{"gain", to_json(set.gains[i])},
           {"residual", set.residuals[i]},
           {"multiplicity", set.cluster_multiplicities[i]}};
    if (i < set.pre_symmetrization_asymmetry.size()) {
      s["pre_symmetrization_asymmetry"] = set.pre_symmetrization_asymmetry[i];
    }
    solutions.push_back(std::move(s));
  }
  return Json{{"seed", set.seed},
              {"finite_count", set.finite_count()},
              {"total_multiplicity", set.total_multiplicity()},
              {"paths_tracked", set.paths_tracked},
              {"paths_diverged", set.paths_diverged},
              {"paths_to_base_locus", set.paths_to_base_locus},
              {"paths_failed", set.paths_failed},
              {"retracked", set.retracked},
              {"solutions", std::move(solutions)}};
}

Json to_json(const RunManifest& m) {
  Json timings = Json::object();
  for (const auto& [phase, ms] : m.timings_ms) timings[phase] = ms;
  return Json{{"command", m.command},
              {"version", m.version},
              {"seed", m.seed},
              {"config", m.config},
              {"timings_ms", std::move(timings)}};
}

Json to_json(const LagrangianPoint& p) {
  return Json{{"F1", to_json(p.F1())}, {"F2", to_json(p.F2())}, {"plucker", to_json(p.plucker())}};
}

Json to_json(const MinimalityReport& r) {
  return Json{{"minimal", r.minimal},
              {"delta", r.delta},
              {"controllability_rank", r.controllability_rank},
              {"observability_rank", r.observability_rank},
              {"controllability_ratio", r.controllability_ratio},
              {"observability_ratio", r.observability_ratio}};
}

Json to_json(const HamiltonianReport& r) {
  return Json{{"pass", r.pass},
              {"even_order", r.even_order},
              {"aj_asymmetry", r.aj_asymmetry},
              {"output_mismatch", r.output_mismatch}};
}

Json to_json(const BijectionResult& r) {
  return Json{{"S", to_json(r.S)},
              {"transformed_basis", matrix_list(r.transformed_basis)},
              {"diag_matrix", to_json(r.diag_matrix)},
              {"condition", r.condition},
              {"repairs", r.repairs},
              {"extensions", r.extensions}};
}

Json to_json(const NondegeneracyCertificate& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells) {
    cells.push_back(Json{{"pivots", cell.pivots},
                         {"isotropic_pivot", cell.isotropic_pivot},
                         {"complementarity", cell.complementarity},
                         {"lagrangian_cell", cell.lagrangian_cell},
                         {"monomial_cofactor", cell.monomial_cofactor},
                         {"alpha", cell.alpha},
                         {"same_monomial_count", cell.same_monomial_count},
                         {"bruhat_isolated", cell.bruhat_isolated},
                         {"pass", cell.pass}});
  }
  return Json{{"n", c.n},
              {"delta", c.delta},
              {"pass", c.pass},
              {"lagrangian_cells", c.lagrangian_cells},
              {"cells", std::move(cells)}};
}

Json to_json(const BaseLocusSearchResult& r) {
  return Json{{"starts", r.starts},
              {"hits", r.hits},
              {"best_residual", r.best_residual},
              {"witnesses", matrix_list(r.witnesses)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw InputError("complex numbers are [re, im] pairs");
  }
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

ComplexMatrix matrix_from_json(const Json& j) {
  expect_array(j, "matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    expect_array(row, "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError("matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

std::vector<Complex> complex_list_from_json(const Json& j) {
  expect_array(j, "complex list");
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

Poly poly_from_json(const Json& j) { return Poly(complex_list_from_json(j)); }

PolyMatrix poly_matrix_from_json(const Json& j) {
  const int rows = integer<int>(field(j, "rows"), "rows");
  const int cols = integer<int>(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  expect_array(entries, "entries");
  if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows) {
    throw InputError("polynomial matrix shape does not match its entries");
  }
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    expect_array(entries[r], "entries row");
    if (static_cast<int>(entries[r].size()) != cols) {
      throw InputError("polynomial matrix shape does not match its entries");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = poly_from_json(entries[r][c]);
  }
  return m;
}

SymmetricGain gain_from_json(const Json& j) {
  if (j.is_object() && j.contains("parameters")) {
    const int n = integer<int>(field(j, "n"), "n");
    const auto params = complex_list_from_json(j["parameters"]);
    if (n < 1 || static_cast<int>(params.size()) != symmetric_dimension(n)) {
      throw InputError("gain needs n(n+1)/2 parameters");
    }
    ComplexVector v(static_cast<Eigen::Index>(params.size()));
    for (std::size_t i = 0; i < params.size(); ++i) v(static_cast<Eigen::Index>(i)) = params[i];
    return SymmetricGain::from_parameters(n, v);
  }
  return SymmetricGain::from_matrix(matrix_from_json(field(j, "matrix")));
}

StateSpace state_space_from_json(const Json& j) {
  StateSpace sys{matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")),
                 matrix_from_json(field(j, "C"))};
  sys.check_dimensions();
  return sys;
}

AnySystem system_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw InputError("system type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "symmetric") {
    return SymmetricSystem(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")));
  }
  if (t == "hamiltonian") {
    return HamiltonianSystem(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")),
                             matrix_from_json(field(j, "C")));
  }
  if (t == "state_space") return symmetrize_realization(state_space_from_json(j));
  throw InputError("system type must be symmetric, hamiltonian or state_space");
}

Poly target_from_json(const Json& j) {
  if (j.is_array()) return poly_from_json(j);
  if (j.is_object() && j.contains("roots")) {
    return Poly::from_roots(complex_list_from_json(j["roots"]));
  }
  return poly_from_json(field(j, "coefficients"));
}

SolverConfig solver_config_from_json(const Json& j) {
  only_keys(j,
            {"initial_step", "min_step", "max_step", "max_corrector_iterations",
             "corrector_trust", "successes_before_expand", "corrector_tolerance",
             "corrector_noise_floor", "divergence_norm", "cluster_radius",
             "polish_tolerance", "polish_iterations", "accept_residual", "max_paths",
             "max_steps_per_path", "failure_rate_limit", "retrack_rounds", "threads"},
            "solver config");
  SolverConfig c;
  auto real = [&](const char* key, double& out) {
    if (j.contains(key)) out = number(j[key], key);
  };
  auto whole = [&](const char* key, auto& out) {
    if (j.contains(key)) out = integer<std::decay_t<decltype(out)>>(j[key], key);
  };
  real("initial_step", c.initial_step);
  real("min_step", c.min_step);
  real("max_step", c.max_step);
  whole("max_corrector_iterations", c.max_corrector_iterations);
  real("corrector_trust", c.corrector_trust);
  whole("successes_before_expand", c.successes_before_expand);
  real("corrector_tolerance", c.corrector_tolerance);
  real("corrector_noise_floor", c.corrector_noise_floor);
  real("divergence_norm", c.divergence_norm);
  real("cluster_radius", c.cluster_radius);
  real("polish_tolerance", c.polish_tolerance);
  whole("polish_iterations", c.polish_iterations);
  real("accept_residual", c.accept_residual);
  whole("max_paths", c.max_paths);
  whole("max_steps_per_path", c.max_steps_per_path);
  real("failure_rate_limit", c.failure_rate_limit);
  whole("retrack_rounds", c.retrack_rounds);
  whole("threads", c.threads);
  if (!(c.min_step > 0.0 && c.initial_step >= c.min_step && c.max_step >= c.initial_step)) {
    throw InputError("step sizes must satisfy 0 < min_step <= initial_step <= max_step");
  }
  if (c.max_corrector_iterations < 1 || c.polish_iterations < 1 ||
      c.successes_before_expand < 1 || c.max_steps_per_path < 1 || c.retrack_rounds < 0 ||
      c.threads < 0) {
    throw InputError("iteration counts must be positive");
  }
  return c;
}

PlacementProblem problem_from_json(const Json& j) {
  return PlacementProblem(system_from_json(field(j, "system")),
                          target_from_json(field(j, "target")));
}

SymmetricMatrixSpace space_from_json(const Json& j) {
  return SymmetricMatrixSpace(matrix_list_from_json(field(j, "basis")));
}

std::vector<std::vector<bool>> graph_from_json(const Json& j) {
  const int size = integer<int>(field(j, "vertices"), "vertices");
  std::vector<std::vector<bool>> adjacency(size, std::vector<bool>(size, false));
  const Json& edges = field(j, "edges");
  expect_array(edges, "edges");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges are [i, j] pairs");
    const int a = integer<int>(e[0], "edge vertex");
    const int b = integer<int>(e[1], "edge vertex");
    if (a < 0 || b < 0 || a >= size || b >= size || a == b) {
      throw InputError("edge vertex out of range");
    }
    adjacency[a][b] = adjacency[b][a] = true;
  }
  return adjacency;
}

CharacteristicData characteristic_data_from_json(const Json& j) {
  CharacteristicData cd;
  cd.n = integer<int>(field(j, "n"), "n");
  cd.delta = integer<int>(field(j, "delta"), "delta");
  cd.column_sets = field(j, "column_sets").get<std::vector<std::vector<int>>>();
  const Json& cofactors = field(j, "cofactors");
  expect_array(cofactors, "cofactors");
  for (const auto& p : cofactors) cd.cofactors.push_back(poly_from_json(p));
  if (cd.cofactors.size() != cd.column_sets.size()) {
    throw InputError("one cofactor per column set is required");
  }
  return cd;
}

SolutionSet solution_set_from_json(const Json& j) {
  SolutionSet set;
  set.seed = integer<std::uint64_t>(field(j, "seed"), "seed");
  set.paths_tracked = integer<std::uint64_t>(field(j, "paths_tracked"), "paths_tracked");
  set.paths_diverged = integer<std::uint64_t>(field(j, "paths_diverged"), "paths_diverged");
  set.paths_to_base_locus =
      integer<std::uint64_t>(field(j, "paths_to_base_locus"), "paths_to_base_locus");
  set.paths_failed = integer<std::uint64_t>(field(j, "paths_failed"), "paths_failed");
  set.retracked = integer<std::uint64_t>(field(j, "retracked"), "retracked");
  const Json& solutions = field(j, "solutions");
  expect_array(solutions, "solutions");
  for (const auto& s : solutions) {
    set.gains.push_back(gain_from_json(field(s, "gain")));
    set.residuals.push_back(number(field(s, "residual"), "residual"));
    set.cluster_multiplicities.push_back(integer<int>(field(s, "multiplicity"), "multiplicity"));
    if (s.contains("pre_symmetrization_asymmetry")) {
      set.pre_symmetrization_asymmetry.push_back(
          number(s["pre_symmetrization_asymmetry"], "pre_symmetrization_asymmetry"));
    }
  }
  return set;
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  m.command = field(j, "command").get<std::string>();
  m.version = field(j, "version").get<std::string>();
  m.seed = integer<std::uint64_t>(field(j, "seed"), "seed");
  m.config = field(j, "config");
  for (const auto& item : field(j, "timings_ms").items()) {
    m.timings_ms[item.key()] = number(item.value(), "timing");
  }
  return m;
}

LagrangianPoint lagrangian_point_from_json(const Json& j) {
  return LagrangianPoint(matrix_from_json(field(j, "F1")), matrix_from_json(field(j, "F2")));
}

BaseLocusSearchOptions base_locus_options_from_json(const Json& j) {
  only_keys(j, {"starts", "max_iterations", "residual_tolerance"}, "base_locus config");
  BaseLocusSearchOptions o;
  if (j.contains("starts")) o.starts = integer<int>(j["starts"], "starts");
  if (j.contains("max_iterations")) {
    o.max_iterations = integer<int>(j["max_iterations"], "max_iterations");
  }
  if (j.contains("residual_tolerance")) {
    o.residual_tolerance = number(j["residual_tolerance"], "residual_tolerance");
  }
  if (o.starts < 1 || o.max_iterations < 1) {
    throw InputError("base_locus starts and max_iterations must be positive");
  }
  return o;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lagplace::cli
