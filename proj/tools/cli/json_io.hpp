#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagplace/lagrangian.hpp"
#include "lagplace/orthoconstruct.hpp"
#include "lagplace/polymat.hpp"
#include "lagplace/realization.hpp"
#include "lagplace/solver.hpp"
#include "lagplace/spectral.hpp"

namespace lagplace::cli {

using Json = nlohmann::ordered_json;

/// Thrown for malformed or inconsistent input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::string version;
  std::map<std::string, double> timings_ms;
};

// Complex numbers are [re, im]; matrices are arrays of rows; polynomials
// are ascending coefficient lists.
Json to_json(Complex c);
Json to_json(const ComplexMatrix& m);
Json to_json(const ComplexVector& v);
Json to_json(const std::vector<Complex>& v);
Json to_json(const Poly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const SymmetricGain& f);
Json to_json(const StateSpace& sys);
Json to_json(const SymmetricSystem& sys);
Json to_json(const HamiltonianSystem& sys);
Json to_json(const AnySystem& sys);
Json to_json(const PlacementProblem& prob);
Json to_json(const SymmetricMatrixSpace& space);
/// Edge list of an adjacency matrix from matrix_graph.
Json graph_to_json(const std::vector<std::vector<bool>>& adjacency);
Json to_json(const CharacteristicData& cd);
Json to_json(const SolverConfig& config);
Json to_json(const SolutionSet& set);
Json to_json(const RunManifest& manifest);
Json to_json(const LagrangianPoint& p);
Json to_json(const MinimalityReport& r);
Json to_json(const HamiltonianReport& r);
Json to_json(const BijectionResult& r);
Json to_json(const NondegeneracyCertificate& c);
Json to_json(const BaseLocusSearchResult& r);

Complex complex_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
std::vector<Complex> complex_list_from_json(const Json& j);
Poly poly_from_json(const Json& j);
PolyMatrix poly_matrix_from_json(const Json& j);
SymmetricGain gain_from_json(const Json& j);
StateSpace state_space_from_json(const Json& j);
/// {"type": "symmetric" | "hamiltonian" | "state_space", ...}; a general
/// state space is converted with symmetrize_realization.
AnySystem system_from_json(const Json& j);
/// {"coefficients": [...]} (ascending) or {"roots": [...]}.
Poly target_from_json(const Json& j);
/// Missing fields keep their defaults; unknown fields are input errors.
SolverConfig solver_config_from_json(const Json& j);
PlacementProblem problem_from_json(const Json& j);
SymmetricMatrixSpace space_from_json(const Json& j);
std::vector<std::vector<bool>> graph_from_json(const Json& j);
CharacteristicData characteristic_data_from_json(const Json& j);
SolutionSet solution_set_from_json(const Json& j);
RunManifest manifest_from_json(const Json& j);
LagrangianPoint lagrangian_point_from_json(const Json& j);
/// The search seed is not part of the document; it comes from --seed.
BaseLocusSearchOptions base_locus_options_from_json(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indented rendering with a trailing newline.
std::string dump(const Json& j);

}  // namespace lagplace::cli
