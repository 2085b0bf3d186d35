#pragma once

#include <vector>

#include "lagplace/types.hpp"

namespace lagplace {

/// A delta-dimensional space of complex symmetric delta x delta matrices.
class SymmetricMatrixSpace {
 public:
  /// Validates count, shapes, symmetry (1e-10) and linear independence
  /// (relative rank threshold 1e-8); throws kDimension, kSymmetry, kRank.
  explicit SymmetricMatrixSpace(std::vector<ComplexMatrix> basis);

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }

 private:
  std::vector<ComplexMatrix> basis_;
};

/// (a_11, ..., a_dd).
ComplexVector diag_projection(const ComplexMatrix& a);

/// Edge threshold relative to max |L|.
inline constexpr double kGraphEdgeTolerance = 1e-10;

/// Adjacency of the graph of L: edge (i, j), i != j, iff |L_ij| > threshold.
std::vector<std::vector<bool>> matrix_graph(const ComplexMatrix& l,
                                            double threshold);
/// Connected components, each sorted ascending; components ordered by size
/// descending, ties by smallest vertex.
std::vector<std::vector<int>> graph_components(const ComplexMatrix& l,
                                               double threshold);
bool graph_connected(const ComplexMatrix& l, double threshold);
/// graph_connected with the default threshold 1e-10 * max|L|.
bool graph_connected(const ComplexMatrix& l);

/// Matrix of X -> pi(XL - LX) from the skew basis E_ij - E_ji (i < j,
/// lexicographic) into the zero-sum hyperplane, in the coordinates given by
/// its first delta-1 entries. Throws kSymmetry for asymmetric L.
ComplexMatrix theta_jacobian(const ComplexMatrix& l);

struct SurjectivityReport {
  bool connected = false;
  int jacobian_rank = 0;
  bool consistent = false;
};

SurjectivityReport surjectivity_iff_connected_check(const ComplexMatrix& l);

struct RepairResult {
  ComplexMatrix S;     // complex orthogonal
  ComplexMatrix Lhat;  // S L S^t
  /// Largest component size before the first and after every rotation.
  std::vector<int> component_sizes;
};

inline constexpr double kDefaultRepairAngle = 0.78539816339744830962;  // pi/4

/// Givens-rotation repair of a disconnected zero-diagonal symmetric matrix:
/// each rotation joins the vertex after the largest component to it, so the
/// largest component grows every iteration until the graph is connected.
RepairResult connectivity_repair(const ComplexMatrix& l,
                                 double epsilon = kDefaultRepairAngle);

struct BijectionResult {
  ComplexMatrix S;                              // complex orthogonal
  std::vector<ComplexMatrix> transformed_basis; // S L_i S^t, input order
  ComplexMatrix diag_matrix;                    // row i = pi(S L_i S^t)
  double condition = 0.0;
  int repairs = 0;      // connectivity repairs applied
  int extensions = 0;   // rotation line searches performed
};

struct BijectionOptions {
  double initial_epsilon = 0.1;
  int max_halvings = 60;
  double independence_tolerance = 1e-8;
};

/// Orthogonal S making pi restricted to S L S^t one-to-one and onto.
/// Throws kPrecondition if every basis element is traceless,
/// kConstructionFailed if a line search cannot restore independence.
BijectionResult make_diag_projection_bijective(
    const SymmetricMatrixSpace& space, const BijectionOptions& options = {});

/// Complex Givens rotation in plane (i, j): cos on the diagonal,
/// -sin at (i, j), sin at (j, i). Equals exp(angle (E_ji - E_ij)).
ComplexMatrix givens_rotation(int size, int i, int j, Complex angle);

}  // namespace lagplace
