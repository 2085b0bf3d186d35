#include "lagplace/orthoconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lagplace/error.hpp"

namespace lagplace {

SymmetricMatrixSpace::SymmetricMatrixSpace(std::vector<ComplexMatrix> basis)
    : basis_(std::move(basis)) {
  const auto d = static_cast<Eigen::Index>(basis_.size());
  if (d < 1) throw Error(ErrorKind::kDimension, "empty matrix space");
  ComplexMatrix stacked(d * d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const ComplexMatrix& l = basis_[i];
    if (l.rows() != d || l.cols() != d) {
      throw Error(ErrorKind::kDimension,
                  "a space of dimension delta needs delta x delta matrices");
    }
    if (asymmetry(l) > 1e-10 * std::max(1.0, max_abs(l))) {
      throw Error(ErrorKind::kSymmetry, "basis matrices must be symmetric");
    }
    stacked.col(i) = Eigen::Map<const ComplexVector>(l.data(), l.size());
  }
  if (numerical_rank(stacked, 1e-8) < d) {
    throw Error(ErrorKind::kRank, "basis matrices are linearly dependent");
  }
}

ComplexVector diag_projection(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kDimension, "diagonal projection of a non-square matrix");
  }
  return a.diagonal();
}

std::vector<std::vector<bool>> matrix_graph(const ComplexMatrix& l,
                                            double threshold) {
  if (l.rows() != l.cols()) throw Error(ErrorKind::kDimension, "graph of a non-square matrix");
  const auto d = l.rows();
  std::vector<std::vector<bool>> adj(d, std::vector<bool>(d, false));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i != j && (std::abs(l(i, j)) > threshold || std::abs(l(j, i)) > threshold)) {
        adj[i][j] = true;
      }
    }
  }
  return adj;
}

std::vector<std::vector<int>> graph_components(const ComplexMatrix& l,
                                               double threshold) {
  const auto adj = matrix_graph(l, threshold);
  const int d = static_cast<int>(adj.size());
  std::vector<int> label(d, -1);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < d; ++start) {
    if (label[start] >= 0) continue;
    std::vector<int> comp{start};
    label[start] = static_cast<int>(comps.size());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int v = 0; v < d; ++v) {
        if (adj[comp[head]][v] && label[v] < 0) {
          label[v] = label[start];
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

bool graph_connected(const ComplexMatrix& l, double threshold) {
  return graph_components(l, threshold).size() <= 1;
}

bool graph_connected(const ComplexMatrix& l) {
  return graph_connected(l, kGraphEdgeTolerance * max_abs(l));
}

ComplexMatrix theta_jacobian(const ComplexMatrix& l) {
  if (l.rows() != l.cols()) throw Error(ErrorKind::kDimension, "L must be square");
  if (asymmetry(l) > 1e-10 * std::max(1.0, max_abs(l))) {
    throw Error(ErrorKind::kSymmetry, "theta needs symmetric L");
  }
  const int d = static_cast<int>(l.rows());
  ComplexMatrix full = ComplexMatrix::Zero(d, d * (d - 1) / 2);
  int col = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j, ++col) {
      // diag(XL - LX) = 2 diag(XL) for skew X and symmetric L
      full(i, col) = 2.0 * l(j, i);
      full(j, col) = -2.0 * l(i, j);
    }
  }
  return full.topRows(std::max(d - 1, 0));
}

SurjectivityReport surjectivity_iff_connected_check(const ComplexMatrix& l) {
  SurjectivityReport report;
  report.connected = graph_connected(l);
  const ComplexMatrix jac = theta_jacobian(l);
  report.jacobian_rank = jac.size() == 0 ? 0 : numerical_rank(jac, 1e-8);
  report.consistent =
      report.connected == (report.jacobian_rank == static_cast<int>(l.rows()) - 1);
  return report;
}

ComplexMatrix givens_rotation(int size, int i, int j, Complex angle) {
  ComplexMatrix g = ComplexMatrix::Identity(size, size);
  g(i, i) = g(j, j) = std::cos(angle);
  g(i, j) = -std::sin(angle);
  g(j, i) = std::sin(angle);
  return g;
}

RepairResult connectivity_repair(const ComplexMatrix& l, double epsilon) {
  if (l.rows() != l.cols()) throw Error(ErrorKind::kDimension, "L must be square");
  const double scale = max_abs(l);
  if (scale == 0.0) {
    throw Error(ErrorKind::kDegenerateInput, "connectivity repair of the zero matrix");
  }
  if (l.diagonal().cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, scale)) {
    throw Error(ErrorKind::kPrecondition, "connectivity repair needs pi(L) = 0");
  }
  if (!(epsilon > 0.0 && epsilon < std::acos(-1.0) / 2)) {
    throw Error(ErrorKind::kPrecondition, "rotation angle must lie in (0, pi/2)");
  }
  const int d = static_cast<int>(l.rows());
  RepairResult result{ComplexMatrix::Identity(d, d), l, {}};
  for (;;) {
    const auto comps =
        graph_components(result.Lhat, kGraphEdgeTolerance * max_abs(result.Lhat));
    result.component_sizes.push_back(static_cast<int>(comps.front().size()));
    if (comps.size() == 1) break;
    // Rotate the last vertex of the largest component against the first
    // vertex of the next one; the rotated pair touches both components.
    const int u = comps[0].back();
    const int v = comps[1].front();
    const ComplexMatrix g = givens_rotation(d, u, v, epsilon);
    result.S = g * result.S;
    result.Lhat = g * result.Lhat * g.transpose();
    result.Lhat.diagonal().setZero();
    result.Lhat = (0.5 * (result.Lhat + result.Lhat.transpose())).eval();
  }
  return result;
}

namespace {

// Greedy pass: reorders `work` so that rows pi(work[0..k)) are independent
// and the remaining elements have pi = 0 (after subtracting combinations of
// the independent ones). Returns k.
int reduce_basis(std::vector<ComplexMatrix>& work, double tol) {
  const int d = static_cast<int>(work.size());
  std::vector<ComplexMatrix> indep;
  std::vector<ComplexMatrix> rest;
  ComplexMatrix rows(0, d);
  for (ComplexMatrix& m : work) {
    const ComplexVector p = m.diagonal();
    const double pnorm = p.norm();
    if (pnorm <= 1e-12 * std::max(max_abs(m), 1e-300)) {
      m.diagonal().setZero();
      rest.push_back(m);
      continue;
    }
    ComplexVector coeffs;
    double residual = pnorm;
    if (rows.rows() > 0) {
      const auto qr = rows.transpose().colPivHouseholderQr();
      coeffs = qr.solve(p);
      residual = (rows.transpose() * coeffs - p).norm();
    }
    if (residual > tol * pnorm) {
      indep.push_back(m);
      rows.conservativeResize(rows.rows() + 1, Eigen::NoChange);
      rows.row(rows.rows() - 1) = p.transpose();
      continue;
    }
    ComplexMatrix reduced = m;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) reduced -= coeffs(j) * indep[j];
    reduced.diagonal().setZero();
    rest.push_back(reduced);
  }
  const int k = static_cast<int>(indep.size());
  work = std::move(indep);
  work.insert(work.end(), rest.begin(), rest.end());
  return k;
}

// Smallest / largest singular value of the first k diagonal projections,
// each normalized to unit length.
double independence(const std::vector<ComplexMatrix>& mats, int k) {
  const int d = static_cast<int>(mats.front().rows());
  ComplexMatrix rows(k, d);
  for (int i = 0; i < k; ++i) {
    const ComplexVector p = mats[i].diagonal();
    const double n = p.norm();
    if (n == 0.0) return 0.0;
    rows.row(i) = p.transpose() / n;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(rows);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) / sv(0);
}

std::vector<ComplexMatrix> conjugate_all(const ComplexMatrix& s,
                                         const std::vector<ComplexMatrix>& mats) {
  std::vector<ComplexMatrix> out;
  out.reserve(mats.size());
  for (const ComplexMatrix& m : mats) {
    const ComplexMatrix c = s * m * s.transpose();
    out.push_back(0.5 * (c + c.transpose()));
  }
  return out;
}

}  // namespace

BijectionResult make_diag_projection_bijective(const SymmetricMatrixSpace& space,
                                               const BijectionOptions& options) {
  const auto& basis = space.basis();
  const int d = space.size();
  int pivot = 0;
  for (int i = 1; i < d; ++i) {
    if (std::abs(basis[i].trace()) > std::abs(basis[pivot].trace())) pivot = i;
  }
  const Complex pivot_trace = basis[pivot].trace();
  if (std::abs(pivot_trace) <= 1e-8) {
    throw Error(ErrorKind::kPrecondition,
                "every basis matrix is traceless; no orthogonal similarity helps");
  }
  std::vector<ComplexMatrix> work{basis[pivot]};
  for (int i = 0; i < d; ++i) {
    if (i != pivot) {
      work.push_back(basis[i] - (basis[i].trace() / pivot_trace) * basis[pivot]);
    }
  }

  BijectionResult result;
  result.S = ComplexMatrix::Identity(d, d);
  const double tol = options.independence_tolerance;
  for (;;) {
    const int k = reduce_basis(work, tol);
    if (k == d) break;
    ComplexMatrix m = work[k];

    if (!graph_connected(m)) {
      bool repaired = false;
      double angle = kDefaultRepairAngle;
      for (int h = 0; h <= options.max_halvings && !repaired; ++h, angle /= 2) {
        const RepairResult rep = connectivity_repair(m, angle);
        auto trial = conjugate_all(rep.S, work);
        if (independence(trial, k) > tol) {
          work = std::move(trial);
          result.S = rep.S * result.S;
          repaired = true;
        }
      }
      if (!repaired) {
        throw Error(ErrorKind::kConstructionFailed,
                    "connectivity repair destroyed independence at step " +
                        std::to_string(k));
      }
      ++result.repairs;
      m = work[k];
    }

    // Span of the current independent projections.
    ComplexMatrix span(d, k);
    for (int i = 0; i < k; ++i) span.col(i) = work[i].diagonal();
    const auto qr = span.householderQr();
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, k);
    double best = -1.0;
    int bi = 0;
    int bj = 1;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        ComplexVector v = ComplexVector::Zero(d);
        v(i) = 2.0 * m(j, i);
        v(j) = -2.0 * m(i, j);
        const double orth = (v - q * (q.adjoint() * v)).norm();
        if (orth > best) {
          best = orth;
          bi = i;
          bj = j;
        }
      }
    }
    if (best <= tol * std::max(1.0, max_abs(m))) {
      throw Error(ErrorKind::kConstructionFailed,
                  "no rotation direction leaves the span at step " + std::to_string(k));
    }

    bool extended = false;
    double eps = options.initial_epsilon;
    for (int h = 0; h <= options.max_halvings && !extended; ++h, eps /= 2) {
      // exp(eps (E_ij - E_ji))
      const ComplexMatrix g = givens_rotation(d, bi, bj, -eps);
      auto trial = conjugate_all(g, work);
      if (independence(trial, k + 1) > tol) {
        work = std::move(trial);
        result.S = g * result.S;
        extended = true;
      }
    }
    if (!extended) {
      throw Error(ErrorKind::kConstructionFailed,
                  "line search failed to extend the independent set at step " +
                      std::to_string(k) + " after " +
                      std::to_string(options.max_halvings) + " halvings");
    }
    ++result.extensions;
  }

  result.transformed_basis = conjugate_all(result.S, basis);
  result.diag_matrix.resize(d, d);
  for (int i = 0; i < d; ++i) {
    result.diag_matrix.row(i) = result.transformed_basis[i].diagonal().transpose();
  }
  result.condition = condition_number(result.diag_matrix);
  if (!std::isfinite(result.condition) || result.condition > 1e12) {
    throw Error(ErrorKind::kConstructionFailed,
                "diagonal projection matrix is numerically singular");
  }
  return result;
}

}  // namespace lagplace
