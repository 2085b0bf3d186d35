#include "lagplace/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <thread>

#include "homotopy.hpp"
#include "lagplace/error.hpp"
#include "lagplace/lagrangian.hpp"
#include "lagplace/orthoconstruct.hpp"

namespace lagplace {

int system_delta(const AnySystem& sys) {
  return std::visit([](const auto& s) { return s.delta(); }, sys);
}

int system_inputs(const AnySystem& sys) {
  return std::visit([](const auto& s) { return s.inputs(); }, sys);
}

bool is_hamiltonian(const AnySystem& sys) {
  return std::holds_alternative<HamiltonianSystem>(sys);
}

namespace {

StateSpace state_space_of(const AnySystem& sys) {
  return std::visit([](const auto& s) { return s.state_space(); }, sys);
}

ComplexMatrix closed_loop_of(const AnySystem& sys, const SymmetricGain& f) {
  return std::visit([&](const auto& s) { return closed_loop_matrix(s, f); }, sys);
}

}  // namespace

PlacementProblem::PlacementProblem(AnySystem system, Poly target)
    : system_(std::move(system)), target_(std::move(target)) {
  const int d = system_delta(system_);
  if (target_.degree() != d || std::abs(target_.leading() - 1.0) > 1e-10) {
    throw Error(ErrorKind::kPrecondition,
                "target must be monic of degree " + std::to_string(d));
  }
  if (hamiltonian()) {
    if (d % 2 != 0) throw Error(ErrorKind::kDimension, "Hamiltonian order must be even");
    if (target_.odd_part_max() > 1e-10 * std::max(1.0, target_.max_abs_coeff())) {
      throw Error(ErrorKind::kPrecondition, "Hamiltonian target must be even");
    }
  }
}

std::uint64_t CoefficientSystem::bezout_number() const {
  std::uint64_t out = 1;
  for (int d : degrees) out *= static_cast<std::uint64_t>(d);
  return out;
}

namespace {

// Data shared by the affine and projective formulations.
struct PowerSumData {
  ComplexMatrix A;
  ComplexMatrix B;
  ComplexMatrix R;  // B^t or C
  int n = 0;
  std::vector<int> degrees;
  std::vector<Complex> power_sums;
};

PowerSumData power_sum_data(const PlacementProblem& prob) {
  PowerSumData data;
  const StateSpace ss = state_space_of(prob.system());
  data.A = ss.A;
  data.B = ss.B;
  data.R = ss.C;
  data.n = prob.inputs();
  const TracePowerVector target_sums = power_sums(prob.target(), prob.delta());
  const int step = prob.hamiltonian() ? 2 : 1;
  for (int k = step; k <= prob.delta(); k += step) {
    data.degrees.push_back(k);
    data.power_sums.push_back(target_sums[k - 1]);
  }
  return data;
}

detail::Homotopy affine_view(const PowerSumData& data) {
  detail::Homotopy hom;
  hom.A = data.A;
  hom.B = data.B;
  hom.R = data.R;
  hom.n = data.n;
  hom.m = static_cast<int>(data.degrees.size());
  hom.degrees = data.degrees;
  hom.power_sums = data.power_sums;
  return hom;
}

ComplexVector with_unit_x0(const ComplexVector& params) {
  ComplexVector z(params.size() + 1);
  z(0) = 1.0;
  z.tail(params.size()) = params;
  return z;
}

}  // namespace

CoefficientSystem coefficient_system(const PlacementProblem& prob) {
  const PowerSumData data = power_sum_data(prob);
  CoefficientSystem sys;
  sys.equations = static_cast<int>(data.degrees.size());
  sys.unknowns = prob.unknowns();
  sys.degrees = data.degrees;
  sys.target_power_sums = data.power_sums;
  // The homogeneous evaluator needs one unknown per equation; for
  // non-square problems evaluate directly.
  auto hom = std::make_shared<detail::Homotopy>(affine_view(data));
  const int n = data.n;
  sys.evaluate = [hom, n](const ComplexVector& params) {
    const ComplexMatrix f = SymmetricGain::from_parameters(n, params).matrix();
    const ComplexMatrix m = hom->A + hom->B * f * hom->R;
    const TracePowerVector t = trace_powers(m, hom->degrees.back());
    ComplexVector out(hom->degrees.size());
    for (std::size_t k = 0; k < hom->degrees.size(); ++k) {
      out(k) = t[hom->degrees[k] - 1] - hom->power_sums[k];
    }
    return out;
  };
  sys.jacobian = [hom, n](const ComplexVector& params) {
    const ComplexMatrix f = SymmetricGain::from_parameters(n, params).matrix();
    const ComplexMatrix m = hom->A + hom->B * f * hom->R;
    ComplexMatrix jac(hom->degrees.size(), params.size());
    ComplexMatrix power = ComplexMatrix::Identity(m.rows(), m.cols());
    int have = 0;
    for (std::size_t k = 0; k < hom->degrees.size(); ++k) {
      const int d = hom->degrees[k];
      while (have < d - 1) {
        power = power * m;
        ++have;
      }
      const ComplexMatrix p = hom->R * power * hom->B;
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          const Complex pair = i == j ? p(i, i) : p(i, j) + p(j, i);
          jac(k, symmetric_index(n, i, j)) = static_cast<double>(d) * pair;
        }
      }
    }
    return jac;
  };
  const AnySystem system = prob.system();
  const Poly target = prob.target();
  sys.coefficient_residual = [system, target, n](const ComplexVector& params) {
    const Poly cl = charpoly(closed_loop_of(system, SymmetricGain::from_parameters(n, params)));
    const int len = std::max(cl.degree(), target.degree()) + 1;
    ComplexVector out(len);
    for (int k = 0; k < len; ++k) out(k) = cl.coeff(k) - target.coeff(k);
    return out;
  };
  return sys;
}

int SolutionSet::total_multiplicity() const {
  return std::accumulate(cluster_multiplicities.begin(), cluster_multiplicities.end(), 0);
}

VerificationReport verify_solution(const AnySystem& sys, const SymmetricGain& f,
                                   const Poly& target) {
  VerificationReport report;
  report.closed_loop = charpoly(closed_loop_of(sys, f));
  const int len = std::max(report.closed_loop.degree(), target.degree()) + 1;
  double dev = 0.0;
  for (int k = 0; k < len; ++k) {
    dev = std::max(dev, std::abs(report.closed_loop.coeff(k) - target.coeff(k)));
  }
  report.residual = dev / std::max(1.0, target.max_abs_coeff());
  const double scale = report.closed_loop.max_abs_coeff();
  report.odd_ratio = scale > 0.0 ? report.closed_loop.odd_part_max() / scale : 0.0;
  report.pass = report.residual < kVerifyTolerance &&
                (!is_hamiltonian(sys) || report.odd_ratio < kOddTraceTolerance);
  return report;
}

namespace {

enum class Outcome { kFinite, kDiverged, kFailed };

struct Endpoint {
  Outcome outcome = Outcome::kDiverged;
  bool base_locus = false;
  ComplexVector params;
  double residual = 0.0;
  double jacobian_condition = 0.0;
};

int worker_count(const SolverConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("LAGPLACE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Affine Newton on the power-sum equations; true when the correction falls
// below the polish tolerance.
bool polish(const detail::Homotopy& hom, ComplexVector& params,
            const SolverConfig& config, double& condition) {
  ComplexVector f;
  ComplexMatrix jac;
  double previous = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int it = 0; it < config.polish_iterations; ++it) {
    hom.target(with_unit_x0(params), f, jac);
    const ComplexVector delta = jac.rightCols(hom.m).partialPivLu().solve(-f);
    if (!delta.allFinite()) return false;
    const double size = delta.cwiseAbs().maxCoeff();
    const double scale = 1.0 + params.cwiseAbs().maxCoeff();
    if (size > 0.5 * previous) {
      // rounding floor reached; keep the previous iterate
      converged = previous <= config.corrector_noise_floor * scale;
      break;
    }
    params += delta;
    previous = size;
    if (size <= config.polish_tolerance * scale) {
      converged = true;
      break;
    }
  }
  hom.target(with_unit_x0(params), f, jac);
  condition = condition_number(jac.rightCols(hom.m));
  return converged;
}

bool looks_like_base_locus(const AnySystem& system, const ComplexVector& z, int n) {
  const ComplexMatrix f1 = SymmetricGain::from_parameters(n, z.tail(z.size() - 1)).matrix();
  const ComplexMatrix f2 = z(0) * ComplexMatrix::Identity(n, n);
  ComplexMatrix w(n, 2 * n);
  w << f1, f2;
  const double scale = max_abs(w);
  if (scale == 0.0) return false;
  const ComplexMatrix wn = w / scale;
  if (numerical_rank(wn, 1e-6) < n) return false;
  const auto chi_fn = characteristic_function(state_space_of(system));
  const std::vector<Complex> coeffs = chi_fn(wn.leftCols(n), wn.rightCols(n));
  double size = 0.0;
  for (const Complex& c : coeffs) size = std::max(size, std::abs(c));
  const StateSpace ss = state_space_of(system);
  const double plant = std::max(1.0, max_abs(ss.A)) * std::max(1.0, max_abs(ss.B)) *
                       std::max(1.0, max_abs(ss.C));
  return size < 1e-8 * std::pow(plant, ss.delta());
}

// Minimal decay exponent of |x0| per decade of (1 - t) that marks a path
// as escaping to infinity.
constexpr double kEscapeRate = 0.02;

Endpoint classify(const detail::Homotopy& hom, const detail::PathResult& path,
                  const PlacementProblem& prob, const SolverConfig& config) {
  Endpoint end;
  const ComplexVector& z = path.z;
  const double znorm = z.cwiseAbs().maxCoeff();
  const bool near_end = path.t >= 1.0 - 1e-6;
  if (!z.allFinite()) {
    end.outcome = near_end ? Outcome::kDiverged : Outcome::kFailed;
    return end;
  }
  if (std::abs(z(0)) * config.divergence_norm < znorm) {
    end.outcome = Outcome::kDiverged;
    end.base_locus = looks_like_base_locus(prob.system(), z, hom.n);
    return end;
  }
  if (path.status != detail::PathStatus::kReachedEnd) {
    // A stalled path counts as diverged when it is close to t = 1 or when
    // x0 decays like a power of (1 - t), i.e. the path runs off to infinity.
    const bool escaping = path.x0_decades.size() >= 3 &&
                          detail::x0_decay_rate(path) > kEscapeRate;
    end.outcome = near_end || escaping ? Outcome::kDiverged : Outcome::kFailed;
    return end;
  }
  const ComplexVector tracked = z.tail(hom.m) / z(0);
  ComplexVector params = tracked;
  double condition = 0.0;
  const double moved_limit = 1e-6 * (1.0 + tracked.cwiseAbs().maxCoeff());
  const bool polished = polish(hom, params, config, condition);
  if (polished && (params - tracked).cwiseAbs().maxCoeff() < moved_limit) {
    const auto report = verify_solution(prob.system(),
                                        SymmetricGain::from_parameters(hom.n, params),
                                        prob.target());
    if (report.residual < config.accept_residual &&
        (!prob.hamiltonian() || report.odd_ratio < kOddTraceTolerance)) {
      end.outcome = Outcome::kFinite;
      end.params = params;
      end.residual = report.residual;
      end.jacobian_condition = condition;
      return end;
    }
  }
  end.outcome = near_end ? Outcome::kDiverged : Outcome::kFailed;
  return end;
}

std::vector<Endpoint> run_paths(const detail::Homotopy& hom,
                                const PlacementProblem& prob,
                                const SolverConfig& config,
                                const std::vector<std::uint64_t>& indices,
                                double step_scale) {
  std::vector<Endpoint> out(indices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < indices.size(); i = next++) {
      const auto path = detail::track_path(hom, hom.start_point(indices[i]), config,
                                           step_scale);
      out[i] = classify(hom, path, prob, config);
    }
  };
  const int threads =
      std::min<int>(worker_count(config), static_cast<int>(std::max<std::size_t>(indices.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

bool lex_less(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

// Union-find clusters of finite endpoints; each cluster listed by path index.
std::vector<std::vector<std::size_t>> cluster(const std::vector<Endpoint>& ends,
                                              double radius) {
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i].outcome == Outcome::kFinite) finite.push_back(i);
  }
  std::vector<std::size_t> parent(finite.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < finite.size(); ++a) {
    for (std::size_t b = a + 1; b < finite.size(); ++b) {
      const ComplexVector& pa = ends[finite[a]].params;
      const ComplexVector& pb = ends[finite[b]].params;
      const double scale =
          std::max({1.0, pa.cwiseAbs().maxCoeff(), pb.cwiseAbs().maxCoeff()});
      if ((pa - pb).cwiseAbs().maxCoeff() < radius * scale) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(finite.size(), -1);
  for (std::size_t a = 0; a < finite.size(); ++a) {
    const std::size_t root = find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(finite[a]);
  }
  return groups;
}

SolutionSet solve(const PlacementProblem& prob, std::uint64_t seed,
                  const SolverConfig& config) {
  if (!prob.square()) {
    throw Error(ErrorKind::kNotSquare,
                "path tracking needs as many equations as unknowns (" +
                    std::to_string(prob.equations()) + " vs " +
                    std::to_string(prob.unknowns()) + ")");
  }
  const PowerSumData data = power_sum_data(prob);
  detail::Homotopy hom = affine_view(data);
  if (hom.path_count() > config.max_paths) {
    throw Error(ErrorKind::kScale, "Bezout number exceeds max_paths");
  }
  Rng rng = Rng::derive(seed, "homotopy");
  hom.gamma = rng.unit_complex();
  for (int k = 0; k < hom.m; ++k) hom.start_constants.push_back(rng.unit_complex());
  hom.chart.resize(hom.m + 1);
  for (int k = 0; k <= hom.m; ++k) hom.chart(k) = rng.complex_normal();

  const std::uint64_t total = hom.path_count();
  std::vector<std::uint64_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Endpoint> ends = run_paths(hom, prob, config, all, 1.0);

  SolutionSet result;
  result.seed = seed;
  result.paths_tracked = total;
  double scale = 1.0;
  for (int round = 0; round < config.retrack_rounds; ++round) {
    // Nonsingular solutions reached twice, and failed paths, are suspects
    // for path jumping; track them again with smaller steps.
    std::vector<std::uint64_t> suspects;
    for (const auto& group : cluster(ends, config.cluster_radius)) {
      if (group.size() > 1 && ends[group.front()].jacobian_condition < 1e8) {
        suspects.insert(suspects.end(), group.begin(), group.end());
      }
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      if (ends[i].outcome == Outcome::kFailed) suspects.push_back(i);
    }
    if (suspects.empty()) break;
    std::sort(suspects.begin(), suspects.end());
    scale /= 8.0;
    const auto redo = run_paths(hom, prob, config, suspects, scale);
    for (std::size_t i = 0; i < suspects.size(); ++i) ends[suspects[i]] = redo[i];
    result.retracked += suspects.size();
  }
  for (const Endpoint& e : ends) {
    if (e.outcome == Outcome::kFinite) continue;
    ++result.paths_diverged;
    if (e.outcome == Outcome::kFailed) ++result.paths_failed;
    if (e.base_locus) ++result.paths_to_base_locus;
  }
  if (static_cast<double>(result.paths_failed) >
      config.failure_rate_limit * static_cast<double>(total)) {
    throw Error(ErrorKind::kUnreliableRun,
                std::to_string(result.paths_failed) + " of " + std::to_string(total) +
                    " paths failed; rerun with a different seed");
  }

  struct Solution {
    ComplexVector params;
    double residual;
    int multiplicity;
  };
  std::vector<Solution> sols;
  for (const auto& group : cluster(ends, config.cluster_radius)) {
    // representative: smallest residual, ties by lowest path index
    std::size_t best = group.front();
    for (std::size_t i : group) {
      if (ends[i].residual < ends[best].residual) best = i;
    }
    sols.push_back({ends[best].params, ends[best].residual,
                    static_cast<int>(group.size())});
  }
  std::sort(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) {
    return lex_less(a.params, b.params);
  });
  for (const Solution& s : sols) {
    result.gains.push_back(SymmetricGain::from_parameters(hom.n, s.params));
    result.residuals.push_back(s.residual);
    result.cluster_multiplicities.push_back(s.multiplicity);
    // parameters describe a symmetric matrix exactly
    result.pre_symmetrization_asymmetry.push_back(0.0);
  }
  return result;
}

}  // namespace

SolutionSet track_all_paths(const PlacementProblem& prob, std::uint64_t seed,
                            const SolverConfig& config) {
  return solve(prob, seed, config);
}

SolutionSet track_all_paths_hamiltonian(const PlacementProblem& prob,
                                        std::uint64_t seed,
                                        const SolverConfig& config) {
  if (!prob.hamiltonian()) {
    throw Error(ErrorKind::kPrecondition, "Hamiltonian tracking needs a Hamiltonian system");
  }
  const int n = prob.inputs();
  if (prob.delta() != n * (n + 1)) {
    throw Error(ErrorKind::kNotSquare, "Hamiltonian tracking needs delta = n(n+1)");
  }
  return solve(prob, seed, config);
}

ComplexMatrix random_complex_orthogonal(int size, Rng& rng) {
  ComplexMatrix q = ComplexMatrix::Identity(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      const Complex angle(2.0 * std::acos(-1.0) * rng.uniform(), 0.3 * rng.normal());
      ComplexMatrix g = ComplexMatrix::Identity(size, size);
      g(i, i) = g(j, j) = std::cos(angle);
      g(i, j) = -std::sin(angle);
      g(j, i) = std::sin(angle);
      q = g * q;
    }
  }
  return q;
}

AnySystem random_generic_system(int n, int delta, bool hamiltonian,
                                std::uint64_t seed) {
  if (n < 1 || delta < 1) throw Error(ErrorKind::kDimension, "need n, delta >= 1");
  if (hamiltonian && delta % 2 != 0) {
    throw Error(ErrorKind::kDimension, "Hamiltonian order must be even");
  }
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng = Rng::derive(seed, hamiltonian ? "system-hamiltonian" : "system-symmetric",
                          static_cast<std::uint64_t>(attempt));
    if (!hamiltonian) {
      const ComplexMatrix q = random_complex_orthogonal(delta, rng);
      ComplexVector diag(delta);
      for (int i = 0; i < delta; ++i) diag(i) = rng.complex_normal();
      const ComplexMatrix a = q * diag.asDiagonal() * q.transpose();
      const ComplexMatrix b = rng.complex_normal_matrix(delta, n);
      SymmetricSystem sys(0.5 * (a + a.transpose()), b);
      if (is_minimal(sys.state_space()).minimal) return sys;
      continue;
    }
    const int half = delta / 2;
    const ComplexMatrix s1 = random_complex_orthogonal(half, rng);
    ComplexVector d1(half);
    for (int i = 0; i < half; ++i) d1(i) = rng.complex_normal();
    ComplexMatrix m = s1.transpose() * d1.asDiagonal() * s1;
    m = (0.5 * (m + m.transpose())).eval();
    const ComplexMatrix b1 = rng.complex_normal_matrix(half, n);
    ComplexMatrix a = ComplexMatrix::Zero(delta, delta);
    a.topRightCorner(half, half) = m;
    a.bottomLeftCorner(half, half) = m;
    ComplexMatrix b = ComplexMatrix::Zero(delta, n);
    b.bottomRows(half) = b1;
    ComplexMatrix c = ComplexMatrix::Zero(n, delta);
    c.leftCols(half) = b1.transpose();
    HamiltonianSystem sys(a, b, c);
    if (is_minimal(sys.state_space()).minimal && validate_hamiltonian(sys).pass) {
      return sys;
    }
  }
  throw Error(ErrorKind::kGeneration, "could not draw a minimal system in 10 attempts");
}

Poly random_target(int delta, bool hamiltonian, std::uint64_t seed) {
  if (delta < 1 || (hamiltonian && delta % 2 != 0)) {
    throw Error(ErrorKind::kDimension, "invalid target degree");
  }
  Rng rng = Rng::derive(seed, "target");
  std::vector<Complex> roots;
  if (hamiltonian) {
    for (int i = 0; i < delta / 2; ++i) {
      const Complex r = rng.complex_normal();
      roots.push_back(r);
      roots.push_back(-r);
    }
  } else {
    for (int i = 0; i < delta; ++i) roots.push_back(rng.complex_normal());
  }
  Poly p = Poly::from_roots(roots);
  if (hamiltonian) {
    // remove rounding noise in the odd coefficients
    std::vector<Complex> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = 0.0;
    p = Poly(std::move(c));
  }
  return p;
}

SymmetricSystem surjective_symmetric_system(const ComplexMatrix& b) {
  const int delta = static_cast<int>(b.rows());
  const int n = static_cast<int>(b.cols());
  if (delta != symmetric_dimension(n)) {
    throw Error(ErrorKind::kDimension, "need delta = n(n+1)/2");
  }
  std::vector<ComplexMatrix> basis;
  for (const ComplexMatrix& e : symmetric_basis(n)) basis.push_back(b * e * b.transpose());
  const BijectionResult bij = make_diag_projection_bijective(SymmetricMatrixSpace(basis));
  // pi restricted to S {B F B^t} S^t is onto, so with A = S^t D S the
  // Jacobian rows k trace(D^{k-1} S B F B^t S^t) form a Vandermonde image.
  ComplexVector diag(delta);
  for (int i = 0; i < delta; ++i) diag(i) = static_cast<double>(i + 1);
  const ComplexMatrix a = bij.S.transpose() * diag.asDiagonal() * bij.S;
  return SymmetricSystem(0.5 * (a + a.transpose()), b);
}

HamiltonianSystem surjective_hamiltonian_system(const ComplexMatrix& b1) {
  const int half = static_cast<int>(b1.rows());
  const int n = static_cast<int>(b1.cols());
  if (half != symmetric_dimension(n)) {
    throw Error(ErrorKind::kDimension, "need delta/2 = n(n+1)/2");
  }
  std::vector<ComplexMatrix> basis;
  for (const ComplexMatrix& e : symmetric_basis(n)) basis.push_back(b1 * e * b1.transpose());
  const BijectionResult bij = make_diag_projection_bijective(SymmetricMatrixSpace(basis));
  ComplexVector d1(half);
  for (int i = 0; i < half; ++i) d1(i) = static_cast<double>(i + 1);
  ComplexMatrix m = bij.S.transpose() * d1.asDiagonal() * bij.S;
  m = (0.5 * (m + m.transpose())).eval();
  const int delta = 2 * half;
  ComplexMatrix a = ComplexMatrix::Zero(delta, delta);
  a.topRightCorner(half, half) = m;
  a.bottomLeftCorner(half, half) = m;
  ComplexMatrix b = ComplexMatrix::Zero(delta, n);
  b.bottomRows(half) = b1;
  ComplexMatrix c = ComplexMatrix::Zero(n, delta);
  c.leftCols(half) = b1.transpose();
  return HamiltonianSystem(a, b, c);
}

}  // namespace lagplace
