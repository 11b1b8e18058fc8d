// Copyright 2026 The Resmex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resmex/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "resmex/random_ensembles.hpp"

namespace resmex {

namespace {

void require_cut(Index dim, BipartiteCut cut) {
  if (cut.dim_a < 1 || cut.dim_b < 1 || cut.dim_a * cut.dim_b != dim) {
    throw BadCut("cut " + std::to_string(cut.dim_a) + "x" +
                 std::to_string(cut.dim_b) + " does not factor dim " +
                 std::to_string(dim));
  }
}

Matrix reshape_to_cut(const Vector& amplitudes, BipartiteCut cut) {
  Matrix a(cut.dim_a, cut.dim_b);
  for (Index i = 0; i < cut.dim_a; ++i) {
    for (Index j = 0; j < cut.dim_b; ++j) {
      a(i, j) = amplitudes(i * cut.dim_b + j);
    }
  }
  return a;
}

}  // namespace

SchmidtData schmidt_decompose(const PureState& psi, BipartiteCut cut,
                              const Tolerances& tol) {
  require_cut(psi.dim(), cut);
  const Matrix a = reshape_to_cut(psi.amplitudes, cut);
  Eigen::JacobiSVD<Matrix> svd(a);
  SchmidtData out;
  out.coefficients = svd.singularValues();
  const double top = out.coefficients.size() ? out.coefficients(0) : 0.0;
  out.rank = 0;
  for (Index i = 0; i < out.coefficients.size(); ++i) {
    if (out.coefficients(i) > tol.support_cutoff * top) ++out.rank;
  }
  return out;
}

double entanglement_entropy(const PureState& psi, BipartiteCut cut,
                            const Tolerances& tol) {
  const SchmidtData sd = schmidt_decompose(psi, cut, tol);
  double h = 0.0;
  for (Index i = 0; i < sd.coefficients.size(); ++i) {
    const double p = sd.coefficients(i) * sd.coefficients(i);
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

Matrix partial_transpose(const Matrix& m, BipartiteCut cut) {
  require_cut(m.rows(), cut);
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < cut.dim_a; ++i) {
    for (Index ip = 0; ip < cut.dim_a; ++ip) {
      for (Index j = 0; j < cut.dim_b; ++j) {
        for (Index jp = 0; jp < cut.dim_b; ++jp) {
          out(i * cut.dim_b + j, ip * cut.dim_b + jp) =
              m(i * cut.dim_b + jp, ip * cut.dim_b + j);
        }
      }
    }
  }
  return out;
}

int schmidt_number_ppt(const DensityState& rho, BipartiteCut cut,
                       const Tolerances& tol) {
  require_cut(rho.dim(), cut);
  const Index small = std::min(cut.dim_a, cut.dim_b);
  const Index large = std::max(cut.dim_a, cut.dim_b);
  if (!(small == 2 && (large == 2 || large == 3))) {
    throw UnsupportedCut("PPT decides the Schmidt number only on 2x2 and 2x3 "
                         "cuts, got " + std::to_string(cut.dim_a) + "x" +
                         std::to_string(cut.dim_b));
  }
  const Matrix pt = partial_transpose(rho.matrix, cut);
  const EigenDecomposition es = eigh(pt, tol);
  const double spectral = es.eigenvalues.cwiseAbs().maxCoeff();
  return es.eigenvalues.minCoeff() >= -tol.psd * spectral ? 1 : 2;
}

PureStateMonotone monotone_entanglement_entropy() {
  return [](const PureState& psi, BipartiteCut cut) {
    return entanglement_entropy(psi, cut);
  };
}

PureStateMonotone monotone_schmidt_rank() {
  return [](const PureState& psi, BipartiteCut cut) {
    return static_cast<double>(schmidt_decompose(psi, cut).rank);
  };
}

namespace {

double ensemble_average(const PureStateMonotone& monotone, const Matrix& root,
                        const Matrix& isometry, BipartiteCut cut) {
  // Ensemble members |w_x> = sum_i V(x,i) sqrt(lambda_i) |v_i>; columns of
  // `isometry` are orthonormal, so sum_x |w_x><w_x| reassembles rho.
  double total = 0.0;
  for (Index x = 0; x < isometry.rows(); ++x) {
    Vector w = Vector::Zero(root.rows());
    for (Index i = 0; i < isometry.cols(); ++i) {
      w += isometry(x, i) * root.col(i);
    }
    const double weight = w.squaredNorm();
    if (weight < 1e-14) continue;
    total += weight * monotone(PureState{w / std::sqrt(weight)}, cut);
  }
  return total;
}

}  // namespace

ExtensionBound convex_roof_search(const PureStateMonotone& monotone,
                                  const DensityState& rho, BipartiteCut cut,
                                  Index ensemble_size, int trials,
                                  std::uint64_t seed, const Tolerances& tol) {
  require_cut(rho.dim(), cut);
  const EigenDecomposition es = eigh(rho.matrix, tol);
  const double top = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  if (top <= 0.0) throw ZeroState("convex roof of the zero operator");
  Index rank = 0;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > tol.support_cutoff * top) ++rank;
  }
  if (ensemble_size < rank) {
    throw BadEnsembleSize("ensemble_size " + std::to_string(ensemble_size) +
                          " below rank " + std::to_string(rank));
  }
  Matrix root(rho.dim(), rank);
  for (Index i = 0; i < rank; ++i) {
    root.col(i) = std::sqrt(es.eigenvalues(i)) * es.eigenvectors.col(i);
  }
  double best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Matrix isometry;
    if (trial == 0) {
      isometry = Matrix::Identity(ensemble_size, rank);
    } else {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
      isometry = random_isometry(ensemble_size, rank, rng);
    }
    const double value = ensemble_average(monotone, root, isometry, cut);
    if (trial == 0 || value < best) best = value;
  }
  std::ostringstream witness;
  witness << "best of " << trials << " ensembles of size " << ensemble_size;
  return {DivergenceValue(best), BoundDirection::Upper, witness.str()};
}

ExtensionBound smoothed_extension(const PureStateMonotone& monotone,
                                  const DensityState& rho, BipartiteCut cut,
                                  double epsilon, int trials,
                                  std::uint64_t seed, const Tolerances& tol) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw BadEpsilon("epsilon must lie in [0,1), got " +
                     std::to_string(epsilon));
  }
  require_cut(rho.dim(), cut);
  const Index d = rho.dim();
  // Sample 0 is rho itself, seeded identically to a plain convex_roof_search
  // call; at epsilon = 0 the two coincide.
  ExtensionBound best =
      convex_roof_search(monotone, rho, cut, d, trials, seed, tol);
  int accepted = 0;
  const PureState anchor = purify(rho, tol);
  for (int k = 1; k < trials; ++k) {
    Rng rng = Rng::stream(seed ^ 0xba11ba11ULL, static_cast<std::uint64_t>(k));
    // Perturbation magnitudes follow a fixed schedule independent of epsilon,
    // so a larger ball accepts a superset of candidates and the minimum is
    // non-increasing in epsilon on a fixed seed.
    const double magnitude =
        0.75 * static_cast<double>(k) / static_cast<double>(trials);
    Vector noise(d * d);
    for (Index i = 0; i < noise.size(); ++i) noise(i) = rng.complex_gaussian();
    Vector perturbed = anchor.amplitudes + magnitude * noise;
    perturbed /= perturbed.norm();
    Matrix reduced =
        partial_trace_second(perturbed * perturbed.adjoint(), d, d);
    const DensityState candidate =
        sanitize_state(reduced, TraceClass::Normalized, tol);
    const double distance = purified_distance(rho, candidate, tol).value();
    if (distance > epsilon) continue;
    ++accepted;
    const ExtensionBound inner = convex_roof_search(
        monotone, candidate, cut, d, trials,
        splitmix64(seed + static_cast<std::uint64_t>(k)), tol);
    if (inner.value.value() < best.value.value()) best = inner;
  }
  std::ostringstream witness;
  witness << "ball samples accepted: " << accepted << " of " << (trials - 1)
          << "; " << best.witness;
  return {best.value, BoundDirection::Upper, witness.str()};
}

}  // namespace resmex
