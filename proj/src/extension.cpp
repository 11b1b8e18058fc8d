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

#include "resmex/extension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "resmex/random_ensembles.hpp"
#include "resmex/rng.hpp"

namespace resmex {

namespace {

void require_same_dim(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("states have dims " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }
}

double flag_mass(const DensityState& rho, const Tolerances& tol) {
  const double m = 1.0 - rho.trace();
  if (m < -tol.trace - 1e-12) {
    throw BadTrace("trace exceeds 1 by " + std::to_string(-m));
  }
  return std::max(0.0, m);
}

// Classical divergence evaluated on raw nonnegative weight vectors; the
// inputs are renormalized against accumulated roundoff.
DivergenceValue classical_of(const ClassicalSpec& cs, RealVector p,
                             RealVector q) {
  for (Index i = 0; i < p.size(); ++i) p(i) = std::max(0.0, p(i));
  for (Index i = 0; i < q.size(); ++i) q(i) = std::max(0.0, q(i));
  const double sp = p.sum();
  const double sq = q.sum();
  if (sp > 0.0) p /= sp;
  if (sq > 0.0) q /= sq;
  return classical_divergence(cs.variant, cs.alpha, {p}, {q});
}

bool ansatz_is_exact(const ClassicalSpec& cs) {
  // The pencil-eigenbasis optimizer is known optimal for Renyi orders in
  // (0,2] (KL included as alpha = 1); beyond 2 it is only feasible.
  return cs.alpha > 0.0 && cs.alpha <= 2.0;
}

}  // namespace

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::Lower: return "lower";
    case BoundDirection::Upper: return "upper";
    case BoundDirection::Exact: return "exact";
  }
  return "?";
}

DensityState embed_subnormalized(const DensityState& rho) {
  const Index d = rho.dim();
  Matrix out = Matrix::Zero(d + 1, d + 1);
  out.topLeftCorner(d, d) = rho.matrix;
  out(d, d) = std::max(0.0, 1.0 - rho.trace());
  return {out, TraceClass::Normalized};
}

DivergenceValue extend_subnormalized(const DivergenceSpec& spec,
                                     const DensityState& rho,
                                     const DensityState& sigma,
                                     const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (rho.trace() > 1.0 + tol.trace || sigma.trace() > 1.0 + tol.trace) {
    throw BadTrace("subnormalized inputs need trace <= 1");
  }
  return evaluate(spec, embed_subnormalized(rho), embed_subnormalized(sigma),
                  tol);
}

DivergenceValue generalized_trace_distance(const DensityState& rho,
                                           const DensityState& sigma,
                                           const Tolerances& tol) {
  require_same_dim(rho, sigma);
  const bool flip = matrix_lex_less(sigma.matrix, rho.matrix);
  const Matrix diff = flip ? Matrix(sigma.matrix - rho.matrix)
                           : Matrix(rho.matrix - sigma.matrix);
  const EigenDecomposition es = eigh(diff, tol);
  const double one_norm = es.eigenvalues.cwiseAbs().sum();
  const double trace_gap = std::abs(diff.trace().real());
  return std::min(1.0, std::max(0.0, 0.5 * one_norm + 0.5 * trace_gap));
}

DivergenceValue generalized_fidelity(const DensityState& rho,
                                     const DensityState& sigma,
                                     const Tolerances& tol) {
  require_same_dim(rho, sigma);
  // Nuclear norm evaluated in a canonical argument order so the value is
  // exactly symmetric.
  const bool flip = matrix_lex_less(sigma.matrix, rho.matrix);
  const Matrix& a = flip ? sigma.matrix : rho.matrix;
  const Matrix& b = flip ? rho.matrix : sigma.matrix;
  const Matrix ra = matrix_power_on_support(a, 0.5, tol.support_cutoff, tol);
  const Matrix m = ra * b * ra;
  const EigenDecomposition es = eigh(0.5 * (m + m.adjoint()), tol);
  double f = 0.0;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    f += std::sqrt(std::max(0.0, es.eigenvalues(i)));
  }
  f += std::sqrt(flag_mass(rho, tol) * flag_mass(sigma, tol));
  return std::min(1.0, std::max(0.0, f));
}

DivergenceValue purified_distance(const DensityState& rho,
                                  const DensityState& sigma,
                                  const Tolerances& tol) {
  const double f = generalized_fidelity(rho, sigma, tol).value();
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

DivergenceValue extended_umegaki(const DensityState& rho,
                                 const DensityState& sigma,
                                 const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    return DivergenceValue::infinity();
  }
  const double a = flag_mass(rho, tol);
  const double b = flag_mass(sigma, tol);
  if (a <= tol.trace) {
    // Normalized rho: the flag term vanishes regardless of sigma's trace.
    return umegaki({rho.matrix, TraceClass::Normalized},
                   {sigma.matrix, TraceClass::Normalized}, tol);
  }
  if (b <= tol.trace) {
    // Flag support violation: rho has flag mass, sigma has none.
    return DivergenceValue::infinity();
  }
  if (rho.trace() <= tol.trace) {
    // Zero operator: only the flag contributes, with weight 1.
    return std::log2(1.0 / b);
  }
  const DivergenceValue base = umegaki({rho.matrix, TraceClass::Normalized},
                                       {sigma.matrix, TraceClass::Normalized},
                                       tol);
  if (base.is_infinite()) return base;
  return base.value() + a * std::log2(a / b);
}

DivergenceValue extended_d_max(const DensityState& rho,
                               const DensityState& sigma,
                               const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    return DivergenceValue::infinity();
  }
  const double a = flag_mass(rho, tol);
  const double b = flag_mass(sigma, tol);
  double pencil_sup = 0.0;
  if (rho.trace() > tol.trace) {
    const Matrix si =
        matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
    const Matrix pencil = si * rho.matrix * si;
    const EigenDecomposition es = eigh(0.5 * (pencil + pencil.adjoint()), tol);
    pencil_sup = std::max(0.0, es.eigenvalues.size() ? es.eigenvalues(0) : 0.0);
  }
  double ratio = 0.0;
  if (b <= tol.trace) {
    if (a > tol.trace) return DivergenceValue::infinity();
  } else {
    ratio = a / b;
  }
  const double t = std::max(pencil_sup, ratio);
  if (t <= 0.0) return DivergenceValue::infinity();
  return std::log2(t);
}

ExtensionBound maximal_classical_extension_pure(const ClassicalSpec& classical,
                                                const PureState& psi,
                                                const DensityState& sigma,
                                                const Tolerances& tol) {
  if (psi.dim() != sigma.dim()) {
    throw DimMismatch("pure state dim " + std::to_string(psi.dim()) +
                      " != sigma dim " + std::to_string(sigma.dim()));
  }
  Matrix proj;
  try {
    proj = support_projector(sigma, tol);
  } catch (const ZeroState&) {
    return {DivergenceValue::infinity(), BoundDirection::Exact,
            "sigma has empty support"};
  }
  const double outside =
      (psi.amplitudes - proj * psi.amplitudes).squaredNorm();
  if (outside > tol.support_containment) {
    return {DivergenceValue::infinity(), BoundDirection::Exact,
            "psi leaves supp(sigma), leaked mass " + std::to_string(outside)};
  }
  const Matrix inv = matrix_power_on_support(sigma, -1.0, tol);
  const double ip =
      std::max(1.0, (psi.amplitudes.adjoint() * inv * psi.amplitudes)(0).real());
  const double s = 1.0 / ip;
  RealVector p(2), q(2);
  p << 1.0, 0.0;
  q << s, 1.0 - s;
  const DivergenceValue value = classical_of(classical, p, q);
  std::ostringstream witness;
  witness << "binary flag pair (1,0) vs (s,1-s), s = " << s;
  return {value, BoundDirection::Exact, witness.str()};
}

namespace {

struct PencilBasis {
  RealVector ratios;  // eigenvalues of sigma^-1/2 rho sigma^-1/2, descending
  Matrix vectors;
};

PencilBasis pencil_eigenbasis(const DensityState& rho,
                              const DensityState& sigma,
                              const Tolerances& tol) {
  const Matrix si =
      matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
  const Matrix pencil = si * rho.matrix * si;
  const EigenDecomposition es = eigh(0.5 * (pencil + pencil.adjoint()), tol);
  return {es.eigenvalues, es.eigenvectors};
}

// (q o r, q) weights for a rank-1 measurement basis against the pencil.
std::pair<RealVector, RealVector> ansatz_weights(const PencilBasis& basis,
                                                 const DensityState& sigma) {
  const Index d = basis.vectors.rows();
  RealVector p(d), q(d);
  for (Index x = 0; x < d; ++x) {
    const Vector v = basis.vectors.col(x);
    const double qx = std::max(0.0, (v.adjoint() * sigma.matrix * v)(0).real());
    const double rx = std::max(0.0, basis.ratios(x));
    q(x) = qx;
    p(x) = qx * rx;
  }
  return {p, q};
}

}  // namespace

ExtensionBound maximal_classical_extension_ansatz(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    return {DivergenceValue::infinity(), BoundDirection::Exact,
            "supp(rho) leaves supp(sigma)"};
  }
  const PencilBasis basis = pencil_eigenbasis(rho, sigma, tol);
  const auto [p, q] = ansatz_weights(basis, sigma);
  const DivergenceValue value = classical_of(classical, p, q);
  const BoundDirection dir = ansatz_is_exact(classical)
                                 ? BoundDirection::Exact
                                 : BoundDirection::Upper;
  return {value, dir, "pencil eigenbasis POVM"};
}

ExtensionBound maximal_classical_extension_search(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, int trials, std::uint64_t seed,
    const Tolerances& tol) {
  ExtensionBound base = maximal_classical_extension_ansatz(classical, rho,
                                                           sigma, tol);
  if (base.value.is_infinite()) {
    base.witness += "; search skipped";
    return base;
  }
  const Index d = rho.dim();
  const PencilBasis basis = pencil_eigenbasis(rho, sigma, tol);
  const Matrix si =
      matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
  const Matrix pencil_raw = si * rho.matrix * si;
  const Matrix pencil = 0.5 * (pencil_raw + pencil_raw.adjoint());
  const double feas_tol = 1e-9 * (1.0 + pencil.norm());

  // Clusters of (near-)degenerate pencil eigenvalues; rotations inside a
  // cluster keep the basis feasible, so they explore the search set without
  // ever producing an unsound point.
  std::vector<std::pair<Index, Index>> clusters;
  for (Index start = 0; start < d;) {
    Index stop = start + 1;
    while (stop < d &&
           std::abs(basis.ratios(stop) - basis.ratios(start)) <=
               1e-10 * (1.0 + std::abs(basis.ratios(start)))) {
      ++stop;
    }
    clusters.emplace_back(start, stop);
    start = stop;
  }

  double best = base.value.value();
  int accepted = 0;
  bool improved = false;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    Matrix rotated;
    if (trial % 2 == 0) {
      // Full special-unitary rotation of the eigenbasis.
      Matrix u = random_unitary(d, rng);
      const Complex det = u.determinant();
      u *= std::pow(det, -1.0 / static_cast<double>(d));
      rotated = basis.vectors * u;
    } else {
      // Block rotation inside degenerate clusters (always feasible).
      Matrix u = Matrix::Identity(d, d);
      for (const auto& [start, stop] : clusters) {
        const Index width = stop - start;
        if (width > 1) {
          u.block(start, start, width, width) = random_unitary(width, rng);
        }
      }
      rotated = basis.vectors * u;
    }
    // Least-squares r for rank-1 effects from an orthonormal basis is the
    // diagonal of the rotated pencil; the residual is its off-diagonal mass.
    const Matrix c = rotated.adjoint() * pencil * rotated;
    double off = 0.0;
    RealVector r(d), q(d);
    for (Index x = 0; x < d; ++x) {
      for (Index y = 0; y < d; ++y) {
        if (x != y) off += std::norm(c(x, y));
      }
      r(x) = std::max(0.0, c(x, x).real());
      const Vector v = rotated.col(x);
      q(x) = std::max(0.0, (v.adjoint() * sigma.matrix * v)(0).real());
    }
    if (std::sqrt(off) > feas_tol) continue;  // infeasible draw
    ++accepted;
    RealVector p(d);
    for (Index x = 0; x < d; ++x) p(x) = q(x) * r(x);
    const DivergenceValue value = classical_of(classical, p, q);
    if (value.is_finite() && value.value() < best - 1e-12) improved = true;
    if (value.is_finite()) best = std::min(best, value.value());
  }

  std::ostringstream witness;
  witness << "min over pencil ansatz and " << accepted
          << " feasible rotated draws (of " << trials << "); "
          << (improved ? "search improved on the ansatz"
                       : "search did not improve on the ansatz");
  return {DivergenceValue(best), BoundDirection::Upper, witness.str()};
}

ExtensionBound minimal_classical_extension_lower(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, const MeasurementStrategy& strategy,
    const Tolerances& tol) {
  const DivergenceValue value = measured_divergence(
      classical.variant, classical.alpha, rho, sigma, strategy, tol);
  return {value, BoundDirection::Lower, "POVM: " + strategy_name(strategy)};
}

RegularizationTrace regularized_rate(const DivergenceSpec& spec,
                                     const DensityState& rho,
                                     const DensityState& sigma, int n_max,
                                     Index dim_cap, const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (n_max < 1) throw BadShape("n_max must be >= 1");
  double total = 1.0;
  for (int k = 0; k < n_max; ++k) {
    total *= static_cast<double>(rho.dim());
    if (total > static_cast<double>(dim_cap)) {
      throw DimCap("dim^" + std::to_string(n_max) + " exceeds cap " +
                   std::to_string(dim_cap));
    }
  }
  RegularizationTrace trace;
  DensityState rn = rho;
  DensityState sn = sigma;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      rn = tensor(rn, rho);
      sn = tensor(sn, sigma);
    }
    const DivergenceValue v = evaluate(spec, rn, sn, tol);
    if (v.is_infinite()) {
      throw Error("regularized rate infinite at n = " + std::to_string(n));
    }
    trace.rates.emplace_back(n, v.value() / static_cast<double>(n));
  }
  return trace;
}

}  // namespace resmex
