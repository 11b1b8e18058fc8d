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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resmex/divergence.hpp"
#include "resmex/oneshot.hpp"

namespace resmex {

enum class BoundDirection { Lower, Upper, Exact };

std::string to_string(BoundDirection d);

struct ExtensionBound {
  DivergenceValue value;
  BoundDirection direction = BoundDirection::Exact;
  // Description of the achieving channel / POVM / decomposition when known.
  std::string witness;
};

struct RegularizationTrace {
  std::vector<std::pair<int, double>> rates;  // (n, quantity(rho^n, sigma^n)/n)
};

// Classical divergence named by (variant, alpha); alpha = 1 is the KL case.
struct ClassicalSpec {
  RenyiVariant variant = RenyiVariant::Sandwiched;
  double alpha = 1.0;
};

// rho_tilde (+) (1 - Tr rho_tilde) on dim+1, flag appended as the last basis
// vector. The embedding is normalized by construction.
DensityState embed_subnormalized(const DensityState& rho);

// Maximal extension of a named divergence to subnormalized pairs: evaluate
// the base divergence on the direct-sum embeddings.
DivergenceValue extend_subnormalized(const DivergenceSpec& spec,
                                     const DensityState& rho,
                                     const DensityState& sigma,
                                     const Tolerances& tol = default_tolerances());

/// 1/2 ||r - s||_1 + 1/2 |Tr[r - s]|; the largest DPI-monotone extension of
/// the trace distance to subnormalized pairs.
DivergenceValue generalized_trace_distance(const DensityState& rho,
                                           const DensityState& sigma,
                                           const Tolerances& tol = default_tolerances());

/// ||sqrt(r) sqrt(s)||_1 + sqrt((1-Tr r)(1-Tr s)).
DivergenceValue generalized_fidelity(const DensityState& rho,
                                     const DensityState& sigma,
                                     const Tolerances& tol = default_tolerances());

/// sqrt(1 - F_bar^2) with F_bar the generalized fidelity.
DivergenceValue purified_distance(const DensityState& rho,
                                  const DensityState& sigma,
                                  const Tolerances& tol = default_tolerances());

/// D(r||s) + (1 - Tr r) log2((1 - Tr r)/(1 - Tr s)) on subnormalized pairs;
/// +infinity unless supp r <= supp s and (Tr s = 1 implies Tr r = 1).
DivergenceValue extended_umegaki(const DensityState& rho,
                                 const DensityState& sigma,
                                 const Tolerances& tol = default_tolerances());

/// log2 max{ 2^Dmax(r||s), (1 - Tr r)/(1 - Tr s) }.
DivergenceValue extended_d_max(const DensityState& rho,
                               const DensityState& sigma,
                               const Tolerances& tol = default_tolerances());

// Maximal classical-to-quantum extension at a pure first argument: exactly
// D_max(psi||sigma) = log2 <psi|sigma^-1|psi> for relative entropies, and the
// classical divergence at the binary pair (1,0) vs (s, 1-s) in general.
ExtensionBound maximal_classical_extension_pure(
    const ClassicalSpec& classical, const PureState& psi,
    const DensityState& sigma, const Tolerances& tol = default_tolerances());

// Pencil-eigenbasis ansatz: eigendecompose sigma^-1/2 rho sigma^-1/2 into
// {r_x, psi_x}, set q_x = <psi_x|sigma|psi_x> and evaluate the classical
// divergence of (q o r, q). Exact for Renyi orders in (0,2]; otherwise a
// feasible point of the infimum, hence an upper bound.
ExtensionBound maximal_classical_extension_ansatz(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, const Tolerances& tol = default_tolerances());

// Randomized feasible-point search over special-unitary rotations of the
// pencil eigenbasis (rank-1 POVMs from the rotated basis, r recovered by
// least squares, infeasible draws discarded). Returns the minimum over the
// accepted draws and the ansatz; always an upper bound.
ExtensionBound maximal_classical_extension_search(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, int trials, std::uint64_t seed,
    const Tolerances& tol = default_tolerances());

// Measured lower bound on the minimal classical-to-quantum extension.
ExtensionBound minimal_classical_extension_lower(
    const ClassicalSpec& classical, const DensityState& rho,
    const DensityState& sigma, const MeasurementStrategy& strategy,
    const Tolerances& tol = default_tolerances());

// (n, quantity(rho^n || sigma^n)/n) for n = 1..n_max.
RegularizationTrace regularized_rate(const DivergenceSpec& spec,
                                     const DensityState& rho,
                                     const DensityState& sigma, int n_max,
                                     Index dim_cap = 4096,
                                     const Tolerances& tol = default_tolerances());

}  // namespace resmex
