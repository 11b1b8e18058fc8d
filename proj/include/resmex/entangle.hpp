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
#include <functional>

#include "resmex/extension.hpp"
#include "resmex/state.hpp"

namespace resmex {

struct BipartiteCut {
  Index dim_a = 2;
  Index dim_b = 2;
};

struct SchmidtData {
  RealVector coefficients;  // descending, nonnegative
  Index rank = 0;
};

SchmidtData schmidt_decompose(const PureState& psi, BipartiteCut cut,
                              const Tolerances& tol = default_tolerances());

/// Shannon entropy (base 2) of the squared Schmidt coefficients.
double entanglement_entropy(const PureState& psi, BipartiteCut cut,
                            const Tolerances& tol = default_tolerances());

Matrix partial_transpose(const Matrix& m, BipartiteCut cut);

// Schmidt number via the partial-transpose criterion, exact on 2x2 and 2x3
// cuts: 1 when the partial transpose is PSD (separable), else 2. Larger cuts
// are refused rather than approximated.
int schmidt_number_ppt(const DensityState& rho, BipartiteCut cut,
                       const Tolerances& tol = default_tolerances());

using PureStateMonotone =
    std::function<double(const PureState&, BipartiteCut)>;

PureStateMonotone monotone_entanglement_entropy();
PureStateMonotone monotone_schmidt_rank();

// Randomized search over pure-state decompositions rho = sum p_x psi_x via
// rank-preserving isometric mixing of the eigendecomposition; the minimum of
// sum p_x monotone(psi_x) upper-bounds the cq-ensemble maximal extension.
ExtensionBound convex_roof_search(const PureStateMonotone& monotone,
                                  const DensityState& rho, BipartiteCut cut,
                                  Index ensemble_size, int trials,
                                  std::uint64_t seed,
                                  const Tolerances& tol = default_tolerances());

// convex_roof_search additionally minimized over a sampled purified-distance
// eps-ball around rho (heuristic inner approximation of the ball).
ExtensionBound smoothed_extension(const PureStateMonotone& monotone,
                                  const DensityState& rho, BipartiteCut cut,
                                  double epsilon, int trials,
                                  std::uint64_t seed,
                                  const Tolerances& tol = default_tolerances());

}  // namespace resmex
