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

#include "resmex/divergence.hpp"
#include "resmex/state.hpp"

namespace resmex {

// Information-spectrum divergence
//   D_s^eps = sup { R : Tr(rho {rho <= 2^R sigma}) <= eps },
// where {rho <= t sigma} projects onto the non-positive eigenspace of
// rho - t sigma. The spectral mass Tr(rho {rho <= t sigma}) is nondecreasing
// in t; the sup is located by probing the pencil eigenvalues (the only
// points where the projector rank can jump) and bisecting, since for
// non-commuting pairs the crossing can fall strictly between breakpoints.
DivergenceValue d_s_epsilon(const DensityState& rho, const DensityState& sigma,
                            double epsilon,
                            const Tolerances& tol = default_tolerances());

// Hypothesis-testing divergence
//   D_h^eps = -log2 min { Tr[sigma Pi] : 0 <= Pi <= I, Tr[rho Pi] >= 1-eps },
// solved by the quantum Neyman-Pearson structure: bisection over the
// threshold t with Pi(t) the positive-eigenspace projector of rho - t sigma
// plus a uniform fractional weight on the zero eigenspace that makes
// Tr[rho Pi] = 1-eps exactly.
DivergenceValue d_h_epsilon(const DensityState& rho, const DensityState& sigma,
                            double epsilon,
                            const Tolerances& tol = default_tolerances());

// Certified lower bound on sup over the eps-ball of D_min, built from the
// pencil projector at the information-spectrum threshold eps^2/2.
DivergenceValue d_min_epsilon_lower(const DensityState& rho,
                                    const DensityState& sigma, double epsilon,
                                    const Tolerances& tol = default_tolerances());

}  // namespace resmex
