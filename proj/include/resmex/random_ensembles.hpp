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

#include "resmex/channel.hpp"
#include "resmex/rng.hpp"
#include "resmex/state.hpp"

namespace resmex {

// i.i.d. standard complex Gaussian entries.
Matrix ginibre(Index rows, Index cols, Rng& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with the phase fix).
Matrix random_unitary(Index dim, Rng& rng);

// Haar-distributed isometry with orthonormal columns, rows x cols, rows >= cols.
Matrix random_isometry(Index rows, Index cols, Rng& rng);

// Ginibre-induced state of the given rank.
DensityState random_density(Index dim, Index rank, Rng& rng);
DensityState random_density(Index dim, Index rank, std::uint64_t seed);

PureState random_pure(Index dim, Rng& rng);
PureState random_pure(Index dim, std::uint64_t seed);

// Stinespring construction from a Haar-random isometry into out x env.
QuantumChannel random_channel(Index in_dim, Index out_dim, Index env_dim,
                              Rng& rng);
QuantumChannel random_channel(Index in_dim, Index out_dim, Index env_dim,
                              std::uint64_t seed);

// Strictly trace-non-increasing map: a random channel with one Kraus
// operator dropped.
QuantumChannel random_tni_channel(Index in_dim, Index out_dim, Index env_dim,
                                  Rng& rng);

// Random projective measurement coarse-grained into `outcomes` effects.
Povm random_povm(Index dim, Index outcomes, Rng& rng);
Povm random_povm(Index dim, Index outcomes, std::uint64_t seed);

// Full-rank state with lambda_min >= min_eig, for premises that need margin.
DensityState random_full_rank(Index dim, double min_eig, Rng& rng);

// Random density scaled into (scale_lo, scale_hi) trace.
DensityState random_subnormalized(Index dim, Index rank, double scale_lo,
                                  double scale_hi, Rng& rng);

ClassicalDistribution random_distribution(Index dim, Rng& rng);

}  // namespace resmex
