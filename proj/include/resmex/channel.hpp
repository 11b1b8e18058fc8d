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

#include <vector>

#include "resmex/state.hpp"

namespace resmex {

enum class ChannelKind { Cptp, Tni };

// Kraus representation. Cptp: sum K^dag K = I; Tni: sum K^dag K <= I.
struct QuantumChannel {
  std::vector<Matrix> kraus;
  Index in_dim = 0;
  Index out_dim = 0;
  ChannelKind kind = ChannelKind::Cptp;
};

struct Povm {
  std::vector<Matrix> effects;

  Index dim() const { return effects.empty() ? 0 : effects.front().rows(); }
};

QuantumChannel validate_channel(std::vector<Matrix> kraus, ChannelKind kind,
                                const Tolerances& tol = default_tolerances());

Povm validate_povm(std::vector<Matrix> effects,
                   const Tolerances& tol = default_tolerances());

DensityState apply_channel(const QuantumChannel& ch, const DensityState& rho);

// Outcome probabilities of measuring `povm` on `rho`; tiny negative values
// from roundoff are clipped and the vector renormalized.
ClassicalDistribution measure(const Povm& povm, const DensityState& rho);

}  // namespace resmex
