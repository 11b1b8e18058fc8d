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

#include <string>

#include <json.hpp>

#include "resmex/channel.hpp"
#include "resmex/entangle.hpp"
#include "resmex/state.hpp"

namespace resmex {

using Json = nlohmann::json;

// State file: {"dim": d, "trace_class": "normalized"|"subnormalized",
//              "matrix": [[[re,im],...],...]} (row-major).
Json state_to_json(const DensityState& rho);
DensityState state_from_json(const Json& j,
                             const Tolerances& tol = default_tolerances());

// Channel file: {"in_dim", "out_dim", "kind": "cptp"|"tni",
//                "kraus": [matrix,...]}.
Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j,
                                 const Tolerances& tol = default_tolerances());

DensityState load_state_file(const std::string& path,
                             const Tolerances& tol = default_tolerances());
QuantumChannel load_channel_file(const std::string& path,
                                 const Tolerances& tol = default_tolerances());
void write_json_file(const std::string& path, const Json& j);

BipartiteCut parse_cut(const std::string& text);

// 12 significant digits; "inf" is the sole spelling of +infinity.
std::string format_numeric(double v);

}  // namespace resmex
