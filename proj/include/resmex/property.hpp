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
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "resmex/tolerances.hpp"

namespace resmex {

struct SuiteConfig {
  std::string suite;
  int trials = 100;
  std::vector<int> dims{2, 3};
  std::uint64_t seed = 0;
  double slack = 1e-8;
  // Suite-specific parameters (epsilon list, alpha list, n_max, ...).
  std::map<std::string, std::vector<double>> extra;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;  // derived stream seed; inputs reconstructible
  double measured_slack = 0.0;
  bool pass = true;
  std::map<std::string, double> diagnostics;
};

struct PropertyReport {
  std::string suite;
  SuiteConfig config;
  std::vector<TrialRecord> records;
  int pass_count = 0;
  double max_violation = 0.0;
  double wall_ms = 0.0;

  bool all_pass() const {
    return pass_count == static_cast<int>(records.size());
  }
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

const std::vector<SuiteInfo>& suite_registry();
bool suite_exists(const std::string& name);

// Deterministic for a fixed config: trial inputs derive from (seed, trial)
// and records carry bit-identical diagnostics across runs.
PropertyReport run_suite(const SuiteConfig& config,
                         const Tolerances& tol = default_tolerances());

// wall_ms is the one run-dependent field; drop it to compare reports.
nlohmann::json report_to_json(const PropertyReport& report,
                              bool include_wall_time = true);
std::string report_to_csv(const PropertyReport& report);

}  // namespace resmex
