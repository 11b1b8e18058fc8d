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

#include <limits>
#include <string>
#include <variant>

#include "resmex/channel.hpp"
#include "resmex/state.hpp"

namespace resmex {

// Extended real in log base 2: any finite double or +infinity, never NaN.
// +infinity propagates absorbingly through sums; inf - inf is an error.
class DivergenceValue {
 public:
  DivergenceValue() = default;
  DivergenceValue(double v) : v_(v) {  // NOLINT: implicit by design
    if (std::isnan(v)) throw IndeterminateValue("divergence value is NaN");
  }

  static DivergenceValue infinity() {
    return DivergenceValue(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return std::isinf(v_); }
  bool is_finite() const { return !std::isinf(v_); }
  double value() const { return v_; }

  friend DivergenceValue operator+(DivergenceValue a, DivergenceValue b) {
    return DivergenceValue(a.v_ + b.v_);
  }
  friend DivergenceValue operator-(DivergenceValue a, DivergenceValue b) {
    if (a.is_infinite() && b.is_infinite()) {
      throw IndeterminateValue("infinity minus infinity");
    }
    if (b.is_infinite()) {
      throw IndeterminateValue("subtracting infinity gives -infinity");
    }
    return DivergenceValue(a.v_ - b.v_);
  }
  friend bool operator<(DivergenceValue a, DivergenceValue b) { return a.v_ < b.v_; }
  friend bool operator<=(DivergenceValue a, DivergenceValue b) { return a.v_ <= b.v_; }
  friend bool operator>(DivergenceValue a, DivergenceValue b) { return a.v_ > b.v_; }
  friend bool operator>=(DivergenceValue a, DivergenceValue b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

enum class RenyiVariant { Petz, Sandwiched, Geometric };

std::string to_string(RenyiVariant v);

// Validity window of the Renyi order for each variant. alpha = 1 routes to
// the Umegaki relative entropy for Petz/Sandwiched and is rejected for
// Geometric; alpha = +infinity is accepted for Sandwiched only.
void validate_alpha(RenyiVariant variant, double alpha);

/// 1/2 * ||rho - sigma||_1 on normalized pairs.
DivergenceValue trace_distance(const DensityState& rho, const DensityState& sigma,
                               const Tolerances& tol = default_tolerances());

/// ||sqrt(rho) sqrt(sigma)||_1; 1 iff the states coincide. Evaluated in a
/// canonical argument order so the value is exactly symmetric.
DivergenceValue fidelity(const DensityState& rho, const DensityState& sigma,
                         const Tolerances& tol = default_tolerances());

/// Tr[rho log2 rho] - Tr[rho log2 sigma] on supports; +infinity when
/// supp(rho) is not contained in supp(sigma).
DivergenceValue umegaki(const DensityState& rho, const DensityState& sigma,
                        const Tolerances& tol = default_tolerances());

/// -log2 Tr[P_rho sigma]; +infinity only when the overlap falls below the
/// orthogonality threshold (fail-closed on borderline overlaps).
DivergenceValue d_min(const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol = default_tolerances());

/// Raw overlap Tr[P_rho sigma] behind d_min, exposed for diagnostics.
double d_min_overlap(const DensityState& rho, const DensityState& sigma,
                     const Tolerances& tol = default_tolerances());

/// log2 of the largest generalized eigenvalue of the pencil (rho, sigma);
/// +infinity when supp(rho) is not contained in supp(sigma). Accepts
/// subnormalized inputs (the value may then be negative).
DivergenceValue d_max(const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol = default_tolerances());

// Renyi relative entropies.
//   Petz        (0,1) u (1,2]:  1/(a-1) log2 Tr[rho^a sigma^(1-a)]
//   Sandwiched  [0,1) u (1,inf]: the minimal quantum extension's closed form,
//               with the transposed-exponent branch on [0, 1/2) and the
//               "+infinity otherwise" case analysis
//   Geometric   (0,1) u (1,2]:  1/(a-1) log2 Tr[sigma (sigma^-1/2 rho
//               sigma^-1/2)^a], the maximal quantum extension on (0,2]
DivergenceValue renyi(RenyiVariant variant, double alpha,
                      const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol = default_tolerances());

// Classical Renyi/KL value with the 0 log 0 = 0 conventions; agrees with
// renyi() on diagonal embeddings. The variant gates the alpha window only.
DivergenceValue classical_divergence(RenyiVariant variant, double alpha,
                                     const ClassicalDistribution& p,
                                     const ClassicalDistribution& q);

// Measurement strategies for measured (lower-bound) divergences.
struct PencilEigenbasis {};
struct RandomProjective {
  Index outcomes = 2;
  std::uint64_t seed = 0;
};
struct ExplicitPovm {
  Povm povm;
};
using MeasurementStrategy =
    std::variant<PencilEigenbasis, RandomProjective, ExplicitPovm>;

std::string strategy_name(const MeasurementStrategy& s);

// Outcome distributions of the strategy's POVM on (rho, sigma).
std::pair<ClassicalDistribution, ClassicalDistribution> measurement_statistics(
    const DensityState& rho, const DensityState& sigma,
    const MeasurementStrategy& strategy,
    const Tolerances& tol = default_tolerances());

// Classical divergence of the measurement statistics. Any single measurement
// is a feasible point of the supremum defining the minimal quantum
// extension, so this is a lower bound on it.
DivergenceValue measured_divergence(RenyiVariant variant, double alpha,
                                    const DensityState& rho,
                                    const DensityState& sigma,
                                    const MeasurementStrategy& strategy,
                                    const Tolerances& tol = default_tolerances());

// Named divergence for registries (CLI, subnormalized extensions,
// regularization traces).
struct DivergenceSpec {
  enum class Kind {
    TraceDistance,
    Fidelity,
    Umegaki,
    DMin,
    DMax,
    Petz,
    Sandwiched,
    Geometric,
    DsEpsilon,
    DhEpsilon,
    MeasuredPencil,
  };
  Kind kind = Kind::Umegaki;
  double alpha = 1.0;
  double epsilon = 0.1;
};

DivergenceValue evaluate(const DivergenceSpec& spec, const DensityState& rho,
                         const DensityState& sigma,
                         const Tolerances& tol = default_tolerances());

DivergenceSpec parse_divergence_name(const std::string& name, double alpha,
                                     double epsilon);
std::string to_string(const DivergenceSpec& spec);

// Registry metadata: whether the divergence's data processing inequality is
// guaranteed under trace-non-increasing maps (rather than only CPTP).
bool divergence_supports_tni(DivergenceSpec::Kind kind);

}  // namespace resmex
