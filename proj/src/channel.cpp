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

#include "resmex/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace resmex {

QuantumChannel validate_channel(std::vector<Matrix> kraus, ChannelKind kind,
                                const Tolerances& tol) {
  if (kraus.empty()) throw BadShape("channel needs at least one Kraus operator");
  const Index out = kraus.front().rows();
  const Index in = kraus.front().cols();
  for (const Matrix& k : kraus) {
    if (k.rows() != out || k.cols() != in) {
      throw BadShape("Kraus operators disagree on shape");
    }
  }
  Matrix sum = Matrix::Zero(in, in);
  for (const Matrix& k : kraus) sum += k.adjoint() * k;
  if (kind == ChannelKind::Cptp) {
    const double dev = (sum - Matrix::Identity(in, in)).cwiseAbs().maxCoeff();
    if (dev > tol.trace_preserving) {
      throw NotTracePreserving("||sum K^dag K - I||_max = " +
                               std::to_string(dev));
    }
  } else {
    const EigenDecomposition es = eigh(sum - Matrix::Identity(in, in), tol);
    const double excess = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
    if (excess > tol.trace_preserving) {
      throw NotTracePreserving("sum K^dag K exceeds I by " +
                               std::to_string(excess));
    }
  }
  return {std::move(kraus), in, out, kind};
}

Povm validate_povm(std::vector<Matrix> effects, const Tolerances& tol) {
  if (effects.empty()) throw BadPovm("no effects");
  const Index d = effects.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : effects) {
    if (e.rows() != d || e.cols() != d) throw BadPovm("effect shape mismatch");
    const double herm = (e - e.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.herm * std::max(1.0, spectral_scale(e))) {
      throw BadPovm("effect not Hermitian, violation " + std::to_string(herm));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (e + e.adjoint()),
                                             Eigen::EigenvaluesOnly);
    const double spectral =
        es.eigenvalues().size() ? es.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
    if (es.eigenvalues().minCoeff() < -tol.psd * std::max(1.0, spectral)) {
      throw BadPovm("effect not PSD, lambda_min = " +
                    std::to_string(es.eigenvalues().minCoeff()));
    }
    sum += e;
  }
  const double dev = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol.trace_preserving) {
    throw BadPovm("effects sum deviates from I by " + std::to_string(dev));
  }
  return {std::move(effects)};
}

DensityState apply_channel(const QuantumChannel& ch, const DensityState& rho) {
  if (rho.dim() != ch.in_dim) {
    throw DimMismatch("channel expects dim " + std::to_string(ch.in_dim) +
                      ", state has dim " + std::to_string(rho.dim()));
  }
  Matrix out = Matrix::Zero(ch.out_dim, ch.out_dim);
  for (const Matrix& k : ch.kraus) out += k * rho.matrix * k.adjoint();
  const TraceClass tc = (ch.kind == ChannelKind::Cptp &&
                         rho.trace_class == TraceClass::Normalized)
                            ? TraceClass::Normalized
                            : TraceClass::Subnormalized;
  return {out, tc};
}

ClassicalDistribution measure(const Povm& povm, const DensityState& rho) {
  if (povm.dim() != rho.dim()) {
    throw DimMismatch("POVM dim " + std::to_string(povm.dim()) +
                      " != state dim " + std::to_string(rho.dim()));
  }
  RealVector p(static_cast<Index>(povm.effects.size()));
  for (Index x = 0; x < p.size(); ++x) {
    p(x) = std::max(0.0, (povm.effects[static_cast<size_t>(x)] * rho.matrix)
                             .trace()
                             .real());
  }
  const double sum = p.sum();
  if (sum > 0.0) p /= sum;
  return {p};
}

}  // namespace resmex
