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

namespace resmex {

// Numerical tolerances for double precision at dimensions up to 4096.
// herm/psd are applied relative to the spectral scale of the matrix under
// test; trace and trace_preserving are absolute.
struct Tolerances {
  double herm = 1e-9;
  double psd = 1e-9;
  double trace = 1e-9;
  double trace_preserving = 1e-8;
  double recon = 1e-10;
  // Eigenvalues below support_cutoff * lambda_max count as off the support.
  double support_cutoff = 1e-10;
  // supp(rho) <= supp(sigma) holds when ||(I-P)rho(I-P)||_inf stays below.
  double support_containment = 1e-9;
  // Overlap threshold below which two states count as orthogonal
  // (fail-closed: borderline overlaps yield +infinity, not huge values).
  double orthogonality = 1e-9;
  double divergence = 1e-8;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace resmex
