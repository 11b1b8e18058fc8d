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

#include <Eigen/Dense>
#include <complex>

#include "resmex/errors.hpp"
#include "resmex/tolerances.hpp"

namespace resmex {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class TraceClass { Normalized, Subnormalized };

// Hermitian PSD matrix with trace 1 (Normalized) or trace <= 1
// (Subnormalized). Construct through validate_state whenever the matrix
// comes from outside the library; operations whose outputs are valid by
// construction build the struct directly.
struct DensityState {
  Matrix matrix;
  TraceClass trace_class = TraceClass::Normalized;

  Index dim() const { return matrix.rows(); }
  double trace() const { return matrix.trace().real(); }
};

struct PureState {
  Vector amplitudes;

  Index dim() const { return amplitudes.size(); }
  DensityState to_density() const {
    return {amplitudes * amplitudes.adjoint(), TraceClass::Normalized};
  }
};

// Probability vector, viewed as a diagonal state in the fixed classical basis.
struct ClassicalDistribution {
  RealVector probs;

  Index dim() const { return probs.size(); }
  DensityState to_density() const {
    Matrix m = Matrix::Zero(probs.size(), probs.size());
    for (Index i = 0; i < probs.size(); ++i) m(i, i) = probs(i);
    return {m, TraceClass::Normalized};
  }
};

// Real spectrum in descending order; eigenvectors as columns, each with the
// deterministic phase convention (first nonzero component real positive).
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

double spectral_scale(const Matrix& m);

DensityState validate_state(const Matrix& m, TraceClass trace_class,
                            const Tolerances& tol = default_tolerances());
PureState validate_pure(const Vector& v,
                        const Tolerances& tol = default_tolerances());
ClassicalDistribution validate_distribution(
    const RealVector& p, const Tolerances& tol = default_tolerances());

EigenDecomposition eigh(const Matrix& m,
                        const Tolerances& tol = default_tolerances());

// Projector onto the eigenspaces of a PSD matrix with eigenvalue above
// relative_cutoff * lambda_max. Throws ZeroState when nothing survives.
Matrix support_projector(const Matrix& psd, double relative_cutoff,
                         const Tolerances& tol = default_tolerances());
Matrix support_projector(const DensityState& rho,
                         const Tolerances& tol = default_tolerances());

// lambda^exponent on eigenvalues above relative_cutoff * lambda_max, zero
// elsewhere. Negative exponents give the pseudo-inverse power on the support;
// exponent 0 gives the support projector.
Matrix matrix_power_on_support(const Matrix& psd, double exponent,
                               double relative_cutoff,
                               const Tolerances& tol = default_tolerances());
Matrix matrix_power_on_support(const DensityState& rho, double exponent,
                               const Tolerances& tol = default_tolerances());

Matrix kron(const Matrix& a, const Matrix& b);
DensityState tensor(const DensityState& a, const DensityState& b);
DensityState tensor_power(const DensityState& rho, int n,
                          Index dim_cap = 4096);

// Canonical purification on dim^2: amplitudes[i*d + k] = sqrt(rho)(i, k),
// so the partial trace over the second factor recovers rho.
PureState purify(const DensityState& rho,
                 const Tolerances& tol = default_tolerances());

Matrix partial_trace_first(const Matrix& joint, Index dim_a, Index dim_b);
Matrix partial_trace_second(const Matrix& joint, Index dim_a, Index dim_b);

// Test-data helper only: projects onto the nearest state (hermitize, clip
// negative eigenvalues, rescale the trace). validate_state never corrects.
DensityState sanitize_state(const Matrix& m, TraceClass trace_class,
                            const Tolerances& tol = default_tolerances());

// True when ||(I - P_sigma) rho (I - P_sigma)||_inf <= tol.support_containment.
bool support_contained(const Matrix& rho, const Matrix& sigma,
                       const Tolerances& tol = default_tolerances());

// True when Tr[P_rho P_sigma] <= tol.orthogonality.
bool supports_orthogonal(const Matrix& rho, const Matrix& sigma,
                         const Tolerances& tol = default_tolerances());

// Deterministic lexicographic order on (dim, entries); used to evaluate
// symmetric quantities in a canonical argument order.
bool matrix_lex_less(const Matrix& a, const Matrix& b);

}  // namespace resmex
