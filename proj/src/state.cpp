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

#include "resmex/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace resmex {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw BadShape("matrix must be square, got " + std::to_string(m.rows()) +
                   "x" + std::to_string(m.cols()));
  }
}

double hermiticity_violation(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

double spectral_scale(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

DensityState validate_state(const Matrix& m, TraceClass trace_class,
                            const Tolerances& tol) {
  require_square(m);
  const double scale = std::max(1.0, spectral_scale(m));
  const double herm = hermiticity_violation(m);
  if (herm > tol.herm * scale) {
    throw NotHermitian("||M - M^dag||_max = " + fmt(herm) + " exceeds " +
                       fmt(tol.herm * scale));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();
  const double spectral = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  const double floor = tol.psd * spectral;
  const double lambda_min = ev.size() ? ev.minCoeff() : 0.0;
  if (lambda_min < -floor) {
    throw NotPositive("lambda_min = " + fmt(lambda_min) +
                      " below -" + fmt(floor));
  }
  const Complex tr = m.trace();
  if (std::abs(tr.imag()) > tol.trace) {
    throw BadTrace("trace has imaginary part " + fmt(tr.imag()));
  }
  const double t = tr.real();
  const double lo = trace_class == TraceClass::Normalized ? 1.0 - tol.trace
                                                          : -tol.trace;
  if (t < lo || t > 1.0 + tol.trace) {
    throw BadTrace("trace = " + fmt(t) + " outside [" + fmt(lo) + ", " +
                   fmt(1.0 + tol.trace) + "]");
  }
  return {m, trace_class};
}

PureState validate_pure(const Vector& v, const Tolerances& tol) {
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > tol.trace) {
    throw BadTrace("pure state norm = " + fmt(norm) + ", expected 1");
  }
  return {v};
}

ClassicalDistribution validate_distribution(const RealVector& p,
                                            const Tolerances& tol) {
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) < -tol.psd) {
      throw NotPositive("entry " + std::to_string(i) + " = " + fmt(p(i)));
    }
  }
  const double sum = p.sum();
  if (std::abs(sum - 1.0) > tol.trace) {
    throw BadTrace("probabilities sum to " + fmt(sum));
  }
  return {p};
}

EigenDecomposition eigh(const Matrix& m, const Tolerances& tol) {
  require_square(m);
  const double scale = std::max(1.0, spectral_scale(m));
  const double herm = hermiticity_violation(m);
  if (herm > tol.herm * scale) {
    throw NotHermitian("||M - M^dag||_max = " + fmt(herm) + " exceeds " +
                       fmt(tol.herm * scale));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  const Index d = m.rows();
  EigenDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  // Eigen returns ascending order; flip to descending.
  for (Index i = 0; i < d; ++i) {
    out.eigenvalues(i) = es.eigenvalues()(d - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  // Phase convention: first component of noticeable magnitude real positive.
  for (Index i = 0; i < d; ++i) {
    auto col = out.eigenvectors.col(i);
    const double colmax = col.cwiseAbs().maxCoeff();
    for (Index k = 0; k < d; ++k) {
      const double mag = std::abs(col(k));
      if (mag > 1e-12 * colmax) {
        col *= std::conj(col(k)) / mag;
        break;
      }
    }
  }
  return out;
}

Matrix support_projector(const Matrix& psd, double relative_cutoff,
                         const Tolerances& tol) {
  const EigenDecomposition es = eigh(psd, tol);
  const double lambda_max = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  if (lambda_max <= 0.0) {
    throw ZeroState("all eigenvalues below cutoff, lambda_max = " +
                    fmt(lambda_max));
  }
  const double cut = relative_cutoff * lambda_max;
  const Index d = psd.rows();
  Matrix p = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    if (es.eigenvalues(i) > cut) {
      p += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
  }
  return p;
}

Matrix support_projector(const DensityState& rho, const Tolerances& tol) {
  return support_projector(rho.matrix, tol.support_cutoff, tol);
}

Matrix matrix_power_on_support(const Matrix& psd, double exponent,
                               double relative_cutoff, const Tolerances& tol) {
  const EigenDecomposition es = eigh(psd, tol);
  const Index d = psd.rows();
  const double lambda_max = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  Matrix out = Matrix::Zero(d, d);
  if (lambda_max <= 0.0) return out;
  const double cut = relative_cutoff * lambda_max;
  for (Index i = 0; i < d; ++i) {
    const double lambda = es.eigenvalues(i);
    if (lambda > cut) {
      out += std::pow(lambda, exponent) * es.eigenvectors.col(i) *
             es.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

Matrix matrix_power_on_support(const DensityState& rho, double exponent,
                               const Tolerances& tol) {
  return matrix_power_on_support(rho.matrix, exponent, tol.support_cutoff,
                                 tol);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityState tensor(const DensityState& a, const DensityState& b) {
  const TraceClass tc = (a.trace_class == TraceClass::Normalized &&
                         b.trace_class == TraceClass::Normalized)
                            ? TraceClass::Normalized
                            : TraceClass::Subnormalized;
  return {kron(a.matrix, b.matrix), tc};
}

DensityState tensor_power(const DensityState& rho, int n, Index dim_cap) {
  if (n < 1) throw BadShape("tensor power needs n >= 1, got " + std::to_string(n));
  double total = 1.0;
  for (int k = 0; k < n; ++k) {
    total *= static_cast<double>(rho.dim());
    if (total > static_cast<double>(dim_cap)) {
      throw DimCap("dim^" + std::to_string(n) + " exceeds cap " +
                   std::to_string(dim_cap));
    }
  }
  DensityState out = rho;
  for (int k = 1; k < n; ++k) out = tensor(out, rho);
  return out;
}

PureState purify(const DensityState& rho, const Tolerances& tol) {
  const Index d = rho.dim();
  const Matrix root = matrix_power_on_support(rho, 0.5, tol);
  Vector amp(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index k = 0; k < d; ++k) {
      amp(i * d + k) = root(i, k);
    }
  }
  amp /= amp.norm();
  return {amp};
}

Matrix partial_trace_first(const Matrix& joint, Index dim_a, Index dim_b) {
  if (joint.rows() != dim_a * dim_b) {
    throw DimMismatch("joint dim " + std::to_string(joint.rows()) +
                      " != " + std::to_string(dim_a * dim_b));
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index a = 0; a < dim_a; ++a) {
    out += joint.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return out;
}

Matrix partial_trace_second(const Matrix& joint, Index dim_a, Index dim_b) {
  if (joint.rows() != dim_a * dim_b) {
    throw DimMismatch("joint dim " + std::to_string(joint.rows()) +
                      " != " + std::to_string(dim_a * dim_b));
  }
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      Complex s = 0.0;
      for (Index k = 0; k < dim_b; ++k) {
        s += joint(i * dim_b + k, j * dim_b + k);
      }
      out(i, j) = s;
    }
  }
  return out;
}

DensityState sanitize_state(const Matrix& m, TraceClass trace_class,
                            const Tolerances& tol) {
  require_square(m);
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Index d = m.rows();
  Matrix out = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double lambda = std::max(0.0, es.eigenvalues()(i));
    out += lambda * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  const double tr = out.trace().real();
  if (trace_class == TraceClass::Normalized) {
    if (tr <= 0.0) throw ZeroState("cannot normalize the zero matrix");
    out /= tr;
  } else if (tr > 1.0) {
    out /= tr;
  }
  return {out, trace_class};
}

bool support_contained(const Matrix& rho, const Matrix& sigma,
                       const Tolerances& tol) {
  Matrix proj;
  try {
    proj = support_projector(sigma, tol.support_cutoff, tol);
  } catch (const ZeroState&) {
    // sigma = 0: containment only if rho is (numerically) zero as well.
    return spectral_scale(rho) <= tol.support_containment;
  }
  const Index d = rho.rows();
  const Matrix off = (Matrix::Identity(d, d) - proj);
  const Matrix leak = off * rho * off;
  const EigenDecomposition es = eigh(0.5 * (leak + leak.adjoint()), tol);
  const double inf_norm =
      es.eigenvalues.size() ? es.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return inf_norm <= tol.support_containment;
}

bool supports_orthogonal(const Matrix& rho, const Matrix& sigma,
                         const Tolerances& tol) {
  const Matrix pr = support_projector(rho, tol.support_cutoff, tol);
  const Matrix ps = support_projector(sigma, tol.support_cutoff, tol);
  return (pr * ps).trace().real() <= tol.orthogonality;
}

bool matrix_lex_less(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).real() != b(i, j).real()) return a(i, j).real() < b(i, j).real();
      if (a(i, j).imag() != b(i, j).imag()) return a(i, j).imag() < b(i, j).imag();
    }
  }
  return false;
}

}  // namespace resmex
