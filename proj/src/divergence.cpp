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

#include "resmex/divergence.hpp"

#include <algorithm>
#include <cmath>

#include "resmex/oneshot.hpp"
#include "resmex/random_ensembles.hpp"

namespace resmex {

namespace {

constexpr double kClassicalZero = 1e-14;

void require_same_dim(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("states have dims " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Sum of sqrt of eigenvalues of sqrt(a) b sqrt(a) = ||sqrt(a) sqrt(b)||_1.
double nuclear_norm_of_sqrt_product(const Matrix& a, const Matrix& b,
                                    const Tolerances& tol) {
  const Matrix ra = matrix_power_on_support(a, 0.5, tol.support_cutoff, tol);
  const Matrix m = ra * b * ra;
  const EigenDecomposition es = eigh(0.5 * (m + m.adjoint()), tol);
  double f = 0.0;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    f += std::sqrt(std::max(0.0, es.eigenvalues(i)));
  }
  return f;
}

// Tr[(psd)^exponent] over the support.
double trace_power(const Matrix& psd, double exponent, const Tolerances& tol) {
  const EigenDecomposition es = eigh(0.5 * (psd + psd.adjoint()), tol);
  const double lambda_max = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  if (lambda_max <= 0.0) return 0.0;
  const double cut = tol.support_cutoff * lambda_max;
  double sum = 0.0;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > cut) sum += std::pow(es.eigenvalues(i), exponent);
  }
  return sum;
}

}  // namespace

std::string to_string(RenyiVariant v) {
  switch (v) {
    case RenyiVariant::Petz: return "petz";
    case RenyiVariant::Sandwiched: return "sandwiched";
    case RenyiVariant::Geometric: return "geometric";
  }
  return "?";
}

void validate_alpha(RenyiVariant variant, double alpha) {
  if (std::isnan(alpha)) throw AlphaOutOfRange("alpha is NaN");
  switch (variant) {
    case RenyiVariant::Petz:
      if (!(alpha > 0.0 && alpha <= 2.0)) {
        throw AlphaOutOfRange("petz needs alpha in (0,1) u (1,2], got " +
                              std::to_string(alpha));
      }
      return;
    case RenyiVariant::Sandwiched:
      if (!(alpha >= 0.0)) {
        throw AlphaOutOfRange("sandwiched needs alpha in [0,1) u (1,inf], got " +
                              std::to_string(alpha));
      }
      return;
    case RenyiVariant::Geometric:
      if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw AlphaOutOfRange("geometric needs alpha in (0,1) u (1,2], got " +
                              std::to_string(alpha));
      }
      return;
  }
}

DivergenceValue trace_distance(const DensityState& rho,
                               const DensityState& sigma,
                               const Tolerances& tol) {
  require_same_dim(rho, sigma);
  // Canonical argument order keeps the value bit-exactly symmetric.
  const bool flip = matrix_lex_less(sigma.matrix, rho.matrix);
  const Matrix diff = flip ? Matrix(sigma.matrix - rho.matrix)
                           : Matrix(rho.matrix - sigma.matrix);
  const EigenDecomposition es = eigh(diff, tol);
  return clamp01(0.5 * es.eigenvalues.cwiseAbs().sum());
}

DivergenceValue fidelity(const DensityState& rho, const DensityState& sigma,
                         const Tolerances& tol) {
  require_same_dim(rho, sigma);
  const bool flip = matrix_lex_less(sigma.matrix, rho.matrix);
  const Matrix& a = flip ? sigma.matrix : rho.matrix;
  const Matrix& b = flip ? rho.matrix : sigma.matrix;
  return clamp01(nuclear_norm_of_sqrt_product(a, b, tol));
}

DivergenceValue umegaki(const DensityState& rho, const DensityState& sigma,
                        const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    return DivergenceValue::infinity();
  }
  const EigenDecomposition er = eigh(rho.matrix, tol);
  const double rmax = er.eigenvalues.size() ? er.eigenvalues(0) : 0.0;
  if (rmax <= 0.0) throw ZeroState("umegaki of the zero operator");
  const double rcut = tol.support_cutoff * rmax;
  double self = 0.0;
  for (Index i = 0; i < er.eigenvalues.size(); ++i) {
    const double lambda = er.eigenvalues(i);
    if (lambda > rcut) self += lambda * std::log2(lambda);
  }
  const EigenDecomposition esig = eigh(sigma.matrix, tol);
  const double smax = esig.eigenvalues.size() ? esig.eigenvalues(0) : 0.0;
  const double scut = tol.support_cutoff * smax;
  double cross = 0.0;
  for (Index j = 0; j < esig.eigenvalues.size(); ++j) {
    const double mu = esig.eigenvalues(j);
    if (mu > scut) {
      const double weight =
          (esig.eigenvectors.col(j).adjoint() * rho.matrix *
           esig.eigenvectors.col(j))(0)
              .real();
      cross += std::max(0.0, weight) * std::log2(mu);
    }
  }
  return self - cross;
}

double d_min_overlap(const DensityState& rho, const DensityState& sigma,
                     const Tolerances& tol) {
  require_same_dim(rho, sigma);
  const Matrix proj = support_projector(rho, tol);
  return (proj * sigma.matrix).trace().real();
}

DivergenceValue d_min(const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol) {
  const double overlap = d_min_overlap(rho, sigma, tol);
  if (overlap <= tol.orthogonality) return DivergenceValue::infinity();
  return -std::log2(overlap);
}

DivergenceValue d_max(const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol) {
  require_same_dim(rho, sigma);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    return DivergenceValue::infinity();
  }
  const Matrix si =
      matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
  const Matrix pencil = si * rho.matrix * si;
  const EigenDecomposition es = eigh(0.5 * (pencil + pencil.adjoint()), tol);
  const double top = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  if (top <= 0.0) throw ZeroState("d_max of the zero operator");
  return std::log2(top);
}

DivergenceValue renyi(RenyiVariant variant, double alpha,
                      const DensityState& rho, const DensityState& sigma,
                      const Tolerances& tol) {
  validate_alpha(variant, alpha);
  require_same_dim(rho, sigma);
  switch (variant) {
    case RenyiVariant::Petz: {
      if (alpha == 1.0) return umegaki(rho, sigma, tol);
      if (alpha > 1.0 && !support_contained(rho.matrix, sigma.matrix, tol)) {
        return DivergenceValue::infinity();
      }
      if (alpha < 1.0 && supports_orthogonal(rho.matrix, sigma.matrix, tol)) {
        return DivergenceValue::infinity();
      }
      const Matrix ra =
          matrix_power_on_support(rho.matrix, alpha, tol.support_cutoff, tol);
      const Matrix sb = matrix_power_on_support(sigma.matrix, 1.0 - alpha,
                                                tol.support_cutoff, tol);
      const double t = (ra * sb).trace().real();
      if (t <= 0.0) return DivergenceValue::infinity();
      return std::log2(t) / (alpha - 1.0);
    }
    case RenyiVariant::Sandwiched: {
      if (alpha == 1.0) return umegaki(rho, sigma, tol);
      if (std::isinf(alpha)) return d_max(rho, sigma, tol);
      if (alpha == 0.5) {
        if (supports_orthogonal(rho.matrix, sigma.matrix, tol)) {
          return DivergenceValue::infinity();
        }
        const double f = fidelity(rho, sigma, tol).value();
        if (f <= 0.0) return DivergenceValue::infinity();
        return -2.0 * std::log2(f);
      }
      if (alpha < 0.5) {
        // Transposed-exponent branch from the symmetry
        // D_a(p||q) = a/(1-a) D_a(q||p); needs rho not orthogonal to sigma.
        if (supports_orthogonal(rho.matrix, sigma.matrix, tol)) {
          return DivergenceValue::infinity();
        }
        const double c = alpha / (2.0 * (1.0 - alpha));
        const Matrix ra =
            matrix_power_on_support(rho.matrix, c, tol.support_cutoff, tol);
        const double t = trace_power(ra * sigma.matrix * ra, 1.0 - alpha, tol);
        if (t <= 0.0) return DivergenceValue::infinity();
        return std::log2(t) / (alpha - 1.0);
      }
      if (alpha < 1.0) {
        if (supports_orthogonal(rho.matrix, sigma.matrix, tol) &&
            !support_contained(rho.matrix, sigma.matrix, tol)) {
          return DivergenceValue::infinity();
        }
      } else if (!support_contained(rho.matrix, sigma.matrix, tol)) {
        return DivergenceValue::infinity();
      }
      const double c = (1.0 - alpha) / (2.0 * alpha);
      const Matrix sc =
          matrix_power_on_support(sigma.matrix, c, tol.support_cutoff, tol);
      const double t = trace_power(sc * rho.matrix * sc, alpha, tol);
      if (t <= 0.0) return DivergenceValue::infinity();
      return std::log2(t) / (alpha - 1.0);
    }
    case RenyiVariant::Geometric: {
      if (!support_contained(rho.matrix, sigma.matrix, tol)) {
        return DivergenceValue::infinity();
      }
      const Matrix si =
          matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
      const Matrix pencil = si * rho.matrix * si;
      const Matrix powered = matrix_power_on_support(
          0.5 * (pencil + pencil.adjoint()), alpha, tol.support_cutoff, tol);
      const double t = (sigma.matrix * powered).trace().real();
      if (t <= 0.0) return DivergenceValue::infinity();
      return std::log2(t) / (alpha - 1.0);
    }
  }
  throw Error("unreachable renyi variant");
}

DivergenceValue classical_divergence(RenyiVariant variant, double alpha,
                                     const ClassicalDistribution& p,
                                     const ClassicalDistribution& q) {
  validate_alpha(variant, alpha);
  if (p.dim() != q.dim()) {
    throw DimMismatch("distributions have dims " + std::to_string(p.dim()) +
                      " and " + std::to_string(q.dim()));
  }
  const Index d = p.dim();
  if (alpha == 1.0) {
    double s = 0.0;
    for (Index i = 0; i < d; ++i) {
      const double pi = p.probs(i);
      if (pi <= kClassicalZero) continue;
      if (q.probs(i) <= kClassicalZero) return DivergenceValue::infinity();
      s += pi * std::log2(pi / q.probs(i));
    }
    return s;
  }
  if (std::isinf(alpha)) {
    double top = 0.0;
    for (Index i = 0; i < d; ++i) {
      const double pi = p.probs(i);
      if (pi <= kClassicalZero) continue;
      if (q.probs(i) <= kClassicalZero) return DivergenceValue::infinity();
      top = std::max(top, pi / q.probs(i));
    }
    if (top <= 0.0) return DivergenceValue::infinity();
    return std::log2(top);
  }
  double s = 0.0;
  for (Index i = 0; i < d; ++i) {
    const double pi = p.probs(i);
    const double qi = q.probs(i);
    if (pi <= kClassicalZero) continue;
    if (qi <= kClassicalZero) {
      if (alpha > 1.0) return DivergenceValue::infinity();
      continue;  // alpha < 1: p^a q^(1-a) -> 0
    }
    s += std::pow(pi, alpha) * std::pow(qi, 1.0 - alpha);
  }
  if (s <= 0.0) return DivergenceValue::infinity();
  return std::log2(s) / (alpha - 1.0);
}

std::string strategy_name(const MeasurementStrategy& s) {
  if (std::holds_alternative<PencilEigenbasis>(s)) return "pencil_eigenbasis";
  if (const auto* r = std::get_if<RandomProjective>(&s)) {
    return "random_projective(k=" + std::to_string(r->outcomes) + ")";
  }
  return "explicit_povm";
}

std::pair<ClassicalDistribution, ClassicalDistribution> measurement_statistics(
    const DensityState& rho, const DensityState& sigma,
    const MeasurementStrategy& strategy, const Tolerances& tol) {
  require_same_dim(rho, sigma);
  const Index d = rho.dim();
  Povm povm;
  if (std::holds_alternative<PencilEigenbasis>(strategy)) {
    // Rank-1 projectors onto eigenvectors of sigma^-1/2 rho sigma^-1/2.
    // For commuting pairs this is a common eigenbasis, where the measured
    // value is exactly the classical divergence of the spectra.
    const Matrix si =
        matrix_power_on_support(sigma.matrix, -0.5, tol.support_cutoff, tol);
    const Matrix pencil = si * rho.matrix * si;
    const EigenDecomposition es = eigh(0.5 * (pencil + pencil.adjoint()), tol);
    std::vector<Matrix> effects;
    effects.reserve(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
      effects.push_back(es.eigenvectors.col(i) *
                        es.eigenvectors.col(i).adjoint());
    }
    povm = Povm{std::move(effects)};
  } else if (const auto* r = std::get_if<RandomProjective>(&strategy)) {
    povm = random_povm(d, r->outcomes, r->seed);
  } else {
    povm = validate_povm(std::get<ExplicitPovm>(strategy).povm.effects, tol);
  }
  return {measure(povm, rho), measure(povm, sigma)};
}

DivergenceValue measured_divergence(RenyiVariant variant, double alpha,
                                    const DensityState& rho,
                                    const DensityState& sigma,
                                    const MeasurementStrategy& strategy,
                                    const Tolerances& tol) {
  validate_alpha(variant, alpha);
  const auto [p, q] = measurement_statistics(rho, sigma, strategy, tol);
  return classical_divergence(variant, alpha, p, q);
}

DivergenceValue evaluate(const DivergenceSpec& spec, const DensityState& rho,
                         const DensityState& sigma, const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  switch (spec.kind) {
    case Kind::TraceDistance: return trace_distance(rho, sigma, tol);
    case Kind::Fidelity: return fidelity(rho, sigma, tol);
    case Kind::Umegaki: return umegaki(rho, sigma, tol);
    case Kind::DMin: return d_min(rho, sigma, tol);
    case Kind::DMax: return d_max(rho, sigma, tol);
    case Kind::Petz:
      return renyi(RenyiVariant::Petz, spec.alpha, rho, sigma, tol);
    case Kind::Sandwiched:
      return renyi(RenyiVariant::Sandwiched, spec.alpha, rho, sigma, tol);
    case Kind::Geometric:
      return renyi(RenyiVariant::Geometric, spec.alpha, rho, sigma, tol);
    case Kind::DsEpsilon: return d_s_epsilon(rho, sigma, spec.epsilon, tol);
    case Kind::DhEpsilon: return d_h_epsilon(rho, sigma, spec.epsilon, tol);
    case Kind::MeasuredPencil:
      return measured_divergence(RenyiVariant::Sandwiched, spec.alpha, rho,
                                 sigma, PencilEigenbasis{}, tol);
  }
  throw Error("unreachable divergence kind");
}

DivergenceSpec parse_divergence_name(const std::string& name, double alpha,
                                     double epsilon) {
  using Kind = DivergenceSpec::Kind;
  DivergenceSpec spec;
  spec.alpha = alpha;
  spec.epsilon = epsilon;
  if (name == "trace-distance") spec.kind = Kind::TraceDistance;
  else if (name == "fidelity") spec.kind = Kind::Fidelity;
  else if (name == "umegaki" || name == "kl") spec.kind = Kind::Umegaki;
  else if (name == "dmin") spec.kind = Kind::DMin;
  else if (name == "dmax") spec.kind = Kind::DMax;
  else if (name == "petz") spec.kind = Kind::Petz;
  else if (name == "sandwiched") spec.kind = Kind::Sandwiched;
  else if (name == "geometric") spec.kind = Kind::Geometric;
  else if (name == "ds") spec.kind = Kind::DsEpsilon;
  else if (name == "dh") spec.kind = Kind::DhEpsilon;
  else if (name == "measured-pencil") spec.kind = Kind::MeasuredPencil;
  else throw ParseError("unknown divergence '" + name + "'");
  return spec;
}

std::string to_string(const DivergenceSpec& spec) {
  using Kind = DivergenceSpec::Kind;
  switch (spec.kind) {
    case Kind::TraceDistance: return "trace-distance";
    case Kind::Fidelity: return "fidelity";
    case Kind::Umegaki: return "umegaki";
    case Kind::DMin: return "dmin";
    case Kind::DMax: return "dmax";
    case Kind::Petz: return "petz(" + std::to_string(spec.alpha) + ")";
    case Kind::Sandwiched:
      return "sandwiched(" + std::to_string(spec.alpha) + ")";
    case Kind::Geometric:
      return "geometric(" + std::to_string(spec.alpha) + ")";
    case Kind::DsEpsilon: return "ds(" + std::to_string(spec.epsilon) + ")";
    case Kind::DhEpsilon: return "dh(" + std::to_string(spec.epsilon) + ")";
    case Kind::MeasuredPencil:
      return "measured-pencil(" + std::to_string(spec.alpha) + ")";
  }
  return "?";
}

bool divergence_supports_tni(DivergenceSpec::Kind kind) {
  using Kind = DivergenceSpec::Kind;
  switch (kind) {
    // The subnormalized extension module supplies the TNI-monotone versions
    // of these; the normalized-theory quantities themselves are only
    // guaranteed monotone under CPTP maps. d_min in particular can increase
    // under trace-non-increasing maps.
    case Kind::TraceDistance:
    case Kind::Fidelity:
    case Kind::Umegaki:
    case Kind::DMin:
    case Kind::DMax:
    case Kind::Petz:
    case Kind::Sandwiched:
    case Kind::Geometric:
    case Kind::DsEpsilon:
    case Kind::DhEpsilon:
    case Kind::MeasuredPencil:
      return false;
  }
  return false;
}

}  // namespace resmex
