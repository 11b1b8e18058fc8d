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

#include "resmex/oneshot.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace resmex {

namespace {

void require_same_dim(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("states have dims " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw BadEpsilon("epsilon must lie in (0,1), got " + std::to_string(epsilon));
  }
}

// rho-mass on the eigenspaces of rho - t sigma with eigenvalue <= band.
double mass_nonpositive(const Matrix& rho, const Matrix& sigma, double t,
                        double band, const Tolerances& tol) {
  const Matrix a = rho - t * sigma;
  const EigenDecomposition es = eigh(0.5 * (a + a.adjoint()), tol);
  double mass = 0.0;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) <= band) {
      mass += std::max(
          0.0,
          (es.eigenvectors.col(i).adjoint() * rho * es.eigenvectors.col(i))(0)
              .real());
    }
  }
  return mass;
}

// Positive generalized eigenvalues of the pencil (rho, sigma), via the
// pseudo-inverse on supp(sigma). These are the candidate crossing points.
std::vector<double> pencil_breakpoints(const Matrix& rho, const Matrix& sigma,
                                       const Tolerances& tol) {
  const Matrix si = matrix_power_on_support(sigma, -0.5, tol.support_cutoff, tol);
  const Matrix pencil = si * rho * si;
  const EigenDecomposition es = eigh(0.5 * (pencil + pencil.adjoint()), tol);
  const double top = es.eigenvalues.size() ? es.eigenvalues(0) : 0.0;
  std::vector<double> points;
  for (Index i = es.eigenvalues.size() - 1; i >= 0; --i) {
    const double lambda = es.eigenvalues(i);
    if (lambda > 1e-13 * top) {
      if (points.empty() || lambda > points.back() * (1.0 + 1e-12)) {
        points.push_back(lambda);
      }
    }
  }
  return points;  // ascending, deduplicated
}

double input_scale(const Matrix& rho, const Matrix& sigma, double t) {
  return spectral_scale(rho) + std::abs(t) * spectral_scale(sigma) + 1e-300;
}

}  // namespace

DivergenceValue d_s_epsilon(const DensityState& rho, const DensityState& sigma,
                            double epsilon, const Tolerances& tol) {
  require_same_dim(rho, sigma);
  require_epsilon(epsilon);
  const Matrix& r = rho.matrix;
  const Matrix& s = sigma.matrix;
  const auto g = [&](double t) {
    return mass_nonpositive(r, s, t, 1e-12 * input_scale(r, s, t), tol);
  };
  const std::vector<double> breakpoints = pencil_breakpoints(r, s, tol);
  if (breakpoints.empty()) {
    // rho carries no mass on supp(sigma): the projector never captures it.
    return DivergenceValue::infinity();
  }

  double t_lo = breakpoints.front() * 0.5;
  if (g(t_lo) > epsilon) {
    // Should not happen for eps in (0,1): push the bracket down.
    for (int k = 0; k < 200 && g(t_lo) > epsilon; ++k) t_lo *= 0.5;
    if (g(t_lo) > epsilon) throw Error("d_s bracket not found from below");
  }
  double t_hi = -1.0;
  for (double bp : breakpoints) {
    if (g(bp) > epsilon) {
      t_hi = bp;
      break;
    }
    t_lo = bp;
  }
  if (t_hi < 0.0) {
    // No breakpoint crossed; mass beyond the last one approaches its limit.
    double probe = breakpoints.back();
    for (int k = 0; k < 80; ++k) {
      probe *= 4.0;
      if (g(probe) > epsilon) {
        t_hi = probe;
        break;
      }
      t_lo = probe;
    }
    if (t_hi < 0.0) return DivergenceValue::infinity();
  }

  for (int it = 0; it < 300 && (t_hi - t_lo) > 1e-13 * t_hi; ++it) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (g(mid) > epsilon) t_hi = mid;
    else t_lo = mid;
  }
  double t_star = 0.5 * (t_lo + t_hi);
  // Snap to an exact breakpoint when the crossing is a jump there, so
  // commuting pairs reproduce the classical enumeration exactly.
  for (double bp : breakpoints) {
    if (std::abs(t_star - bp) <= 1e-9 * bp) {
      t_star = bp;
      break;
    }
  }
  return std::log2(t_star);
}

DivergenceValue d_h_epsilon(const DensityState& rho, const DensityState& sigma,
                            double epsilon, const Tolerances& tol) {
  require_same_dim(rho, sigma);
  require_epsilon(epsilon);
  const Matrix& r = rho.matrix;
  const Matrix& s = sigma.matrix;
  const Index d = rho.dim();
  const double target = 1.0 - epsilon;

  // Mass of rho escaping supp(sigma) is testable at zero sigma-cost.
  if (!support_contained(r, s, tol)) {
    Matrix proj;
    try {
      proj = support_projector(s, tol.support_cutoff, tol);
    } catch (const ZeroState&) {
      proj = Matrix::Zero(d, d);
    }
    const Matrix outside = Matrix::Identity(d, d) - proj;
    const double free_mass = (outside * r).trace().real();
    if (free_mass >= target) return DivergenceValue::infinity();
  }

  struct Split {
    double rho_pos = 0, rho_zero = 0, sigma_pos = 0, sigma_zero = 0;
  };
  const auto split_at = [&](double t) {
    const double band = 1e-10 * input_scale(r, s, t);
    const Matrix a = r - t * s;
    const EigenDecomposition es = eigh(0.5 * (a + a.adjoint()), tol);
    Split out;
    for (Index i = 0; i < d; ++i) {
      const Vector v = es.eigenvectors.col(i);
      const double pr = std::max(0.0, (v.adjoint() * r * v)(0).real());
      const double ps = std::max(0.0, (v.adjoint() * s * v)(0).real());
      if (es.eigenvalues(i) > band) {
        out.rho_pos += pr;
        out.sigma_pos += ps;
      } else if (es.eigenvalues(i) >= -band) {
        out.rho_zero += pr;
        out.sigma_zero += ps;
      }
    }
    return out;
  };
  const auto strict_pos_mass = [&](double t) {
    const Split sp = split_at(t);
    return sp.rho_pos + sp.rho_zero;  // mass testable at threshold t
  };

  double t_lo = 0.0;  // full rho mass is testable at t = 0
  DivergenceValue dm = d_max(rho, sigma, tol);
  double t_hi;
  if (dm.is_finite()) {
    t_hi = std::exp2(dm.value()) + 1.0;
  } else {
    t_hi = 1.0;
    int k = 0;
    for (; k < 200 && strict_pos_mass(t_hi) >= target; ++k) t_hi *= 2.0;
    if (k == 200) return DivergenceValue::infinity();
  }
  for (int it = 0; it < 200 && (t_hi - t_lo) > 1e-12; ++it) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (strict_pos_mass(mid) >= target) t_lo = mid;
    else t_hi = mid;
  }

  // Build the Neyman-Pearson test at the converged threshold; distribute the
  // residual rho-mass uniformly over the zero eigenspace.
  const auto value_at = [&](double t) {
    const Split sp = split_at(t);
    double c = 0.0;
    if (sp.rho_zero > 1e-18) {
      c = std::clamp((target - sp.rho_pos) / sp.rho_zero, 0.0, 1.0);
    }
    const double achieved = sp.rho_pos + c * sp.rho_zero;
    const double cost = sp.sigma_pos + c * sp.sigma_zero;
    return std::pair<double, double>(achieved, cost);
  };
  double best_cost = -1.0;
  for (double t : {t_lo, t_hi}) {
    const auto [achieved, cost] = value_at(t);
    if (achieved >= target - 1e-9) {
      if (best_cost < 0.0 || cost < best_cost) best_cost = cost;
    }
  }
  if (best_cost < 0.0) {
    // Fall back to the feasible lower end.
    best_cost = value_at(t_lo).second;
  }
  if (best_cost <= 1e-300) return DivergenceValue::infinity();
  return -std::log2(best_cost);
}

DivergenceValue d_min_epsilon_lower(const DensityState& rho,
                                    const DensityState& sigma, double epsilon,
                                    const Tolerances& tol) {
  require_same_dim(rho, sigma);
  require_epsilon(epsilon);
  if (!support_contained(rho.matrix, sigma.matrix, tol)) {
    throw SupportViolation("supp(rho) must lie inside supp(sigma)");
  }
  const DivergenceValue lambda =
      d_s_epsilon(rho, sigma, 0.5 * epsilon * epsilon, tol);
  if (lambda.is_infinite()) return DivergenceValue::infinity();
  // Strictly-above-threshold projector just below the sup, as in the
  // construction behind the gentle-measurement argument.
  const double t = std::exp2(lambda.value() - 1e-9);
  const Matrix a = rho.matrix - t * sigma.matrix;
  const EigenDecomposition es = eigh(0.5 * (a + a.adjoint()), tol);
  const double band = 1e-12 * input_scale(rho.matrix, sigma.matrix, t);
  Matrix proj = Matrix::Zero(rho.dim(), rho.dim());
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > band) {
      proj += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
  }
  const double overlap = (proj * sigma.matrix).trace().real();
  if (overlap <= 1e-300) return DivergenceValue::infinity();
  return -std::log2(overlap);
}

}  // namespace resmex
