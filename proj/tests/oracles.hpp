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
//
// Test-only oracles: brute-force and closed-form references kept independent
// of the library code paths they are used to check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "resmex/rng.hpp"
#include "resmex/state.hpp"

namespace oracles {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Classical Renyi divergence by direct summation. alpha = 1 is KL,
// alpha = inf the max-divergence.
inline double classical_renyi(const Eigen::VectorXd& p,
                              const Eigen::VectorXd& q, double alpha) {
  const double zero = 1e-14;
  if (alpha == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p(i) <= zero) continue;
      if (q(i) <= zero) return kInf;
      s += p(i) * std::log2(p(i) / q(i));
    }
    return s;
  }
  if (std::isinf(alpha)) {
    double top = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p(i) <= zero) continue;
      if (q(i) <= zero) return kInf;
      top = std::max(top, p(i) / q(i));
    }
    return top > 0.0 ? std::log2(top) : kInf;
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= zero) continue;
    if (q(i) <= zero) {
      if (alpha > 1.0) return kInf;
      continue;
    }
    s += std::pow(p(i), alpha) * std::pow(q(i), 1.0 - alpha);
  }
  return s > 0.0 ? std::log2(s) / (alpha - 1.0) : kInf;
}

// Classical information-spectrum divergence by enumerating likelihood
// ratios: D_s = log2 sup{ t : sum_{p_i <= t q_i} p_i <= eps }.
inline double classical_info_spectrum(const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q, double eps) {
  const double zero = 1e-14;
  std::vector<std::pair<double, double>> ratio_mass;  // (p/q, p)
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= zero) continue;
    if (q(i) <= zero) continue;  // never captured by the threshold test
    ratio_mass.emplace_back(p(i) / q(i), p(i));
  }
  std::sort(ratio_mass.begin(), ratio_mass.end());
  // Merge equal ratios so the jump at each breakpoint is complete.
  std::vector<std::pair<double, double>> merged;
  for (const auto& rm : ratio_mass) {
    if (!merged.empty() &&
        std::abs(rm.first - merged.back().first) <=
            1e-12 * std::abs(merged.back().first)) {
      merged.back().second += rm.second;
    } else {
      merged.push_back(rm);
    }
  }
  double cumulative = 0.0;
  for (const auto& [ratio, mass] : merged) {
    cumulative += mass;
    if (cumulative > eps) return std::log2(ratio);
  }
  return kInf;
}

// Classical Neyman-Pearson LP by greedy likelihood-ratio ordering with a
// fractional marginal item: minimize sum w_i q_i s.t. sum w_i p_i >= 1-eps.
inline double classical_neyman_pearson(const Eigen::VectorXd& p,
                                       const Eigen::VectorXd& q, double eps) {
  const double zero = 1e-14;
  std::vector<Eigen::Index> order(static_cast<size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double ra = q(a) <= zero ? kInf : p(a) / q(a);
    const double rb = q(b) <= zero ? kInf : p(b) / q(b);
    return ra > rb;
  });
  const double target = 1.0 - eps;
  double mass = 0.0;
  double cost = 0.0;
  for (Eigen::Index i : order) {
    if (p(i) <= zero) continue;
    if (mass + p(i) < target) {
      mass += p(i);
      cost += q(i);
    } else {
      const double w = (target - mass) / p(i);
      cost += w * q(i);
      mass = target;
      break;
    }
  }
  if (mass < target - 1e-12) return kInf;  // infeasible (cannot happen here)
  return cost <= 0.0 ? kInf : -std::log2(cost);
}

// Lower-bound construction for D_min^eps on classical pairs: the projector
// at threshold just below the information-spectrum value of eps^2/2.
inline double classical_dmin_lower(const Eigen::VectorXd& p,
                                   const Eigen::VectorXd& q, double eps) {
  const double lambda = classical_info_spectrum(p, q, 0.5 * eps * eps);
  const double t = std::exp2(lambda - 1e-9);
  double cost = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > t * q(i)) cost += q(i);
  }
  return cost <= 0.0 ? kInf : -std::log2(cost);
}

// Wootters formula for the two-qubit entanglement of formation (the exact
// convex roof of the entanglement entropy).
inline double wootters_eof(const resmex::Matrix& rho) {
  resmex::Matrix flip = resmex::Matrix::Zero(4, 4);
  // sigma_y (x) sigma_y in the computational basis.
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const resmex::Matrix r = rho * flip * rho.conjugate() * flip;
  Eigen::ComplexEigenSolver<resmex::Matrix> es(r);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < 4; ++i) {
    roots.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  const double c = std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  const auto h = [](double v) {
    double out = 0.0;
    if (v > 1e-15) out -= v * std::log2(v);
    if (1.0 - v > 1e-15) out -= (1.0 - v) * std::log2(1.0 - v);
    return out;
  };
  return h(x);
}

// Randomized Uhlmann-orbit minimization of the trace distance between
// purifications: min over U of sqrt(1 - |Tr[C U^T]|^2) with C = sqrt(rho)^dag
// sqrt(sigma). Each restart is polished by projected gradient ascent on the
// overlap; no closed-form fidelity identity is used.
inline double uhlmann_orbit_trace_distance(const resmex::Matrix& rho,
                                           const resmex::Matrix& sigma,
                                           int restarts, std::uint64_t seed) {
  using resmex::Complex;
  using resmex::Matrix;
  const auto matrix_sqrt = [](const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out += std::sqrt(std::max(0.0, es.eigenvalues()(i))) *
             es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }
    return out;
  };
  const Matrix c = matrix_sqrt(rho).adjoint() * matrix_sqrt(sigma);
  const Eigen::Index d = rho.rows();
  const auto orthonormalize = [](const Matrix& m) {
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
    const Matrix r =
        qr.matrixQR().topRows(m.cols()).template triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex diag = r(j, j);
      const double mag = std::abs(diag);
      if (mag > 0.0) q.col(j) *= diag / mag;
    }
    return q;
  };
  double best_overlap_sq = 0.0;
  for (int restart = 0; restart < restarts; ++restart) {
    resmex::Rng rng = resmex::Rng::stream(seed, static_cast<std::uint64_t>(restart));
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    }
    Matrix u = orthonormalize(g);
    double eta = 1.0 / (1.0 + c.norm());
    double f = std::norm((c * u.transpose()).trace());
    for (int iter = 0; iter < 120; ++iter) {
      const Complex z = (c * u.transpose()).trace();
      const Matrix step = u + eta * z * c.conjugate();
      const Matrix candidate = orthonormalize(step);
      const double fc = std::norm((c * candidate.transpose()).trace());
      if (fc > f) {
        u = candidate;
        f = fc;
      } else {
        eta *= 0.5;
        if (eta < 1e-12) break;
      }
    }
    best_overlap_sq = std::max(best_overlap_sq, f);
  }
  return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, best_overlap_sq)));
}

}  // namespace oracles
