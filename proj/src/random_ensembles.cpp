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

#include "resmex/random_ensembles.hpp"

#include <cmath>
#include <string>

namespace resmex {

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return g;
}

Matrix random_isometry(Index rows, Index cols, Rng& rng) {
  if (rows < cols) throw BadShape("isometry needs rows >= cols");
  const Matrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // Mezzadri phase fix: absorb the phases of diag(R) so Q is Haar.
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Matrix random_unitary(Index dim, Rng& rng) {
  return random_isometry(dim, dim, rng);
}

DensityState random_density(Index dim, Index rank, Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw BadShape("need 1 <= rank <= dim, got rank " + std::to_string(rank) +
                   ", dim " + std::to_string(dim));
  }
  const Matrix g = ginibre(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return {rho, TraceClass::Normalized};
}

DensityState random_density(Index dim, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

PureState random_pure(Index dim, Rng& rng) {
  if (dim < 1) throw BadShape("dim must be positive");
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
  v /= v.norm();
  return {v};
}

PureState random_pure(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

QuantumChannel random_channel(Index in_dim, Index out_dim, Index env_dim,
                              Rng& rng) {
  if (in_dim < 1 || out_dim < 1 || env_dim < 1) {
    throw BadShape("channel dimensions must be positive");
  }
  if (out_dim * env_dim < in_dim) {
    throw BadShape("out_dim * env_dim must be >= in_dim");
  }
  const Matrix v = random_isometry(out_dim * env_dim, in_dim, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(env_dim));
  for (Index e = 0; e < env_dim; ++e) {
    Matrix k(out_dim, in_dim);
    for (Index o = 0; o < out_dim; ++o) {
      for (Index i = 0; i < in_dim; ++i) {
        k(o, i) = v(o * env_dim + e, i);
      }
    }
    kraus.push_back(std::move(k));
  }
  return {std::move(kraus), in_dim, out_dim, ChannelKind::Cptp};
}

QuantumChannel random_channel(Index in_dim, Index out_dim, Index env_dim,
                              std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(in_dim, out_dim, env_dim, rng);
}

QuantumChannel random_tni_channel(Index in_dim, Index out_dim, Index env_dim,
                                  Rng& rng) {
  QuantumChannel ch = random_channel(in_dim, out_dim, env_dim + 1, rng);
  ch.kraus.pop_back();
  ch.kind = ChannelKind::Tni;
  return ch;
}

Povm random_povm(Index dim, Index outcomes, Rng& rng) {
  if (outcomes < 1 || outcomes > dim) {
    throw BadShape("need 1 <= outcomes <= dim for the coarse-grained "
                   "projective construction");
  }
  const Matrix u = random_unitary(dim, rng);
  std::vector<Matrix> effects(static_cast<size_t>(outcomes),
                              Matrix::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i) {
    effects[static_cast<size_t>(i % outcomes)] +=
        u.col(i) * u.col(i).adjoint();
  }
  return {std::move(effects)};
}

Povm random_povm(Index dim, Index outcomes, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(dim, outcomes, rng);
}

DensityState random_full_rank(Index dim, double min_eig, Rng& rng) {
  if (min_eig < 0.0 || min_eig * static_cast<double>(dim) >= 1.0) {
    throw BadShape("min_eig * dim must lie in [0, 1)");
  }
  const DensityState base = random_density(dim, dim, rng);
  const double w = min_eig * static_cast<double>(dim);
  Matrix m = (1.0 - w) * base.matrix +
             min_eig * Matrix::Identity(dim, dim);
  return {m, TraceClass::Normalized};
}

DensityState random_subnormalized(Index dim, Index rank, double scale_lo,
                                  double scale_hi, Rng& rng) {
  DensityState rho = random_density(dim, rank, rng);
  const double s = rng.uniform(scale_lo, scale_hi);
  return {s * rho.matrix, TraceClass::Subnormalized};
}

ClassicalDistribution random_distribution(Index dim, Rng& rng) {
  RealVector p(dim);
  for (Index i = 0; i < dim; ++i) p(i) = rng.uniform_positive();
  p /= p.sum();
  return {p};
}

}  // namespace resmex
