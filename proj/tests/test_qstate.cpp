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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "resmex/channel.hpp"
#include "resmex/random_ensembles.hpp"
#include "resmex/state.hpp"

using namespace resmex;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

DensityState ket0() {
  return {diag2(1.0, 0.0), TraceClass::Normalized};
}

DensityState maximally_mixed(Index d) {
  return {Matrix::Identity(d, d) / static_cast<double>(d),
          TraceClass::Normalized};
}

}  // namespace

TEST_CASE("validate_state accepts the maximally mixed qubit") {
  const DensityState s =
      validate_state(Matrix::Identity(2, 2) * 0.5, TraceClass::Normalized);
  CHECK(s.dim() == 2);
  CHECK(s.trace() == doctest::Approx(1.0));
}

TEST_CASE("validate_state trace classes") {
  const Matrix m = diag2(0.6, 0.3);
  CHECK_NOTHROW(validate_state(m, TraceClass::Subnormalized));
  CHECK_THROWS_AS(validate_state(m, TraceClass::Normalized), BadTrace);
}

TEST_CASE("validate_state rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(validate_state(m, TraceClass::Normalized), NotHermitian);
}

TEST_CASE("validate_state rejects negative eigenvalues, never corrects") {
  const Matrix m = diag2(1.2, -0.2);
  CHECK_THROWS_AS(validate_state(m, TraceClass::Normalized), NotPositive);
  const DensityState fixed = sanitize_state(m, TraceClass::Normalized);
  CHECK(fixed.trace() == doctest::Approx(1.0));
  CHECK(eigh(fixed.matrix).eigenvalues.minCoeff() >= 0.0);
}

TEST_CASE("eigh sorts descending") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 3.0;
  m(2, 2) = 2.0;
  const EigenDecomposition es = eigh(m);
  CHECK(es.eigenvalues(0) == doctest::Approx(3.0));
  CHECK(es.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(es.eigenvalues(2) == doctest::Approx(1.0));
}

TEST_CASE("eigh of Pauli-X with the phase convention") {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const EigenDecomposition es = eigh(x);
  CHECK(es.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(es.eigenvalues(1) == doctest::Approx(-1.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(es.eigenvectors(0, 0).real() == doctest::Approx(inv_sqrt2));
  CHECK(es.eigenvectors(1, 0).real() == doctest::Approx(inv_sqrt2));
  CHECK(es.eigenvectors(0, 1).real() == doctest::Approx(inv_sqrt2));
  CHECK(es.eigenvectors(1, 1).real() == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("eigh reconstruction on random Hermitian matrices") {
  Rng rng(7);
  const Matrix g = ginibre(8, 8, rng);
  const Matrix h = 0.5 * (g + g.adjoint());
  const EigenDecomposition es = eigh(h);
  Matrix rebuilt = Matrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) {
    rebuilt += es.eigenvalues(i) * es.eigenvectors.col(i) *
               es.eigenvectors.col(i).adjoint();
  }
  CHECK((rebuilt - h).cwiseAbs().maxCoeff() <= 1e-12 * h.cwiseAbs().maxCoeff());
  const Matrix gram = es.eigenvectors.adjoint() * es.eigenvectors;
  CHECK((gram - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("eigh is deterministic given input bits") {
  Rng rng(11);
  const Matrix g = ginibre(5, 5, rng);
  const Matrix h = 0.5 * (g + g.adjoint());
  const EigenDecomposition a = eigh(h);
  const EigenDecomposition b = eigh(h);
  CHECK((a.eigenvectors - b.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("support projector") {
  const DensityState pure = ket0();
  CHECK((support_projector(pure) - pure.matrix).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((support_projector(maximally_mixed(2)) - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  const Matrix tiny = diag2(0.999, 1e-15);
  const Matrix p = support_projector(tiny, 1e-10);
  CHECK(p.trace().real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(support_projector(Matrix::Zero(2, 2), 1e-10), ZeroState);
}

TEST_CASE("support projector is idempotent") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const DensityState rho = random_density(4, 2, rng);
    const Matrix p = support_projector(rho);
    CHECK((p * p - p).norm() <= 1e-10);
  }
}

TEST_CASE("matrix powers on the support") {
  CHECK((matrix_power_on_support(Matrix::Identity(2, 2), -0.5, 1e-10) -
         Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  const Matrix m = diag2(4.0, 0.0);
  CHECK((matrix_power_on_support(m, 0.5, 1e-10) - diag2(2.0, 0.0))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK((matrix_power_on_support(m, -1.0, 1e-10) - diag2(0.25, 0.0))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("matrix power with exponent 1 restricts to the support") {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const DensityState rho = random_density(5, 3, rng);
    CHECK((matrix_power_on_support(rho, 1.0) - rho.matrix).norm() <= 1e-10);
  }
}

TEST_CASE("apply_channel") {
  const DensityState rho = maximally_mixed(2);
  const QuantumChannel id = validate_channel({Matrix::Identity(2, 2)},
                                             ChannelKind::Cptp);
  CHECK((apply_channel(id, rho).matrix - rho.matrix).cwiseAbs().maxCoeff() <=
        1e-15);

  // Completely dephasing channel keeps the diagonal.
  std::vector<Matrix> dephase = {diag2(1.0, 0.0), diag2(0.0, 1.0)};
  const QuantumChannel delta = validate_channel(dephase, ChannelKind::Cptp);
  Rng rng(9);
  const DensityState mixed = random_density(2, 2, rng);
  const DensityState out = apply_channel(delta, mixed);
  CHECK(std::abs(out.matrix(0, 1)) <= 1e-15);
  CHECK(out.matrix(0, 0).real() == doctest::Approx(mixed.matrix(0, 0).real()));

  // Single-Kraus TNI map halves the trace of the maximally mixed state.
  const QuantumChannel keep0 =
      validate_channel({diag2(1.0, 0.0)}, ChannelKind::Tni);
  const DensityState half = apply_channel(keep0, rho);
  CHECK(half.trace() == doctest::Approx(0.5));
  CHECK(half.trace_class == TraceClass::Subnormalized);

  CHECK_THROWS_AS(apply_channel(id, maximally_mixed(3)), DimMismatch);
}

TEST_CASE("tensor products") {
  const DensityState q = maximally_mixed(2);
  const DensityState qq = tensor(q, q);
  CHECK(qq.dim() == 4);
  CHECK((qq.matrix - Matrix::Identity(4, 4) * 0.25).cwiseAbs().maxCoeff() <=
        1e-15);
  Rng rng(2);
  const DensityState a = random_pure(2, rng).to_density();
  const DensityState b = random_pure(3, rng).to_density();
  const EigenDecomposition es = eigh(tensor(a, b).matrix);
  CHECK(es.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(es.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-10));

  CHECK(tensor_power(q, 8).dim() == 256);
  CHECK_THROWS_AS(tensor_power(q, 13), DimCap);
}

TEST_CASE("tensor trace is multiplicative") {
  Rng rng(21);
  for (int k = 0; k < 25; ++k) {
    const DensityState a = random_subnormalized(3, 3, 0.2, 1.0, rng);
    const DensityState b = random_subnormalized(2, 2, 0.2, 1.0, rng);
    CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) <= 1e-10);
  }
}

TEST_CASE("purify") {
  // The maximally mixed qubit purifies to a Bell state.
  const PureState bell = purify(maximally_mixed(2));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(bell.amplitudes(0)) == doctest::Approx(inv_sqrt2));
  CHECK(std::abs(bell.amplitudes(3)) == doctest::Approx(inv_sqrt2));
  CHECK(std::abs(bell.amplitudes(1)) <= 1e-15);

  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const DensityState rho = random_density(3, 3, rng);
    const PureState psi = purify(rho);
    const Matrix joint = psi.amplitudes * psi.amplitudes.adjoint();
    const Matrix reduced = partial_trace_second(joint, 3, 3);
    CHECK((reduced - rho.matrix).cwiseAbs().maxCoeff() <= 1e-10);
  }

  // A pure input purifies to itself times a fixed reference direction.
  const PureState psi = random_pure(2, rng);
  const PureState lifted = purify(psi.to_density());
  const Matrix reduced = partial_trace_second(
      lifted.amplitudes * lifted.amplitudes.adjoint(), 2, 2);
  CHECK((reduced - psi.to_density().matrix).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("random ensembles respect their contracts") {
  Rng rng(17);
  for (int k = 0; k < 10; ++k) {
    const DensityState rho = random_density(4, 2, rng);
    CHECK_NOTHROW(validate_state(rho.matrix, TraceClass::Normalized));
    const QuantumChannel ch = random_channel(4, 3, 2, rng);
    CHECK_NOTHROW(validate_channel(ch.kraus, ChannelKind::Cptp));
    const DensityState out = apply_channel(ch, rho);
    CHECK_NOTHROW(validate_state(out.matrix, TraceClass::Normalized));
    const QuantumChannel tni = random_tni_channel(3, 3, 2, rng);
    CHECK_NOTHROW(validate_channel(tni.kraus, ChannelKind::Tni));
    const Povm povm = random_povm(4, 3, rng);
    CHECK_NOTHROW(validate_povm(povm.effects));
  }
  CHECK_THROWS_AS(random_density(2, 3, rng), BadShape);
  CHECK_THROWS_AS(random_povm(2, 5, rng), BadShape);
}

TEST_CASE("random_density mean approaches the maximally mixed state") {
  Matrix mean = Matrix::Zero(2, 2);
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    mean += random_density(2, 2, Rng::stream_seed(99, static_cast<std::uint64_t>(k))).matrix;
  }
  mean /= static_cast<double>(n);
  const EigenDecomposition es = eigh(mean - Matrix::Identity(2, 2) * 0.5);
  CHECK(es.eigenvalues.cwiseAbs().sum() <= 0.05);
}

TEST_CASE("random draws are seed-deterministic") {
  const DensityState a = random_density(3, 2, std::uint64_t{42});
  const DensityState b = random_density(3, 2, std::uint64_t{42});
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
  const PureState pa = random_pure(5, std::uint64_t{42});
  const PureState pb = random_pure(5, std::uint64_t{42});
  CHECK((pa.amplitudes - pb.amplitudes).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial traces agree with the construction") {
  Rng rng(23);
  const DensityState a = random_density(2, 2, rng);
  const DensityState b = random_density(3, 3, rng);
  const DensityState ab = tensor(a, b);
  CHECK((partial_trace_second(ab.matrix, 2, 3) - a.matrix).cwiseAbs().maxCoeff() <=
        1e-12);
  CHECK((partial_trace_first(ab.matrix, 2, 3) - b.matrix).cwiseAbs().maxCoeff() <=
        1e-12);
}
