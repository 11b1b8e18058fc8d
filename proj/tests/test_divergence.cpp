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

#include "oracles.hpp"
#include "resmex/divergence.hpp"
#include "resmex/random_ensembles.hpp"

using namespace resmex;

namespace {

DensityState ket0() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return {m, TraceClass::Normalized};
}

DensityState ket1() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return {m, TraceClass::Normalized};
}

DensityState mixed2() {
  return {Matrix::Identity(2, 2) * 0.5, TraceClass::Normalized};
}

DensityState diag_state(const RealVector& p) {
  return ClassicalDistribution{p}.to_density();
}

}  // namespace

TEST_CASE("DivergenceValue arithmetic") {
  const DivergenceValue inf = DivergenceValue::infinity();
  CHECK(inf.is_infinite());
  CHECK((inf + 1.0).is_infinite());
  CHECK_THROWS_AS((void)(inf - inf), IndeterminateValue);
  CHECK_THROWS_AS(DivergenceValue(std::nan("")), IndeterminateValue);
  CHECK((DivergenceValue(1.0) + DivergenceValue(2.0)).value() == 3.0);
}

TEST_CASE("trace distance golden values") {
  Rng rng(1);
  const DensityState rho = random_density(3, 3, rng);
  CHECK(trace_distance(rho, rho).value() == doctest::Approx(0.0));
  CHECK(trace_distance(ket0(), ket1()).value() == doctest::Approx(1.0));
  CHECK(trace_distance(ket0(), mixed2()).value() == doctest::Approx(0.5));
  CHECK_THROWS_AS(trace_distance(ket0(), random_density(3, 3, rng)),
                  DimMismatch);
}

TEST_CASE("fidelity golden values and exact symmetry") {
  Rng rng(2);
  const DensityState rho = random_density(3, 3, rng);
  CHECK(fidelity(rho, rho).value() == doctest::Approx(1.0));
  CHECK(fidelity(ket0(), ket1()).value() == doctest::Approx(0.0));
  CHECK(fidelity(ket0(), mixed2()).value() ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  const DensityState sigma = random_density(3, 3, rng);
  CHECK(fidelity(rho, sigma).value() == fidelity(sigma, rho).value());
}

TEST_CASE("umegaki golden values") {
  Rng rng(3);
  const DensityState rho = random_density(2, 2, rng);
  CHECK(umegaki(rho, rho).value() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(umegaki(ket0(), mixed2()).value() == doctest::Approx(1.0));
  CHECK(umegaki(ket0(), ket1()).is_infinite());
}

TEST_CASE("d_min golden values") {
  Rng rng(4);
  const DensityState rho = random_density(2, 2, rng);
  CHECK(d_min(rho, rho).value() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(d_min(ket0(), mixed2()).value() == doctest::Approx(1.0));
  CHECK(d_min(ket0(), ket1()).is_infinite());
  CHECK(d_min_overlap(ket0(), mixed2()) == doctest::Approx(0.5));
}

TEST_CASE("d_max golden values and the pure-state formula") {
  Rng rng(5);
  const DensityState rho = random_density(2, 2, rng);
  CHECK(d_max(rho, rho).value() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(d_max(ket0(), mixed2()).value() == doctest::Approx(1.0));
  CHECK(d_max(ket0(), ket1()).is_infinite());
  for (int k = 0; k < 20; ++k) {
    const PureState psi = random_pure(3, rng);
    const DensityState sigma = random_density(3, 3, rng);
    const Matrix inv = matrix_power_on_support(sigma, -1.0);
    const double expected = std::log2(
        (psi.amplitudes.adjoint() * inv * psi.amplitudes)(0).real());
    CHECK(d_max(psi.to_density(), sigma).value() ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("alpha windows") {
  Rng rng(6);
  const DensityState rho = random_density(2, 2, rng);
  const DensityState sigma = random_density(2, 2, rng);
  CHECK_THROWS_AS(renyi(RenyiVariant::Petz, 2.5, rho, sigma), AlphaOutOfRange);
  CHECK_THROWS_AS(renyi(RenyiVariant::Petz, 0.0, rho, sigma), AlphaOutOfRange);
  CHECK_THROWS_AS(renyi(RenyiVariant::Geometric, 1.0, rho, sigma),
                  AlphaOutOfRange);
  CHECK_THROWS_AS(renyi(RenyiVariant::Geometric, 2.5, rho, sigma),
                  AlphaOutOfRange);
  CHECK_THROWS_AS(renyi(RenyiVariant::Sandwiched, -0.1, rho, sigma),
                  AlphaOutOfRange);
  // alpha = 1 routes to the Umegaki relative entropy.
  CHECK(renyi(RenyiVariant::Petz, 1.0, rho, sigma).value() ==
        umegaki(rho, sigma).value());
  CHECK(renyi(RenyiVariant::Sandwiched, 1.0, rho, sigma).value() ==
        umegaki(rho, sigma).value());
}

TEST_CASE("sandwiched special orders route to closed forms") {
  Rng rng(7);
  const DensityState rho = random_density(3, 3, rng);
  const DensityState sigma = random_density(3, 3, rng);
  const double inf_alpha = std::numeric_limits<double>::infinity();
  CHECK(renyi(RenyiVariant::Sandwiched, inf_alpha, rho, sigma).value() ==
        d_max(rho, sigma).value());
  CHECK(renyi(RenyiVariant::Sandwiched, 0.5, rho, sigma).value() ==
        doctest::Approx(-2.0 * std::log2(fidelity(rho, sigma).value())));
  // alpha = 0 degenerates to d_min.
  CHECK(renyi(RenyiVariant::Sandwiched, 0.0, rho, sigma).value() ==
        doctest::Approx(d_min(rho, sigma).value()).epsilon(1e-9));
  CHECK(renyi(RenyiVariant::Sandwiched, 0.5, ket0(), mixed2()).value() ==
        doctest::Approx(1.0));
}

TEST_CASE("geometric alpha=2 equals petz alpha=2") {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const DensityState rho = random_density(3, 3, rng);
    const DensityState sigma = random_density(3, 3, rng);
    const double g = renyi(RenyiVariant::Geometric, 2.0, rho, sigma).value();
    const double p = renyi(RenyiVariant::Petz, 2.0, rho, sigma).value();
    CHECK(std::abs(g - p) <= 1e-9);
  }
}

TEST_CASE("petz on a pure first argument matches the inner-product form") {
  Rng rng(9);
  for (double alpha : {0.5, 1.5, 2.0}) {
    const PureState psi = random_pure(3, rng);
    const DensityState sigma = random_density(3, 3, rng);
    const Matrix powered = matrix_power_on_support(sigma, 1.0 - alpha);
    const double expected =
        std::log2(
            (psi.amplitudes.adjoint() * powered * psi.amplitudes)(0).real()) /
        (alpha - 1.0);
    CHECK(renyi(RenyiVariant::Petz, alpha, psi.to_density(), sigma).value() ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("sandwiched is below petz for alpha in (1,2]") {
  Rng rng(10);
  for (double alpha : {1.3, 2.0}) {
    for (int k = 0; k < 25; ++k) {
      const DensityState rho = random_density(3, 3, rng);
      const DensityState sigma = random_density(3, 3, rng);
      const double s = renyi(RenyiVariant::Sandwiched, alpha, rho, sigma).value();
      const double p = renyi(RenyiVariant::Petz, alpha, rho, sigma).value();
      CHECK(s <= p + 1e-9);
    }
  }
}

TEST_CASE("quantum variants reduce to the classical value on diagonal pairs") {
  Rng rng(11);
  for (double alpha : {0.3, 0.5, 0.8, 1.0, 1.5, 2.0}) {
    const ClassicalDistribution p = random_distribution(4, rng);
    const ClassicalDistribution q = random_distribution(4, rng);
    const double expected = oracles::classical_renyi(p.probs, q.probs, alpha);
    for (RenyiVariant variant :
         {RenyiVariant::Petz, RenyiVariant::Sandwiched, RenyiVariant::Geometric}) {
      if (variant == RenyiVariant::Geometric && alpha == 1.0) continue;
      const double got =
          renyi(variant, alpha, diag_state(p.probs), diag_state(q.probs)).value();
      CHECK(got == doctest::Approx(expected).epsilon(1e-9));
      CHECK(classical_divergence(variant, alpha, p, q).value() ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("classical divergence golden values") {
  RealVector p(2), q(2);
  p << 1.0, 0.0;
  q << 0.5, 0.5;
  CHECK(classical_divergence(RenyiVariant::Sandwiched, 1.0, {p}, {q}).value() ==
        doctest::Approx(1.0));
  RealVector r(2);
  r << 0.3, 0.7;
  CHECK(classical_divergence(RenyiVariant::Sandwiched, 1.0, {r}, {r}).value() ==
        doctest::Approx(0.0));
  // D_alpha((1,0) || (s,1-s)) = -log2 s for every variant and order.
  for (double s : {0.9, 0.75, 0.5, 0.1}) {
    RealVector qs(2);
    qs << s, 1.0 - s;
    for (double alpha : {0.25, 0.5, 0.9, 1.0, 1.7, 2.0}) {
      for (RenyiVariant variant :
           {RenyiVariant::Petz, RenyiVariant::Sandwiched, RenyiVariant::Geometric}) {
        if (variant == RenyiVariant::Geometric && alpha == 1.0) continue;
        if (variant == RenyiVariant::Petz && alpha == 0.25) continue;
        CHECK(classical_divergence(variant, alpha, {p}, {qs}).value() ==
              doctest::Approx(-std::log2(s)).epsilon(1e-12));
      }
    }
    const double inf_alpha = std::numeric_limits<double>::infinity();
    CHECK(classical_divergence(RenyiVariant::Sandwiched, inf_alpha, {p}, {qs})
              .value() == doctest::Approx(-std::log2(s)).epsilon(1e-12));
  }
}

TEST_CASE("measured divergence: commuting pencil measurement is exact") {
  Rng rng(12);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const ClassicalDistribution p = random_distribution(3, rng);
    const ClassicalDistribution q = random_distribution(3, rng);
    const double expected = oracles::classical_renyi(p.probs, q.probs, alpha);
    const double got =
        measured_divergence(RenyiVariant::Sandwiched, alpha, diag_state(p.probs),
                            diag_state(q.probs), PencilEigenbasis{})
            .value();
    CHECK(got == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("measured divergence lower-bounds the sandwiched value") {
  Rng rng(13);
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    for (int k = 0; k < 20; ++k) {
      const DensityState rho = random_density(3, 3, rng);
      const DensityState sigma = random_density(3, 3, rng);
      const double quantum =
          renyi(RenyiVariant::Sandwiched, alpha, rho, sigma).value();
      for (const MeasurementStrategy& strategy :
           {MeasurementStrategy{PencilEigenbasis{}},
            MeasurementStrategy{RandomProjective{3, rng.next_u64()}}}) {
        const double lower = measured_divergence(RenyiVariant::Sandwiched,
                                                 alpha, rho, sigma, strategy)
                                 .value();
        CHECK(lower <= quantum + 1e-9);
      }
    }
  }
}

TEST_CASE("measured divergence vanishes on identical inputs") {
  Rng rng(14);
  const DensityState rho = random_density(4, 4, rng);
  const Povm povm = random_povm(4, 3, rng);
  for (const MeasurementStrategy& strategy :
       {MeasurementStrategy{PencilEigenbasis{}},
        MeasurementStrategy{RandomProjective{4, 7}},
        MeasurementStrategy{ExplicitPovm{povm}}}) {
    CHECK(measured_divergence(RenyiVariant::Sandwiched, 1.0, rho, rho, strategy)
              .value() == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("measured divergence rejects invalid POVMs") {
  Rng rng(15);
  const DensityState rho = random_density(2, 2, rng);
  Povm bad;
  bad.effects = {Matrix::Identity(2, 2) * 0.5};
  CHECK_THROWS_AS(measured_divergence(RenyiVariant::Sandwiched, 1.0, rho, rho,
                                      MeasurementStrategy{ExplicitPovm{bad}}),
                  BadPovm);
}

TEST_CASE("divergence registry names round-trip") {
  const DivergenceSpec spec = parse_divergence_name("sandwiched", 2.0, 0.0);
  CHECK(spec.kind == DivergenceSpec::Kind::Sandwiched);
  CHECK_THROWS_AS(parse_divergence_name("nope", 1.0, 0.0), ParseError);
  CHECK_FALSE(divergence_supports_tni(DivergenceSpec::Kind::DMin));
}
