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

#include "resmex/property.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "resmex/divergence.hpp"
#include "resmex/entangle.hpp"
#include "resmex/extension.hpp"
#include "resmex/oneshot.hpp"
#include "resmex/random_ensembles.hpp"
#include "resmex/rng.hpp"
#include "resmex/serialize.hpp"

namespace resmex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int dim_for(const SuiteConfig& cfg, int trial) {
  return cfg.dims[static_cast<size_t>(trial) % cfg.dims.size()];
}

std::vector<double> extra_list(const SuiteConfig& cfg, const std::string& key,
                               std::vector<double> fallback) {
  const auto it = cfg.extra.find(key);
  return it == cfg.extra.end() ? fallback : it->second;
}

double extra_scalar(const SuiteConfig& cfg, const std::string& key,
                    double fallback) {
  const auto it = cfg.extra.find(key);
  return it == cfg.extra.end() || it->second.empty() ? fallback
                                                     : it->second.front();
}

// Violation of `a <= b`, treating a shared +infinity as satisfied.
double le_violation(double a, double b) {
  if (std::isinf(a) && a > 0) return (std::isinf(b) && b > 0) ? 0.0 : kInf;
  if (std::isinf(b) && b > 0) return 0.0;
  return a - b;
}

double eq_violation(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) {
    return (std::isinf(a) && std::isinf(b) && a == b) ? 0.0 : kInf;
  }
  return std::abs(a - b);
}

double lambda_min_of(const Matrix& m, const Tolerances& tol) {
  return eigh(m, tol).eigenvalues.minCoeff();
}

double inf_norm_of(const Matrix& m, const Tolerances& tol) {
  return eigh(0.5 * (m + m.adjoint()), tol).eigenvalues.cwiseAbs().maxCoeff();
}

std::vector<DivergenceSpec> sandwich_variants(const SuiteConfig& cfg) {
  using Kind = DivergenceSpec::Kind;
  std::vector<DivergenceSpec> out;
  out.push_back({Kind::Umegaki, 1.0, 0.0});
  for (double a : extra_list(cfg, "sandwiched_alpha", {0.5, 0.7, 2.0, 5.0, kInf})) {
    out.push_back({Kind::Sandwiched, a, 0.0});
  }
  for (double a : extra_list(cfg, "geometric_alpha", {0.5, 2.0})) {
    out.push_back({Kind::Geometric, a, 0.0});
  }
  return out;
}

TrialRecord suite_sandwich(const SuiteConfig& cfg, int t,
                           const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_density(d, d, rng);
  const double lo = d_min(rho, sigma, tol).value();
  const double hi = d_max(rho, sigma, tol).value();
  double worst = 0.0;
  for (const DivergenceSpec& spec : sandwich_variants(cfg)) {
    const double v = evaluate(spec, rho, sigma, tol).value();
    worst = std::max(worst, le_violation(lo, v));
    worst = std::max(worst, le_violation(v, hi));
  }
  rec.diagnostics["dmin"] = lo;
  rec.diagnostics["dmax"] = hi;
  rec.measured_slack = worst;
  return rec;
}

std::vector<DivergenceSpec> dpi_divergences() {
  using Kind = DivergenceSpec::Kind;
  // Quantities with a theorem-backed DPI under CPTP maps. d_s is covered by
  // the hypothesis-testing chain instead, as the paper uses it.
  return {
      {Kind::TraceDistance, 0, 0}, {Kind::Fidelity, 0, 0},
      {Kind::Umegaki, 1, 0},       {Kind::DMin, 0, 0},
      {Kind::DMax, 0, 0},          {Kind::Petz, 0.5, 0},
      {Kind::Petz, 2.0, 0},        {Kind::Sandwiched, 0.5, 0},
      {Kind::Sandwiched, 0.7, 0},  {Kind::Sandwiched, 2.0, 0},
      {Kind::Sandwiched, 5.0, 0},  {Kind::Sandwiched, kInf, 0},
      {Kind::Geometric, 0.5, 0},   {Kind::Geometric, 2.0, 0},
      {Kind::DhEpsilon, 0, 0.1},
  };
}

TrialRecord suite_dpi(const SuiteConfig& cfg, int t, const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_density(d, d, rng);
  const QuantumChannel channel = random_channel(d, d, 2, rng);
  const DensityState rho_out = apply_channel(channel, rho);
  const DensityState sigma_out = apply_channel(channel, sigma);
  double worst = 0.0;
  for (const DivergenceSpec& spec : dpi_divergences()) {
    const double before = evaluate(spec, rho, sigma, tol).value();
    const double after = evaluate(spec, rho_out, sigma_out, tol).value();
    const double viol = spec.kind == DivergenceSpec::Kind::Fidelity
                            ? le_violation(before, after)
                            : le_violation(after, before);
    worst = std::max(worst, viol);
  }
  // Subnormalized closed forms under a trace-non-increasing map.
  const DensityState sr = random_subnormalized(d, d, 0.4, 0.95, rng);
  const DensityState ss = random_subnormalized(d, d, 0.4, 0.95, rng);
  const QuantumChannel tni = random_tni_channel(d, d, 2, rng);
  const DensityState sro = apply_channel(tni, sr);
  const DensityState sso = apply_channel(tni, ss);
  worst = std::max(worst, le_violation(generalized_trace_distance(sro, sso, tol).value(),
                                       generalized_trace_distance(sr, ss, tol).value()));
  worst = std::max(worst, le_violation(generalized_fidelity(sr, ss, tol).value(),
                                       generalized_fidelity(sro, sso, tol).value()));
  worst = std::max(worst, le_violation(purified_distance(sro, sso, tol).value(),
                                       purified_distance(sr, ss, tol).value()));
  worst = std::max(worst, le_violation(extended_umegaki(sro, sso, tol).value(),
                                       extended_umegaki(sr, ss, tol).value()));
  worst = std::max(worst, le_violation(extended_d_max(sro, sso, tol).value(),
                                       extended_d_max(sr, ss, tol).value()));
  rec.measured_slack = worst;
  return rec;
}

std::vector<DivergenceSpec> relative_entropy_variants() {
  using Kind = DivergenceSpec::Kind;
  return {
      {Kind::Umegaki, 1, 0},      {Kind::DMin, 0, 0},
      {Kind::DMax, 0, 0},         {Kind::Petz, 0.5, 0},
      {Kind::Petz, 2.0, 0},       {Kind::Sandwiched, 0.0, 0},
      {Kind::Sandwiched, 0.3, 0}, {Kind::Sandwiched, 0.5, 0},
      {Kind::Sandwiched, 0.7, 0}, {Kind::Sandwiched, 2.0, 0},
      {Kind::Sandwiched, 5.0, 0}, {Kind::Sandwiched, kInf, 0},
      {Kind::Geometric, 0.5, 0},  {Kind::Geometric, 2.0, 0},
  };
}

TrialRecord suite_flag_identity(const SuiteConfig& cfg, int t,
                                const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  const std::vector<DivergenceSpec> variants = relative_entropy_variants();
  const std::vector<double> epsilons =
      extra_list(cfg, "epsilon", {0.1, 0.25, 0.5, 0.9});
  const size_t combo = static_cast<size_t>(t) % (variants.size() * epsilons.size());
  const DivergenceSpec spec = variants[combo % variants.size()];
  const double eps = epsilons[combo / variants.size()];
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 1.0 - eps;
  b(1, 1) = eps;
  const DensityState rho{a, TraceClass::Normalized};
  const DensityState sigma{b, TraceClass::Normalized};
  const double value = evaluate(spec, rho, sigma, tol).value();
  const double expected = -std::log2(1.0 - eps);
  rec.diagnostics["value"] = value;
  rec.diagnostics["expected"] = expected;
  rec.measured_slack = eq_violation(value, expected);
  return rec;
}

TrialRecord suite_reduction(const SuiteConfig& cfg, int t,
                            const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const int n_cases = 15;
  const int which = t % n_cases;
  rec.diagnostics["case"] = which;
  double viol = 0.0;
  switch (which) {
    case 0: case 1: case 2: case 3: {
      // Subnormalized embedding on an already-normalized pair.
      const DivergenceSpec spec =
          which == 0 ? DivergenceSpec{Kind::Umegaki, 1, 0}
          : which == 1 ? DivergenceSpec{Kind::DMax, 0, 0}
          : which == 2 ? DivergenceSpec{Kind::TraceDistance, 0, 0}
                       : DivergenceSpec{Kind::Fidelity, 0, 0};
      const DensityState rho = random_density(d, d, rng);
      const DensityState sigma = random_density(d, d, rng);
      viol = eq_violation(extend_subnormalized(spec, rho, sigma, tol).value(),
                          evaluate(spec, rho, sigma, tol).value());
      break;
    }
    case 4: {
      const DensityState rho = random_density(d, d, rng);
      const DensityState sigma = random_density(d, d, rng);
      viol = eq_violation(generalized_trace_distance(rho, sigma, tol).value(),
                          trace_distance(rho, sigma, tol).value());
      break;
    }
    case 5: {
      const DensityState rho = random_density(d, d, rng);
      const DensityState sigma = random_density(d, d, rng);
      viol = eq_violation(generalized_fidelity(rho, sigma, tol).value(),
                          fidelity(rho, sigma, tol).value());
      break;
    }
    case 6: {
      // Purified distance reduces to the trace distance on pure states.
      const DensityState a = random_pure(d, rng).to_density();
      const DensityState b = random_pure(d, rng).to_density();
      viol = eq_violation(purified_distance(a, b, tol).value(),
                          trace_distance(a, b, tol).value());
      break;
    }
    case 7: {
      const DensityState rho = random_density(d, d, rng);
      const DensityState sigma = random_density(d, d, rng);
      viol = eq_violation(extended_umegaki(rho, sigma, tol).value(),
                          umegaki(rho, sigma, tol).value());
      break;
    }
    case 8: {
      const DensityState rho = random_density(d, d, rng);
      const DensityState sigma = random_density(d, d, rng);
      viol = eq_violation(extended_d_max(rho, sigma, tol).value(),
                          d_max(rho, sigma, tol).value());
      break;
    }
    case 9: case 10: {
      const ClassicalSpec cs{RenyiVariant::Sandwiched, which == 9 ? 1.0 : 2.0};
      const ClassicalDistribution p = random_distribution(d, rng);
      const ClassicalDistribution q = random_distribution(d, rng);
      const ExtensionBound bound = maximal_classical_extension_ansatz(
          cs, p.to_density(), q.to_density(), tol);
      viol = eq_violation(
          bound.value.value(),
          classical_divergence(cs.variant, cs.alpha, p, q).value());
      break;
    }
    case 11: {
      const ClassicalSpec cs{RenyiVariant::Sandwiched, 1.0};
      const ClassicalDistribution p = random_distribution(d, rng);
      const ClassicalDistribution q = random_distribution(d, rng);
      const ExtensionBound bound = minimal_classical_extension_lower(
          cs, p.to_density(), q.to_density(), PencilEigenbasis{}, tol);
      viol = eq_violation(
          bound.value.value(),
          classical_divergence(cs.variant, cs.alpha, p, q).value());
      break;
    }
    case 12: {
      const PureState psi = random_pure(d, rng);
      const ExtensionBound bound = maximal_classical_extension_pure(
          {RenyiVariant::Sandwiched, 1.0}, psi, psi.to_density(), tol);
      viol = eq_violation(bound.value.value(), 0.0);
      break;
    }
    case 13: {
      const PureState psi = random_pure(4, rng);
      const ExtensionBound bound =
          convex_roof_search(monotone_entanglement_entropy(), psi.to_density(),
                             {2, 2}, 3, 8, rng.next_u64(), tol);
      viol = eq_violation(bound.value.value(),
                          entanglement_entropy(psi, {2, 2}, tol));
      break;
    }
    case 14: {
      const PureState psi = random_pure(4, rng);
      const int number = schmidt_number_ppt(psi.to_density(), {2, 2}, tol);
      const Index rank = schmidt_decompose(psi, {2, 2}, tol).rank;
      viol = std::abs(static_cast<double>(number - rank));
      break;
    }
    default: break;
  }
  rec.measured_slack = viol;
  return rec;
}

TrialRecord suite_monotonicity(const SuiteConfig& cfg, int t,
                               const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_subnormalized(d, d, 0.3, 0.95, rng);
  const DensityState sigma = random_subnormalized(d, d, 0.3, 0.95, rng);
  const QuantumChannel tni = random_tni_channel(d, d, 2, rng);
  const DensityState rho_out = apply_channel(tni, rho);
  const DensityState sigma_out = apply_channel(tni, sigma);
  double worst = 0.0;
  worst = std::max(worst, le_violation(generalized_trace_distance(rho_out, sigma_out, tol).value(),
                                       generalized_trace_distance(rho, sigma, tol).value()));
  worst = std::max(worst, le_violation(generalized_fidelity(rho, sigma, tol).value(),
                                       generalized_fidelity(rho_out, sigma_out, tol).value()));
  worst = std::max(worst, le_violation(purified_distance(rho_out, sigma_out, tol).value(),
                                       purified_distance(rho, sigma, tol).value()));
  worst = std::max(worst, le_violation(extended_umegaki(rho_out, sigma_out, tol).value(),
                                       extended_umegaki(rho, sigma, tol).value()));
  worst = std::max(worst, le_violation(extended_d_max(rho_out, sigma_out, tol).value(),
                                       extended_d_max(rho, sigma, tol).value()));
  const DivergenceSpec sand2{DivergenceSpec::Kind::Sandwiched, 2.0, 0};
  worst = std::max(worst, le_violation(extend_subnormalized(sand2, rho_out, sigma_out, tol).value(),
                                       extend_subnormalized(sand2, rho, sigma, tol).value()));
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_optimality(const SuiteConfig& cfg, int t,
                             const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_density(d, d, rng);
  double worst = 0.0;
  for (double alpha : extra_list(cfg, "alpha", {1.0, 0.5, 2.0, 3.0})) {
    const ClassicalSpec cs{RenyiVariant::Sandwiched, alpha};
    const double upper =
        maximal_classical_extension_ansatz(cs, rho, sigma, tol).value.value();
    double lower = minimal_classical_extension_lower(cs, rho, sigma,
                                                     PencilEigenbasis{}, tol)
                       .value.value();
    lower = std::max(lower, minimal_classical_extension_lower(
                                cs, rho, sigma,
                                RandomProjective{d, rng.next_u64()}, tol)
                                .value.value());
    worst = std::max(worst, le_violation(lower, upper));
  }
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_additivity(const SuiteConfig& cfg, int t,
                             const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d1 = dim_for(cfg, t);
  const int d2 = dim_for(cfg, t + 1);
  const DensityState r1 = random_density(d1, d1, rng);
  const DensityState s1 = random_density(d1, d1, rng);
  const DensityState r2 = random_density(d2, d2, rng);
  const DensityState s2 = random_density(d2, d2, rng);
  const DensityState r12 = tensor(r1, r2);
  const DensityState s12 = tensor(s1, s2);
  const std::vector<DivergenceSpec> variants = {
      {Kind::Umegaki, 1, 0},      {Kind::DMin, 0, 0},
      {Kind::DMax, 0, 0},         {Kind::Petz, 2.0, 0},
      {Kind::Sandwiched, 0.5, 0}, {Kind::Sandwiched, 2.0, 0},
      {Kind::Sandwiched, kInf, 0}, {Kind::Geometric, 0.5, 0},
      {Kind::Geometric, 2.0, 0},
  };
  double worst = 0.0;
  for (const DivergenceSpec& spec : variants) {
    const double joint = evaluate(spec, r12, s12, tol).value();
    const double parts = evaluate(spec, r1, s1, tol).value() +
                         evaluate(spec, r2, s2, tol).value();
    worst = std::max(worst, eq_violation(joint, parts));
  }
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_subadditivity(const SuiteConfig& cfg, int t,
                                const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d1 = dim_for(cfg, t);
  const int d2 = dim_for(cfg, t + 1);
  const DensityState r1 = random_density(d1, d1, rng);
  const DensityState s1 = random_density(d1, d1, rng);
  const DensityState r2 = random_density(d2, d2, rng);
  const DensityState s2 = random_density(d2, d2, rng);
  const DensityState r12 = tensor(r1, r2);
  const DensityState s12 = tensor(s1, s2);
  double worst = 0.0;
  for (double alpha : extra_list(cfg, "alpha", {1.0, 0.5, 2.0})) {
    const ClassicalSpec cs{RenyiVariant::Sandwiched, alpha};
    const double up12 =
        maximal_classical_extension_ansatz(cs, r12, s12, tol).value.value();
    const double up1 =
        maximal_classical_extension_ansatz(cs, r1, s1, tol).value.value();
    const double up2 =
        maximal_classical_extension_ansatz(cs, r2, s2, tol).value.value();
    worst = std::max(worst, le_violation(up12, up1 + up2));
    const auto lower = [&](const DensityState& a, const DensityState& b) {
      return minimal_classical_extension_lower(cs, a, b, PencilEigenbasis{},
                                               tol)
          .value.value();
    };
    worst = std::max(worst,
                     le_violation(lower(r1, s1) + lower(r2, s2),
                                  lower(r12, s12)));
  }
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_triangle(const SuiteConfig& cfg, int t,
                           const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_full_rank(d, 0.01, rng);
  const DensityState omega = random_full_rank(d, 0.01, rng);
  const double bridge = d_max(omega, sigma, tol).value();
  double worst = 0.0;
  for (const DivergenceSpec& spec :
       std::vector<DivergenceSpec>{{Kind::Umegaki, 1, 0},
                                   {Kind::Sandwiched, 2.0, 0},
                                   {Kind::Geometric, 2.0, 0}}) {
    const double direct = evaluate(spec, rho, sigma, tol).value();
    const double via = evaluate(spec, rho, omega, tol).value();
    worst = std::max(worst, le_violation(direct, via + bridge));
  }
  rec.diagnostics["dmax_bridge"] = bridge;
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_continuity(const SuiteConfig& cfg, int t,
                             const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const double mu = 0.005;
  double worst = 0.0;
  {
    // Second-argument bound through D_max(omega||sigma).
    const DensityState rho = random_full_rank(d, 0.01, rng);
    const DensityState omega = random_full_rank(d, 0.02, rng);
    const DensityState tau = random_density(d, d, rng);
    const DensityState sigma{(1.0 - mu) * omega.matrix + mu * tau.matrix,
                             TraceClass::Normalized};
    const double gap = inf_norm_of(sigma.matrix - omega.matrix, tol);
    const double floor = lambda_min_of(omega.matrix, tol);
    if (floor > gap) {
      const double bound = -std::log2(1.0 - gap / floor);
      worst = std::max(worst, le_violation(d_max(omega, sigma, tol).value(), bound));
      const double drift = umegaki(rho, sigma, tol).value() -
                           umegaki(rho, omega, tol).value();
      worst = std::max(worst, le_violation(drift, bound));
      rec.diagnostics["second_arg_bound"] = bound;
    }
  }
  {
    // First-argument bound.
    const DensityState omega = random_full_rank(d, 0.02, rng);
    const DensityState tau = random_density(d, d, rng);
    const DensityState rho{(1.0 - mu) * omega.matrix + mu * tau.matrix,
                           TraceClass::Normalized};
    const DensityState sigma = random_full_rank(d, 0.01, rng);
    const double gap = inf_norm_of(rho.matrix - omega.matrix, tol);
    const double floor_omega = lambda_min_of(omega.matrix, tol);
    const double floor_sigma = lambda_min_of(sigma.matrix, tol);
    if (floor_omega > gap && floor_sigma > 0.0) {
      const double bound = std::log2(1.0 + gap / (floor_omega * floor_sigma));
      const double drift = umegaki(rho, sigma, tol).value() -
                           umegaki(omega, sigma, tol).value();
      worst = std::max(worst, le_violation(drift, bound));
      rec.diagnostics["first_arg_bound"] = bound;
    }
  }
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_faithfulness(const SuiteConfig& cfg, int t,
                               const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_density(d, d, rng);
  const double td = trace_distance(rho, sigma, tol).value();
  double worst = 0.0;
  for (const DivergenceSpec& spec : std::vector<DivergenceSpec>{
           {Kind::Umegaki, 1, 0},
           {Kind::Petz, 0.5, 0},
           {Kind::Sandwiched, 0.5, 0},
           {Kind::Sandwiched, 2.0, 0},
           {Kind::Geometric, 2.0, 0},
           {Kind::TraceDistance, 0, 0},
       }) {
    // Zero on identical inputs...
    worst = std::max(worst, evaluate(spec, rho, rho, tol).value());
    // ...and nonzero whenever the states are visibly distinct.
    const double v = evaluate(spec, rho, sigma, tol).value();
    if (td > 1e-4 && v <= 1e-8) worst = std::max(worst, 1.0);
  }
  // d_min is non-faithful: it vanishes on classical full-support pairs.
  const ClassicalDistribution p = random_distribution(d, rng);
  const ClassicalDistribution q = random_distribution(d, rng);
  worst = std::max(worst,
                   std::abs(d_min(p.to_density(), q.to_density(), tol).value()));
  rec.diagnostics["trace_distance"] = td;
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_hypo_chain(const SuiteConfig& cfg, int t,
                             const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState rho = random_density(d, d, rng);
  const DensityState sigma = random_density(d, d, rng);
  const std::vector<double> eps = extra_list(cfg, "epsilon", {0.1, 0.3});
  const std::vector<double> del = extra_list(cfg, "delta", {0.05, 0.1});
  double worst = 0.0;
  for (size_t i = 0; i < eps.size(); ++i) {
    const double e = eps[i];
    const double dl = del[std::min(i, del.size() - 1)];
    const double ds_e = d_s_epsilon(rho, sigma, e, tol).value();
    const double dh_e = d_h_epsilon(rho, sigma, e, tol).value();
    const double ds_ed = d_s_epsilon(rho, sigma, e + dl, tol).value();
    const double dh_ed = d_h_epsilon(rho, sigma, e + dl, tol).value();
    worst = std::max(worst, le_violation(ds_e, dh_e));
    worst = std::max(worst, le_violation(dh_e, ds_ed - std::log2(dl)));
    worst = std::max(worst, le_violation(ds_e, ds_ed));
    worst = std::max(worst, le_violation(dh_e, dh_ed));
    if (i == 0) {
      rec.diagnostics["ds"] = ds_e;
      rec.diagnostics["dh"] = dh_e;
    }
  }
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_aep(const SuiteConfig& cfg, int t, const Tolerances& tol) {
  using Kind = DivergenceSpec::Kind;
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  const double p0 = extra_scalar(cfg, "p", 0.9);
  const double q0 = extra_scalar(cfg, "q", 0.5);
  const double eps = extra_scalar(cfg, "epsilon", 0.05);
  const int n_max = static_cast<int>(extra_scalar(cfg, "n_max", 8));
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = p0;
  a(1, 1) = 1.0 - p0;
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = q0;
  b(1, 1) = 1.0 - q0;
  const DensityState rho{a, TraceClass::Normalized};
  const DensityState sigma{b, TraceClass::Normalized};
  const double relent = p0 * std::log2(p0 / q0) +
                        (1.0 - p0) * std::log2((1.0 - p0) / (1.0 - q0));
  const RegularizationTrace ds_trace =
      regularized_rate({Kind::DsEpsilon, 0, eps}, rho, sigma, n_max, 4096, tol);
  const RegularizationTrace dmax_trace =
      regularized_rate({Kind::DMax, 0, 0}, rho, sigma, n_max, 4096, tol);
  const RegularizationTrace um_trace =
      regularized_rate({Kind::Umegaki, 1, 0}, rho, sigma, n_max, 4096, tol);
  double worst = 0.0;
  const double first_gap = std::abs(ds_trace.rates.front().second - relent);
  const double last_gap = std::abs(ds_trace.rates.back().second - relent);
  if (!(last_gap < first_gap)) worst = std::max(worst, last_gap - first_gap + 1.0);
  for (const auto& [n, rate] : dmax_trace.rates) {
    worst = std::max(worst, le_violation(relent, rate));
  }
  for (const auto& [n, rate] : um_trace.rates) {
    worst = std::max(worst, std::abs(rate - relent));
  }
  for (const auto& [n, rate] : ds_trace.rates) {
    rec.diagnostics["ds_rate_n" + std::to_string(n)] = rate;
  }
  rec.diagnostics["relative_entropy"] = relent;
  rec.diagnostics["first_gap"] = first_gap;
  rec.diagnostics["last_gap"] = last_gap;
  rec.measured_slack = worst;
  return rec;
}

TrialRecord suite_metric(const SuiteConfig& cfg, int t, const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int d = dim_for(cfg, t);
  const DensityState a = random_subnormalized(d, d, 0.3, 1.0, rng);
  const DensityState b = random_subnormalized(d, d, 0.3, 1.0, rng);
  const DensityState c = random_subnormalized(d, d, 0.3, 1.0, rng);
  const double ab = purified_distance(a, b, tol).value();
  const double ba = purified_distance(b, a, tol).value();
  const double ac = purified_distance(a, c, tol).value();
  const double bc = purified_distance(b, c, tol).value();
  double worst = std::abs(ab - ba);  // symmetry is exact by construction
  worst = std::max(worst, le_violation(ac, ab + bc));
  rec.diagnostics["symmetry_gap"] = std::abs(ab - ba);
  rec.measured_slack = worst;
  return rec;
}

DensityState werner_state(double p) {
  Vector phi = Vector::Zero(4);
  phi(0) = 1.0 / std::sqrt(2.0);
  phi(3) = 1.0 / std::sqrt(2.0);
  Matrix m = p * (phi * phi.adjoint()).eval() +
             (1.0 - p) * 0.25 * Matrix::Identity(4, 4);
  return {m, TraceClass::Normalized};
}

TrialRecord suite_schmidt(const SuiteConfig& cfg, int t,
                          const Tolerances& tol) {
  TrialRecord rec{t, Rng::stream_seed(cfg.seed, static_cast<std::uint64_t>(t))};
  Rng rng(rec.seed);
  const int which = t % 4;
  rec.diagnostics["case"] = which;
  double worst = 0.0;
  switch (which) {
    case 0: {
      // Pure-state reduction on 2x2 and 2x3 cuts, alternating product and
      // generically entangled states.
      const BipartiteCut cut = (t / 4) % 2 == 0 ? BipartiteCut{2, 2}
                                                : BipartiteCut{2, 3};
      PureState psi;
      if ((t / 8) % 2 == 0) {
        psi = random_pure(cut.dim_a * cut.dim_b, rng);
      } else {
        const PureState a = random_pure(cut.dim_a, rng);
        const PureState b = random_pure(cut.dim_b, rng);
        psi = PureState{kron(a.amplitudes, b.amplitudes)};
      }
      const int number = schmidt_number_ppt(psi.to_density(), cut, tol);
      const Index rank = schmidt_decompose(psi, cut, tol).rank;
      worst = std::abs(static_cast<double>(number - rank));
      break;
    }
    case 1: {
      // Werner family away from the 1/3 boundary.
      double p = rng.uniform();
      if (std::abs(p - 1.0 / 3.0) < 1e-6) p = 0.5;
      const int number = schmidt_number_ppt(werner_state(p), {2, 2}, tol);
      const int expected = p <= 1.0 / 3.0 ? 1 : 2;
      worst = std::abs(static_cast<double>(number - expected));
      rec.diagnostics["p"] = p;
      break;
    }
    case 2: {
      // One-way LOCC never increases the PPT Schmidt number.
      const DensityState rho = random_density(4, 4, rng);
      const QuantumChannel local = random_channel(2, 2, 2, rng);
      std::vector<Matrix> kraus;
      for (const Matrix& k : local.kraus) {
        kraus.push_back(kron(k, random_unitary(2, rng)));
      }
      const QuantumChannel locc{std::move(kraus), 4, 4, ChannelKind::Cptp};
      const int before = schmidt_number_ppt(rho, {2, 2}, tol);
      const int after = schmidt_number_ppt(apply_channel(locc, rho), {2, 2}, tol);
      worst = std::max(0.0, static_cast<double>(after - before));
      break;
    }
    case 3: {
      // ...and never increases the convex-roof upper bound beyond the
      // statistical slack of the randomized search.
      const DensityState rho = random_density(4, 2, rng);
      const QuantumChannel local = random_channel(2, 2, 2, rng);
      std::vector<Matrix> kraus;
      for (const Matrix& k : local.kraus) {
        kraus.push_back(kron(k, random_unitary(2, rng)));
      }
      const QuantumChannel locc{std::move(kraus), 4, 4, ChannelKind::Cptp};
      const DensityState out = apply_channel(locc, rho);
      const std::uint64_t s = rng.next_u64();
      const double before =
          convex_roof_search(monotone_entanglement_entropy(), rho, {2, 2}, 4,
                             1000, s, tol)
              .value.value();
      const double after =
          convex_roof_search(monotone_entanglement_entropy(), out, {2, 2}, 4,
                             1000, s ^ 1, tol)
              .value.value();
      worst = std::max(0.0, after - before - 1e-3);
      break;
    }
    default: break;
  }
  rec.measured_slack = worst;
  return rec;
}

using SuiteRunner =
    std::function<TrialRecord(const SuiteConfig&, int, const Tolerances&)>;

struct SuiteDef {
  SuiteInfo info;
  SuiteRunner runner;
};

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {{"sandwich",
        "d_min <= relative entropy <= d_max on random full-rank pairs"},
       suite_sandwich},
      {{"dpi",
        "data processing under random CPTP channels; subnormalized closed "
        "forms under TNI maps"},
       suite_dpi},
      {{"flag-identity",
        "every relative-entropy variant gives -log2(1-eps) on the binary "
        "flag pair"},
       suite_flag_identity},
      {{"reduction",
        "every extension equals its base measure on the smaller domain"},
       suite_reduction},
      {{"monotonicity",
        "subnormalized extensions are monotone under random TNI maps"},
       suite_monotonicity},
      {{"optimality",
        "measured lower bounds never exceed the maximal-extension ansatz"},
       suite_optimality},
      {{"additivity", "relative-entropy variants are additive on tensor pairs"},
       suite_additivity},
      {{"subadditivity",
        "maximal extension sub-additive, measured lower bound super-additive"},
       suite_subadditivity},
      {{"triangle",
        "D(rho||sigma) <= D(rho||omega) + D_max(omega||sigma) on random "
        "triples"},
       suite_triangle},
      {{"continuity",
        "first- and second-argument continuity bounds on premise-satisfying "
        "triples"},
       suite_continuity},
      {{"faithfulness",
        "faithful variants vanish only on equal pairs; d_min vanishes on "
        "classical full-support pairs"},
       suite_faithfulness},
      {{"hypo-chain",
        "D_s^eps <= D_h^eps <= D_s^(eps+delta) - log2(delta), monotone in eps"},
       suite_hypo_chain},
      {{"aep",
        "finite-n rates of D_s^eps approach the relative entropy; D_max rate "
        "stays above it"},
       suite_aep},
      {{"metric", "purified distance: exact symmetry and triangle inequality"},
       suite_metric},
      {{"schmidt",
        "PPT Schmidt number: pure-state reduction, Werner family, LOCC "
        "monotonicity"},
       suite_schmidt},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const SuiteDef& def : suite_table()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

bool suite_exists(const std::string& name) {
  for (const SuiteDef& def : suite_table()) {
    if (def.info.name == name) return true;
  }
  return false;
}

PropertyReport run_suite(const SuiteConfig& config, const Tolerances& tol) {
  const SuiteDef* def = nullptr;
  for (const SuiteDef& candidate : suite_table()) {
    if (candidate.info.name == config.suite) {
      def = &candidate;
      break;
    }
  }
  if (def == nullptr) {
    std::ostringstream os;
    os << "no suite named '" << config.suite << "'; registry:";
    for (const SuiteDef& candidate : suite_table()) {
      os << " " << candidate.info.name;
    }
    throw UnknownSuite(os.str());
  }
  if (config.trials < 1) throw BadConfig("trials must be >= 1");
  if (config.dims.empty()) throw BadConfig("dims must be non-empty");
  for (int d : config.dims) {
    if (d < 2 || d > 16) throw BadConfig("dims must lie in [2, 16]");
  }
  if (!(config.slack > 0.0)) throw BadConfig("slack must be positive");

  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.suite = config.suite;
  report.config = config;
  report.records.reserve(static_cast<size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) {
    TrialRecord rec = def->runner(config, t, tol);
    rec.pass = rec.measured_slack <= config.slack;
    report.max_violation = std::max(report.max_violation, rec.measured_slack);
    if (rec.pass) ++report.pass_count;
    report.records.push_back(std::move(rec));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

nlohmann::json report_to_json(const PropertyReport& report,
                              bool include_wall_time) {
  nlohmann::json j;
  j["suite"] = report.suite;
  nlohmann::json cfg;
  cfg["suite"] = report.config.suite;
  cfg["trials"] = report.config.trials;
  cfg["dims"] = report.config.dims;
  cfg["seed"] = report.config.seed;
  cfg["slack"] = report.config.slack;
  cfg["extra"] = report.config.extra;
  j["config"] = std::move(cfg);
  nlohmann::json records = nlohmann::json::array();
  for (const TrialRecord& rec : report.records) {
    nlohmann::json r;
    r["trial"] = rec.trial;
    r["seed"] = rec.seed;
    r["measured_slack"] = rec.measured_slack;
    r["pass"] = rec.pass;
    r["diagnostics"] = rec.diagnostics;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  j["aggregate"] = {{"pass_count", report.pass_count},
                    {"max_violation", report.max_violation}};
  if (include_wall_time) j["wall_ms"] = report.wall_ms;
  return j;
}

std::string report_to_csv(const PropertyReport& report) {
  // Diagnostic keys are uniform within a suite; take the union to be safe.
  std::vector<std::string> keys;
  for (const TrialRecord& rec : report.records) {
    for (const auto& [k, v] : rec.diagnostics) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        keys.push_back(k);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  os << "suite,trial,seed,measured_slack,pass";
  for (const std::string& k : keys) os << "," << k;
  os << "\n";
  for (const TrialRecord& rec : report.records) {
    os << report.suite << "," << rec.trial << "," << rec.seed << ","
       << format_numeric(rec.measured_slack) << "," << (rec.pass ? 1 : 0);
    for (const std::string& k : keys) {
      const auto it = rec.diagnostics.find(k);
      os << ",";
      if (it != rec.diagnostics.end()) os << format_numeric(it->second);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace resmex
