// Copyright 2026 The Symphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symphoton/schemes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "symphoton/errors.hpp"

namespace symphoton {

namespace {

constexpr std::size_t kModeA = 0;

void check_photons(int photons) {
  if (photons < 1) throw InputError("scheme needs N >= 1 photons");
}

double sign_of(BellKind kind) { return kind == BellKind::Minus ? -1.0 : 1.0; }

// (a^dag_H b^dag_V +- a^dag_V b^dag_H) applied to `state`.
FockVector apply_pair(const FockVector& state, std::size_t b, BellKind kind) {
  const auto hv = apply_creation(apply_creation(state, kModeA, Polarization::H), b, Polarization::V);
  const auto vh = apply_creation(apply_creation(state, kModeA, Polarization::V), b, Polarization::H);
  return add(hv, scaled(vh, sign_of(kind)));
}

void check_norm(double got, double expected, const char* what) {
  if (!(std::abs(got - expected) <= 1e-9 * expected)) {
    throw NumericalError(std::string(what) + " has squared norm " + std::to_string(got) +
                             ", expected " + std::to_string(expected),
                         std::abs(got - expected));
  }
}

}  // namespace

PreparedInput sps_combine(std::span<const PolarizationAmplitude> params) {
  if (params.empty()) throw InputError("sps_combine needs at least one photon");
  const auto n = params.size();

  // Photon i sits alone in input e_i (mode i).
  FockVector inputs = FockVector::vacuum(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CreationTerm op[] = {{i, Polarization::H, params[i].alpha()},
                               {i, Polarization::V, params[i].beta()}};
    inputs = apply_creation_sum(inputs, op);
  }

  // Running the distribution cascade backwards merges everything into the
  // carrier port 0.
  const auto cascade = build_cascade(static_cast<int>(n));
  const auto merged = apply_mode_transform(inputs, cascade.transfer.adjoint());

  FockVector::Terms carrier;
  for (const auto& [basis, amp] : merged.terms()) {
    if (basis.photons_in_mode(kModeA) != n) continue;
    carrier.emplace(OccupationState::from_flat({basis.flat()[0], basis.flat()[1]}), amp);
  }
  FockVector kept(1, std::move(carrier));
  const double probability = kept.squared_norm() / merged.squared_norm();
  return {normalized(kept), probability};
}

FockVector bell_pair(BellKind kind) {
  return scaled(apply_pair(FockVector::vacuum(2), 1, kind), 1.0 / std::sqrt(2.0));
}

FockVector ncl_emission_product(int photons, BellKind kind) {
  check_photons(photons);
  FockVector state = FockVector::vacuum(static_cast<std::size_t>(photons) + 1);
  for (int i = 1; i <= photons; ++i) state = apply_pair(state, static_cast<std::size_t>(i), kind);
  return state;
}

FockVector ncl_joint_state(int photons, BellKind kind) {
  const auto product = ncl_emission_product(photons, kind);
  const double expected = factorial(photons + 1);
  check_norm(product.squared_norm(), expected, "pair emission product");
  return scaled(product, 1.0 / std::sqrt(expected));
}

FockVector projector_state(std::span<const PolarizationAmplitude> params, BellKind kind) {
  if (params.empty()) throw InputError("projector needs at least one mode");
  FockVector state = FockVector::vacuum(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const CreationTerm op[] = {{i, Polarization::V, std::conj(params[i].alpha())},
                               {i, Polarization::H, sign_of(kind) * std::conj(params[i].beta())}};
    state = apply_creation_sum(state, op);
  }
  return state;
}

Projection project_onto(const FockVector& joint, const FockVector& projector) {
  if (projector.mode_count() >= joint.mode_count()) {
    throw InputError("projector register must leave at least one mode of the joint register");
  }
  const std::size_t kept_modes = joint.mode_count() - projector.mode_count();
  FockVector::Terms residual;
  for (const auto& [basis, amp] : joint.terms()) {
    const auto flat = basis.flat();
    const auto head = flat.subspan(0, 2 * kept_modes);
    const auto tail = flat.subspan(2 * kept_modes);
    const Complex bra = std::conj(projector.amplitude(
        OccupationState::from_flat({tail.begin(), tail.end()})));
    if (bra == Complex{}) continue;
    residual[OccupationState::from_flat({head.begin(), head.end()})] += bra * amp;
  }
  Projection out{FockVector(kept_modes, std::move(residual)), 0.0};
  out.probability =
      out.residual.squared_norm() / (joint.squared_norm() * projector.squared_norm());
  return out;
}

PostSelection dicke_2n_construction(int photons, BellKind kind) {
  const auto joint = ncl_joint_state(photons, kind);
  return postselect_one_per_mode(distribute_mode(joint, kModeA, build_cascade(photons)));
}

std::vector<Complex> split_dicke_coefficients(const QubitStateVector& state, double tol) {
  if (state.qubits() % 2 != 0) throw InputError("split Dicke form needs an even qubit count");
  const int n = state.qubits() / 2;
  const std::size_t half_mask = (std::size_t{1} << n) - 1;

  std::vector<Complex> s(n + 1);
  for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
    const int ka = std::popcount(i >> n);
    const int kb = std::popcount(i & half_mask);
    if (ka + kb == n) s[ka] += state[i];
  }
  for (int k = 0; k <= n; ++k) s[k] /= std::sqrt(binomial(n, k) * binomial(n, n - k));

  double deviation = 0.0;
  for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
    const int ka = std::popcount(i >> n);
    const int kb = std::popcount(i & half_mask);
    const Complex expected =
        ka + kb == n ? s[ka] / std::sqrt(binomial(n, ka) * binomial(n, kb)) : Complex{};
    deviation = std::max(deviation, std::abs(state[i] - expected));
  }
  if (deviation > tol) {
    throw InputError("state is not a sum of A|B Dicke products (deviation " +
                     std::to_string(deviation) + ")");
  }
  return s;
}

FockVector cl_input_state(int photons) {
  check_photons(photons);
  FockVector state = FockVector::vacuum(1);
  for (int i = 0; i < photons; ++i) {
    state = apply_creation(apply_creation(state, kModeA, Polarization::H), kModeA, Polarization::V);
  }
  const double expected = factorial(photons);
  check_norm(state.squared_norm(), expected * expected, "collinear emission");
  return scaled(state, 1.0 / expected);
}

PostSelection cl_dicke_construction(int photons) {
  return postselect_one_per_mode(distribute(cl_input_state(photons), build_cascade(2 * photons)));
}

double cl_distribution_probability(int photons) {
  check_photons(photons);
  return factorial(2 * photons) / std::pow(2.0 * photons, 2 * photons);
}

PostSelection project_qubits(const QubitStateVector& state, std::span<const int> qubits,
                             std::span<const PolarizationAmplitude> onto) {
  const int n = state.qubits();
  if (qubits.size() != onto.size()) throw InputError("one projector state per qubit required");
  std::vector<bool> projected(n, false);
  for (int q : qubits) {
    if (q < 0 || q >= n || projected[q]) throw InputError("bad or repeated qubit index");
    projected[q] = true;
  }
  const int rest = n - static_cast<int>(qubits.size());
  std::vector<Complex> amps(std::size_t{1} << rest);
  for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
    Complex w = state[i];
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      const bool v = (i >> (n - 1 - qubits[j])) & 1u;
      w *= std::conj(v ? onto[j].beta() : onto[j].alpha());
    }
    std::size_t index = 0;
    for (int q = 0; q < n; ++q) {
      if (!projected[q]) index = (index << 1) | ((i >> (n - 1 - q)) & 1u);
    }
    amps[index] += w;
  }
  double kept = 0.0;
  for (const auto& a : amps) kept += std::norm(a);
  PostSelection out;
  out.probability = kept / state.squared_norm();
  if (kept > 0.0) {
    for (auto& a : amps) a /= std::sqrt(kept);
    out.state = QubitStateVector(rest, std::move(amps));
  }
  return out;
}

RateReport rates(int photons, std::span<const PolarizationAmplitude> params,
                 const SourceRates& src) {
  check_photons(photons);
  if (params.size() != static_cast<std::size_t>(photons)) {
    throw InputError("rates: expected " + std::to_string(photons) + " parameters, got " +
                     std::to_string(params.size()));
  }
  return rates(photons, normalization_squared(params), src);
}

RateReport rates(int photons, double norm2, const SourceRates& src) {
  check_photons(photons);
  if (!(norm2 >= 0.0)) throw InputError("normalization must be non-negative");
  if (src.sps < 0.0 || src.ncl < 0.0 || src.cl < 0.0) {
    throw InputError("source rates must be non-negative");
  }
  const double n = photons;
  const double n_fact = factorial(photons);
  const double two_n = 2.0 * n;

  RateReport r;
  r.photons = photons;
  r.normalization_squared = norm2;

  r.sps.source_factor = std::pow(src.sps, n);
  r.sps.p_input = norm2 / std::pow(n, n);
  r.sps.p_output = one_per_mode_probability(photons);
  r.sps.rate = std::pow(src.sps, n) * norm2 * n_fact / std::pow(n, 2.0 * n);

  r.ncl.source_factor = std::pow(src.ncl / 2.0, n) * factorial(photons + 1);
  r.ncl.p_input = norm2 / factorial(photons + 1);
  r.ncl.p_output = one_per_mode_probability(photons);
  r.ncl.rate = std::pow(src.ncl, n) * norm2 * n_fact / std::pow(two_n, n);

  r.cl.source_factor = std::pow(src.cl, n) * n_fact * n_fact;
  r.cl.p_input = cl_distribution_probability(photons);
  r.cl.p_output = norm2 / factorial(photons + 1);
  r.cl.rate = std::pow(src.cl, n) * norm2 * (n_fact / std::pow(two_n, n)) *
              (factorial(2 * photons) / ((n + 1.0) * std::pow(two_n, n)));
  return r;
}

RateReport simulated_rates(std::span<const PolarizationAmplitude> params, const SourceRates& src) {
  const int photons = static_cast<int>(params.size());
  check_photons(photons);
  const double n = photons;
  const double norm2 = product_state(params).squared_norm();
  const double p_o = run_pipeline(params).probability;

  RateReport r;
  r.photons = photons;
  r.normalization_squared = norm2;

  r.sps.source_factor = std::pow(src.sps, n);
  r.sps.p_input = sps_combine(params).probability;
  r.sps.p_output = p_o;

  r.ncl.source_factor = std::pow(src.ncl / 2.0, n) * factorial(photons + 1);
  r.ncl.p_input = project_onto(ncl_joint_state(photons, BellKind::Minus),
                               projector_state(params, BellKind::Minus))
                      .probability;
  r.ncl.p_output = p_o;

  r.cl.source_factor = std::pow(src.cl, n) * factorial(photons) * factorial(photons);
  r.cl.p_input = cl_dicke_construction(photons).probability;
  r.cl.p_output = norm2 / factorial(photons + 1);

  for (auto* s : {&r.sps, &r.ncl, &r.cl}) s->rate = s->source_factor * s->p_input * s->p_output;
  return r;
}

}  // namespace symphoton
