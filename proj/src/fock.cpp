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

#include "symphoton/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "symphoton/errors.hpp"

namespace symphoton {

OccupationState OccupationState::from_flat(std::vector<std::uint16_t> flat) {
  if (flat.size() % 2 != 0) {
    throw InputError("occupation list must hold two entries per mode");
  }
  OccupationState s;
  s.occ_ = std::move(flat);
  return s;
}

unsigned OccupationState::total_photons() const noexcept {
  return std::accumulate(occ_.begin(), occ_.end(), 0u);
}

OccupationState OccupationState::incremented(std::size_t mode, Polarization pol) const {
  OccupationState s = *this;
  ++s.occ_[slot(mode, pol)];
  return s;
}

OccupationState OccupationState::joined(const OccupationState& other) const {
  OccupationState s = *this;
  s.occ_.insert(s.occ_.end(), other.occ_.begin(), other.occ_.end());
  return s;
}

PolarizationAmplitude::PolarizationAmplitude(Complex alpha, Complex beta)
    : alpha_(alpha), beta_(beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    throw InputError("polarization amplitude is not normalized: |alpha|^2+|beta|^2 = " +
                     std::to_string(norm2));
  }
}

PolarizationAmplitude PolarizationAmplitude::normalized(Complex alpha, Complex beta) {
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InputError("cannot normalize a zero polarization vector");
  }
  return {alpha / norm, beta / norm};
}

FockVector::FockVector(std::size_t modes, Terms terms) : modes_(modes) {
  for (auto& [state, amp] : terms) {
    if (state.mode_count() != modes) {
      throw InputError("basis state has " + std::to_string(state.mode_count()) +
                       " modes, expected " + std::to_string(modes));
    }
  }
  std::erase_if(terms, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  terms_ = std::move(terms);
}

FockVector FockVector::vacuum(std::size_t modes) {
  return basis(OccupationState(modes), 1.0);
}

FockVector FockVector::basis(OccupationState state, Complex amplitude) {
  const std::size_t modes = state.mode_count();
  Terms terms;
  terms.emplace(std::move(state), amplitude);
  return FockVector(modes, std::move(terms));
}

Complex FockVector::amplitude(const OccupationState& state) const {
  auto it = terms_.find(state);
  return it == terms_.end() ? Complex{} : it->second;
}

double FockVector::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto& [state, amp] : terms_) sum += std::norm(amp);
  return sum;
}

namespace {

void check_mode(const FockVector& state, std::size_t mode) {
  if (mode >= state.mode_count()) {
    throw InputError("mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(state.mode_count()) + "-mode register");
  }
}

}  // namespace

FockVector apply_creation(const FockVector& state, std::size_t mode, Polarization pol) {
  const CreationTerm op[] = {{mode, pol, 1.0}};
  return apply_creation_sum(state, op);
}

FockVector apply_creation_sum(const FockVector& state, std::span<const CreationTerm> op) {
  for (const auto& term : op) check_mode(state, term.mode);
  FockVector::Terms out;
  for (const auto& [basis, amp] : state.terms()) {
    for (const auto& term : op) {
      const double ladder = std::sqrt(static_cast<double>(basis.count(term.mode, term.pol) + 1));
      out[basis.incremented(term.mode, term.pol)] += term.coeff * ladder * amp;
    }
  }
  return FockVector(state.mode_count(), std::move(out));
}

FockVector product_state(std::span<const PolarizationAmplitude> params, std::size_t mode,
                         std::size_t mode_count) {
  if (params.empty()) throw InputError("product_state needs at least one photon");
  FockVector state = FockVector::vacuum(mode_count);
  for (const auto& p : params) {
    const CreationTerm op[] = {{mode, Polarization::H, p.alpha()},
                               {mode, Polarization::V, p.beta()}};
    state = apply_creation_sum(state, op);
  }
  return state;
}

Complex inner_product(const FockVector& x, const FockVector& y) {
  if (x.mode_count() != y.mode_count()) {
    throw InputError("inner product of registers with different mode counts");
  }
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  Complex sum{};
  for (const auto& [state, amp] : small.terms()) {
    auto it = large.terms().find(state);
    if (it != large.terms().end()) sum += amp * std::conj(it->second);
  }
  // sum holds sum small * conj(large); conjugate back when x was the smaller.
  return &small == &x ? std::conj(sum) : sum;
}

FockVector tensor(const FockVector& x, const FockVector& y) {
  FockVector::Terms out;
  for (const auto& [sx, ax] : x.terms()) {
    for (const auto& [sy, ay] : y.terms()) out.emplace(sx.joined(sy), ax * ay);
  }
  return FockVector(x.mode_count() + y.mode_count(), std::move(out));
}

FockVector scaled(const FockVector& x, Complex factor) {
  FockVector::Terms out = x.terms();
  for (auto& [state, amp] : out) amp *= factor;
  return FockVector(x.mode_count(), std::move(out));
}

FockVector add(const FockVector& x, const FockVector& y) {
  if (x.mode_count() != y.mode_count()) {
    throw InputError("cannot add registers with different mode counts");
  }
  FockVector::Terms out = x.terms();
  for (const auto& [state, amp] : y.terms()) out[state] += amp;
  return FockVector(x.mode_count(), std::move(out));
}

FockVector normalized(const FockVector& x) {
  const double norm = std::sqrt(x.squared_norm());
  if (!(norm > 0.0)) throw InputError("cannot normalize the zero vector");
  return scaled(x, 1.0 / norm);
}

FockVector apply_phase(const FockVector& x, std::size_t mode, Polarization pol, double phase) {
  check_mode(x, mode);
  FockVector::Terms out = x.terms();
  for (auto& [state, amp] : out) amp *= std::polar(1.0, phase * state.count(mode, pol));
  return FockVector(x.mode_count(), std::move(out));
}

}  // namespace symphoton
