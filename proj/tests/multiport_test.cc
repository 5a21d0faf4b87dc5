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

#include "symphoton/multiport.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symphoton/errors.hpp"
#include "test_util.hpp"

using namespace symphoton;
using symphoton::testing::max_abs_diff;
using symphoton::testing::random_params;
using symphoton::testing::shared_rng;

namespace {

const auto H = PolarizationAmplitude::horizontal();
const auto V = PolarizationAmplitude::vertical();
const double kRootHalf = 1.0 / std::sqrt(2.0);

OccupationState occ(std::vector<std::uint16_t> flat) {
  return OccupationState::from_flat(std::move(flat));
}

FockVector single_mode(std::vector<Polarization> creations) {
  FockVector s = FockVector::vacuum(1);
  for (auto p : creations) s = apply_creation(s, 0, p);
  return s;
}

}  // namespace

TEST(build_cascade, amplitudes) {
  EXPECT_NEAR(std::abs(build_cascade(1).amplitudes()[0]), 1.0, 1e-15);
  for (const auto& t : build_cascade(2).amplitudes()) EXPECT_NEAR(std::abs(t), kRootHalf, 1e-15);
  for (const auto& t : build_cascade(4).amplitudes()) EXPECT_NEAR(std::abs(t), 0.5, 1e-15);
  for (int n = 1; n <= 8; ++n) {
    const auto spec = build_cascade(n);
    const Eigen::MatrixXcd u = spec.transfer;
    EXPECT_TRUE((u.adjoint() * u).isIdentity(1e-13)) << "N=" << n;
    for (const auto& t : spec.amplitudes()) EXPECT_NEAR(std::abs(t), 1 / std::sqrt(n), 1e-14);
  }
  EXPECT_THROW(build_cascade(0), InputError);
}

TEST(distribute, single_photon) {
  const auto out = distribute(single_mode({Polarization::H}), build_cascade(2));
  EXPECT_NEAR(std::abs(out.amplitude(occ({1, 0, 0, 0}))), kRootHalf, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude(occ({0, 0, 1, 0}))), kRootHalf, 1e-15);
  EXPECT_EQ(out.size(), 2u);
}

TEST(distribute, two_horizontal_photons) {
  const auto in = scaled(single_mode({Polarization::H, Polarization::H}), kRootHalf);
  const auto out = distribute(in, build_cascade(2));
  EXPECT_NEAR(std::abs(out.amplitude(occ({2, 0, 0, 0}))), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude(occ({1, 0, 1, 0}))), kRootHalf, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude(occ({0, 0, 2, 0}))), 0.5, 1e-15);
}

TEST(distribute, hv_pair) {
  const auto out = distribute(single_mode({Polarization::H, Polarization::V}), build_cascade(2));
  EXPECT_NEAR(std::abs(out.amplitude(occ({1, 0, 0, 1}))), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude(occ({0, 1, 1, 0}))), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude(occ({1, 1, 0, 0}))), 0.5, 1e-15);
}

TEST(distribute, preserves_norm_and_photons) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 6; ++n) {
    const auto in = product_state(random_params(n, rng));
    const auto out = distribute(in, build_cascade(n));
    EXPECT_NEAR(out.squared_norm(), in.squared_norm(), 1e-12 * in.squared_norm());
    for (const auto& [s, amp] : out.terms()) EXPECT_EQ(s.total_photons(), unsigned(n));
  }
}

TEST(distribute, matches_general_mode_transform) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 4; ++n) {
    const auto spec = build_cascade(n);
    const auto params = random_params(n, rng);
    const auto padded = product_state(params, 0, static_cast<std::size_t>(n));
    EXPECT_LT(symphoton::testing::fock_deviation(distribute(product_state(params), spec),
                                                 apply_mode_transform(padded, spec.transfer)),
              1e-12);
  }
}

TEST(postselect, examples) {
  const auto hh = scaled(single_mode({Polarization::H, Polarization::H}), kRootHalf);
  auto r = postselect_one_per_mode(distribute(hh, build_cascade(2)));
  EXPECT_NEAR(r.probability, 0.5, 1e-15);
  EXPECT_NEAR(std::abs((*r.state)[0]), 1.0, 1e-15);

  r = postselect_one_per_mode(distribute(single_mode({Polarization::H, Polarization::V}),
                                         build_cascade(2)));
  EXPECT_NEAR(r.probability, 0.5, 1e-15);
  EXPECT_LT(max_abs_diff(r.state->amplitudes(), dicke_state(2, 1).amplitudes()), 1e-15);

  const auto d = PolarizationAmplitude(kRootHalf, kRootHalf);
  std::vector<PolarizationAmplitude> one{d};
  r = run_pipeline(one);
  EXPECT_NEAR(r.probability, 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(r.state->amplitudes(), std::vector<Complex>{kRootHalf, kRootHalf}), 1e-15);
}

TEST(run_pipeline, examples) {
  std::vector<PolarizationAmplitude> vhh{V, H, H};
  auto r = run_pipeline(vhh);
  EXPECT_NEAR(r.probability, 6.0 / 27.0, 1e-15);
  EXPECT_GE(fidelity(*r.state, dicke_state(3, 1)), 1 - 1e-14);

  std::vector<PolarizationAmplitude> hv{H, V};
  r = run_pipeline(hv);
  EXPECT_NEAR(r.probability, 0.5, 1e-15);
  EXPECT_GE(fidelity(*r.state, dicke_state(2, 1)), 1 - 1e-14);
}

TEST(run_pipeline, probability_is_polarization_independent) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      EXPECT_NEAR(run_pipeline(random_params(n, rng)).probability, one_per_mode_probability(n),
                  1e-10);
    }
  }
}

TEST(run_pipeline, output_phases_are_global) {
  auto& rng = shared_rng();
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (int n = 2; n <= 5; ++n) {
    const auto params = random_params(n, rng);
    std::vector<double> phases;
    for (int j = 0; j < n; ++j) phases.push_back(angle(rng));
    const auto spec = with_output_phases(build_cascade(n), phases);
    const auto base = run_pipeline(params);
    const auto twisted = postselect_one_per_mode(distribute(product_state(params), spec));
    EXPECT_NEAR(fidelity(*base.state, *twisted.state), 1.0, 1e-12);
    EXPECT_NEAR(base.probability, twisted.probability, 1e-12);
  }
}

TEST(run_pipeline, dicke_inputs_give_dicke_outputs) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      // sqrt(C) (a_V)^k (a_H)^(N-k)|0> / sqrt(k!(N-k)! C) = |k_V, (N-k)_H>.
      std::vector<Polarization> ops(static_cast<std::size_t>(k), Polarization::V);
      ops.insert(ops.end(), static_cast<std::size_t>(n - k), Polarization::H);
      const auto in = normalized(single_mode(ops));
      const auto r = postselect_one_per_mode(distribute(in, build_cascade(n)));
      EXPECT_NEAR(r.probability, one_per_mode_probability(n), 1e-12);
      EXPECT_LT(max_abs_diff(r.state->amplitudes(), dicke_state(n, k).amplitudes()), 1e-12)
          << "N=" << n << " k=" << k;
    }
  }
}

TEST(postselect, zero_input_rejected) {
  EXPECT_THROW(postselect_one_per_mode(FockVector(2)), InputError);
}
