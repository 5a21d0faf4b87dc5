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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "symphoton/errors.hpp"
#include "symphoton/multiport.hpp"
#include "test_util.hpp"

using namespace symphoton;
using symphoton::testing::fock_deviation;
using symphoton::testing::max_abs_diff;
using symphoton::testing::phase_aligned_deviation;
using symphoton::testing::random_params;
using symphoton::testing::shared_rng;

namespace {

const auto H = PolarizationAmplitude::horizontal();
const auto V = PolarizationAmplitude::vertical();
const double kRootHalf = 1.0 / std::sqrt(2.0);

OccupationState occ(std::vector<std::uint16_t> flat) {
  return OccupationState::from_flat(std::move(flat));
}

double fock_fidelity(const FockVector& x, const FockVector& y) {
  return std::norm(inner_product(x, y)) / (x.squared_norm() * y.squared_norm());
}

}  // namespace

TEST(sps_combine, examples) {
  std::vector<PolarizationAmplitude> hv{H, V};
  EXPECT_NEAR(sps_combine(hv).probability, 0.25, 1e-14);
  std::vector<PolarizationAmplitude> hh{H, H};
  EXPECT_NEAR(sps_combine(hh).probability, 0.5, 1e-14);
  std::vector<PolarizationAmplitude> one{PolarizationAmplitude::normalized(1.0, Complex(0, 2))};
  EXPECT_NEAR(sps_combine(one).probability, 1.0, 1e-14);
}

TEST(sps_combine, carrier_state_is_target_product) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 5; ++n) {
    const auto params = random_params(n, rng);
    const auto r = sps_combine(params);
    EXPECT_NEAR(r.probability, normalization_squared(params) / std::pow(n, n), 1e-12);
    EXPECT_NEAR(fock_fidelity(r.state, product_state(params)), 1.0, 1e-12);
  }
}

TEST(bell_pair, examples) {
  const auto minus = bell_pair(BellKind::Minus);
  const auto plus = bell_pair(BellKind::Plus);
  EXPECT_NEAR(std::abs(minus.amplitude(occ({1, 0, 0, 1})) - kRootHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(minus.amplitude(occ({0, 1, 1, 0})) + kRootHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(plus.amplitude(occ({0, 1, 1, 0})) - kRootHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(minus, plus)), 0.0, 1e-15);
  EXPECT_NEAR(minus.squared_norm(), 1.0, 1e-15);
}

TEST(ncl_joint_state, norms) {
  EXPECT_LT(fock_deviation(ncl_joint_state(1, BellKind::Minus), bell_pair(BellKind::Minus)),
            1e-15);
  EXPECT_NEAR(ncl_emission_product(2, BellKind::Minus).squared_norm(), 6.0, 1e-12);
  EXPECT_NEAR(ncl_emission_product(3, BellKind::Minus).squared_norm(), 24.0, 1e-12);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_NEAR(ncl_joint_state(n, BellKind::Plus).squared_norm(), 1.0, 1e-12);
  }
}

TEST(projector_state, examples) {
  std::vector<PolarizationAmplitude> h{H};
  EXPECT_EQ(projector_state(h, BellKind::Minus).amplitude(occ({0, 1})), Complex(1.0));
  std::vector<PolarizationAmplitude> v{V};
  EXPECT_EQ(projector_state(v, BellKind::Minus).amplitude(occ({1, 0})), Complex(-1.0));
  std::vector<PolarizationAmplitude> hv{H, V};
  const auto s = projector_state(hv, BellKind::Minus);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.amplitude(occ({0, 1, 1, 0})), Complex(-1.0));
}

TEST(project_onto, examples) {
  std::vector<PolarizationAmplitude> h{H};
  auto r = project_onto(ncl_joint_state(1, BellKind::Minus), projector_state(h, BellKind::Minus));
  EXPECT_NEAR(r.probability, 0.5, 1e-14);
  EXPECT_EQ(r.residual.size(), 1u);
  EXPECT_NE(r.residual.amplitude(occ({1, 0})), Complex(0.0));

  std::vector<PolarizationAmplitude> hv{H, V};
  r = project_onto(ncl_joint_state(2, BellKind::Minus), projector_state(hv, BellKind::Minus));
  EXPECT_NEAR(r.probability, 1.0 / 6.0, 1e-14);

  std::vector<PolarizationAmplitude> hh{H, H};
  r = project_onto(ncl_joint_state(2, BellKind::Minus), projector_state(hh, BellKind::Minus));
  EXPECT_NEAR(r.probability, 1.0 / 3.0, 1e-14);
}

TEST(project_onto, residual_is_target_product) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto params = random_params(n, rng);
      for (auto kind : {BellKind::Minus, BellKind::Plus}) {
        const auto r = project_onto(ncl_joint_state(n, kind), projector_state(params, kind));
        EXPECT_GE(fock_fidelity(r.residual, product_state(params)), 1 - 1e-10);
        EXPECT_NEAR(r.probability, normalization_squared(params) / factorial(n + 1), 1e-10);
      }
    }
  }
}

TEST(project_onto, rejects_oversized_projector) {
  std::vector<PolarizationAmplitude> hh{H, H};
  EXPECT_THROW(project_onto(ncl_joint_state(1, BellKind::Minus), projector_state(hh, BellKind::Minus)),
               InputError);
}

TEST(cl_input_state, examples) {
  EXPECT_EQ(cl_input_state(1).amplitude(occ({1, 1})), Complex(1.0));
  EXPECT_NEAR(std::abs(cl_input_state(2).amplitude(occ({2, 2})) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cl_input_state(3).amplitude(occ({3, 3})) - 1.0), 0.0, 1e-14);
}

TEST(cl_distribution_probability, examples) {
  EXPECT_NEAR(cl_distribution_probability(1), 0.5, 1e-15);
  EXPECT_NEAR(cl_distribution_probability(2), 0.09375, 1e-15);
  EXPECT_NEAR(cl_distribution_probability(3), 720.0 / 46656.0, 1e-15);
}

TEST(cl_dicke_construction, is_dicke_2n) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = cl_dicke_construction(n);
    EXPECT_NEAR(r.probability, cl_distribution_probability(n), 1e-12);
    EXPECT_LT(phase_aligned_deviation(r.state->amplitudes(), dicke_state(2 * n, n).amplitudes()),
              1e-12);
  }
}

TEST(dicke_2n_construction, smallest_case) {
  const auto r = dicke_2n_construction(1, BellKind::Plus);
  EXPECT_LT(phase_aligned_deviation(r.state->amplitudes(), dicke_state(2, 1).amplitudes()), 1e-14);
}

// The one-per-mode distribution of the psi+- pair state carries equal
// Schmidt weight on every (k, N-k) split; the binomial weights of the
// 2N-photon Dicke state appear only at N = 1.
TEST(dicke_2n_construction, ncl_schmidt_weights_are_uniform) {
  for (int n = 1; n <= 3; ++n) {
    for (auto kind : {BellKind::Plus, BellKind::Minus}) {
      const auto r = dicke_2n_construction(n, kind);
      EXPECT_NEAR(r.probability, one_per_mode_probability(n), 1e-12);
      const auto s = split_dicke_coefficients(*r.state);
      for (int k = 0; k <= n; ++k) {
        const double sign = kind == BellKind::Minus && k % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(std::abs(s[k] - sign / std::sqrt(n + 1.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(split_dicke_coefficients, rejects_non_split_state) {
  std::vector<Complex> amps(16);
  amps[0b0011] = 1.0;  // |HHVV>, A = HH, B = VV: fine
  EXPECT_NO_THROW(split_dicke_coefficients(QubitStateVector(4, amps)));
  amps[0b0101] = 1.0;  // |HVHV> alone breaks the A-side symmetry
  EXPECT_THROW(split_dicke_coefficients(QubitStateVector(4, amps)), InputError);
}

TEST(phase_map, minus_to_plus) {
  for (int n = 1; n <= 4; ++n) {
    FockVector mapped = ncl_joint_state(n, BellKind::Minus);
    for (int b = 1; b <= n; ++b) {
      mapped = apply_phase(mapped, b, Polarization::H, M_PI / 2);
      mapped = apply_phase(mapped, b, Polarization::V, -M_PI / 2);
    }
    const auto plus = scaled(ncl_joint_state(n, BellKind::Plus), std::pow(Complex(0, -1), n));
    EXPECT_LT(fock_deviation(mapped, plus), 1e-13);

    // Distributed, the map flips the alternating sign of the Schmidt weights.
    const auto after = postselect_one_per_mode(distribute_mode(mapped, 0, build_cascade(n)));
    const auto want = dicke_2n_construction(n, BellKind::Plus);
    EXPECT_LT(phase_aligned_deviation(after.state->amplitudes(), want.state->amplitudes()), 1e-12);
  }
}

TEST(project_qubits, any_half_of_dicke_2n) {
  auto& rng = shared_rng();
  const int n = 2;
  const auto d = cl_dicke_construction(n);
  for (int trial = 0; trial < 10; ++trial) {
    const auto onto = random_params(n, rng);
    const std::vector<int> a_side{0, 1};
    const std::vector<int> b_side{2, 3};
    const std::vector<int> mixed{3, 0};
    const auto ra = project_qubits(*d.state, a_side, onto);
    const auto rb = project_qubits(*d.state, b_side, onto);
    const auto rm = project_qubits(*d.state, mixed, onto);
    EXPECT_NEAR(ra.probability, rb.probability, 1e-13);
    EXPECT_NEAR(ra.probability, rm.probability, 1e-13);
    EXPECT_LT(max_abs_diff(ra.state->amplitudes(), rb.state->amplitudes()), 1e-12);
    EXPECT_LT(max_abs_diff(ra.state->amplitudes(), rm.state->amplitudes()), 1e-12);
  }
  EXPECT_THROW(project_qubits(*d.state, std::vector<int>{0, 0}, random_params(2, rng)),
               InputError);
}

TEST(rates, examples) {
  const auto ghz = synthesize(SymmetricCoefficients({kRootHalf, 0.0, 0.0, kRootHalf})).params;
  auto r = rates(3, ghz, {});
  EXPECT_NEAR(r.ncl.rate / r.sps.rate, 3.375, 1e-12);
  EXPECT_NEAR(r.cl.rate / r.ncl.rate, 720.0 / (4 * 216.0), 1e-12);

  std::vector<PolarizationAmplitude> hv{H, V};
  r = rates(2, hv, {});
  EXPECT_NEAR(r.ncl.rate, 0.125, 1e-15);
  EXPECT_NEAR(r.cl.rate / r.ncl.rate, 0.5, 1e-12);

  EXPECT_NEAR(rates(4, 1.0, {}).cl.rate / rates(4, 1.0, {}).ncl.rate, 1.96875, 1e-12);
  EXPECT_THROW(rates(2, hv, {-1.0, 1.0, 1.0}), InputError);
  EXPECT_THROW(rates(3, hv, {}), InputError);
}

TEST(rates, ncl_beats_sps_only_above_two) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = rates(n, 1.0, {});
    const double ratio = r.ncl.rate / r.sps.rate;
    EXPECT_NEAR(ratio, std::pow(n / 2.0, n), 1e-12 * ratio);
    if (n > 2) {
      EXPECT_GT(ratio, 1.0);
    } else {
      EXPECT_LE(ratio, 1.0);
    }
  }
  EXPECT_NEAR(rates(2, 1.0, {}).ncl.rate / rates(2, 1.0, {}).sps.rate, 1.0, 1e-15);
}

TEST(rates, closed_form_matches_simulated_stages) {
  auto& rng = shared_rng();
  const SourceRates src{0.7, 1.3, 0.4};
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto params = random_params(n, rng);
      const auto closed = rates(n, params, src);
      const auto sim = simulated_rates(params, src);
      for (auto [c, s] : {std::pair{closed.sps, sim.sps}, std::pair{closed.ncl, sim.ncl},
                          std::pair{closed.cl, sim.cl}}) {
        EXPECT_NEAR(c.rate, s.rate, 1e-10 * c.rate);
        EXPECT_NEAR(c.p_input, s.p_input, 1e-10);
        EXPECT_NEAR(c.p_output, s.p_output, 1e-10);
      }
    }
  }
}
