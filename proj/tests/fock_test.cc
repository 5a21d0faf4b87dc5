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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "symphoton/errors.hpp"
#include "symphoton/symmetric.hpp"
#include "test_util.hpp"

using namespace symphoton;
using symphoton::testing::fock_deviation;
using symphoton::testing::random_params;
using symphoton::testing::random_polarization;
using symphoton::testing::shared_rng;

namespace {

OccupationState occ(std::vector<std::uint16_t> flat) {
  return OccupationState::from_flat(std::move(flat));
}

const double kRootHalf = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(OccupationState, accessors) {
  auto s = occ({2, 1, 0, 3});
  EXPECT_EQ(s.mode_count(), 2u);
  EXPECT_EQ(s.count(0, Polarization::H), 2u);
  EXPECT_EQ(s.count(1, Polarization::V), 3u);
  EXPECT_EQ(s.photons_in_mode(0), 3u);
  EXPECT_EQ(s.total_photons(), 6u);
  EXPECT_THROW(OccupationState::from_flat({1, 2, 3}), InputError);
}

TEST(PolarizationAmplitude, rejects_unnormalized) {
  EXPECT_THROW(PolarizationAmplitude(1.0, 1.0), InputError);
  EXPECT_NO_THROW(PolarizationAmplitude(kRootHalf, kRootHalf));
  auto p = PolarizationAmplitude::normalized(3.0, Complex(0, 4.0));
  EXPECT_NEAR(std::abs(p.alpha()), 0.6, 1e-15);
  EXPECT_NEAR(std::abs(p.beta()), 0.8, 1e-15);
  EXPECT_THROW(PolarizationAmplitude::normalized(0.0, 0.0), InputError);
}

TEST(PolarizationAmplitude, projective_distance_ignores_phase) {
  auto p = PolarizationAmplitude::normalized(1.0, Complex(0.3, 0.2));
  auto q = PolarizationAmplitude(p.alpha() * std::polar(1.0, 0.7), p.beta() * std::polar(1.0, 0.7));
  EXPECT_NEAR(p.projective_distance(q), 0.0, 1e-15);
  EXPECT_NEAR(PolarizationAmplitude::horizontal().projective_distance(
                  PolarizationAmplitude::vertical()),
              1.0, 0.0);
}

TEST(apply_creation, ladder_examples) {
  auto one_h = apply_creation(FockVector::vacuum(1), 0, Polarization::H);
  EXPECT_EQ(one_h.size(), 1u);
  EXPECT_EQ(one_h.amplitude(occ({1, 0})), Complex(1.0));

  auto two_h = apply_creation(one_h, 0, Polarization::H);
  EXPECT_NEAR(std::abs(two_h.amplitude(occ({2, 0})) - std::sqrt(2.0)), 0.0, 1e-15);

  auto hv = apply_creation(one_h, 0, Polarization::V);
  EXPECT_EQ(hv.amplitude(occ({1, 1})), Complex(1.0));
}

TEST(apply_creation, distinct_slots_commute) {
  auto& rng = shared_rng();
  auto base = product_state(random_params(2, rng), 0, 2);
  for (std::size_t m1 = 0; m1 < 2; ++m1) {
    for (std::size_t m2 = 0; m2 < 2; ++m2) {
      for (auto p1 : {Polarization::H, Polarization::V}) {
        for (auto p2 : {Polarization::H, Polarization::V}) {
          auto x = apply_creation(apply_creation(base, m1, p1), m2, p2);
          auto y = apply_creation(apply_creation(base, m2, p2), m1, p1);
          EXPECT_LT(fock_deviation(x, y), 1e-14);
        }
      }
    }
  }
}

TEST(apply_creation, bad_mode) {
  EXPECT_THROW(apply_creation(FockVector::vacuum(1), 1, Polarization::H), InputError);
}

TEST(product_state, spec_examples) {
  const auto H = PolarizationAmplitude::horizontal();
  const auto V = PolarizationAmplitude::vertical();

  std::vector<PolarizationAmplitude> hh{H, H};
  auto s = product_state(hh);
  EXPECT_NEAR(std::abs(s.amplitude(occ({2, 0})) - std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(s.squared_norm(), 2.0, 1e-14);

  std::vector<PolarizationAmplitude> hv{H, V};
  s = product_state(hv);
  EXPECT_EQ(s.amplitude(occ({1, 1})), Complex(1.0));
  EXPECT_NEAR(s.squared_norm(), 1.0, 1e-14);

  std::vector<PolarizationAmplitude> diag{PolarizationAmplitude(kRootHalf, kRootHalf),
                                          PolarizationAmplitude(kRootHalf, -kRootHalf)};
  s = product_state(diag);
  EXPECT_NEAR(std::abs(s.amplitude(occ({2, 0})) - kRootHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(occ({0, 2})) + kRootHalf), 0.0, 1e-15);
  EXPECT_EQ(s.amplitude(occ({1, 1})), Complex(0.0));
  EXPECT_NEAR(s.squared_norm(), 1.0, 1e-14);
}

TEST(product_state, permutation_invariant) {
  auto& rng = shared_rng();
  for (int trial = 0; trial < 20; ++trial) {
    auto params = random_params(5, rng);
    auto before = product_state(params);
    std::shuffle(params.begin(), params.end(), rng);
    EXPECT_LT(fock_deviation(before, product_state(params)), 1e-13);
  }
}

TEST(product_state, norm_upper_bound) {
  auto& rng = shared_rng();
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      EXPECT_LE(product_state(random_params(n, rng)).squared_norm(), factorial(n) * (1 + 1e-12));
    }
  }
}

// Over one orthogonal pair {e, e_perp}, the even-N minimum is ((N/2)!)^2.
TEST(product_state, orthogonal_pair_lower_bound) {
  auto& rng = shared_rng();
  std::bernoulli_distribution coin;
  for (int n : {2, 4, 6}) {
    const double lo = std::pow(factorial(n / 2), 2);
    for (int trial = 0; trial < 50; ++trial) {
      const auto e = random_polarization(rng);
      const PolarizationAmplitude perp(-std::conj(e.beta()), std::conj(e.alpha()));
      std::vector<PolarizationAmplitude> params;
      for (int i = 0; i < n; ++i) params.push_back(coin(rng) ? e : perp);
      EXPECT_GE(product_state(params).squared_norm(), lo * (1 - 1e-12));
    }
  }
}

// Outside a single orthogonal pair the norm can drop below ((N/2)!)^2.
TEST(product_state, norm_below_half_split_for_four_directions) {
  const double r = 1 / std::sqrt(2.0);
  std::vector<PolarizationAmplitude> hvda{PolarizationAmplitude::horizontal(),
                                          PolarizationAmplitude::vertical(), PolarizationAmplitude(r, r),
                                          PolarizationAmplitude(r, -r)};
  EXPECT_NEAR(product_state(hvda).squared_norm(), 3.0, 1e-12);
}

TEST(inner_product, examples) {
  auto vac = FockVector::vacuum(1);
  EXPECT_EQ(inner_product(vac, vac), Complex(1.0));
  auto h = apply_creation(vac, 0, Polarization::H);
  auto v = apply_creation(vac, 0, Polarization::V);
  EXPECT_EQ(inner_product(h, v), Complex(0.0));
  const auto H = PolarizationAmplitude::horizontal();
  std::vector<PolarizationAmplitude> hh{H, H};
  auto psi = product_state(hh);
  EXPECT_NEAR(inner_product(psi, psi).real(), 2.0, 1e-14);
}

TEST(inner_product, conjugate_linear_in_first) {
  auto& rng = shared_rng();
  auto x = product_state(random_params(2, rng));
  auto y = product_state(random_params(2, rng));
  const Complex lambda(0.3, -1.2);
  EXPECT_LT(std::abs(inner_product(scaled(x, lambda), y) - std::conj(lambda) * inner_product(x, y)),
            1e-13);
  EXPECT_LT(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))), 1e-14);
}

TEST(tensor, examples) {
  auto vac2 = tensor(FockVector::vacuum(1), FockVector::vacuum(1));
  EXPECT_EQ(vac2.mode_count(), 2u);
  EXPECT_EQ(vac2.amplitude(occ({0, 0, 0, 0})), Complex(1.0));

  auto h = apply_creation(FockVector::vacuum(1), 0, Polarization::H);
  auto v = apply_creation(FockVector::vacuum(1), 0, Polarization::V);
  auto hv = tensor(h, v);
  EXPECT_EQ(hv.amplitude(occ({1, 0, 0, 1})), Complex(1.0));

  auto plus = scaled(add(h, v), kRootHalf);
  auto t = tensor(plus, h);
  EXPECT_NEAR(std::abs(t.amplitude(occ({1, 0, 1, 0})) - kRootHalf), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.amplitude(occ({0, 1, 1, 0})) - kRootHalf), 0.0, 1e-15);
  EXPECT_EQ(t.size(), 2u);
}

TEST(tensor, norm_multiplies) {
  auto& rng = shared_rng();
  for (int trial = 0; trial < 10; ++trial) {
    auto x = product_state(random_params(3, rng));
    auto y = product_state(random_params(2, rng));
    EXPECT_NEAR(tensor(x, y).squared_norm(), x.squared_norm() * y.squared_norm(),
                1e-12 * x.squared_norm() * y.squared_norm());
  }
}

TEST(FockVector, prunes_tiny_amplitudes) {
  FockVector::Terms terms;
  terms[occ({1, 0})] = 1e-16;
  terms[occ({0, 1})] = 0.5;
  FockVector v(1, std::move(terms));
  EXPECT_EQ(v.size(), 1u);
}

TEST(apply_phase, only_touches_one_slot) {
  auto h = apply_creation(FockVector::vacuum(1), 0, Polarization::H);
  auto v = apply_creation(FockVector::vacuum(1), 0, Polarization::V);
  auto s = apply_phase(add(h, v), 0, Polarization::V, M_PI / 2);
  EXPECT_NEAR(std::abs(s.amplitude(occ({1, 0})) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(occ({0, 1})) - Complex(0, 1)), 0.0, 1e-15);
}
