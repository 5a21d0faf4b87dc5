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

// The three ways of preparing the N-photon single-mode input:
//
//  * sps: N single-photon sources merged by a reversed splitter cascade,
//  * ncl: N non-collinear down-conversion pairs sharing mode a, with the
//    partner modes b_1..b_N projected onto a product state,
//  * cl:  the N-th order emission of a collinear type-II source spread over
//    2N modes, then N of those projected.
//
// Register layout for the pair sources: mode 0 is a, mode i is b_i.

#ifndef SYMPHOTON_SCHEMES_HPP
#define SYMPHOTON_SCHEMES_HPP

#include <span>
#include <vector>

#include "symphoton/fock.hpp"
#include "symphoton/multiport.hpp"
#include "symphoton/symmetric.hpp"

namespace symphoton {

enum class BellKind { Minus, Plus };

struct SourceRates {
  double sps = 1.0;  // single-photon creation rate
  double ncl = 1.0;  // non-collinear pair creation rate
  double cl = 1.0;   // collinear pair emission rate
};

/// One row of a RateReport. rate = source_factor * p_input * p_output, and
/// norm2 below is normalization_squared(params).
///
/// sps: source_factor c^N, p_input = norm2/N^N, p_output = N!/N^N.
/// ncl: source_factor (c/2)^N (N+1)!, p_input = norm2/(N+1)!, p_output = N!/N^N.
/// cl:  source_factor c^N (N!)^2, p_input = (2N)!/(2N)^(2N) (spreading the
///      2N photons), p_output = norm2/(N+1)! (the projection).
struct SchemeRate {
  double source_factor = 0.0;
  double p_input = 0.0;
  double p_output = 0.0;
  double rate = 0.0;
};

struct RateReport {
  int photons = 0;
  double normalization_squared = 0.0;
  SchemeRate sps;
  SchemeRate ncl;
  SchemeRate cl;
};

struct PreparedInput {
  FockVector state;  // normalized, on the single mode a
  double probability = 0.0;
};

/// Sends photon i (in input e_i) through the reversed cascade and keeps the
/// events with all N photons in the carrier mode.
PreparedInput sps_combine(std::span<const PolarizationAmplitude> params);

/// (a^dag_H b^dag_V -+ a^dag_V b^dag_H)|0>/sqrt(2) on the two-mode register (a, b).
FockVector bell_pair(BellKind kind);

/// Unnormalized prod_i (a^dag_H b_i^dag_V -+ a^dag_V b_i^dag_H)|0> on (a, b_1..b_N).
FockVector ncl_emission_product(int photons, BellKind kind);

/// ncl_emission_product divided by sqrt((N+1)!). Throws NumericalError if the
/// product's squared norm is not (N+1)!.
FockVector ncl_joint_state(int photons, BellKind kind);

/// prod_i (alpha_i^* b_i^dag_V -+ beta_i^* b_i^dag_H)|0> on b_1..b_N; the sign
/// matches `kind` so the residual in mode a is prod (alpha a^dag_H + beta a^dag_V)|0>.
FockVector projector_state(std::span<const PolarizationAmplitude> params, BellKind kind);

struct Projection {
  FockVector residual;  // unnormalized partial inner product
  double probability = 0.0;
};

/// Partial inner product of `projector` with the trailing registers of
/// `joint`. probability = |residual|^2 / (|joint|^2 |projector|^2).
Projection project_onto(const FockVector& joint, const FockVector& projector);

/// Post-selected 2N-qubit state (qubits A_1..A_N then B_1..B_N) from spreading
/// mode a of ncl_joint_state over N modes.
PostSelection dicke_2n_construction(int photons, BellKind kind = BellKind::Plus);

/// Coefficients s_k with psi = sum_k s_k |D_N^(k)>_A |D_N^(N-k)>_B. Throws
/// InputError if `state` is not of that form within `tol`.
std::vector<Complex> split_dicke_coefficients(const QubitStateVector& state, double tol = 1e-9);

/// (a^dag_H a^dag_V)^N |0> / N! on one mode. Throws NumericalError if the
/// unnormalized norm is not N!.
FockVector cl_input_state(int photons);

/// cl_input_state spread over 2N modes and post-selected.
PostSelection cl_dicke_construction(int photons);

/// (2N)!/(2N)^(2N).
double cl_distribution_probability(int photons);

/// Projects the listed qubits onto the single-qubit states `onto` (as bras)
/// and returns the remaining qubits in order, normalized, with the
/// probability of that outcome.
PostSelection project_qubits(const QubitStateVector& state, std::span<const int> qubits,
                             std::span<const PolarizationAmplitude> onto);

/// Closed-form rates for the three schemes.
RateReport rates(int photons, std::span<const PolarizationAmplitude> params,
                 const SourceRates& src);
/// Same, from a known norm2 (every rate is linear in it).
RateReport rates(int photons, double normalization_squared, const SourceRates& src);

/// The same report rebuilt from simulated stage probabilities: sps_combine,
/// run_pipeline, project_onto on the ncl joint state and the cl spreading.
/// The cl projection stage uses the closed form norm2/(N+1)!.
RateReport simulated_rates(std::span<const PolarizationAmplitude> params, const SourceRates& src);

}  // namespace symphoton

#endif  // SYMPHOTON_SCHEMES_HPP
