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

// Balanced beam-splitter cascade that spreads the photons of one spatial mode
// over N output modes, and post-selection on one photon per output.

#ifndef SYMPHOTON_MULTIPORT_HPP
#define SYMPHOTON_MULTIPORT_HPP

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

#include "symphoton/fock.hpp"
#include "symphoton/symmetric.hpp"

namespace symphoton {

/// N-1 polarization-independent splitters; splitter n (n = N..2) taps a
/// fraction 1/n of the remaining carrier into output n-1. The carrier itself
/// leaves as output 0.
struct CascadeSpec {
  int modes = 0;
  /// reflectivities[i] belongs to splitter n = i + 2, equal to 1/n.
  std::vector<double> reflectivities;
  /// transfer(out, in): a^dag_in -> sum_out transfer(out, in) a^dag_out.
  Eigen::MatrixXcd transfer;

  /// Column 0: the single-photon amplitudes t_j of the carrier input.
  Eigen::VectorXcd amplitudes() const { return transfer.col(0); }
};

/// Throws InputError for N < 1.
CascadeSpec build_cascade(int modes);

/// Copy of `spec` with output j multiplied by exp(i phases[j]).
CascadeSpec with_output_phases(const CascadeSpec& spec, std::span<const double> phases);

/// Replaces spatial mode `mode` of `state` by the spec.modes cascade outputs
/// (inserted at the same position); all other modes pass through.
FockVector distribute_mode(const FockVector& state, std::size_t mode, const CascadeSpec& spec);

/// distribute_mode on a single-mode register; throws InputError otherwise.
FockVector distribute(const FockVector& input, const CascadeSpec& spec);

/// General passive linear optics on the whole register: a^dag_{m,P} ->
/// sum_j u(j, m) a^dag_{j,P} for both polarizations.
FockVector apply_mode_transform(const FockVector& state, const Eigen::MatrixXcd& u);

struct PostSelection {
  /// Normalized one-photon-per-mode component; empty when probability is 0.
  std::optional<QubitStateVector> state;
  double probability = 0.0;
};

/// Projects onto "exactly one photon in every spatial mode" and re-reads the
/// result as polarization qubits (qubit q = mode q). The probability is the
/// ratio of squared norms, so unnormalized inputs are fine. Throws InputError
/// on the zero vector.
PostSelection postselect_one_per_mode(const FockVector& state);

/// Normalized product state -> cascade -> post-selection.
PostSelection run_pipeline(std::span<const PolarizationAmplitude> params);

/// N!/N^N.
double one_per_mode_probability(int modes);

}  // namespace symphoton

#endif  // SYMPHOTON_MULTIPORT_HPP
