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

// Entanglement-class fingerprint of a symmetric state: how many of its
// single-photon polarization states coincide.

#ifndef SYMPHOTON_SLOCC_HPP
#define SYMPHOTON_SLOCC_HPP

#include <span>
#include <string>
#include <vector>

#include "symphoton/fock.hpp"
#include "symphoton/symmetric.hpp"

namespace symphoton {

inline constexpr double kDefaultClusterTolerance = 1e-6;

/// Non-increasing multiplicities of coincident states, summing to N.
class DegeneracyConfiguration {
 public:
  DegeneracyConfiguration() = default;
  /// Sorts the input; throws InputError on a non-positive entry.
  explicit DegeneracyConfiguration(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const noexcept { return m_; }
  int diversity_degree() const noexcept { return static_cast<int>(m_.size()); }
  int photons() const noexcept;

  /// "(2,1)" style.
  std::string to_string() const;

  bool operator==(const DegeneracyConfiguration&) const = default;

 private:
  std::vector<int> m_;
};

struct Clustering {
  DegeneracyConfiguration configuration;
  /// groups[g] lists the parameter indices merged into group g, largest first.
  std::vector<std::vector<int>> groups;
  /// Set when a merged pair is farther apart than tol/10, or a pair left
  /// apart is within [tol, 10 tol]: the result sits near the threshold.
  std::vector<std::string> warnings;
};

/// Transitive-closure grouping under the projective distance
/// sqrt(1 - |<e_i|e_j>|^2) <= tol.
Clustering cluster_states(std::span<const PolarizationAmplitude> params,
                          double tol = kDefaultClusterTolerance);

DegeneracyConfiguration degeneracy_configuration(std::span<const PolarizationAmplitude> params,
                                                 double tol = kDefaultClusterTolerance);

struct ClassLabel {
  DegeneracyConfiguration configuration;
  /// N = 3: "separable", "W" or "GHZ"; otherwise the configuration string.
  std::string name;
  std::vector<std::string> warnings;
};

ClassLabel label_configuration(const DegeneracyConfiguration& config);

/// Synthesizes the parameters of `coeffs` and clusters them.
ClassLabel classify_coefficients(const SymmetricCoefficients& coeffs,
                                 double tol = kDefaultClusterTolerance,
                                 double synthesis_tol = 1e-9);

/// Structural equality. Different configurations certify SLOCC
/// inequivalence; equal ones do not certify equivalence.
bool same_class(const DegeneracyConfiguration& a, const DegeneracyConfiguration& b);

}  // namespace symphoton

#endif  // SYMPHOTON_SLOCC_HPP
