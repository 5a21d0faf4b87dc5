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

// Sparse multimode bosonic states with two polarization labels per spatial
// mode. A FockVector is an immutable map from occupation patterns to complex
// amplitudes; every operation returns a new vector.

#ifndef SYMPHOTON_FOCK_HPP
#define SYMPHOTON_FOCK_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace symphoton {

using Complex = std::complex<double>;

/// Amplitudes with modulus below this are dropped from every FockVector.
inline constexpr double kPruneThreshold = 1e-14;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

/// Occupation numbers (n_{m,H}, n_{m,V}) for each spatial mode m, stored flat
/// as [n_{0,H}, n_{0,V}, n_{1,H}, ...] so ordering and equality are structural.
class OccupationState {
 public:
  /// Vacuum over `modes` spatial modes.
  explicit OccupationState(std::size_t modes = 0) : occ_(2 * modes, 0) {}

  /// Takes the flat layout directly; size must be even.
  static OccupationState from_flat(std::vector<std::uint16_t> flat);

  std::size_t mode_count() const noexcept { return occ_.size() / 2; }
  unsigned count(std::size_t mode, Polarization pol) const {
    return occ_[slot(mode, pol)];
  }
  unsigned photons_in_mode(std::size_t mode) const {
    return occ_[2 * mode] + occ_[2 * mode + 1];
  }
  unsigned total_photons() const noexcept;

  std::span<const std::uint16_t> flat() const noexcept { return occ_; }

  /// Copy with one occupation number raised by one.
  OccupationState incremented(std::size_t mode, Polarization pol) const;

  /// Concatenation of the two mode registers (this first).
  OccupationState joined(const OccupationState& other) const;

  auto operator<=>(const OccupationState&) const = default;
  bool operator==(const OccupationState&) const = default;

 private:
  static std::size_t slot(std::size_t mode, Polarization pol) {
    return 2 * mode + static_cast<std::size_t>(pol);
  }

  std::vector<std::uint16_t> occ_;
};

/// Single-photon polarization state alpha|H> + beta|V>, normalized.
class PolarizationAmplitude {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws InputError unless |alpha|^2 + |beta|^2 = 1 within kNormTolerance.
  PolarizationAmplitude(Complex alpha, Complex beta);

  /// Rescales (alpha, beta) to unit norm. Throws on the zero vector.
  static PolarizationAmplitude normalized(Complex alpha, Complex beta);

  static PolarizationAmplitude horizontal() { return {1.0, 0.0}; }
  static PolarizationAmplitude vertical() { return {0.0, 1.0}; }

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

  /// <this|other> as qubit states.
  Complex overlap(const PolarizationAmplitude& other) const noexcept {
    return std::conj(alpha_) * other.alpha_ + std::conj(beta_) * other.beta_;
  }

  /// sqrt(1 - |<this|other>|^2), evaluated as |alpha beta' - beta alpha'|.
  double projective_distance(const PolarizationAmplitude& other) const noexcept {
    return std::abs(alpha_ * other.beta_ - beta_ * other.alpha_);
  }

 private:
  Complex alpha_;
  Complex beta_;
};

/// One term of a linear combination of creation operators: coeff * a^dag_{mode,pol}.
struct CreationTerm {
  std::size_t mode;
  Polarization pol;
  Complex coeff;
};

class FockVector {
 public:
  using Terms = std::map<OccupationState, Complex>;

  /// Zero vector on `modes` spatial modes.
  explicit FockVector(std::size_t modes = 0) : modes_(modes) {}

  /// Takes ownership of `terms`, dropping amplitudes below kPruneThreshold.
  /// Throws InputError if any key has the wrong mode count.
  FockVector(std::size_t modes, Terms terms);

  static FockVector vacuum(std::size_t modes);
  static FockVector basis(OccupationState state, Complex amplitude = 1.0);

  std::size_t mode_count() const noexcept { return modes_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Amplitude of `state`, zero if absent.
  Complex amplitude(const OccupationState& state) const;

  double squared_norm() const noexcept;

 private:
  std::size_t modes_;
  Terms terms_;
};

/// a^dag_{mode,pol} applied termwise with the sqrt(n+1) factor.
FockVector apply_creation(const FockVector& state, std::size_t mode, Polarization pol);

/// (sum_j coeff_j a^dag_j) applied to `state`.
FockVector apply_creation_sum(const FockVector& state, std::span<const CreationTerm> op);

/// Unnormalized prod_i (alpha_i a^dag_H + beta_i a^dag_V)|0> in `mode` of a
/// register with `mode_count` modes. Its squared norm is N(alpha,beta)^2.
FockVector product_state(std::span<const PolarizationAmplitude> params, std::size_t mode = 0,
                         std::size_t mode_count = 1);

/// <x|y>, conjugate-linear in x.
Complex inner_product(const FockVector& x, const FockVector& y);

/// x (x) y with the registers of x placed first.
FockVector tensor(const FockVector& x, const FockVector& y);

FockVector scaled(const FockVector& x, Complex factor);

/// x + y on registers of equal size.
FockVector add(const FockVector& x, const FockVector& y);

/// x / ||x||. Throws InputError on the zero vector.
FockVector normalized(const FockVector& x);

/// Multiplies every term by exp(i phase * n_{mode,pol}), i.e. the map
/// a^dag_{mode,pol} -> exp(i phase) a^dag_{mode,pol}.
FockVector apply_phase(const FockVector& x, std::size_t mode, Polarization pol, double phase);

}  // namespace symphoton

#endif  // SYMPHOTON_FOCK_HPP
