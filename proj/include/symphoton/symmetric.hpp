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

// Symmetric N-qubit states: Dicke basis, the expansion coefficients c_k of a
// product of single-photon creation operators, and the inverse map from a
// target state back to single-photon polarizations via the roots of the
// Majorana polynomial.

#ifndef SYMPHOTON_SYMMETRIC_HPP
#define SYMPHOTON_SYMMETRIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "symphoton/fock.hpp"

namespace symphoton {

/// Binomial coefficient as a double; exact for the sizes used here.
double binomial(int n, int k);
double factorial(int n);

/// c_0..c_N. The overall scale is free; at least one entry is nonzero.
class SymmetricCoefficients {
 public:
  /// Throws InputError on an empty or all-zero vector.
  explicit SymmetricCoefficients(std::vector<Complex> c);

  int photons() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& values() const noexcept { return c_; }
  Complex operator[](std::size_t k) const { return c_[k]; }

  /// Same direction, rescaled to sum_k |c_k|^2 = 1.
  SymmetricCoefficients unit() const;

 private:
  std::vector<Complex> c_;
};

/// Dense 2^N amplitude vector. Qubit q is bit (N-1-q) of the index, bit set
/// means V; so for N = 3 the string |V H H> sits at index 4.
class QubitStateVector {
 public:
  QubitStateVector() = default;
  QubitStateVector(int qubits, std::vector<Complex> amplitudes);

  int qubits() const noexcept { return qubits_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }

  double squared_norm() const noexcept;
  bool is_normalized(double tol = 1e-10) const noexcept;

 private:
  int qubits_ = 0;
  std::vector<Complex> amps_;
};

/// <x|y>; throws InputError on a size mismatch.
Complex inner_product(const QubitStateVector& x, const QubitStateVector& y);

/// |<x|y>| / (|x| |y|).
double overlap(const QubitStateVector& x, const QubitStateVector& y);

/// overlap squared.
double fidelity(const QubitStateVector& x, const QubitStateVector& y);

/// Uniform superposition of the weight-k bitstrings over N qubits.
QubitStateVector dicke_state(int photons, int excitations);

/// c_k = sqrt(C(N,k)) * k! (N-k)! * e_k where e_k sums prod beta over k-subsets
/// times prod alpha over the complement. Equal to the sum over all N! index
/// tuples, without enumerating them.
SymmetricCoefficients coefficients_from_params(std::span<const PolarizationAmplitude> params);

/// sum_k |c_k|^2 / N!, the squared norm of the unnormalized product state.
double normalization_squared(std::span<const PolarizationAmplitude> params);

/// sum_k c_k |D_N^(k)>, renormalized to unit norm.
QubitStateVector output_state(const SymmetricCoefficients& coeffs);

/// Dicke-basis amplitudes <D_N^(k)|psi> of a symmetric state. Throws
/// InputError if `state` has a component outside the symmetric subspace
/// larger than `tol`.
SymmetricCoefficients dicke_coefficients(const QubitStateVector& state, double tol = 1e-9);

/// P(z) = sum_k (-1)^k sqrt(C(N,k)) c_k z^k.
struct MajoranaPolynomial {
  std::vector<Complex> coefficients;  // p_0..p_N
  /// Largest k with |p_k| > kDegreeTolerance * max|p|.
  int degree = 0;

  static constexpr double kDegreeTolerance = 1e-12;
};

MajoranaPolynomial majorana_polynomial(const SymmetricCoefficients& coeffs);

/// Roots of P with multiplicity (degree many).
std::vector<Complex> majorana_roots(const MajoranaPolynomial& poly,
                                    double residual_tol = 1e-12);

struct SynthesisResult {
  std::vector<PolarizationAmplitude> params;  // roots first, then |H> slots
  std::vector<Complex> roots;
  int degree = 0;
  double max_residual = 0.0;
  double round_trip_overlap = 0.0;
};

/// Polarizations producing the target symmetric state: (z, 1)/sqrt(1+|z|^2)
/// for each Majorana root z, and |H> for each of the N-K missing degrees.
/// Throws NumericalError when the root residual or the round-trip overlap
/// (must reach 1 - tol) fails. root_tol bounds the scale-free root residual.
SynthesisResult synthesize(const SymmetricCoefficients& coeffs, double tol = 1e-9,
                           double root_tol = 1e-12);

std::vector<PolarizationAmplitude> params_from_coefficients(const SymmetricCoefficients& coeffs,
                                                            double tol = 1e-9);

}  // namespace symphoton

#endif  // SYMPHOTON_SYMMETRIC_HPP
