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

// Brute-force reference computations in quad precision. Everything here is
// deliberately literal (factorial tuple sums, operator-by-operator ladder
// expansion, full basis enumeration) and shares no code path with the
// optimized modules beyond the FockVector/QubitStateVector result types.
// Meant for tests and the self-test command only.

#ifndef SYMPHOTON_ORACLE_HPP
#define SYMPHOTON_ORACLE_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <span>
#include <utility>
#include <vector>

#include "symphoton/fock.hpp"
#include "symphoton/symmetric.hpp"

namespace symphoton::oracle {

using Real = boost::multiprecision::cpp_bin_float_quad;
using ExactAmplitude = boost::multiprecision::cpp_complex_quad;

inline constexpr int kMaxTuplePhotons = 8;
inline constexpr unsigned kMaxExpandPhotons = 12;

ExactAmplitude to_exact(Complex z);
Complex to_double(const ExactAmplitude& z);

/// sqrt(C(N,k)) times the sum over all N! orderings (i_1..i_N) of
/// beta_{i_1}..beta_{i_k} alpha_{i_{k+1}}..alpha_{i_N}. Throws InputError for N > 8.
ExactAmplitude tuple_sum_ck(std::span<const PolarizationAmplitude> params, int k);

/// A product of creation operators with a coefficient.
struct Monomial {
  ExactAmplitude coeff;
  std::vector<std::pair<std::size_t, Polarization>> creations;
};
/// A sum of monomials; a word is the product of its factors.
using Factor = std::vector<Monomial>;
using OperatorWord = std::vector<Factor>;

/// prod_i (alpha_i a^dag_H + beta_i a^dag_V) on `mode`.
OperatorWord product_word(std::span<const PolarizationAmplitude> params, std::size_t mode = 0);

/// prod_{i=1..N} (a^dag_H b_i^dag_V + sign a^dag_V b_i^dag_H), a = mode 0.
OperatorWord pair_emission_word(int photons, int sign);

/// (a^dag_H a^dag_V)^N on mode 0.
OperatorWord collinear_word(int photons);

/// Replaces every a^dag_{mode,P} by sum_j a^dag_{mode+j,P}/sqrt(outputs),
/// shifting the modes after `mode` up by outputs-1.
OperatorWord spread_word(const OperatorWord& word, std::size_t mode, int outputs);

/// Applies the word to the vacuum one creation operator at a time. Throws
/// InputError if a monomial would create more than 12 photons in total.
FockVector expand_product(const OperatorWord& word, std::size_t mode_count);

/// Enumerates every basis state with the state's photon number(s) and sums
/// |amplitude|^2 over the one-photon-per-mode subset, divided by the total.
double brute_postselect(const FockVector& state, std::size_t modes);

/// One-per-mode component of the spread product word, read as qubits and
/// normalized.
QubitStateVector brute_output_state(std::span<const PolarizationAmplitude> params);

/// Sum over the distinct permutations of V^k H^(N-k), by next_permutation.
QubitStateVector literal_dicke_state(int photons, int excitations);

/// prod_i (alpha_i a^dag_H + beta_i a^dag_V)/sqrt(N): the part of the merged
/// single-photon inputs that lands in the carrier. Its squared norm is the
/// single-photon-source combining probability.
double brute_sps_probability(std::span<const PolarizationAmplitude> params);

/// Residual sum_y conj(S(y)) psi(x, y) over the trailing modes, accumulated
/// in quad precision by scanning every pair of terms.
FockVector brute_partial_projection(const FockVector& joint, const FockVector& projector);

}  // namespace symphoton::oracle

#endif  // SYMPHOTON_ORACLE_HPP
