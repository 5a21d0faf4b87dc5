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

#include "symphoton/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "symphoton/errors.hpp"
#include "symphoton/polynomial.hpp"

namespace symphoton {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

SymmetricCoefficients::SymmetricCoefficients(std::vector<Complex> c) : c_(std::move(c)) {
  if (c_.size() < 2) throw InputError("symmetric coefficients need N >= 1 (N+1 entries)");
  if (std::all_of(c_.begin(), c_.end(), [](Complex x) { return x == Complex{}; })) {
    throw InputError("symmetric coefficients are all zero");
  }
}

SymmetricCoefficients SymmetricCoefficients::unit() const {
  double norm2 = 0.0;
  for (const auto& x : c_) norm2 += std::norm(x);
  std::vector<Complex> u = c_;
  for (auto& x : u) x /= std::sqrt(norm2);
  return SymmetricCoefficients(std::move(u));
}

QubitStateVector::QubitStateVector(int qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (qubits < 0 || amps_.size() != (std::size_t{1} << qubits)) {
    throw InputError("qubit vector length must be 2^" + std::to_string(qubits));
  }
}

double QubitStateVector::squared_norm() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

bool QubitStateVector::is_normalized(double tol) const noexcept {
  return std::abs(squared_norm() - 1.0) <= tol;
}

Complex inner_product(const QubitStateVector& x, const QubitStateVector& y) {
  if (x.qubits() != y.qubits()) throw InputError("qubit count mismatch in inner product");
  Complex s{};
  for (std::size_t i = 0; i < x.amplitudes().size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double overlap(const QubitStateVector& x, const QubitStateVector& y) {
  return std::abs(inner_product(x, y)) / std::sqrt(x.squared_norm() * y.squared_norm());
}

double fidelity(const QubitStateVector& x, const QubitStateVector& y) {
  const double o = overlap(x, y);
  return o * o;
}

QubitStateVector dicke_state(int photons, int excitations) {
  if (photons < 1) throw InputError("Dicke state needs N >= 1");
  if (excitations < 0 || excitations > photons) {
    throw InputError("Dicke excitation number " + std::to_string(excitations) +
                     " outside [0, " + std::to_string(photons) + "]");
  }
  std::vector<Complex> amps(std::size_t{1} << photons);
  const double a = 1.0 / std::sqrt(binomial(photons, excitations));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::popcount(i) == excitations) amps[i] = a;
  }
  return {photons, std::move(amps)};
}

SymmetricCoefficients coefficients_from_params(std::span<const PolarizationAmplitude> params) {
  if (params.empty()) throw InputError("coefficients_from_params needs at least one photon");
  const int n = static_cast<int>(params.size());
  // e[k]: sum over k-subsets S of prod_{S} beta * prod_{not S} alpha.
  std::vector<Complex> e{1.0};
  for (const auto& p : params) {
    std::vector<Complex> next(e.size() + 1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k] += e[k] * p.alpha();
      next[k + 1] += e[k] * p.beta();
    }
    e = std::move(next);
  }
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = std::sqrt(binomial(n, k)) * factorial(k) * factorial(n - k) * e[k];
  }
  return SymmetricCoefficients(std::move(c));
}

double normalization_squared(std::span<const PolarizationAmplitude> params) {
  const auto c = coefficients_from_params(params);
  double s = 0.0;
  for (const auto& x : c.values()) s += std::norm(x);
  return s / factorial(c.photons());
}

QubitStateVector output_state(const SymmetricCoefficients& coeffs) {
  const int n = coeffs.photons();
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const int k = std::popcount(i);
    amps[i] = coeffs[k] / std::sqrt(binomial(n, k));
  }
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(norm2);
  return {n, std::move(amps)};
}

SymmetricCoefficients dicke_coefficients(const QubitStateVector& state, double tol) {
  const int n = state.qubits();
  std::vector<Complex> d(n + 1);
  for (std::size_t i = 0; i < state.amplitudes().size(); ++i) d[std::popcount(i)] += state[i];
  for (int k = 0; k <= n; ++k) d[k] /= std::sqrt(binomial(n, k));
  double deviation = 0.0;
  for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
    const int k = std::popcount(i);
    deviation = std::max(deviation, std::abs(state[i] - d[k] / std::sqrt(binomial(n, k))));
  }
  if (deviation > tol) {
    throw InputError("state is not permutation symmetric (deviation " +
                     std::to_string(deviation) + ")");
  }
  return SymmetricCoefficients(std::move(d));
}

MajoranaPolynomial majorana_polynomial(const SymmetricCoefficients& coeffs) {
  const int n = coeffs.photons();
  MajoranaPolynomial poly;
  poly.coefficients.resize(n + 1);
  double largest = 0.0;
  for (int k = 0; k <= n; ++k) {
    poly.coefficients[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::sqrt(binomial(n, k)) * coeffs[k];
    largest = std::max(largest, std::abs(poly.coefficients[k]));
  }
  poly.degree = n;
  while (poly.degree > 0 &&
         std::abs(poly.coefficients[poly.degree]) <= MajoranaPolynomial::kDegreeTolerance * largest) {
    --poly.degree;
  }
  return poly;
}

namespace {

// Coefficients p_0..p_K with low-order noise zeroed so that it yields an
// exact root at zero, mirroring how leading noise lowers the degree.
poly::RootReport solve_majorana(const MajoranaPolynomial& majorana, double residual_tol) {
  std::vector<Complex> p(majorana.coefficients.begin(),
                         majorana.coefficients.begin() + majorana.degree + 1);
  double largest = 0.0;
  for (const auto& x : p) largest = std::max(largest, std::abs(x));
  for (auto& x : p) {
    if (std::abs(x) > MajoranaPolynomial::kDegreeTolerance * largest) break;
    x = Complex{};
  }
  return poly::find_roots(p, residual_tol);
}

}  // namespace

std::vector<Complex> majorana_roots(const MajoranaPolynomial& poly, double residual_tol) {
  return solve_majorana(poly, residual_tol).roots;
}

SynthesisResult synthesize(const SymmetricCoefficients& coeffs, double tol, double root_tol) {
  if (!(tol > 0.0)) throw InputError("synthesis tolerance must be positive");
  const auto target = coeffs.unit();
  const auto poly = majorana_polynomial(target);

  SynthesisResult result;
  result.degree = poly.degree;
  auto report = solve_majorana(poly, root_tol);
  result.roots = std::move(report.roots);
  result.max_residual = report.max_residual;
  for (const auto& z : result.roots) {
    const double norm = std::hypot(std::abs(z), 1.0);
    result.params.emplace_back(z / norm, 1.0 / norm);
  }
  for (int k = poly.degree; k < target.photons(); ++k) {
    result.params.push_back(PolarizationAmplitude::horizontal());
  }

  result.round_trip_overlap =
      overlap(output_state(target), output_state(coefficients_from_params(result.params)));
  if (!(result.round_trip_overlap >= 1.0 - tol)) {
    throw NumericalError("synthesized parameters do not reproduce the target state",
                         1.0 - result.round_trip_overlap);
  }
  return result;
}

std::vector<PolarizationAmplitude> params_from_coefficients(const SymmetricCoefficients& coeffs,
                                                            double tol) {
  return synthesize(coeffs, tol).params;
}

}  // namespace symphoton
