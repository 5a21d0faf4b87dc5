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

#ifndef SYMPHOTON_POLYNOMIAL_HPP
#define SYMPHOTON_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "symphoton/fock.hpp"

namespace symphoton::poly {

// Coefficients are stored in increasing degree: p[k] multiplies z^k.

Complex evaluate(std::span<const Complex> p, Complex z);

/// k-th derivative coefficients.
std::vector<Complex> derivative(std::span<const Complex> p, int order = 1);

/// |P(z)| / sum_k |p_k| |z|^k; scale free, and bounded by 1.
double backward_residual(std::span<const Complex> p, Complex z);

struct RootReport {
  std::vector<Complex> roots;  // with multiplicity
  double max_residual = 0.0;
};

/// All roots of the polynomial whose highest coefficient is nonzero.
///
/// Eigenvalues of the balanced companion matrix, then Newton polishing, then
/// multiplicity recovery: a group of m nearby eigenvalues is replaced by a
/// single m-fold root when P and its first m-1 derivatives vanish at the
/// refined group center. Exact zero low-order coefficients give exact zero
/// roots. Throws NumericalError if a root's backward residual exceeds
/// `residual_tol`.
RootReport find_roots(std::span<const Complex> p, double residual_tol = 1e-12);

}  // namespace symphoton::poly

#endif  // SYMPHOTON_POLYNOMIAL_HPP
