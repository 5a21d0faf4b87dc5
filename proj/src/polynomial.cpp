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

#include "symphoton/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "symphoton/errors.hpp"

namespace symphoton::poly {

namespace {

// Groups whose spread exceeds this fraction of (1 + |z|) are never merged.
constexpr double kMaxClusterSpread = 0.05;
// Relative size below which P^(j) counts as vanishing at a multiple root.
constexpr double kMultiplicityTolerance = 1e-10;
constexpr int kNewtonIterations = 60;

// sum_k |p_k| k!/(k-j)! |z|^(k-j): the magnitude scale of P^(j)(z).
double derivative_scale(std::span<const Complex> p, int order, double abs_z) {
  double sum = 0.0;
  for (std::size_t k = static_cast<std::size_t>(order); k < p.size(); ++k) {
    double falling = 1.0;
    for (int i = 0; i < order; ++i) falling *= static_cast<double>(k - i);
    sum += std::abs(p[k]) * falling * std::pow(abs_z, static_cast<double>(k - order));
  }
  return sum;
}

// Newton on P; for |z| > 1 iterate on the reversed polynomial in w = 1/z so
// that large roots keep full relative accuracy.
Complex polish(std::span<const Complex> p, Complex z) {
  std::vector<Complex> reversed(p.rbegin(), p.rend());
  const auto dp = derivative(p);
  const auto drev = derivative(reversed);
  double best = backward_residual(p, z);
  for (int it = 0; it < kNewtonIterations && best > 0.0; ++it) {
    Complex candidate;
    if (std::abs(z) <= 1.0) {
      const Complex d = evaluate(dp, z);
      if (d == Complex{}) break;
      candidate = z - evaluate(p, z) / d;
    } else {
      const Complex w = 1.0 / z;
      const Complex d = evaluate(drev, w);
      if (d == Complex{}) break;
      const Complex w_next = w - evaluate(reversed, w) / d;
      if (w_next == Complex{}) break;
      candidate = 1.0 / w_next;
    }
    const double r = backward_residual(p, candidate);
    if (!(r < best)) break;
    best = r;
    z = candidate;
  }
  return z;
}

// Refines the center of an m-fold group and checks that it is a genuine
// m-fold root. Returns false when the group is made of distinct roots.
bool refine_multiple_root(std::span<const Complex> p, std::span<const Complex> group,
                          Complex& center) {
  const int m = static_cast<int>(group.size());
  Complex z = std::accumulate(group.begin(), group.end(), Complex{}) / static_cast<double>(m);
  double spread = 0.0;
  for (const auto& g : group) spread = std::max(spread, std::abs(g - z));

  // P^(m-1) has a simple root at an m-fold root of P.
  const auto q = derivative(p, m - 1);
  const auto dq = derivative(q);
  const Complex start = z;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const Complex d = evaluate(dq, z);
    if (d == Complex{}) break;
    const Complex step = evaluate(q, z) / d;
    z -= step;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
  }
  if (!(std::abs(z - start) <= 2.0 * spread + 1e-14 * (1.0 + std::abs(start)))) return false;

  for (int j = 0; j < m; ++j) {
    const auto dj = derivative(p, j);
    const double scale = derivative_scale(p, j, std::abs(z));
    if (!(std::abs(evaluate(dj, z)) <= kMultiplicityTolerance * scale)) return false;
  }
  center = z;
  return true;
}

// Parlett-Reinsch balancing by powers of two; leaves eigenvalues unchanged.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

std::vector<Complex> companion_eigenvalues(std::span<const Complex> p) {
  const auto m = static_cast<Eigen::Index>(p.size() - 1);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) c(i, m - 1) = -p[i] / p[m];
  balance(c);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("companion eigenvalue iteration did not converge", 1.0);
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct RootGroup {
  Complex root;
  std::size_t multiplicity;
};

std::vector<RootGroup> recover_multiplicities(std::span<const Complex> p,
                                              const std::vector<Complex>& roots) {
  std::vector<RootGroup> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> nearest;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i && !used[j]) nearest.push_back(j);
    }
    std::sort(nearest.begin(), nearest.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(roots[a] - roots[i]) < std::abs(roots[b] - roots[i]);
    });
    const double reach = kMaxClusterSpread * (1.0 + std::abs(roots[i]));
    while (!nearest.empty() && std::abs(roots[nearest.back()] - roots[i]) > reach) {
      nearest.pop_back();
    }

    bool merged = false;
    for (std::size_t m = nearest.size() + 1; m >= 2 && !merged; --m) {
      std::vector<Complex> group{roots[i]};
      for (std::size_t k = 0; k + 1 < m; ++k) group.push_back(roots[nearest[k]]);
      Complex center;
      if (refine_multiple_root(p, group, center)) {
        used[i] = true;
        for (std::size_t k = 0; k + 1 < m; ++k) used[nearest[k]] = true;
        out.push_back({center, m});
        merged = true;
      }
    }
    if (!merged) {
      used[i] = true;
      out.push_back({roots[i], 1});
    }
  }
  return out;
}

}  // namespace

Complex evaluate(std::span<const Complex> p, Complex z) {
  Complex acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derivative(std::span<const Complex> p, int order) {
  std::vector<Complex> d(p.begin(), p.end());
  for (int o = 0; o < order && !d.empty(); ++o) {
    for (std::size_t k = 1; k < d.size(); ++k) d[k - 1] = static_cast<double>(k) * d[k];
    d.pop_back();
  }
  return d;
}

double backward_residual(std::span<const Complex> p, Complex z) {
  const double scale = derivative_scale(p, 0, std::abs(z));
  if (scale == 0.0) return 0.0;
  if (!std::isfinite(scale)) return std::abs(z) > 1.0 ? 1.0 : 0.0;
  return std::abs(evaluate(p, z)) / scale;
}

RootReport find_roots(std::span<const Complex> p, double residual_tol) {
  if (p.empty() || p.back() == Complex{}) {
    throw InputError("find_roots needs a nonzero leading coefficient");
  }
  RootReport report;
  std::size_t zeros = 0;
  while (zeros + 1 < p.size() && p[zeros] == Complex{}) ++zeros;
  report.roots.assign(zeros, Complex{});

  const auto reduced = p.subspan(zeros);
  const std::size_t degree = reduced.size() - 1;
  if (degree == 0) return report;

  std::vector<Complex> found;
  if (degree == 1) {
    found.push_back(-reduced[0] / reduced[1]);
  } else {
    // The mean of an eigenvalue cluster is far more accurate than its
    // members, so groups are formed before any polishing.
    for (const auto& g : recover_multiplicities(reduced, companion_eigenvalues(reduced))) {
      found.insert(found.end(), g.multiplicity,
                   g.multiplicity == 1 ? polish(reduced, g.root) : g.root);
    }
  }
  for (const auto& z : found) {
    report.max_residual = std::max(report.max_residual, backward_residual(reduced, z));
  }
  if (!(report.max_residual <= residual_tol)) {
    throw NumericalError("polynomial root polishing did not converge", report.max_residual);
  }
  report.roots.insert(report.roots.end(), found.begin(), found.end());
  return report;
}

}  // namespace symphoton::poly
