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

#include "symphoton/slocc.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>

#include "symphoton/errors.hpp"

namespace symphoton {

DegeneracyConfiguration::DegeneracyConfiguration(std::vector<int> multiplicities)
    : m_(std::move(multiplicities)) {
  if (std::any_of(m_.begin(), m_.end(), [](int m) { return m <= 0; })) {
    throw InputError("multiplicities must be positive");
  }
  std::sort(m_.begin(), m_.end(), std::greater<>());
}

int DegeneracyConfiguration::photons() const noexcept {
  return std::accumulate(m_.begin(), m_.end(), 0);
}

std::string DegeneracyConfiguration::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m_[i]);
  }
  return s + ")";
}

namespace {

std::string pair_note(const char* what, std::size_t i, std::size_t j, double d) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: states %zu and %zu at projective distance %.3e", what, i, j,
                d);
  return buf;
}

}  // namespace

Clustering cluster_states(std::span<const PolarizationAmplitude> params, double tol) {
  if (!(tol > 0.0)) throw InputError("cluster tolerance must be positive");
  const std::size_t n = params.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  Clustering out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = params[i].projective_distance(params[j]);
      if (d <= tol) {
        parent[find(i)] = find(j);
        if (d > tol / 10.0) out.warnings.push_back(pair_note("merged near threshold", i, j, d));
      } else if (d <= 10.0 * tol) {
        out.warnings.push_back(pair_note("kept apart near threshold", i, j, d));
      }
    }
  }
  // Chains can merge states that are not within tol of each other directly.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = params[i].projective_distance(params[j]);
      if (find(i) == find(j) && d > tol) {
        out.warnings.push_back(pair_note("merged through a chain", i, j, d));
      }
    }
  }

  std::vector<std::vector<int>> groups;
  std::vector<std::size_t> root_of_group;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    auto it = std::find(root_of_group.begin(), root_of_group.end(), r);
    if (it == root_of_group.end()) {
      root_of_group.push_back(r);
      groups.push_back({static_cast<int>(i)});
    } else {
      groups[static_cast<std::size_t>(it - root_of_group.begin())].push_back(static_cast<int>(i));
    }
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<int> sizes;
  for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
  out.configuration = DegeneracyConfiguration(std::move(sizes));
  out.groups = std::move(groups);
  return out;
}

DegeneracyConfiguration degeneracy_configuration(std::span<const PolarizationAmplitude> params,
                                                 double tol) {
  return cluster_states(params, tol).configuration;
}

ClassLabel label_configuration(const DegeneracyConfiguration& config) {
  ClassLabel label{config, config.to_string(), {}};
  if (config.photons() == 3) {
    switch (config.diversity_degree()) {
      case 1: label.name = "separable"; break;
      case 2: label.name = "W"; break;
      case 3: label.name = "GHZ"; break;
    }
  }
  return label;
}

ClassLabel classify_coefficients(const SymmetricCoefficients& coeffs, double tol,
                                 double synthesis_tol) {
  const auto params = params_from_coefficients(coeffs, synthesis_tol);
  auto clustering = cluster_states(params, tol);
  auto label = label_configuration(clustering.configuration);
  label.warnings = std::move(clustering.warnings);
  return label;
}

bool same_class(const DegeneracyConfiguration& a, const DegeneracyConfiguration& b) {
  return a == b;
}

}  // namespace symphoton
