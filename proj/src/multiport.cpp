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

#include "symphoton/multiport.hpp"

#include <cmath>
#include <string>

#include "symphoton/errors.hpp"

namespace symphoton {

CascadeSpec build_cascade(int modes) {
  if (modes < 1) throw InputError("a multiport needs at least one output mode");
  CascadeSpec spec;
  spec.modes = modes;
  spec.transfer = Eigen::MatrixXcd::Identity(modes, modes);
  for (int n = 2; n <= modes; ++n) spec.reflectivities.push_back(1.0 / n);

  // Splitter n mixes the carrier (row 0) with output n-1; real orthogonal
  // convention with the sign flip on the carrier's reflected port.
  for (int n = modes; n >= 2; --n) {
    const double r = std::sqrt(1.0 / n);
    const double t = std::sqrt(1.0 - 1.0 / n);
    Eigen::MatrixXcd splitter = Eigen::MatrixXcd::Identity(modes, modes);
    splitter(0, 0) = t;
    splitter(0, n - 1) = -r;
    splitter(n - 1, 0) = r;
    splitter(n - 1, n - 1) = t;
    spec.transfer = splitter * spec.transfer;
  }
  return spec;
}

CascadeSpec with_output_phases(const CascadeSpec& spec, std::span<const double> phases) {
  if (phases.size() != static_cast<std::size_t>(spec.modes)) {
    throw InputError("one phase per multiport output is required");
  }
  CascadeSpec out = spec;
  for (int j = 0; j < spec.modes; ++j) out.transfer.row(j) *= std::polar(1.0, phases[j]);
  return out;
}

namespace {

Complex ipow(Complex base, unsigned e) {
  Complex r = 1.0;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

struct Spread {
  std::vector<std::uint16_t> counts;  // photons per output
  Complex weight;
};

// All ways of placing n identical photons into the outputs, weighted by the
// multinomial expansion of (sum_j t_j a^dag_j)^n |0> / sqrt(n!).
std::vector<Spread> spreads(unsigned n, const Eigen::VectorXcd& t) {
  std::vector<Spread> out;
  const auto modes = static_cast<std::size_t>(t.size());
  std::vector<std::uint16_t> counts(modes, 0);
  const double root_n_fact = std::sqrt(factorial(static_cast<int>(n)));

  auto recurse = [&](auto&& self, std::size_t j, unsigned left, Complex w) -> void {
    if (j + 1 == modes) {
      counts[j] = static_cast<std::uint16_t>(left);
      const Complex wj = w * ipow(t[j], left) /
                         std::sqrt(factorial(static_cast<int>(left)));
      out.push_back({counts, wj * root_n_fact});
      return;
    }
    for (unsigned h = 0; h <= left; ++h) {
      counts[j] = static_cast<std::uint16_t>(h);
      const Complex wj =
          w * ipow(t[j], h) / std::sqrt(factorial(static_cast<int>(h)));
      self(self, j + 1, left - h, wj);
    }
  };
  recurse(recurse, 0, n, 1.0);
  return out;
}

}  // namespace

FockVector distribute_mode(const FockVector& state, std::size_t mode, const CascadeSpec& spec) {
  if (mode >= state.mode_count()) {
    throw InputError("distributed mode " + std::to_string(mode) + " out of range");
  }
  const Eigen::VectorXcd t = spec.amplitudes();
  const std::size_t out_modes = state.mode_count() - 1 + static_cast<std::size_t>(spec.modes);

  FockVector::Terms out;
  for (const auto& [basis, amp] : state.terms()) {
    const auto flat = basis.flat();
    const auto h_spread = spreads(basis.count(mode, Polarization::H), t);
    const auto v_spread = spreads(basis.count(mode, Polarization::V), t);
    for (const auto& h : h_spread) {
      for (const auto& v : v_spread) {
        std::vector<std::uint16_t> occ;
        occ.reserve(2 * out_modes);
        occ.insert(occ.end(), flat.begin(), flat.begin() + 2 * mode);
        for (int j = 0; j < spec.modes; ++j) {
          occ.push_back(h.counts[j]);
          occ.push_back(v.counts[j]);
        }
        occ.insert(occ.end(), flat.begin() + 2 * (mode + 1), flat.end());
        out[OccupationState::from_flat(std::move(occ))] += amp * h.weight * v.weight;
      }
    }
  }
  return FockVector(out_modes, std::move(out));
}

FockVector distribute(const FockVector& input, const CascadeSpec& spec) {
  if (input.mode_count() != 1) {
    throw InputError("distribute expects a single-mode input, got " +
                     std::to_string(input.mode_count()) + " modes");
  }
  return distribute_mode(input, 0, spec);
}

FockVector apply_mode_transform(const FockVector& state, const Eigen::MatrixXcd& u) {
  const auto modes = state.mode_count();
  if (u.rows() != static_cast<Eigen::Index>(modes) || u.cols() != u.rows()) {
    throw InputError("mode transform must be square with one row per mode");
  }
  FockVector::Terms out;
  for (const auto& [basis, amp] : state.terms()) {
    FockVector image = FockVector::vacuum(modes);
    double norm = 1.0;
    for (std::size_t m = 0; m < modes; ++m) {
      for (auto pol : {Polarization::H, Polarization::V}) {
        std::vector<CreationTerm> op;
        for (std::size_t j = 0; j < modes; ++j) {
          op.push_back({j, pol, u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m))});
        }
        const unsigned n = basis.count(m, pol);
        for (unsigned i = 0; i < n; ++i) image = apply_creation_sum(image, op);
        norm *= factorial(static_cast<int>(n));
      }
    }
    const Complex w = amp / std::sqrt(norm);
    for (const auto& [s, a] : image.terms()) out[s] += w * a;
  }
  return FockVector(modes, std::move(out));
}

PostSelection postselect_one_per_mode(const FockVector& state) {
  const double total = state.squared_norm();
  if (!(total > 0.0)) throw InputError("cannot post-select the zero vector");
  const auto modes = state.mode_count();
  std::vector<Complex> amps(std::size_t{1} << modes);
  double kept = 0.0;
  for (const auto& [basis, amp] : state.terms()) {
    std::size_t index = 0;
    bool one_each = true;
    for (std::size_t m = 0; m < modes && one_each; ++m) {
      one_each = basis.photons_in_mode(m) == 1;
      index = (index << 1) | basis.count(m, Polarization::V);
    }
    if (!one_each) continue;
    amps[index] = amp;
    kept += std::norm(amp);
  }
  PostSelection result;
  result.probability = kept / total;
  if (kept > 0.0) {
    for (auto& a : amps) a /= std::sqrt(kept);
    result.state = QubitStateVector(static_cast<int>(modes), std::move(amps));
  }
  return result;
}

PostSelection run_pipeline(std::span<const PolarizationAmplitude> params) {
  const auto input = normalized(product_state(params));
  return postselect_one_per_mode(
      distribute(input, build_cascade(static_cast<int>(params.size()))));
}

double one_per_mode_probability(int modes) {
  return factorial(modes) / std::pow(static_cast<double>(modes), modes);
}

}  // namespace symphoton
