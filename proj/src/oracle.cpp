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

#include "symphoton/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "symphoton/errors.hpp"

namespace symphoton::oracle {

namespace {

using Occupation = std::vector<unsigned>;  // flat, two slots per mode
using ExactTerms = std::map<Occupation, ExactAmplitude>;

Real exact_binomial(int n, int k) {
  Real r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t slot(std::size_t mode, Polarization pol) {
  return 2 * mode + static_cast<std::size_t>(pol);
}

FockVector to_fock(const ExactTerms& terms, std::size_t modes) {
  FockVector::Terms out;
  for (const auto& [occ, amp] : terms) {
    std::vector<std::uint16_t> flat(occ.begin(), occ.end());
    out.emplace(OccupationState::from_flat(std::move(flat)), to_double(amp));
  }
  return FockVector(modes, std::move(out));
}

ExactTerms from_fock(const FockVector& v) {
  ExactTerms out;
  for (const auto& [state, amp] : v.terms()) {
    out.emplace(Occupation(state.flat().begin(), state.flat().end()), to_exact(amp));
  }
  return out;
}

// Every occupation pattern of `slots` slots holding exactly `photons`.
void enumerate(std::size_t slots, unsigned photons, Occupation& cur, std::size_t i,
               std::vector<Occupation>& out) {
  if (i + 1 == slots) {
    cur[i] = photons;
    out.push_back(cur);
    return;
  }
  for (unsigned n = 0; n <= photons; ++n) {
    cur[i] = n;
    enumerate(slots, photons - n, cur, i + 1, out);
  }
}

}  // namespace

ExactAmplitude to_exact(Complex z) { return ExactAmplitude(Real(z.real()), Real(z.imag())); }

Complex to_double(const ExactAmplitude& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

ExactAmplitude tuple_sum_ck(std::span<const PolarizationAmplitude> params, int k) {
  const int n = static_cast<int>(params.size());
  if (n < 1 || n > kMaxTuplePhotons) {
    throw InputError("tuple enumeration is limited to 1..8 photons, got " + std::to_string(n));
  }
  if (k < 0 || k > n) throw InputError("tuple index k out of range");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  ExactAmplitude sum(0);
  do {
    ExactAmplitude term(1);
    for (int pos = 0; pos < n; ++pos) {
      const auto& p = params[order[pos]];
      term *= to_exact(pos < k ? p.beta() : p.alpha());
    }
    sum += term;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum * ExactAmplitude(sqrt(exact_binomial(n, k)));
}

OperatorWord product_word(std::span<const PolarizationAmplitude> params, std::size_t mode) {
  OperatorWord word;
  for (const auto& p : params) {
    word.push_back({{to_exact(p.alpha()), {{mode, Polarization::H}}},
                    {to_exact(p.beta()), {{mode, Polarization::V}}}});
  }
  return word;
}

OperatorWord pair_emission_word(int photons, int sign) {
  OperatorWord word;
  for (int i = 1; i <= photons; ++i) {
    const auto b = static_cast<std::size_t>(i);
    word.push_back({{ExactAmplitude(1), {{0, Polarization::H}, {b, Polarization::V}}},
                    {ExactAmplitude(sign), {{0, Polarization::V}, {b, Polarization::H}}}});
  }
  return word;
}

OperatorWord collinear_word(int photons) {
  OperatorWord word;
  for (int i = 0; i < photons; ++i) {
    word.push_back({{ExactAmplitude(1), {{0, Polarization::H}, {0, Polarization::V}}}});
  }
  return word;
}

OperatorWord spread_word(const OperatorWord& word, std::size_t mode, int outputs) {
  const ExactAmplitude t(1 / sqrt(Real(outputs)));
  const std::size_t shift = static_cast<std::size_t>(outputs) - 1;
  OperatorWord out;
  for (const auto& factor : word) {
    Factor spread;
    for (const auto& mono : factor) {
      // Multiply out the substituted creations one at a time.
      std::vector<Monomial> partial{{mono.coeff, {}}};
      for (const auto& [m, pol] : mono.creations) {
        std::vector<Monomial> next;
        for (const auto& p : partial) {
          if (m == mode) {
            for (int j = 0; j < outputs; ++j) {
              Monomial q = p;
              q.coeff *= t;
              q.creations.emplace_back(mode + static_cast<std::size_t>(j), pol);
              next.push_back(std::move(q));
            }
          } else {
            Monomial q = p;
            q.creations.emplace_back(m > mode ? m + shift : m, pol);
            next.push_back(std::move(q));
          }
        }
        partial = std::move(next);
      }
      spread.insert(spread.end(), partial.begin(), partial.end());
    }
    out.push_back(std::move(spread));
  }
  return out;
}

FockVector expand_product(const OperatorWord& word, std::size_t mode_count) {
  ExactTerms state;
  state.emplace(Occupation(2 * mode_count, 0), ExactAmplitude(1));
  unsigned photons = 0;
  for (const auto& factor : word) {
    ExactTerms next;
    unsigned added = 0;
    for (const auto& mono : factor) added = std::max<unsigned>(added, mono.creations.size());
    photons += added;
    if (photons > kMaxExpandPhotons) {
      throw InputError("oracle expansion is limited to 12 photons");
    }
    for (const auto& [occ, amp] : state) {
      for (const auto& mono : factor) {
        Occupation o = occ;
        ExactAmplitude a = amp * mono.coeff;
        for (const auto& [m, pol] : mono.creations) {
          if (m >= mode_count) throw InputError("oracle word addresses a missing mode");
          auto& n = o[slot(m, pol)];
          ++n;
          a *= ExactAmplitude(sqrt(Real(n)));
        }
        next[o] += a;
      }
    }
    state = std::move(next);
  }
  return to_fock(state, mode_count);
}

double brute_postselect(const FockVector& state, std::size_t modes) {
  std::set<unsigned> totals;
  for (const auto& [s, amp] : state.terms()) totals.insert(s.total_photons());
  if (totals.empty()) throw InputError("cannot post-select the zero vector");
  if (*totals.rbegin() > kMaxExpandPhotons) {
    throw InputError("oracle enumeration is limited to 12 photons");
  }
  const auto exact = from_fock(state);
  Real kept = 0;
  Real total = 0;
  for (unsigned n : totals) {
    std::vector<Occupation> basis;
    Occupation cur(2 * modes, 0);
    enumerate(2 * modes, n, cur, 0, basis);
    for (const auto& occ : basis) {
      auto it = exact.find(occ);
      if (it == exact.end()) continue;
      const Real w = norm(it->second);
      total += w;
      bool one_each = true;
      for (std::size_t m = 0; m < modes; ++m) one_each &= occ[2 * m] + occ[2 * m + 1] == 1;
      if (one_each) kept += w;
    }
  }
  return static_cast<double>(kept / total);
}

QubitStateVector brute_output_state(std::span<const PolarizationAmplitude> params) {
  const int n = static_cast<int>(params.size());
  const auto word = spread_word(product_word(params), 0, n);
  const auto spread = from_fock(expand_product(word, static_cast<std::size_t>(n)));
  std::vector<ExactAmplitude> amps(std::size_t{1} << n, ExactAmplitude(0));
  for (const auto& [occ, amp] : spread) {
    std::size_t index = 0;
    bool one_each = true;
    for (int m = 0; m < n; ++m) {
      one_each &= occ[2 * m] + occ[2 * m + 1] == 1;
      index = index * 2 + occ[2 * m + 1];
    }
    if (one_each) amps[index] = amp;
  }
  Real norm2 = 0;
  for (const auto& a : amps) norm2 += norm(a);
  const Real scale = 1 / sqrt(norm2);
  std::vector<Complex> out;
  for (const auto& a : amps) out.push_back(to_double(a * ExactAmplitude(scale)));
  return {n, std::move(out)};
}

QubitStateVector literal_dicke_state(int photons, int excitations) {
  if (photons < 1 || excitations < 0 || excitations > photons) {
    throw InputError("literal Dicke state: bad (N, k)");
  }
  // Sorted ascending so next_permutation visits each distinct string once.
  std::vector<int> bits(photons, 0);
  std::fill(bits.end() - excitations, bits.end(), 1);
  std::vector<Complex> amps(std::size_t{1} << photons);
  const double a = static_cast<double>(1 / sqrt(exact_binomial(photons, excitations)));
  do {
    std::size_t index = 0;
    for (int b : bits) index = index * 2 + static_cast<std::size_t>(b);
    amps[index] += a;
  } while (std::next_permutation(bits.begin(), bits.end()));
  return {photons, std::move(amps)};
}

double brute_sps_probability(std::span<const PolarizationAmplitude> params) {
  const auto n = params.size();
  auto word = product_word(params);
  const ExactAmplitude t(1 / sqrt(Real(static_cast<unsigned>(n))));
  for (auto& factor : word) {
    for (auto& mono : factor) mono.coeff *= t;
  }
  Real norm2 = 0;
  for (const auto& [occ, amp] : from_fock(expand_product(word, 1))) norm2 += norm(amp);
  return static_cast<double>(norm2);
}

FockVector brute_partial_projection(const FockVector& joint, const FockVector& projector) {
  const std::size_t kept = joint.mode_count() - projector.mode_count();
  const auto psi = from_fock(joint);
  const auto s = from_fock(projector);
  ExactTerms residual;
  for (const auto& [occ, amp] : psi) {
    const Occupation head(occ.begin(), occ.begin() + 2 * kept);
    const Occupation tail(occ.begin() + 2 * kept, occ.end());
    for (const auto& [socc, samp] : s) {
      if (socc == tail) residual[head] += conj(samp) * amp;
    }
  }
  return to_fock(residual, kept);
}

}  // namespace symphoton::oracle
