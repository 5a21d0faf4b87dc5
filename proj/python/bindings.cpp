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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "symphoton/errors.hpp"
#include "symphoton/multiport.hpp"
#include "symphoton/schemes.hpp"
#include "symphoton/slocc.hpp"
#include "symphoton/symmetric.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace symphoton;

namespace {

using Params = std::vector<PolarizationAmplitude>;

// (amplitudes or None, probability)
py::tuple postselection(const PostSelection& p) {
  py::object amps = py::none();
  if (p.state) amps = py::cast(p.state->amplitudes());
  return py::make_tuple(amps, p.probability);
}

py::dict scheme_row(const SchemeRate& s) {
  return py::dict("source_factor"_a = s.source_factor, "p_input"_a = s.p_input,
                  "p_output"_a = s.p_output, "rate"_a = s.rate);
}

py::dict report(const RateReport& r) {
  return py::dict("N"_a = r.photons, "normalization_squared"_a = r.normalization_squared,
                  "sps"_a = scheme_row(r.sps), "ncl"_a = scheme_row(r.ncl),
                  "cl"_a = scheme_row(r.cl));
}

}  // namespace

PYBIND11_MODULE(_symphoton, m) {
  m.doc() = "Symmetric multi-photon polarization states from single-mode product inputs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<PolarizationAmplitude>(m, "Polarization")
      .def(py::init<Complex, Complex>(), "alpha"_a, "beta"_a)
      .def_static("normalized", &PolarizationAmplitude::normalized, "alpha"_a, "beta"_a)
      .def_static("H", &PolarizationAmplitude::horizontal)
      .def_static("V", &PolarizationAmplitude::vertical)
      .def_property_readonly("alpha", &PolarizationAmplitude::alpha)
      .def_property_readonly("beta", &PolarizationAmplitude::beta)
      .def("overlap", &PolarizationAmplitude::overlap)
      .def("projective_distance", &PolarizationAmplitude::projective_distance)
      .def("__repr__", [](const PolarizationAmplitude& p) {
        return py::str("Polarization({}, {})").format(p.alpha(), p.beta());
      });

  py::class_<SynthesisResult>(m, "SynthesisResult")
      .def_readonly("params", &SynthesisResult::params)
      .def_readonly("roots", &SynthesisResult::roots)
      .def_readonly("degree", &SynthesisResult::degree)
      .def_readonly("max_residual", &SynthesisResult::max_residual)
      .def_readonly("round_trip_overlap", &SynthesisResult::round_trip_overlap);

  m.def("binomial", &binomial, "n"_a, "k"_a);
  m.def("dicke_state", [](int n, int k) { return dicke_state(n, k).amplitudes(); }, "n"_a, "k"_a,
        "Amplitudes of |D_n^(k)>; qubit 0 is the most significant bit, a set bit means V.");
  m.def(
      "coefficients_from_params",
      [](const Params& p) { return coefficients_from_params(p).values(); }, "params"_a);
  m.def(
      "normalization_squared", [](const Params& p) { return normalization_squared(p); },
      "params"_a);
  m.def(
      "output_state",
      [](std::vector<Complex> c) {
        return output_state(SymmetricCoefficients(std::move(c))).amplitudes();
      },
      "coefficients"_a, "Normalized sum_k c_k |D_N^(k)>.");
  m.def(
      "synthesize",
      [](std::vector<Complex> c, double tol, double root_tol) {
        return synthesize(SymmetricCoefficients(std::move(c)), tol, root_tol);
      },
      "coefficients"_a, "tol"_a = 1e-9, "root_tol"_a = 1e-12);
  m.def(
      "run_pipeline", [](const Params& p) { return postselection(run_pipeline(p)); }, "params"_a,
      "Product state through the cascade and one-per-mode post-selection.\n"
      "Returns (amplitudes or None, probability).");
  m.def("one_per_mode_probability", &one_per_mode_probability, "modes"_a);

  m.def(
      "degeneracy_configuration",
      [](const Params& p, double tol) { return degeneracy_configuration(p, tol).multiplicities(); },
      "params"_a, "tol"_a = kDefaultClusterTolerance);
  m.def(
      "classify",
      [](std::vector<Complex> c, double tol) {
        const auto label = classify_coefficients(SymmetricCoefficients(std::move(c)), tol);
        return py::dict("name"_a = label.name,
                        "configuration"_a = label.configuration.multiplicities(),
                        "warnings"_a = label.warnings);
      },
      "coefficients"_a, "tol"_a = kDefaultClusterTolerance);

  m.def(
      "rates",
      [](const Params& p, double sps, double ncl, double cl) {
        return report(rates(static_cast<int>(p.size()), p, SourceRates{sps, ncl, cl}));
      },
      "params"_a, "c_sps"_a = 1.0, "c_ncl"_a = 1.0, "c_cl"_a = 1.0);
  m.def(
      "dicke_2n_construction",
      [](int n, bool plus) {
        return postselection(dicke_2n_construction(n, plus ? BellKind::Plus : BellKind::Minus));
      },
      "n"_a, "plus"_a = true);
  m.def(
      "cl_dicke_construction", [](int n) { return postselection(cl_dicke_construction(n)); },
      "n"_a);
}
