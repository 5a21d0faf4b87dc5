# Copyright 2026 The Symphoton Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Symmetric multi-photon polarization states."""

from ._symphoton import (
    InputError,
    NumericalError,
    Polarization,
    SynthesisResult,
    binomial,
    cl_dicke_construction,
    classify,
    coefficients_from_params,
    degeneracy_configuration,
    dicke_2n_construction,
    dicke_state,
    normalization_squared,
    one_per_mode_probability,
    output_state,
    rates,
    run_pipeline,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "NumericalError",
    "Polarization",
    "SynthesisResult",
    "binomial",
    "cl_dicke_construction",
    "classify",
    "coefficients_from_params",
    "degeneracy_configuration",
    "dicke_2n_construction",
    "dicke_state",
    "normalization_squared",
    "one_per_mode_probability",
    "output_state",
    "rates",
    "run_pipeline",
    "synthesize",
]
