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

#ifndef SYMPHOTON_TOOLS_CLI_COMMANDS_HPP
#define SYMPHOTON_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symphoton/fock.hpp"
#include "symphoton/symmetric.hpp"

namespace symphoton::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalFailure = 3,
  kInvariantViolation = 4,
};

/// Tolerance defaults, possibly overridden from the environment at startup.
struct Defaults {
  double tol_root = 1e-12;
  double tol_cluster = 1e-6;
};

/// Reads SYMPHOTON_TOL_ROOT and SYMPHOTON_TOL_CLUSTER. Unparsable values are
/// reported through `warnings` and ignored.
Defaults defaults_from_env(std::vector<std::string>* warnings = nullptr);

/// Parsed StateSpecDocument. Exactly one of the two is set.
struct StateSpec {
  std::optional<SymmetricCoefficients> coefficients;
  std::optional<std::vector<PolarizationAmplitude>> params;
  std::vector<std::string> warnings;

  int photons() const;
};

/// Throws InputError on any schema violation.
StateSpec parse_state_spec(const nlohmann::json& doc);

/// Copies `value` with every double rounded to 12 significant digits and
/// negative zero folded to zero.
nlohmann::json rounded(const nlohmann::json& value);

/// {"modes": M, "terms": [{"occupation": [...], "re": x, "im": y}, ...]}.
nlohmann::json fock_to_json(const FockVector& state);

/// Runs one invocation. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Defaults& defaults = {});

}  // namespace symphoton::cli

#endif  // SYMPHOTON_TOOLS_CLI_COMMANDS_HPP
