/*
   Copyright 2026 the jchx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <map>
#include <string>

#include "jchx/estimate.hpp"
#include "jchx/model.hpp"

namespace jchx {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key = value file: one assignment per line, '#' comments, blank lines
/// ignored.  Duplicate keys are an error.
std::map<std::string, std::string> parse_kv_file(const std::string& path);

/// ModelParams from a key/value map.  Accepted keys are exactly the field
/// names (omega, delta, epsilon, g, mu, t, v1, n_max, range_cutoff,
/// rydberg_weight_exponent); anything else is a ConfigError naming the bad
/// key.  `epsilon` and `delta` may not contradict each other.
ModelParams model_params_from(const std::map<std::string, std::string>& kv);

ModelParams load_model_params(const std::string& path);

/// ExperimentalInputs from a key/value map.  Keys: eta_c, Gamma, N_R, c,
/// L_cav, Omega, Delta_p, F, C6, spacing, unit_convention
/// (angular|ordinary).  The unit flag is mandatory.
ExperimentalInputs experimental_inputs_from(
    const std::map<std::string, std::string>& kv);

ExperimentalInputs load_experimental_inputs(const std::string& path);

}  // namespace jchx
