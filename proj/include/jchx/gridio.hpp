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

#include <json.hpp>
#include <ostream>
#include <string>

#include "jchx/defects.hpp"
#include "jchx/frozen.hpp"
#include "jchx/oracle.hpp"

namespace jchx {

inline constexpr const char* kToolVersion = "jchx 0.1.0";

/// Reproducibility record embedded as the first line of every output file
/// ("# <json>").  wall_clock_ms is the only field allowed to differ between
/// reruns of an identical invocation.
struct RunManifest {
  std::string subcommand;
  std::string config_path;  // empty when defaults were used
  ModelParams params;
  nlohmann::json grid;   // axis ranges and resolutions
  std::string out_path;
  std::string convention;  // "literal" | "paper"
  std::string version = kToolVersion;
  double wall_clock_ms = 0.0;
  nlohmann::json extra;  // subcommand-specific metadata

  nlohmann::json to_json() const;
};

void to_json(nlohmann::json& j, const ModelParams& p);
void to_json(nlohmann::json& j, const LatticeConfig& c);
void to_json(nlohmann::json& j, const ClassicalGroundState& g);
void to_json(nlohmann::json& j, const SpectrumResult& r);

/// Fixed-format scalar: 12 significant digits, locale-independent.
std::string format_value(double v);

/// Writes "# <manifest json>\n" followed by the mandatory header row and one
/// row per cell (v_tilde rows outer, mu inner).  Columns:
///   mu, v_tilde, p, q, rho, label
/// Vacuum rows carry p=0,q=1,rho=0; transition and PF rows carry p=q=0.
void write_phase_csv(std::ostream& os, const RunManifest& manifest,
                     const std::vector<double>& mu_values,
                     const std::vector<double>& second_axis_values,
                     const char* second_axis_name,
                     const std::vector<PhaseCell>& cells);

/// Same layout for the resonant (mu, t) classifier grid; columns
///   mu, t, p, q, rho, label
/// with the label vocabulary of ResonantPhase.  Crystal and uniform-1 cells
/// carry their filling; the remaining labels carry p=q=0.
void write_resonant_csv(std::ostream& os, const RunManifest& manifest,
                        const std::vector<double>& mu_values,
                        const std::vector<double>& t_values,
                        const std::vector<ResonantCell>& cells);

}  // namespace jchx
