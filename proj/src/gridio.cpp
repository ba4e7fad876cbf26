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
#include "jchx/gridio.hpp"

#include <cmath>
#include <cstdio>

namespace jchx {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void to_json(nlohmann::json& j, const ModelParams& p) {
  j = {{"omega", p.omega},
       {"delta", p.delta},
       {"g", p.g},
       {"mu", p.mu},
       {"t", p.t},
       {"v1", p.v1},
       {"n_max", p.n_max},
       {"range_cutoff", std::isinf(p.range_cutoff)
                            ? nlohmann::json("inf")
                            : nlohmann::json(p.range_cutoff)},
       {"rydberg_weight_exponent", int(p.convention)}};
}

void to_json(nlohmann::json& j, const LatticeConfig& c) {
  j = {{"L", c.L}, {"occ", c.occ}, {"energy", c.energy}};
}

void to_json(nlohmann::json& j, const ClassicalGroundState& g) {
  j = {{"ground_energy", g.energy},
       {"filling", g.filling},
       {"filling_well_defined", g.filling_well_defined},
       {"degeneracy", g.tie_count},
       {"config", g.minima.empty() ? nlohmann::json() : nlohmann::json(g.minima[0].occ)},
       {"minima", g.minima}};
}

void to_json(nlohmann::json& j, const SpectrumResult& r) {
  j = {{"ground_energy", r.ground_energy},
       {"filling", r.ground_filling},
       {"mean_photon_density", r.mean_photon_density},
       {"degeneracy", r.degeneracy},
       {"dimension", r.dimension}};
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["config"] = config_path;
  nlohmann::json jp;
  jchx::to_json(jp, params);
  j["params"] = jp;
  j["grid"] = grid;
  j["out"] = out_path;
  j["convention"] = convention;
  j["version"] = version;
  j["wall_clock_ms"] = wall_clock_ms;
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

namespace {

void write_cell_row(std::ostream& os, double x, double y,
                    const PhaseCell& cell) {
  long p = 0, q = 0;
  double rho = 0.0;
  if (cell.has_filling) {
    p = cell.filling.p;
    q = cell.filling.q;
    rho = cell.filling.value();
  } else if (cell.label == CellLabel::vacuum) {
    q = 1;  // empty lattice: rho = 0/1
  }
  os << format_value(x) << ',' << format_value(y) << ',' << p << ',' << q
     << ',' << format_value(rho) << ',' << to_string(cell.label) << '\n';
}

}  // namespace

void write_phase_csv(std::ostream& os, const RunManifest& manifest,
                     const std::vector<double>& mu_values,
                     const std::vector<double>& second_axis_values,
                     const char* second_axis_name,
                     const std::vector<PhaseCell>& cells) {
  os << "# " << manifest.to_json().dump() << '\n';
  os << "mu," << second_axis_name << ",p,q,rho,label\n";
  std::size_t idx = 0;
  for (double y : second_axis_values)
    for (double x : mu_values) write_cell_row(os, x, y, cells[idx++]);
}

void write_resonant_csv(std::ostream& os, const RunManifest& manifest,
                        const std::vector<double>& mu_values,
                        const std::vector<double>& t_values,
                        const std::vector<ResonantCell>& cells) {
  os << "# " << manifest.to_json().dump() << '\n';
  os << "mu,t,p,q,rho,label\n";
  std::size_t idx = 0;
  for (double t : t_values)
    for (double mu : mu_values) {
      const ResonantCell& cell = cells[idx++];
      long p = 0, q = 0;
      double rho = 0.0;
      if (cell.has_filling) {
        p = cell.filling.p;
        q = cell.filling.q;
        rho = cell.filling.value();
      } else if (cell.phase == ResonantPhase::vacuum) {
        q = 1;
      }
      os << format_value(mu) << ',' << format_value(t) << ',' << p << ','
         << q << ',' << format_value(rho) << ',' << to_string(cell.phase)
         << '\n';
    }
}

}  // namespace jchx
