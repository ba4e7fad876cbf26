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
#include "jchx/defects.hpp"

#include <cmath>

namespace jchx {

double defect_dispersion(DefectKind /*kind*/, long q, double j_perp, double k) {
  if (q < 1) throw std::invalid_argument("defect_dispersion: q >= 1");
  return -2.0 * double(q) * j_perp * std::cos(k * double(q));
}

double DefectBand::dispersion(double k) const {
  return -bandwidth_factor * std::cos(k * double(q));
}

DefectBand defect_band(DefectKind kind, long q, double j_perp) {
  if (q < 1) throw std::invalid_argument("defect_band: q >= 1");
  return {kind, q, 2.0 * double(q) * j_perp};
}

MeltedBounds melted_bounds_at(const Filling& f, double hole_coef,
                              double particle_coef, double mu_c0_base,
                              double v_tilde, double j_perp) {
  MeltedBounds b;
  b.filling = f;
  const double shift = 2.0 * double(f.q) * j_perp;
  b.mu_down = mu_c0_base + hole_coef * v_tilde + shift;
  b.mu_up = std::isinf(particle_coef)
                ? std::numeric_limits<double>::infinity()
                : mu_c0_base + particle_coef * v_tilde - shift;
  b.survives = b.mu_up > b.mu_down;
  return b;
}

MeltedBounds melted_bounds(const Filling& f, const ModelParams& params) {
  params.validate();
  const auto eff = effective_couplings(params);
  SeriesOptions opt;
  opt.range_cutoff = params.range_cutoff;
  return melted_bounds_at(f, hole_coefficient(f, opt),
                          particle_coefficient(f, opt), mu_c0(params),
                          eff.v_tilde, eff.j_perp);
}

double melting_threshold(const Filling& f, double j_perp) {
  if (j_perp < 0.0)
    throw std::invalid_argument("melting_threshold: j_perp must be >= 0");
  if (j_perp == 0.0) return 0.0;
  const double w = width_coefficient(f.q);
  return 4.0 * double(f.q) * j_perp / w;
}

PhaseCell floating_cell(double mu, double v_tilde, double mu_c0_base,
                        double j_perp, const WindowTable& table) {
  if (j_perp == 0.0) return staircase_cell(mu, v_tilde, mu_c0_base, table);
  PhaseCell cell;
  cell.mu = mu;
  cell.v_tilde = v_tilde;
  // band edge of a lone |1~>: the vacuum persists up to mu_c0 - 2 J_perp
  if (mu <= mu_c0_base - 2.0 * j_perp) {
    cell.label = CellLabel::vacuum;
    return cell;
  }
  if (v_tilde == 0.0) {
    cell.label = CellLabel::uniform;  // no staircase, no floating phase
    return cell;
  }
  for (const auto& e : table.entries) {
    const MeltedBounds b = melted_bounds_at(e.filling, e.hole_coef,
                                            e.particle_coef, mu_c0_base,
                                            v_tilde, j_perp);
    if (!b.survives) continue;
    if (mu > b.mu_down && mu < b.mu_up) {
      cell.label = CellLabel::solid;
      cell.filling = e.filling;
      cell.has_filling = true;
      return cell;
    }
  }
  cell.label = CellLabel::floating;
  return cell;
}

FloatingMap floating_map(double mu_min, double mu_max, double vt_min,
                         double vt_max, double j_perp, long res_mu,
                         long res_vt, long q_max, const ModelParams& params) {
  if (q_max < 2) throw std::invalid_argument("floating_map: q_max >= 2");
  if (j_perp < 0.0)
    throw std::invalid_argument("floating_map: j_perp must be >= 0");
  if (res_mu < 2 || res_vt < 2)
    throw std::invalid_argument("floating_map: resolution >= 2");
  params.validate();
  SeriesOptions opt;
  opt.range_cutoff = params.range_cutoff;
  const WindowTable table = WindowTable::build(q_max, opt);
  const double base = mu_c0(params);
  FloatingMap map;
  map.mu_values.resize(res_mu);
  map.v_tilde_values.resize(res_vt);
  for (long i = 0; i < res_mu; ++i)
    map.mu_values[i] = mu_min + (mu_max - mu_min) * double(i) / double(res_mu - 1);
  for (long i = 0; i < res_vt; ++i)
    map.v_tilde_values[i] = vt_min + (vt_max - vt_min) * double(i) / double(res_vt - 1);
  map.cells.reserve(std::size_t(res_mu) * std::size_t(res_vt));
  for (double vt : map.v_tilde_values)
    for (double mu : map.mu_values)
      map.cells.push_back(floating_cell(mu, vt, base, j_perp, table));
  return map;
}

}  // namespace jchx
