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

#include "jchx/staircase.hpp"

namespace jchx {

enum class DefectKind { particle, hole };

/// Tight-binding band of a single added/removed particle in a period-q
/// crystal: epsilon(k) = -2 q J_perp cos(k q).  Same form for both kinds.
double defect_dispersion(DefectKind kind, long q, double j_perp, double k);

struct DefectBand {
  DefectKind kind = DefectKind::particle;
  long q = 2;
  double bandwidth_factor = 0.0;  ///< 2 q J_perp

  double dispersion(double k) const;  ///< -bandwidth_factor * cos(k q)
};

DefectBand defect_band(DefectKind kind, long q, double j_perp);

/// Hopping-shifted stability bounds of the rho crystal.  The solid survives
/// when the particle and hole bands fail to cross: mu_up > mu_down, i.e.
/// Delta mu_rho > 4 q J_perp.
struct MeltedBounds {
  Filling filling;
  double mu_up = 0.0;    ///< mu_rho^0(p) - 2 q J_perp
  double mu_down = 0.0;  ///< mu_rho^0(h) + 2 q J_perp
  bool survives = false;
};

MeltedBounds melted_bounds(const Filling& f, const ModelParams& params);

/// Bounds evaluated directly from window coefficients (used by the grid
/// sweeps, where Vt is an axis rather than a parameter).
MeltedBounds melted_bounds_at(const Filling& f, double hole_coef,
                              double particle_coef, double mu_c0_base,
                              double v_tilde, double j_perp);

/// Smallest Vt at which the rho crystal survives hopping J_perp; the window
/// width is linear in Vt, so Vt* = 4 q J_perp / width_coefficient(q).
double melting_threshold(const Filling& f, double j_perp);

/// Phase map with hopping: surviving solids, the floating regime between
/// them, vacuum below the shifted onset, and the uniform label for Vt = 0.
/// J_perp = 0 reduces exactly to the staircase map.
struct FloatingMap {
  std::vector<double> mu_values;
  std::vector<double> v_tilde_values;
  std::vector<PhaseCell> cells;  // row-major: v_tilde outer, mu inner

  const PhaseCell& at(std::size_t imu, std::size_t ivt) const {
    return cells[ivt * mu_values.size() + imu];
  }
};

PhaseCell floating_cell(double mu, double v_tilde, double mu_c0_base,
                        double j_perp, const WindowTable& table);

FloatingMap floating_map(double mu_min, double mu_max, double vt_min,
                         double vt_max, double j_perp, long res_mu,
                         long res_vt, long q_max, const ModelParams& params);

}  // namespace jchx
