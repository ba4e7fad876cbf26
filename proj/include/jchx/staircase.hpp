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

#include <string>
#include <vector>

#include "jchx/model.hpp"

namespace jchx {

/// Rational crystal filling rho = p/q, coprime, 0 < p <= q.
struct Filling {
  long p = 1;
  long q = 1;

  Filling() = default;
  Filling(long p_, long q_);  // throws unless coprime and 0 < p <= q

  double value() const { return double(p) / double(q); }
  bool operator==(const Filling& o) const { return p == o.p && q == o.q; }
  std::string str() const;
};

/// All coprime p/q with q <= q_max and 0 < p/q <= 1, ascending (the Farey
/// sequence above zero), via the Stern-Brocot neighbour recurrence.
std::vector<Filling> enumerate_fillings(long q_max);

/// Hubbard distance r_l of the rho = p/q crystal: l q / p when integral
/// (the degenerate commensurate case), floor(l q / p) otherwise.
long crystal_distance(const Filling& f, long l);

/// Convergence control for the 1/d^6 stability series.
struct SeriesOptions {
  double rel_tol = 1e-14;  ///< stop once a term drops below rel_tol * sum
  double range_cutoff = std::numeric_limits<double>::infinity();
  long max_terms = 100000000;

  void validate() const;  // rejects non-convergent settings
};

/// Dimensionless series constants, in units of the renormalised
/// nearest-neighbour strength (J(d) = Vt / d^6).  The chemical-potential
/// boundaries are mu_c0 + coefficient * Vt.
double hole_coefficient(const Filling& f, const SeriesOptions& opt = {});
double particle_coefficient(const Filling& f, const SeriesOptions& opt = {});
double width_coefficient(long q, const SeriesOptions& opt = {});

/// Critical chemical potential above which the rho crystal absorbs an extra
/// particle.  +infinity for rho = 1 (hard core).  Vt and the base point
/// mu_c0 come from params via effective_couplings.
double mu_particle(const Filling& f, const ModelParams& params);

/// Critical chemical potential below which the rho crystal sheds a particle.
double mu_hole(const Filling& f, const ModelParams& params);

/// Stability interval width Delta mu_rho, evaluated by its own series
/// (independent of the mu_particle/mu_hole path).  Depends on q only.
double stability_width(const Filling& f, const ModelParams& params);

struct CrystalPhase {
  Filling filling;
  double mu_hole = 0.0;
  double mu_particle = 0.0;
  double width = 0.0;
  std::vector<long> distances;  ///< r_l for l = 1..q
};

CrystalPhase crystal_phase(const Filling& f, const ModelParams& params);

/// Precomputed window coefficients for every filling with q <= q_max,
/// ascending in rho (equivalently in mu).  Construction asserts pairwise
/// non-overlap of the windows; a violation throws WindowOverlapError since
/// it can only come from an inconsistent convention.
struct WindowTable {
  struct Entry {
    Filling filling;
    double hole_coef;
    double particle_coef;  // +inf for rho = 1
  };
  std::vector<Entry> entries;

  static WindowTable build(long q_max, const SeriesOptions& opt = {});

  /// Throws WindowOverlapError unless every window has positive width and
  /// the windows are pairwise disjoint in ascending order.  Run by build();
  /// a violation can only come from an inconsistent weighting convention.
  void verify_disjoint() const;
};

struct WindowOverlapError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class CellLabel { vacuum, solid, transition, floating, uniform };

const char* to_string(CellLabel label);

struct PhaseCell {
  double mu = 0.0;
  double v_tilde = 0.0;
  Filling filling;  // meaningful only when has_filling
  CellLabel label = CellLabel::vacuum;
  bool has_filling = false;
};

/// Rectangular rho(mu, Vt) map of the zero-hopping staircase.  Cells hold
/// the unique stable crystal containing mu, a vacuum marker below mu_c0, or
/// the transition marker elsewhere (including exact window boundaries).
struct StaircaseMap {
  std::vector<double> mu_values;
  std::vector<double> v_tilde_values;
  std::vector<PhaseCell> cells;  // row-major: v_tilde outer, mu inner

  const PhaseCell& at(std::size_t imu, std::size_t ivt) const {
    return cells[ivt * mu_values.size() + imu];
  }
};

PhaseCell staircase_cell(double mu, double v_tilde, double mu_c0_base,
                         const WindowTable& table);

StaircaseMap staircase_map(double mu_min, double mu_max, double vt_min,
                           double vt_max, long res_mu, long res_vt, long q_max,
                           const ModelParams& params);

}  // namespace jchx
