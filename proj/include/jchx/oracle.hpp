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

#include <optional>
#include <utility>
#include <vector>

#include "jchx/staircase.hpp"

namespace jchx {

/// Minimum-image distance on a ring of L sites.
long ring_distance(long L, long i, long j);

/// Ring occupation pattern with its grand-canonical energy under the
/// projected diagonal Hamiltonian (single-particle polariton energies plus
/// the pairwise tail at minimum-image distances).
struct LatticeConfig {
  long L = 0;
  std::vector<int> occ;  // values in {0, ..., n_max}
  double energy = 0.0;
};

/// Grand-canonical energy of an occupation vector, recomputed from scratch.
double lattice_energy(const std::vector<int>& occ, const ModelParams& params);

struct ClassicalGroundState {
  double energy = 0.0;
  std::vector<LatticeConfig> minima;  // sorted lexicographically by occupation
  long tie_count = 0;                 // may exceed minima.size() when capped
  double filling = 0.0;               // total excitations per site, of minima[0]
  bool filling_well_defined = true;   // all minima share the excitation count
};

/// Exhaustive (n_max+1)^L search for the grand-canonical ground state.
/// Enumeration uses incremental energy updates; the winner's energy is
/// recomputed from scratch and must agree to 1e-12 g.  Degenerate minima
/// within 1e-12 g are all reported (the stored list caps at 128 entries,
/// tie_count keeps the true number).  L > 28 (n_max = 1) or L > 16
/// (n_max = 2) is refused.
ClassicalGroundState classical_ground_state(long L, const ModelParams& params,
                                            int n_max);

/// Per-excitation-number minima of the mu-independent energy part, from one
/// enumeration pass.  E(N, mu) = min_e[N] - mu N.
struct EnergyTable {
  long L = 0;
  std::vector<double> min_e;             // index N = 0..n_max*L
  std::vector<std::vector<int>> argmin;  // one representative per N
  long ground_n(double mu) const;        // smallest N attaining the minimum
};

EnergyTable energy_table(long L, const ModelParams& params, int n_max);

/// Empirical stability window of the rho = p/q crystal on an L-site ring
/// (n_max = 1): bisection in mu on the enumerated ground-state filling,
/// tolerance 1e-6 g.  Requires q | L.  The upper edge of rho = 1 is
/// +infinity.
std::pair<double, double> boundary_bisect(const Filling& f,
                                          const ModelParams& params, long L);

struct SpectrumResult {
  double ground_energy = 0.0;
  double ground_filling = 0.0;       // <sum_i n_i> / L in the ground state
  double mean_photon_density = 0.0;  // <sum_i a^dag_i a_i> / L
  int degeneracy = 1;                // eigenvalues within 1e-10 g of the ground
  long dimension = 0;
};

/// Dense diagonalization of the projected chain on a periodic ring: diagonal
/// polariton + tail energies, off-diagonal exchange -t beta_{n,n+1} between
/// adjacent manifolds on neighbouring sites.  The matrix is symmetric by
/// construction (asserted exactly).  Dimension above 20000 is refused.
/// `total_n` restricts the basis to one excitation-number sector (the
/// Hamiltonian conserves it).
SpectrumResult exact_diagonalize(long L, const ModelParams& params, int n_max,
                                 std::optional<long> total_n = std::nullopt);

}  // namespace jchx
