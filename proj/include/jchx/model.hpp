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

#include <limits>
#include <stdexcept>

namespace jchx {

/// Interaction weighting carried by an excited cavity.  The literal
/// polariton projection gives the squared Rydberg amplitude (exponent 4 in
/// the nearest-neighbour coupling V sin^4); the calibrated variant uses the
/// bare amplitude (exponent 2, V sin^2) and reproduces the printed phase
/// boundary constants of the source model.
enum class WeightConvention : int { literal = 4, calibrated = 2 };

/// Physical and effective parameters of the dressed-cavity chain.
/// Dimensionless, g = 1 convention supported throughout; only the
/// experimental estimator (estimate.hpp) is unit-aware.
struct ModelParams {
  double omega = 0.0;  ///< effective photon frequency
  double delta = 0.0;  ///< detuning, delta = omega - epsilon (held exactly)
  double g = 1.0;      ///< collective atom-photon coupling, g > 0
  double mu = 0.0;     ///< chemical potential
  double t = 0.0;      ///< photon hopping rate, t >= 0
  double v1 = 0.0;     ///< nearest-neighbour van der Waals strength V
  int n_max = 1;       ///< photon-occupancy truncation, 1 or 2
  double range_cutoff = std::numeric_limits<double>::infinity();
  WeightConvention convention = WeightConvention::literal;

  double epsilon() const { return omega - delta; }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

enum class Branch { lower, upper };

/// Dressed level |n-> of a single cavity.
struct PolaritonLevel {
  int n = 0;
  double theta_n = 0.0;             ///< mixing angle, in [0, pi/2)
  double energy_minus = 0.0;        ///< E_{n-}^mu
  double rydberg_weight = 0.0;      ///< sin^2(theta_n)
  double photon_weight_minus = 0.0; ///< <a^dag a> in |n->, = n - sin^2(theta_n)
};

/// Mixing angle theta_n = arctan(2 g sqrt(n) / delta) / 2, mapped to
/// [0, pi/2): the arctan branch is shifted by pi for delta < 0 so the lower
/// polariton stays continuous across resonance.  theta_0 = 0 by convention.
double mixing_angle(int n, double delta, double g);

/// E_{n±}^mu = n (omega - mu) + delta/2 ± sqrt(delta^2/4 + n g^2); E_0 = 0.
double eigen_energy(int n, Branch branch, const ModelParams& params);

PolaritonLevel polariton_level(int n, const ModelParams& params);

/// Projected hopping overlap between adjacent manifolds,
/// beta_{n,m} = (sqrt(m) cos th_n cos th_m + sqrt(n) sin th_n sin th_m)^2.
/// Only m = n + 1 is kept by the rotating-wave projection; anything else
/// is rejected.
double hopping_overlap(int n, int m, double delta, double g);

/// Bare van der Waals tail v1 / d^6 at integer site distance d >= 1.
double vdw_tail(long d, double v1);

/// Per-site interaction weight of level |n->: sin^2(theta_n) under the
/// literal convention, sin(theta_n) under the calibrated one.  Zero for the
/// vacuum level.
double rydberg_weight_factor(int n, const ModelParams& params);

/// Projected pair coupling J_{n,n'}(d) = vdw_tail(d) * w_n * w_{n'}.
/// Symmetric in n <-> n'; requires n, n' >= 1 and d >= 1.
double effective_interaction(int n, int nprime, long d, const ModelParams& params);

struct EffectiveCouplings {
  double j_perp;   ///< t cos^2(theta_1)
  double v_tilde;  ///< v1 * w(theta_1)^2 per convention
};

EffectiveCouplings effective_couplings(const ModelParams& params);

/// Photons per site of a |1~> crystal at filling rho: rho (1 - sin^2 th_1).
double mean_photon_density(double rho, double theta_1);

/// First critical point mu_c0 where E_{1-} crosses zero:
/// mu_c0 = omega + delta/2 - sqrt(delta^2/4 + g^2).
double mu_c0(const ModelParams& params);

/// Single-site matrix element <m~| a |n~> in the lower-polariton basis.
double annihilation_element(int m, int n, double delta, double g);

/// Two-site exchange amplitude for a^dag_i a_{i+1}:
/// <bra_i, bra_{i+1}| a^dag_i a_{i+1} |ket_i, ket_{i+1}>
///  = <bra_i| a^dag |ket_i> <bra_{i+1}| a |ket_{i+1}>.
double hop_element(int bra_i, int bra_ip1, int ket_i, int ket_ip1,
                   double delta, double g);

}  // namespace jchx
