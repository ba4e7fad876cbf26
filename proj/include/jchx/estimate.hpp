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

#include <stdexcept>

namespace jchx {

/// How frequency-dimensioned inputs are to be read: as angular rates
/// (rad/s) or as ordinary frequencies (Hz).  One flag covers every input;
/// it must be stated explicitly, there is no default.
enum class FrequencyConvention { angular, ordinary };

/// Experimental knobs of the cavity-array realisation.  SI units: metres,
/// seconds; interaction coefficient in (frequency) * micrometre^6 with the
/// site spacing in micrometres.
struct ExperimentalInputs {
  double eta_c = 0.0;    ///< channelling efficiency (dimensionless)
  double Gamma = 0.0;    ///< single-atom decay
  double N_R = 0.0;      ///< atoms per ensemble
  double c = 0.0;        ///< light speed, m/s
  double L_cav = 0.0;    ///< cavity length, m
  double Omega = 0.0;    ///< drive Rabi frequency
  double Delta_p = 0.0;  ///< intermediate-state detuning
  double F = 0.0;        ///< cavity finesse
  double C6 = 0.0;       ///< van der Waals coefficient, (freq) um^6
  double spacing = 0.0;  ///< nearest-neighbour site distance, um
  FrequencyConvention convention = FrequencyConvention::angular;
};

struct EstimatedParams {
  double gamma = 0.0;        ///< N_R * Gamma (superradiant enhancement)
  double g0 = 0.0;           ///< sqrt(eta_c gamma c / L_cav)
  double g = 0.0;            ///< sqrt(N_R) g0 Omega / Delta_p
  double kappa = 0.0;        ///< pi c / (F L_cav)
  double t = 0.0;            ///< kappa sqrt(F / 2 pi)
  double v1 = 0.0;           ///< C6 / spacing^6
  double lambda_stark = 0.0; ///< g0^2 / Delta_p (reported, never used)
  ExperimentalInputs inputs;
};

/// Evaluates the five estimation formulas.  All inputs must be positive.
EstimatedParams estimate_parameters(const ExperimentalInputs& in);

}  // namespace jchx
