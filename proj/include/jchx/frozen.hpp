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

/// Resonant (delta = 0) chemical-potential thresholds with n_max = 2:
///  mu_c1  full filling of the |1~> crystal,
///  mu_c2  degeneracy point of E_{1-} and E_{2-},
///  mu_c3  full filling of the |2~> crystal.
struct ResonantThresholds {
  double mu_c1 = 0.0;
  double mu_c2 = 0.0;
  double mu_c3 = 0.0;
  bool strong_plrri = false;  ///< mu_c1 > mu_c2
};

/// Requires delta == 0 (the level-independent interaction needs resonance)
/// and n_max == 2.
ResonantThresholds resonant_thresholds(const ModelParams& params);

/// Interaction strength at which mu_c1 crosses mu_c2 and the frozen phase
/// opens up.
double critical_interaction_strength(const ModelParams& params);

/// Two-site matrix element <0, 2~| a^dag_i a_{i+1} |2~, 0>, evaluated in the
/// polariton basis.  Identically zero: a single hop cannot bridge the
/// photon-number mismatch of two, which freezes hopping in the |0>/|2~>
/// crystal.
double frozen_hopping_element(double delta = 0.0, double g = 1.0);

/// Onset of the |3~> manifold in the uniform-|2~> background,
/// omega - (sqrt(3) - sqrt(2)) g.  Classification past max(mu_c3, this) is
/// refused rather than extrapolated with the truncated basis.
double inversion_estimate_n3(const ModelParams& params);

enum class ResonantPhase { vacuum, solid, floating, uniform1, frozen, uniform2 };

const char* to_string(ResonantPhase phase);

struct TruncationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Ground-state label at (mu, t) on resonance.  Weak branch
/// (mu_c1 < mu_c2): staircase / floating below mu_c1, uniform |1~> filling
/// above, uniform |2~> filling past mu_c2.  Strong branch: |1~> solids below
/// mu_c2, frozen |0>/|2~> crystal (t-independent) in (mu_c2, mu_c3], uniform
/// |2~> above.  q_max bounds the solids resolved in the staircase region.
ResonantPhase classify_phase(double mu, double t, const ModelParams& params,
                             long q_max = 6);

struct ResonantCell {
  ResonantPhase phase = ResonantPhase::vacuum;
  Filling filling;          // set for PS (crystal) and uniform-1 cells
  bool has_filling = false;
};

/// Reusable form of classify_phase for grid sweeps: the window table and
/// thresholds are computed once.
class ResonantClassifier {
 public:
  ResonantClassifier(const ModelParams& params, long q_max = 6);

  ResonantPhase label(double mu, double t) const;
  ResonantCell classify_cell(double mu, double t) const;

  const ResonantThresholds& thresholds() const { return thresholds_; }
  /// Largest mu the truncated basis can classify.
  double mu_valid_max() const { return mu_valid_; }

 private:
  ModelParams params_;
  ResonantThresholds thresholds_;
  WindowTable table_;
  double base_ = 0.0;      // mu_c0
  double v_tilde_ = 0.0;
  double cos2_theta1_ = 0.0;
  double mu_valid_ = 0.0;
};

}  // namespace jchx
