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
#include "jchx/frozen.hpp"

#include <cmath>

#include "jchx/defects.hpp"

namespace jchx {

namespace {

void require_resonant(const ModelParams& params, const char* who) {
  if (params.delta != 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": requires delta == 0 (the projected "
                                "interaction is level-independent only on "
                                "resonance)");
}

}  // namespace

ResonantThresholds resonant_thresholds(const ModelParams& params) {
  params.validate();
  require_resonant(params, "resonant_thresholds");
  if (params.n_max < 2)
    throw std::invalid_argument("resonant_thresholds: requires n_max == 2");
  SeriesOptions opt;
  opt.range_cutoff = params.range_cutoff;
  const double vt = effective_couplings(params).v_tilde;
  const double full = hole_coefficient(Filling{1, 1}, opt) * vt;
  ResonantThresholds th;
  th.mu_c1 = params.omega - params.g + full;
  th.mu_c2 = params.omega - (std::sqrt(2.0) - 1.0) * params.g;
  // E_{2-}(mu_c3) + full-lattice interaction sum = 0, with the slope-2
  // single-particle energy of the doubly excited level
  th.mu_c3 = params.omega + (-std::sqrt(2.0) * params.g + full) / 2.0;
  th.strong_plrri = th.mu_c1 > th.mu_c2;
  return th;
}

double critical_interaction_strength(const ModelParams& params) {
  params.validate();
  require_resonant(params, "critical_interaction_strength");
  SeriesOptions opt;
  opt.range_cutoff = params.range_cutoff;
  // mu_c1(V) - mu_c2 = -(2 - sqrt2) g + c * V, linear in V
  ModelParams unit = params;
  unit.v1 = 1.0;
  const double weight_sq = effective_couplings(unit).v_tilde;  // Vt per unit V
  const double c = hole_coefficient(Filling{1, 1}, opt) * weight_sq;
  return (2.0 - std::sqrt(2.0)) * params.g / c;
}

double frozen_hopping_element(double delta, double g) {
  return hop_element(/*bra_i=*/2, /*bra_ip1=*/0, /*ket_i=*/0, /*ket_ip1=*/2,
                     delta, g);
}

double inversion_estimate_n3(const ModelParams& params) {
  return params.omega - (std::sqrt(3.0) - std::sqrt(2.0)) * params.g;
}

const char* to_string(ResonantPhase phase) {
  switch (phase) {
    case ResonantPhase::vacuum: return "vacuum";
    case ResonantPhase::solid: return "PS";
    case ResonantPhase::floating: return "PF";
    case ResonantPhase::uniform1: return "uniform-1";
    case ResonantPhase::frozen: return "FS";
    case ResonantPhase::uniform2: return "uniform-2";
  }
  return "?";
}

ResonantClassifier::ResonantClassifier(const ModelParams& params, long q_max)
    : params_(params) {
  params_.validate();
  require_resonant(params_, "classify_phase");
  params_.n_max = 2;
  thresholds_ = resonant_thresholds(params_);
  SeriesOptions opt;
  opt.range_cutoff = params_.range_cutoff;
  table_ = WindowTable::build(q_max, opt);
  base_ = mu_c0(params_);
  v_tilde_ = effective_couplings(params_).v_tilde;
  const double th1 = mixing_angle(1, params_.delta, params_.g);
  cos2_theta1_ = std::cos(th1) * std::cos(th1);
  mu_valid_ = std::max(thresholds_.mu_c3, inversion_estimate_n3(params_));
}

ResonantCell ResonantClassifier::classify_cell(double mu, double t) const {
  if (t < 0.0) throw std::invalid_argument("classify_phase: t must be >= 0");
  if (mu > mu_valid_)
    throw TruncationError(
        "classify_phase: mu exceeds the |3~> inversion estimate; the n <= 2 "
        "truncation is not trustworthy there");
  ResonantCell cell;
  const double j_perp = t * cos2_theta1_;
  if (mu <= base_ - 2.0 * j_perp) return cell;  // vacuum

  const ResonantThresholds& th = thresholds_;
  if (th.strong_plrri) {
    if (mu > th.mu_c3) {
      cell.phase = ResonantPhase::uniform2;
      return cell;
    }
    if (mu > th.mu_c2) {
      cell.phase = ResonantPhase::frozen;  // t never read here
      return cell;
    }
  } else {
    if (mu > th.mu_c2) {
      cell.phase = ResonantPhase::uniform2;
      return cell;
    }
    if (mu > th.mu_c1 + 2.0 * j_perp) {
      cell.phase = ResonantPhase::uniform1;
      cell.filling = Filling{1, 1};
      cell.has_filling = true;
      return cell;
    }
  }

  // staircase region: surviving melted |1~> solids, floating in between
  for (const auto& e : table_.entries) {
    if (e.filling.p == e.filling.q) continue;  // rho = 1 handled above
    const MeltedBounds b = melted_bounds_at(e.filling, e.hole_coef,
                                            e.particle_coef, base_,
                                            v_tilde_, j_perp);
    if (b.survives && mu > b.mu_down && mu < b.mu_up) {
      cell.phase = ResonantPhase::solid;
      cell.filling = e.filling;
      cell.has_filling = true;
      return cell;
    }
  }
  if (v_tilde_ == 0.0) {
    cell.phase = ResonantPhase::uniform1;  // plain JCH limit
    cell.filling = Filling{1, 1};
    cell.has_filling = true;
    return cell;
  }
  cell.phase = ResonantPhase::floating;
  return cell;
}

ResonantPhase ResonantClassifier::label(double mu, double t) const {
  return classify_cell(mu, t).phase;
}

ResonantPhase classify_phase(double mu, double t, const ModelParams& params,
                             long q_max) {
  const double mu_c2 = params.omega - (std::sqrt(2.0) - 1.0) * params.g;
  if (params.n_max < 2 && mu > mu_c2)
    throw TruncationError(
        "classify_phase: mu lies in the level-inversion regime; n_max = 2 "
        "is required there");
  return ResonantClassifier(params, q_max).label(mu, t);
}

}  // namespace jchx
