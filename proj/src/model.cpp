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
#include "jchx/model.hpp"

#include <array>
#include <cmath>

namespace jchx {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void ModelParams::validate() const {
  if (!(g > 0.0)) throw std::invalid_argument("ModelParams: g must be > 0");
  if (v1 < 0.0) throw std::invalid_argument("ModelParams: v1 must be >= 0");
  if (t < 0.0) throw std::invalid_argument("ModelParams: t must be >= 0");
  if (n_max != 1 && n_max != 2)
    throw std::invalid_argument("ModelParams: n_max must be 1 or 2");
  if (!(range_cutoff >= 1.0))
    throw std::invalid_argument("ModelParams: range_cutoff must be >= 1");
  if (convention != WeightConvention::literal &&
      convention != WeightConvention::calibrated)
    throw std::invalid_argument("ModelParams: unknown weight convention");
}

double mixing_angle(int n, double delta, double g) {
  if (n < 0) throw std::invalid_argument("mixing_angle: n must be >= 0");
  if (!(g > 0.0)) throw std::invalid_argument("mixing_angle: g must be > 0");
  if (n == 0) return 0.0;  // unmixed vacuum manifold
  if (delta == 0.0) return kPi / 4.0;
  const double a = std::atan(2.0 * g * std::sqrt(double(n)) / delta);
  // keep sin^2(theta) increasing as delta decreases through resonance
  return delta > 0.0 ? a / 2.0 : (a + kPi) / 2.0;
}

double eigen_energy(int n, Branch branch, const ModelParams& params) {
  if (n < 0) throw std::invalid_argument("eigen_energy: n must be >= 0");
  if (n == 0) return 0.0;
  const double root =
      std::sqrt(params.delta * params.delta / 4.0 + n * params.g * params.g);
  const double base = n * (params.omega - params.mu) + params.delta / 2.0;
  return branch == Branch::lower ? base - root : base + root;
}

PolaritonLevel polariton_level(int n, const ModelParams& params) {
  PolaritonLevel lvl;
  lvl.n = n;
  lvl.theta_n = mixing_angle(n, params.delta, params.g);
  lvl.energy_minus = eigen_energy(n, Branch::lower, params);
  const double s = std::sin(lvl.theta_n);
  lvl.rydberg_weight = n == 0 ? 0.0 : s * s;
  lvl.photon_weight_minus = n == 0 ? 0.0 : n - s * s;
  return lvl;
}

double hopping_overlap(int n, int m, double delta, double g) {
  if (n < 0) throw std::invalid_argument("hopping_overlap: n must be >= 0");
  if (m != n + 1)
    throw std::invalid_argument(
        "hopping_overlap: only adjacent manifolds m = n + 1 survive the "
        "rotating-wave projection");
  const double th_n = mixing_angle(n, delta, g);
  const double th_m = mixing_angle(m, delta, g);
  const double amp = std::sqrt(double(m)) * std::cos(th_n) * std::cos(th_m) +
                     std::sqrt(double(n)) * std::sin(th_n) * std::sin(th_m);
  return amp * amp;
}

double vdw_tail(long d, double v1) {
  if (d < 1) throw std::invalid_argument("vdw_tail: d must be >= 1");
  const double dd = double(d);
  return v1 / (dd * dd * dd * dd * dd * dd);
}

double rydberg_weight_factor(int n, const ModelParams& params) {
  if (n == 0) return 0.0;
  const double s = std::sin(mixing_angle(n, params.delta, params.g));
  return params.convention == WeightConvention::literal ? s * s : s;
}

double effective_interaction(int n, int nprime, long d,
                             const ModelParams& params) {
  if (n < 1 || nprime < 1)
    throw std::invalid_argument("effective_interaction: n, n' must be >= 1");
  if (d < 1) throw std::invalid_argument("effective_interaction: d must be >= 1");
  if (double(d) > params.range_cutoff) return 0.0;
  // weights grouped so the product is bitwise symmetric under n <-> n'
  return vdw_tail(d, params.v1) * (rydberg_weight_factor(n, params) *
                                   rydberg_weight_factor(nprime, params));
}

EffectiveCouplings effective_couplings(const ModelParams& params) {
  const double th1 = mixing_angle(1, params.delta, params.g);
  const double c = std::cos(th1);
  const double w = rydberg_weight_factor(1, params);
  return {params.t * c * c, params.v1 * w * w};
}

double mean_photon_density(double rho, double theta_1) {
  const double s = std::sin(theta_1);
  return rho * (1.0 - s * s);
}

double mu_c0(const ModelParams& params) {
  return params.omega + params.delta / 2.0 -
         std::sqrt(params.delta * params.delta / 4.0 + params.g * params.g);
}

namespace {

// |n~> over the two-component site basis {(photon k, atom G), (photon k, atom R)}.
struct SiteState {
  // (photon number, atom excited?) -> amplitude; at most two components
  std::array<double, 2> amp;   // [G component, R component]
  std::array<int, 2> photons;  // photon number carried by each component
  int ncomp;
};

SiteState lower_polariton(int n, double delta, double g) {
  SiteState s{};
  if (n == 0) {
    s.amp = {1.0, 0.0};
    s.photons = {0, 0};
    s.ncomp = 1;
    return s;
  }
  const double th = mixing_angle(n, delta, g);
  s.amp = {std::cos(th), -std::sin(th)};
  s.photons = {n, n - 1};
  s.ncomp = 2;
  return s;
}

}  // namespace

double annihilation_element(int m, int n, double delta, double g) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("annihilation_element: levels must be >= 0");
  const SiteState bra = lower_polariton(m, delta, g);
  const SiteState ket = lower_polariton(n, delta, g);
  double val = 0.0;
  for (int i = 0; i < ket.ncomp; ++i) {
    if (ket.photons[i] == 0) continue;
    const double coeff = ket.amp[i] * std::sqrt(double(ket.photons[i]));
    const int kphot = ket.photons[i] - 1;
    for (int j = 0; j < bra.ncomp; ++j) {
      if (bra.photons[j] == kphot && i == j) val += bra.amp[j] * coeff;
    }
  }
  return val;
}

double hop_element(int bra_i, int bra_ip1, int ket_i, int ket_ip1,
                   double delta, double g) {
  // <bra_i| a^dag |ket_i> = <ket_i| a |bra_i> (real amplitudes)
  return annihilation_element(ket_i, bra_i, delta, g) *
         annihilation_element(bra_ip1, ket_ip1, delta, g);
}

}  // namespace jchx
