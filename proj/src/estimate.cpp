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
#include "jchx/estimate.hpp"

#include <cmath>

namespace jchx {

EstimatedParams estimate_parameters(const ExperimentalInputs& in) {
  const double vals[] = {in.eta_c, in.Gamma, in.N_R,     in.c,  in.L_cav,
                         in.Omega, in.Delta_p, in.F,     in.C6, in.spacing};
  for (double v : vals)
    if (!(v > 0.0))
      throw std::invalid_argument("estimate_parameters: all inputs must be positive");

  constexpr double pi = 3.14159265358979323846;
  EstimatedParams out;
  out.inputs = in;
  out.gamma = in.N_R * in.Gamma;
  out.g0 = std::sqrt(in.eta_c * out.gamma * in.c / in.L_cav);
  out.g = std::sqrt(in.N_R) * out.g0 * in.Omega / in.Delta_p;
  out.kappa = pi * in.c / (in.F * in.L_cav);
  out.t = out.kappa * std::sqrt(in.F / (2.0 * pi));
  out.v1 = in.C6 / std::pow(in.spacing, 6.0);
  out.lambda_stark = out.g0 * out.g0 / in.Delta_p;
  return out;
}

}  // namespace jchx
