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
#include "jchx/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jchx {

Filling::Filling(long p_, long q_) : p(p_), q(q_) {
  if (p < 1 || q < 1 || p > q)
    throw std::invalid_argument("Filling: need 0 < p <= q");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("Filling: p/q must be coprime");
}

std::string Filling::str() const {
  return std::to_string(p) + "/" + std::to_string(q);
}

std::vector<Filling> enumerate_fillings(long q_max) {
  if (q_max < 1) throw std::invalid_argument("enumerate_fillings: q_max >= 1");
  std::vector<Filling> out;
  // Stern-Brocot neighbour recurrence, starting from 0/1, 1/q_max.
  long a = 0, b = 1, c = 1, d = q_max;
  while (c <= d) {
    out.emplace_back(c, d);
    const long k = (q_max + b) / d;
    const long e = k * c - a;
    const long f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return out;
}

long crystal_distance(const Filling& f, long l) {
  if (l < 1) throw std::invalid_argument("crystal_distance: l must be >= 1");
  return (l * f.q) / f.p;  // exact when p | l q, floor otherwise
}

void SeriesOptions::validate() const {
  if (!(rel_tol > 0.0) || !(range_cutoff >= 1.0) || max_terms < 1)
    throw std::invalid_argument(
        "SeriesOptions: need rel_tol > 0, range_cutoff >= 1, max_terms >= 1");
}

namespace {

inline double inv6(double d) {
  const double d2 = d * d;
  return 1.0 / (d2 * d2 * d2);
}

// sum over k >= 1, k not a multiple of p, of (r_k+1) J(r_k) - r_k J(r_k+1)
double rearrangement_sum(const Filling& f, const SeriesOptions& opt) {
  if (f.p == 1) return 0.0;  // every k is a multiple of p
  double acc = 0.0;
  for (long k = 1; k <= opt.max_terms; ++k) {
    if ((k * f.q) % f.p == 0) continue;
    const long r = (k * f.q) / f.p;
    if (double(r) > opt.range_cutoff) break;
    const double term = (r + 1) * inv6(double(r)) - r * inv6(double(r + 1));
    acc += term;
    if (term < opt.rel_tol * acc && k > 4 * f.p) break;
  }
  return acc;
}

}  // namespace

double hole_coefficient(const Filling& f, const SeriesOptions& opt) {
  opt.validate();
  double acc = rearrangement_sum(f, opt);
  double tail = 0.0;
  for (long k = 1; k <= opt.max_terms; ++k) {
    const double d = double(k * f.q);
    if (d > opt.range_cutoff) break;
    const double term = (d + 1) * inv6(d) - d * inv6(d + 1);
    tail += term;
    if (term < opt.rel_tol * tail && k > 4) break;
  }
  return acc + tail;
}

double particle_coefficient(const Filling& f, const SeriesOptions& opt) {
  opt.validate();
  if (f.p == f.q)  // rho = 1: adding a particle is blocked by the hard core
    return std::numeric_limits<double>::infinity();
  double acc = rearrangement_sum(f, opt);
  double tail = 0.0;
  for (long k = 1; k <= opt.max_terms; ++k) {
    const double d = double(k * f.q);
    if (d - 1 > opt.range_cutoff) break;
    const double term = d * inv6(d - 1.0) - (d - 1.0) * inv6(d);
    tail += term;
    if (term < opt.rel_tol * tail && k > 4) break;
  }
  return acc + tail;
}

double width_coefficient(long q, const SeriesOptions& opt) {
  opt.validate();
  if (q < 2)
    return std::numeric_limits<double>::infinity();  // rho = 1 window is one-sided
  double acc = 0.0;
  for (long k = 1; k <= opt.max_terms; ++k) {
    const double d = double(k * q);
    if (d - 1 > opt.range_cutoff) break;
    const double term = d * (inv6(d + 1.0) + inv6(d - 1.0) - 2.0 * inv6(d));
    acc += term;
    if (term < opt.rel_tol * acc && k > 4) break;
  }
  return acc;
}

namespace {

SeriesOptions series_from(const ModelParams& params) {
  SeriesOptions opt;
  opt.range_cutoff = params.range_cutoff;
  return opt;
}

}  // namespace

double mu_particle(const Filling& f, const ModelParams& params) {
  params.validate();
  const double vt = effective_couplings(params).v_tilde;
  const double pc = particle_coefficient(f, series_from(params));
  if (std::isinf(pc)) return pc;
  return mu_c0(params) + pc * vt;
}

double mu_hole(const Filling& f, const ModelParams& params) {
  params.validate();
  const double vt = effective_couplings(params).v_tilde;
  return mu_c0(params) + hole_coefficient(f, series_from(params)) * vt;
}

double stability_width(const Filling& f, const ModelParams& params) {
  params.validate();
  const double vt = effective_couplings(params).v_tilde;
  return width_coefficient(f.q, series_from(params)) * vt;
}

CrystalPhase crystal_phase(const Filling& f, const ModelParams& params) {
  CrystalPhase ph;
  ph.filling = f;
  ph.mu_hole = mu_hole(f, params);
  ph.mu_particle = mu_particle(f, params);
  ph.width = ph.mu_particle - ph.mu_hole;
  ph.distances.reserve(f.q);
  for (long l = 1; l <= f.q; ++l) ph.distances.push_back(crystal_distance(f, l));
  return ph;
}

WindowTable WindowTable::build(long q_max, const SeriesOptions& opt) {
  if (q_max < 1) throw std::invalid_argument("WindowTable: q_max >= 1");
  WindowTable table;
  for (const Filling& f : enumerate_fillings(q_max)) {
    table.entries.push_back(
        {f, hole_coefficient(f, opt), particle_coefficient(f, opt)});
  }
  table.verify_disjoint();
  return table;
}

void WindowTable::verify_disjoint() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!(e.hole_coef < e.particle_coef))
      throw WindowOverlapError("window for " + e.filling.str() +
                               " has non-positive width");
    if (i + 1 < entries.size() && !(e.particle_coef < entries[i + 1].hole_coef))
      throw WindowOverlapError("windows of " + e.filling.str() + " and " +
                               entries[i + 1].filling.str() + " overlap");
  }
}

const char* to_string(CellLabel label) {
  switch (label) {
    case CellLabel::vacuum: return "vacuum";
    case CellLabel::solid: return "solid";
    case CellLabel::transition: return "transition";
    case CellLabel::floating: return "PF";
    case CellLabel::uniform: return "uniform";
  }
  return "?";
}

PhaseCell staircase_cell(double mu, double v_tilde, double mu_c0_base,
                         const WindowTable& table) {
  PhaseCell cell;
  cell.mu = mu;
  cell.v_tilde = v_tilde;
  if (mu < mu_c0_base) {
    cell.label = CellLabel::vacuum;
    return cell;
  }
  cell.label = CellLabel::transition;
  for (const auto& e : table.entries) {
    const double lo = mu_c0_base + e.hole_coef * v_tilde;
    const double hi = std::isinf(e.particle_coef)
                          ? std::numeric_limits<double>::infinity()
                          : mu_c0_base + e.particle_coef * v_tilde;
    if (mu > lo && mu < hi) {
      cell.label = CellLabel::solid;
      cell.filling = e.filling;
      cell.has_filling = true;
      return cell;
    }
    if (mu < lo) break;  // entries ascend in mu; nothing further can match
  }
  // exact window edges (and mu == mu_c0) fall through: gap closes there
  return cell;
}

namespace {

std::vector<double> linspace(double lo, double hi, long n) {
  if (n < 2) throw std::invalid_argument("grid resolution must be >= 2");
  std::vector<double> v(n);
  for (long i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return v;
}

}  // namespace

StaircaseMap staircase_map(double mu_min, double mu_max, double vt_min,
                           double vt_max, long res_mu, long res_vt, long q_max,
                           const ModelParams& params) {
  if (q_max < 2) throw std::invalid_argument("staircase_map: q_max >= 2");
  params.validate();
  const WindowTable table = WindowTable::build(q_max, series_from(params));
  const double base = mu_c0(params);
  StaircaseMap map;
  map.mu_values = linspace(mu_min, mu_max, res_mu);
  map.v_tilde_values = linspace(vt_min, vt_max, res_vt);
  map.cells.reserve(std::size_t(res_mu) * std::size_t(res_vt));
  for (double vt : map.v_tilde_values)
    for (double mu : map.mu_values)
      map.cells.push_back(staircase_cell(mu, vt, base, table));
  return map;
}

}  // namespace jchx
