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
#include "jchx/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>

namespace jchx {

long ring_distance(long L, long i, long j) {
  long d = std::abs(i - j) % L;
  return std::min(d, L - d);
}

namespace {

constexpr long kTieCap = 128;
constexpr double kTieTol = 1e-12;  // in units of g

struct SiteModel {
  std::vector<double> e_site;   // mu-independent part of E_{n-}, per level
  std::vector<double> weight;   // interaction weight per level
  std::vector<double> tail;     // vdw_tail(d) for d = 0..L/2 (tail[0] unused)
  long L = 0;
  int n_max = 1;

  SiteModel(long L_, const ModelParams& params, int n_max_)
      : L(L_), n_max(n_max_) {
    e_site.resize(n_max + 1);
    weight.resize(n_max + 1);
    ModelParams at_zero_mu = params;
    at_zero_mu.mu = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      e_site[n] = eigen_energy(n, Branch::lower, at_zero_mu);
      weight[n] = rydberg_weight_factor(n, params);
    }
    tail.resize(L / 2 + 1, 0.0);
    for (long d = 1; d <= L / 2; ++d)
      tail[d] = double(d) <= params.range_cutoff ? vdw_tail(d, params.v1) : 0.0;
  }

  double pair(long i, long j, int ni, int nj) const {
    return tail[ring_distance(L, i, j)] * weight[ni] * weight[nj];
  }

  // from-scratch mu-independent energy
  double energy0(const std::vector<int>& occ) const {
    double e = 0.0;
    for (long i = 0; i < L; ++i) e += e_site[occ[i]];
    for (long i = 0; i < L; ++i)
      for (long j = i + 1; j < L; ++j) e += pair(i, j, occ[i], occ[j]);
    return e;
  }
};

// Bounded collection of the lexicographically smallest degenerate configs.
struct TieSet {
  double best = std::numeric_limits<double>::infinity();
  long count = 0;
  std::priority_queue<std::vector<int>> smallest;  // max-heap, keeps low end

  void offer(double e, const std::vector<int>& occ, double tol) {
    if (e < best - tol) {
      best = e;
      count = 1;
      smallest = {};
      smallest.push(occ);
      return;
    }
    if (e <= best + tol) {
      ++count;
      smallest.push(occ);
      if (long(smallest.size()) > kTieCap) smallest.pop();
    }
  }
};

// Walk every configuration with one-site increments, maintaining the energy
// and the local interaction field, and hand each state to `visit`.  The
// running values are resynced from scratch every few steps, which keeps the
// accumulated rounding far below the 1e-12 tie tolerance.
template <typename Visitor>
void enumerate_configs(const SiteModel& m, Visitor&& visit) {
  const long L = m.L;
  const int base = m.n_max + 1;
  std::vector<int> occ(L, 0);
  std::vector<double> field(L, 0.0);  // sum_j w(occ_j) tail(d_ij), j != i
  double e0 = 0.0;
  for (long i = 0; i < L; ++i) e0 += m.e_site[0];
  long n_total = 0;
  visit(occ, e0, n_total);

  const auto change_site = [&](long s, int to) {
    const int from = occ[s];
    const double dw = m.weight[to] - m.weight[from];
    e0 += m.e_site[to] - m.e_site[from] + dw * field[s];
    if (dw != 0.0)
      for (long j = 0; j < L; ++j)
        if (j != s) field[j] += dw * m.tail[ring_distance(L, s, j)];
    n_total += to - from;
    occ[s] = to;
  };

  constexpr long kResyncEvery = 64;
  long since_resync = 0;
  const auto resync = [&] {
    if (++since_resync < kResyncEvery) return;
    since_resync = 0;
    e0 = m.energy0(occ);
    for (long i = 0; i < L; ++i) {
      double f = 0.0;
      for (long j = 0; j < L; ++j)
        if (j != i) f += m.weight[occ[j]] * m.tail[ring_distance(L, i, j)];
      field[i] = f;
    }
  };

  if (base == 2) {
    // binary reflected Gray code: one flip per step
    const unsigned long total = 1ul << L;
    for (unsigned long k = 1; k < total; ++k) {
      const long s = __builtin_ctzl(k);
      change_site(s, 1 - occ[s]);
      resync();
      visit(occ, e0, n_total);
    }
  } else {
    // base-3 odometer; carries amortise to O(1) digit changes per step
    unsigned long steps = 1;
    for (long i = 0; i < L; ++i) steps *= 3ul;
    for (unsigned long k = 1; k < steps; ++k) {
      long s = 0;
      while (occ[s] == m.n_max) {
        change_site(s, 0);
        ++s;
      }
      change_site(s, occ[s] + 1);
      resync();
      visit(occ, e0, n_total);
    }
  }
}

void check_limits(long L, int n_max) {
  if (n_max != 1 && n_max != 2)
    throw std::invalid_argument("oracle: n_max must be 1 or 2");
  if (L < 2) throw std::invalid_argument("oracle: L must be >= 2");
  if (n_max == 1 && L > 28)
    throw std::invalid_argument(
        "oracle: refusing L > 28 at n_max = 1 (exhaustive 2^L search)");
  if (n_max == 2 && L > 16)
    throw std::invalid_argument(
        "oracle: refusing L > 16 at n_max = 2 (exhaustive 3^L search)");
}

}  // namespace

double lattice_energy(const std::vector<int>& occ, const ModelParams& params) {
  const long L = long(occ.size());
  int top = 0;
  for (int n : occ) top = std::max(top, n);
  const SiteModel m(L, params, std::max(top, 1));
  return m.energy0(occ) - params.mu * double([&] {
           long n = 0;
           for (int v : occ) n += v;
           return n;
         }());
}

ClassicalGroundState classical_ground_state(long L, const ModelParams& params,
                                            int n_max) {
  params.validate();
  check_limits(L, n_max);
  const SiteModel m(L, params, n_max);
  const double tol = kTieTol * params.g;
  TieSet ties;
  enumerate_configs(m, [&](const std::vector<int>& occ, double e0, long n) {
    ties.offer(e0 - params.mu * double(n), occ, tol);
  });

  ClassicalGroundState gs;
  gs.energy = ties.best;
  gs.tie_count = ties.count;
  while (!ties.smallest.empty()) {
    gs.minima.push_back({L, ties.smallest.top(), 0.0});
    ties.smallest.pop();
  }
  std::reverse(gs.minima.begin(), gs.minima.end());
  long n_first = -1;
  for (auto& cfg : gs.minima) {
    long n = 0;
    for (int v : cfg.occ) n += v;
    if (n_first < 0) n_first = n;
    if (n != n_first) gs.filling_well_defined = false;
    // from-scratch recomputation guard on every reported winner
    cfg.energy = m.energy0(cfg.occ) - params.mu * double(n);
    if (std::abs(cfg.energy - gs.energy) > tol)
      throw std::logic_error(
          "classical_ground_state: incremental energy drifted from the "
          "from-scratch value");
  }
  gs.filling = double(n_first) / double(L);
  return gs;
}

EnergyTable energy_table(long L, const ModelParams& params, int n_max) {
  params.validate();
  check_limits(L, n_max);
  const SiteModel m(L, params, n_max);
  EnergyTable table;
  table.L = L;
  table.min_e.assign(std::size_t(n_max) * L + 1,
                     std::numeric_limits<double>::infinity());
  table.argmin.resize(table.min_e.size());
  enumerate_configs(m, [&](const std::vector<int>& occ, double e0, long n) {
    if (e0 < table.min_e[n]) {
      table.min_e[n] = e0;
      table.argmin[n] = occ;
    }
  });
  return table;
}

long EnergyTable::ground_n(double mu) const {
  long best = 0;
  for (std::size_t n = 1; n < min_e.size(); ++n)
    if (min_e[n] - mu * double(n) < min_e[best] - mu * double(best))
      best = long(n);
  return best;
}

namespace {

double bisect_monotone(const EnergyTable& table, long n_target, bool lower,
                       double a, double b, double tol) {
  // lower: inf{mu : ground_n >= n_target}; upper: sup{mu : ground_n <= n_target}
  const auto pred = [&](double mu) {
    return lower ? table.ground_n(mu) >= n_target
                 : table.ground_n(mu) > n_target;
  };
  if (pred(a) || !pred(b))
    throw std::logic_error("boundary_bisect: bracket does not straddle edge");
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    (pred(mid) ? b : a) = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace

std::pair<double, double> boundary_bisect(const Filling& f,
                                          const ModelParams& params, long L) {
  params.validate();
  if (params.n_max != 1)
    throw std::invalid_argument(
        "boundary_bisect: the staircase oracle runs at n_max = 1");
  if (L % f.q != 0)
    throw std::invalid_argument("boundary_bisect: q must divide L");
  const long n_target = L / f.q * f.p;
  const EnergyTable table = energy_table(L, params, 1);
  const double tol = 1e-6 * params.g;
  const double floor = mu_c0(params) - 2.0 * params.g;

  double hi = floor + 0.5 * params.g;
  while (table.ground_n(hi) < n_target) {
    hi += 0.5 * params.g;
    if (hi > floor + 50.0 * params.g)
      throw std::logic_error("boundary_bisect: filling never reached");
  }
  const double lower = bisect_monotone(table, n_target, true, floor, hi, tol);

  if (n_target == L)  // hard-core ceiling: no upper transition
    return {lower, std::numeric_limits<double>::infinity()};
  double lo2 = lower - 2.0 * tol;  // zero-width windows collapse gracefully
  if (table.ground_n(lo2) > n_target) lo2 = floor;
  double hi2 = lower + 0.5 * params.g;
  while (table.ground_n(hi2) <= n_target) hi2 += 0.5 * params.g;
  const double upper = bisect_monotone(table, n_target, false, lo2, hi2, tol);
  return {lower, upper};
}

SpectrumResult exact_diagonalize(long L, const ModelParams& params, int n_max,
                                 std::optional<long> total_n) {
  params.validate();
  if (n_max != 1 && n_max != 2)
    throw std::invalid_argument("exact_diagonalize: n_max must be 1 or 2");
  if (L < 2) throw std::invalid_argument("exact_diagonalize: L >= 2");
  double full_dim = std::pow(double(n_max + 1), double(L));
  if (full_dim > 20000.0 && !total_n)
    throw std::invalid_argument(
        "exact_diagonalize: basis dimension exceeds 20000, refusing dense "
        "solve");

  const SiteModel m(L, params, n_max);
  const int base = n_max + 1;

  // enumerate the (optionally sector-restricted) product basis
  std::vector<std::vector<int>> states;
  {
    std::vector<int> occ(L, 0);
    while (true) {
      long n = 0;
      for (int v : occ) n += v;
      if (!total_n || n == *total_n) states.push_back(occ);
      long s = 0;
      while (s < L && occ[s] == n_max) occ[s++] = 0;
      if (s == L) break;
      ++occ[s];
    }
  }
  const long dim = long(states.size());
  if (dim > 20000)
    throw std::invalid_argument(
        "exact_diagonalize: sector dimension exceeds 20000");
  if (dim == 0) throw std::invalid_argument("exact_diagonalize: empty sector");

  const auto code_of = [&](const std::vector<int>& occ) {
    unsigned long c = 0;
    for (long i = L - 1; i >= 0; --i) c = c * base + occ[i];
    return c;
  };
  std::vector<std::pair<unsigned long, long>> index;
  index.reserve(dim);
  for (long s = 0; s < dim; ++s) index.emplace_back(code_of(states[s]), s);
  std::sort(index.begin(), index.end());
  const auto lookup = [&](unsigned long code) {
    auto it = std::lower_bound(index.begin(), index.end(),
                               std::make_pair(code, long(-1)));
    return it->second;
  };

  std::vector<double> beta(n_max, 0.0);
  for (int n = 0; n < n_max; ++n)
    beta[n] = hopping_overlap(n, n + 1, params.delta, params.g);

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (long s = 0; s < dim; ++s) {
    const auto& occ = states[s];
    long n = 0;
    for (int v : occ) n += v;
    H(s, s) = m.energy0(occ) - params.mu * double(n);
    for (long i = 0; i < L; ++i) {
      const long j = (i + 1) % L;
      // exchange (n, n+1) -> (n+1, n) across the bond, ascending pattern only
      if (occ[j] == occ[i] + 1) {
        std::vector<int> swapped = occ;
        std::swap(swapped[i], swapped[j]);
        const long s2 = lookup(code_of(swapped));
        const double amp = -params.t * beta[occ[i]];
        H(s, s2) += amp;
        H(s2, s) += amp;
      }
    }
  }
  if ((H - H.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::logic_error("exact_diagonalize: matrix lost Hermiticity");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exact_diagonalize: eigensolver failed");

  SpectrumResult res;
  res.dimension = dim;
  res.ground_energy = solver.eigenvalues()(0);
  const double tol = 1e-10 * params.g;
  res.degeneracy = 0;
  for (long i = 0; i < dim; ++i)
    if (solver.eigenvalues()(i) <= res.ground_energy + tol) ++res.degeneracy;

  const auto& v = solver.eigenvectors().col(0);
  double fill = 0.0, photons = 0.0;
  for (long s = 0; s < dim; ++s) {
    const double w = v(s) * v(s);
    long n = 0;
    double ph = 0.0;
    for (int occ_i : states[s]) {
      n += occ_i;
      if (occ_i > 0) {
        const double sn =
            std::sin(mixing_angle(occ_i, params.delta, params.g));
        ph += occ_i - sn * sn;
      }
    }
    fill += w * double(n);
    photons += w * ph;
  }
  res.ground_filling = fill / double(L);
  res.mean_photon_density = photons / double(L);
  return res;
}

}  // namespace jchx
