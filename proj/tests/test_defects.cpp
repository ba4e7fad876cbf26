#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jchx/defects.hpp"

using namespace jchx;
using doctest::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;

ModelParams calibrated(double v1, double t = 0.0) {
  ModelParams p;
  p.v1 = v1;
  p.t = t;
  p.convention = WeightConvention::calibrated;
  return p;
}
}  // namespace

TEST_CASE("defect dispersion") {
  CHECK(defect_dispersion(DefectKind::particle, 3, 0.7, 0.0) ==
        Approx(-6 * 0.7).epsilon(1e-15));
  CHECK(std::abs(defect_dispersion(DefectKind::hole, 3, 0.7, kPi / 6)) < 1e-12);
  CHECK(defect_dispersion(DefectKind::particle, 2, 0.0, 1.3) == 0.0);
  // symmetric band with its minimum at k = 0
  for (double k : {0.1, 0.2, 0.4}) {
    CHECK(defect_dispersion(DefectKind::particle, 2, 1.0, k) ==
          Approx(defect_dispersion(DefectKind::particle, 2, 1.0, -k))
              .epsilon(1e-14));
    CHECK(defect_dispersion(DefectKind::particle, 2, 1.0, k) >=
          defect_dispersion(DefectKind::particle, 2, 1.0, 0.0));
  }
  const DefectBand band = defect_band(DefectKind::hole, 3, 0.002);
  CHECK(band.bandwidth_factor == Approx(0.012).epsilon(1e-15));
  CHECK(band.dispersion(0.0) == Approx(-0.012).epsilon(1e-15));
  CHECK(band.dispersion(0.3) ==
        Approx(defect_dispersion(DefectKind::hole, 3, 0.002, 0.3))
            .epsilon(1e-14));
}

TEST_CASE("melted bounds") {
  // Vt = 0.025, J_perp = 0.001: the half crystal survives easily
  ModelParams p = calibrated(0.05, 0.002);  // j_perp = t/2 = 0.001
  const MeltedBounds half = melted_bounds(Filling{1, 2}, p);
  CHECK(half.survives);
  CHECK(half.mu_up - half.mu_down ==
        Approx(stability_width(Filling{1, 2}, p) - 4 * 2 * 0.001)
            .epsilon(1e-12));

  // the quarter crystal is far too narrow at this strength
  const MeltedBounds quarter = melted_bounds(Filling{1, 4}, p);
  CHECK_FALSE(quarter.survives);
  CHECK(stability_width(Filling{1, 4}, p) ==
        Approx(0.00379 * 0.025).epsilon(1e-2));

  // no hopping: static window, bit for bit
  ModelParams p0 = calibrated(0.05, 0.0);
  const MeltedBounds b0 = melted_bounds(Filling{1, 3}, p0);
  CHECK(b0.mu_down == mu_hole(Filling{1, 3}, p0));
  CHECK(b0.mu_up == mu_particle(Filling{1, 3}, p0));
  CHECK(b0.survives);
}

TEST_CASE("shrinkage is strict for positive hopping") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dv(0.01, 0.5);
  for (int it = 0; it < 1000; ++it) {
    ModelParams p = calibrated(dv(rng), 2e-4 + 1e-3 * (rng() % 10));
    const long q = 2 + long(rng() % 5);
    const Filling f{1, q};
    const MeltedBounds b = melted_bounds(f, p);
    CHECK(b.mu_up < mu_particle(f, p));
    CHECK(b.mu_down > mu_hole(f, p));
    CHECK(b.survives == (stability_width(f, p) >
                         4.0 * double(q) * effective_couplings(p).j_perp));
  }
}

TEST_CASE("melted width is exactly linear in the hopping") {
  for (const Filling f : {Filling{1, 2}, Filling{1, 3}, Filling{2, 5}}) {
    const double w0 = stability_width(f, calibrated(0.2));
    for (double jp : {1e-4, 5e-4, 2e-3}) {
      ModelParams p = calibrated(0.2, 2.0 * jp);
      const MeltedBounds b = melted_bounds(f, p);
      CHECK(b.mu_up - b.mu_down ==
            Approx(w0 - 4.0 * double(f.q) * jp).epsilon(1e-12));
    }
  }
}

TEST_CASE("melting thresholds") {
  CHECK(melting_threshold(Filling{1, 2}, 0.001) ==
        Approx(0.00411472).epsilon(1e-5));
  CHECK(melting_threshold(Filling{1, 3}, 0.001) ==
        Approx(0.303292).epsilon(1e-5));
  CHECK(melting_threshold(Filling{1, 4}, 0.001) > 4.0);
  CHECK(melting_threshold(Filling{2, 5}, 0.001) > 20.0);
  CHECK(melting_threshold(Filling{1, 2}, 0.0) == 0.0);
  CHECK_THROWS_AS(melting_threshold(Filling{1, 2}, -1e-3),
                  std::invalid_argument);
  // acceptance bands
  CHECK(std::abs(melting_threshold(Filling{1, 2}, 0.001) / 0.004115 - 1.0) <=
        0.01);
  CHECK(std::abs(melting_threshold(Filling{1, 3}, 0.001) / 0.3034 - 1.0) <=
        0.01);
  // exactly the q = 2 and q = 3 families melt within reach of the sweep
  for (const Filling& f : enumerate_fillings(8)) {
    if (f.p == f.q) continue;
    const double vstar = melting_threshold(f, 0.001);
    if (f.q <= 3) CHECK(vstar <= 0.31);
    else CHECK(vstar > 0.31);
  }
}

TEST_CASE("zero hopping reduces the floating map to the staircase") {
  const WindowTable table = WindowTable::build(6);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dmu(-1.1, -0.85), dv(0.0, 0.05);
  for (int it = 0; it < 1000; ++it) {
    const double mu = dmu(rng), vt = dv(rng);
    const PhaseCell a = staircase_cell(mu, vt, -1.0, table);
    const PhaseCell b = floating_cell(mu, vt, -1.0, 0.0, table);
    CHECK(a.label == b.label);
    CHECK(a.has_filling == b.has_filling);
    if (a.has_filling) CHECK(a.filling == b.filling);
  }
}

TEST_CASE("floating cells") {
  const WindowTable table = WindowTable::build(6);
  const double base = -1.0, jp = 0.001;

  SUBCASE("vacuum reaches up to the shifted onset") {
    CHECK(floating_cell(base - 2 * jp - 1e-9, 0.02, base, jp, table).label ==
          CellLabel::vacuum);
    CHECK(floating_cell(base - 2 * jp + 1e-9, 0.02, base, jp, table).label !=
          CellLabel::vacuum);
  }
  SUBCASE("no floating phase without interactions") {
    const PhaseCell cell = floating_cell(-0.9, 0.0, base, jp, table);
    CHECK(cell.label == CellLabel::uniform);
  }
  SUBCASE("surviving half crystal") {
    const double vt = 0.025;
    const double mu = base + 0.5 * (4.52232915375e-2 + 1.98946283243) * vt;
    const PhaseCell cell = floating_cell(mu, vt, base, jp, table);
    CHECK(cell.label == CellLabel::solid);
    CHECK(cell.filling == Filling{1, 2});
  }
  SUBCASE("melted third crystal floats below threshold") {
    const double vt = 0.025;  // far below Vt*(1/3) = 0.303
    const double mu =
        base + 0.5 * (4.86609520228e-3 + 4.4431909868e-2) * vt;
    CHECK(floating_cell(mu, vt, base, jp, table).label == CellLabel::floating);
  }
  SUBCASE("third crystal reappears above threshold") {
    const double vt = 0.32;
    const double mu =
        base + 0.5 * (4.86609520228e-3 + 4.4431909868e-2) * vt;
    CHECK(floating_cell(mu, vt, base, jp, table).label == CellLabel::solid);
  }
}

TEST_CASE("only the half and third solids appear on the melt sweep") {
  ModelParams p = calibrated(0.0);
  const FloatingMap map =
      floating_map(-1.1, -0.85, 0.0, 0.35, 0.001, 200, 120, 6, p);
  bool seen_half = false, seen_third = false;
  for (const PhaseCell& cell : map.cells) {
    if (cell.label != CellLabel::solid) continue;
    if (cell.filling == Filling{1, 2}) seen_half = true;
    else if (cell.filling == Filling{1, 3}) seen_third = true;
    else if (cell.filling == Filling{1, 1}) continue;  // uniform full lattice
    else FAIL("unexpected solid lobe at rho = ", cell.filling.str());
  }
  CHECK(seen_half);
  CHECK(seen_third);
  // the third lobe exists only above its threshold
  for (std::size_t ivt = 0; ivt < map.v_tilde_values.size(); ++ivt) {
    if (map.v_tilde_values[ivt] > 0.303292) continue;
    for (std::size_t imu = 0; imu < map.mu_values.size(); ++imu)
      if (map.at(imu, ivt).label == CellLabel::solid)
        CHECK(map.at(imu, ivt).filling != Filling{1, 3});
  }
}

TEST_CASE("negative hopping is rejected") {
  ModelParams p = calibrated(0.1);
  CHECK_THROWS_AS(floating_map(-1.1, -0.9, 0.0, 0.1, -0.001, 4, 4, 6, p),
                  std::invalid_argument);
}
