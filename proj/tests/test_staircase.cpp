#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jchx/staircase.hpp"

using namespace jchx;
using doctest::Approx;

namespace {

ModelParams calibrated(double v1) {
  ModelParams p;
  p.v1 = v1;
  p.convention = WeightConvention::calibrated;
  return p;
}

// frozen series constants (units of Vt), checked against an independent
// high-precision evaluation
struct Frozen {
  long p, q;
  double hole, particle;
};
const Frozen kWindows[] = {
    {1, 6, 1.01125276947e-4, 2.80226971823e-4},
    {1, 5, 2.82834693134e-4, 9.75462489758e-4},
    {1, 4, 9.86353525451e-4, 4.79964458039e-3},
    {1, 3, 4.86609520228e-3, 4.4431909868e-2},
    {2, 5, 4.44578415817e-2, 4.51504693783e-2},
    {1, 2, 4.52232915375e-2, 1.98946283243},
    {3, 5, 1.98953565459, 1.99022828239},
    {2, 3, 1.9902542141, 2.02982002877},
};

}  // namespace

TEST_CASE("filling invariants") {
  CHECK_THROWS_AS(Filling(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Filling(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Filling(0, 2), std::invalid_argument);
  CHECK(Filling(2, 5).value() == Approx(0.4));
  CHECK(Filling(2, 5).str() == "2/5");
}

TEST_CASE("filling enumeration is the ascending Farey list") {
  const auto f2 = enumerate_fillings(2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == Filling{1, 2});
  CHECK(f2[1] == Filling{1, 1});

  const auto f4 = enumerate_fillings(4);
  REQUIRE(f4.size() == 6);
  const Filling expect4[] = {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(f4[i] == expect4[i]);

  const auto f6 = enumerate_fillings(6);
  CHECK(f6.size() == 12);
  CHECK(std::count(f6.begin(), f6.end(), Filling{2, 5}) == 1);
  CHECK(std::count(f6.begin(), f6.end(), Filling{1, 6}) == 1);
  for (std::size_t i = 1; i < f6.size(); ++i)
    CHECK(f6[i - 1].value() < f6[i].value());
  CHECK_THROWS_AS(enumerate_fillings(0), std::invalid_argument);
}

TEST_CASE("crystal distances") {
  CHECK(crystal_distance(Filling{1, 3}, 1) == 3);
  CHECK(crystal_distance(Filling{2, 5}, 1) == 2);
  CHECK(crystal_distance(Filling{2, 5}, 2) == 5);
  CHECK_THROWS_AS(crystal_distance(Filling{1, 2}, 0), std::invalid_argument);
  // r_{kp} = kq exactly for every filling
  for (const Filling& f : enumerate_fillings(6))
    for (long k = 1; k <= 4; ++k)
      CHECK(crystal_distance(f, k * f.p) == k * f.q);
}

TEST_CASE("window series constants") {
  for (const Frozen& w : kWindows) {
    const Filling f{w.p, w.q};
    CHECK(hole_coefficient(f) == Approx(w.hole).epsilon(1e-9));
    CHECK(particle_coefficient(f) == Approx(w.particle).epsilon(1e-9));
  }
  CHECK(std::isinf(particle_coefficient(Filling{1, 1})));
  // full-filling onset coefficient brackets the printed constant
  const double c = hole_coefficient(Filling{1, 1}) / 2.0;
  CHECK(c >= 1.0170);
  CHECK(c <= 1.0180);
}

TEST_CASE("width series") {
  CHECK(width_coefficient(2) == Approx(1.944239541).epsilon(1e-8));
  CHECK(width_coefficient(3) == Approx(0.03956581467).epsilon(1e-8));
  // acceptance bands
  CHECK(std::abs(width_coefficient(2) - 1.9442) <= 0.0002);
  CHECK(std::abs(width_coefficient(3) - 0.03956) <= 0.0001);
  // strictly decreasing in q
  for (long q = 2; q < 8; ++q)
    CHECK(width_coefficient(q + 1) < width_coefficient(q));
}

TEST_CASE("windows agree between the two code paths") {
  // particle - hole difference against the direct width series
  for (double v1 : {0.05, 1.0, 2.0}) {  // Vt = v1 / 2 under calibration
    ModelParams p = calibrated(v1);
    for (const Filling& f : enumerate_fillings(8)) {
      if (f.p == f.q) continue;
      const double diff = mu_particle(f, p) - mu_hole(f, p);
      CHECK(std::abs(diff - stability_width(f, p)) <= 1e-10);
    }
  }
}

TEST_CASE("boundaries collapse to mu_c0 at zero interaction") {
  ModelParams p = calibrated(0.0);
  p.delta = 0.7;
  p.omega = 0.2;
  for (const Filling& f : {Filling{1, 3}, Filling{2, 5}, Filling{1, 2}}) {
    CHECK(mu_particle(f, p) == Approx(mu_c0(p)).epsilon(1e-15));
    CHECK(mu_hole(f, p) == Approx(mu_c0(p)).epsilon(1e-15));
    CHECK(stability_width(f, p) == 0.0);
  }
}

TEST_CASE("frozen boundary values at Vt = 0.025") {
  ModelParams p = calibrated(0.05);  // Vt = 0.025
  CHECK(mu_particle(Filling{1, 2}, p) ==
        Approx(-1.0 + 1.98946283243 * 0.025).epsilon(1e-10));
  CHECK(mu_hole(Filling{1, 3}, p) ==
        Approx(-1.0 + 4.86609520228e-3 * 0.025).epsilon(1e-10));
  CHECK(mu_hole(Filling{1, 2}, p) ==
        Approx(mu_particle(Filling{1, 2}, p) -
               stability_width(Filling{1, 2}, p))
            .epsilon(1e-12));
}

TEST_CASE("crystal phase bundle") {
  ModelParams p = calibrated(0.05);
  const CrystalPhase ph = crystal_phase(Filling{2, 5}, p);
  CHECK(ph.width == Approx(ph.mu_particle - ph.mu_hole).epsilon(1e-10));
  CHECK(ph.width >= 0.0);
  REQUIRE(ph.distances.size() == 5);
  CHECK(ph.distances[0] == 2);  // floor(5/2)
  CHECK(ph.distances[1] == 5);  // l = p: exactly q
  CHECK(ph.distances[3] == 10);
}

TEST_CASE("window table is disjoint and ordered") {
  const WindowTable table = WindowTable::build(8);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    CHECK(table.entries[i].hole_coef < table.entries[i].particle_coef);
    if (i > 0) {
      CHECK(table.entries[i - 1].particle_coef < table.entries[i].hole_coef);
      CHECK(table.entries[i - 1].filling.value() <
            table.entries[i].filling.value());
    }
  }
}

TEST_CASE("staircase cell selection") {
  const WindowTable table = WindowTable::build(6);
  const double base = -1.0;
  const double vt = 0.025;

  SUBCASE("vacuum below onset") {
    CHECK(staircase_cell(-1.2, vt, base, table).label == CellLabel::vacuum);
  }
  SUBCASE("exact boundary is a transition") {
    const double edge = base + 4.52232915375e-2 * vt;  // hole edge of 1/2
    const auto cell = staircase_cell(edge, vt, base, table);
    CHECK(cell.label == CellLabel::transition);
  }
  SUBCASE("interior of a window") {
    const double mu = base + 0.5 * (4.52232915375e-2 + 1.98946283243) * vt;
    const auto cell = staircase_cell(mu, vt, base, table);
    CHECK(cell.label == CellLabel::solid);
    CHECK(cell.filling == Filling{1, 2});
  }
  SUBCASE("gap between windows is a transition") {
    const double mu = base + 0.5 * (4.4431909868e-2 + 4.44578415817e-2) * vt;
    CHECK(staircase_cell(mu, vt, base, table).label == CellLabel::transition);
  }
  SUBCASE("zero interaction saturates immediately") {
    const auto cell = staircase_cell(-0.9, 0.0, base, table);
    CHECK(cell.label == CellLabel::solid);
    CHECK(cell.filling == Filling{1, 1});
  }
}

TEST_CASE("the dashed-line cut walks the expected plateau sequence") {
  const WindowTable table = WindowTable::build(6);
  std::vector<Filling> plateaus;
  for (const auto& e : table.entries)
    if (e.filling.value() <= 0.5) plateaus.push_back(e.filling);
  const Filling expected[] = {{1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}};
  REQUIRE(plateaus.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(plateaus[i] == expected[i]);
}

TEST_CASE("map columns are monotone in mu") {
  ModelParams p = calibrated(0.0);
  const StaircaseMap map =
      staircase_map(-1.05, -0.9, 0.0, 0.05, 120, 7, 6, p);
  CHECK(map.cells.size() == 120 * 7);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t ivt = rng() % map.v_tilde_values.size();
    double last = -1.0;
    for (std::size_t imu = 0; imu < map.mu_values.size(); ++imu) {
      const PhaseCell& cell = map.at(imu, ivt);
      if (cell.label != CellLabel::solid) continue;
      CHECK(cell.filling.value() >= last);
      last = cell.filling.value();
    }
  }
}

TEST_CASE("filling steps downward along increasing interaction at fixed mu") {
  const WindowTable table = WindowTable::build(6);
  const double base = -1.0, mu = base + 1e-3;
  double last = 2.0;
  std::vector<double> seen;
  for (long i = 1; i <= 3000; ++i) {
    const double vt = 1.0 * double(i) / 3000.0;
    const PhaseCell cell = staircase_cell(mu, vt, base, table);
    if (cell.label != CellLabel::solid) continue;
    CHECK(cell.filling.value() <= last);
    if (seen.empty() || seen.back() != cell.filling.value())
      seen.push_back(cell.filling.value());
    last = cell.filling.value();
  }
  // the repulsion pushes the excitation fraction down step by step
  CHECK(seen.size() >= 3);
  CHECK(seen.front() > seen.back());
}

TEST_CASE("zero-interaction column saturates above onset") {
  ModelParams p = calibrated(0.0);
  const StaircaseMap map = staircase_map(-1.05, -0.9, 0.0, 0.05, 64, 4, 6, p);
  for (std::size_t imu = 0; imu < map.mu_values.size(); ++imu) {
    const PhaseCell& cell = map.at(imu, 0);  // Vt = 0 row
    if (map.mu_values[imu] < -1.0) CHECK(cell.label == CellLabel::vacuum);
    else if (map.mu_values[imu] > -1.0) {
      CHECK(cell.label == CellLabel::solid);
      CHECK(cell.filling == Filling{1, 1});
    }
  }
}

TEST_CASE("corrupted window tables are rejected") {
  WindowTable bad;
  bad.entries.push_back({Filling{1, 3}, 0.004, 0.050});
  bad.entries.push_back({Filling{1, 2}, 0.045, 1.989});  // overlaps previous
  CHECK_THROWS_AS(bad.verify_disjoint(), WindowOverlapError);
  WindowTable inverted;
  inverted.entries.push_back({Filling{1, 2}, 0.1, 0.05});  // negative width
  CHECK_THROWS_AS(inverted.verify_disjoint(), WindowOverlapError);
  CHECK_NOTHROW(WindowTable::build(6).verify_disjoint());
  CHECK_THROWS_AS(WindowTable::build(0), std::invalid_argument);
}

TEST_CASE("series honour the range cutoff") {
  SeriesOptions opt;
  opt.range_cutoff = 3.0;
  // only d in {2, 3} contribute to the q = 2 hole series under the cutoff
  const double expect = 3.0 / 64.0 - 2.0 / 729.0;
  CHECK(hole_coefficient(Filling{1, 2}, opt) == Approx(expect).epsilon(1e-14));
}

TEST_CASE("non-convergent series settings are rejected") {
  SeriesOptions bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(hole_coefficient(Filling{1, 2}, bad), std::invalid_argument);
  bad = {};
  bad.max_terms = 0;
  CHECK_THROWS_AS(width_coefficient(2, bad), std::invalid_argument);
  bad = {};
  bad.range_cutoff = 0.0;
  CHECK_THROWS_AS(particle_coefficient(Filling{1, 2}, bad),
                  std::invalid_argument);
}
