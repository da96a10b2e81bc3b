#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "vaxalloc/calibration.hpp"
#include "vaxalloc/oracle.hpp"
#include "vaxalloc/sweep.hpp"

using namespace vaxalloc;
using doctest::Approx;

namespace {

EconomyProfile profile_with_share(double share) { return calibrate({"XX", 1e6, share}, 0.8); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("grid spec") {
  const auto values = GridSpec{}.values();
  REQUIRE(values.size() == 19);
  CHECK(values.front() == 0.05);
  CHECK(values[2] == 0.15);
  CHECK(values.back() == 0.95);

  CHECK(GridSpec{0.0, 1.0, 0.25}.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(validate(GridSpec{0.5, 0.5, 0.1}), InvalidInput);
  CHECK_THROWS_AS(validate(GridSpec{0.1, 0.9, 0.0}), InvalidInput);
  CHECK_THROWS_AS(validate(GridSpec{0.1, 0.2, 0.5}), InvalidInput);
  CHECK_THROWS_AS(validate(GridSpec{-0.1, 0.9, 0.1}), InvalidInput);
}

TEST_CASE("frontier curve") {
  const auto p = profile_with_share(0.6);
  const GridSpec fine{0.0, 1.0, 0.01};

  SUBCASE("curves for every V/L pass through the crossing point at the labor split") {
    for (double vol : {0.2, 0.4, 0.6}) {
      const auto curve = frontier_curve(p, 0.05, vol, fine);
      REQUIRE(curve.size() == 101);
      const auto& at_cross = curve[24];
      CHECK(at_cross.beta_blue == 0.24);
      CHECK(at_cross.v_ratio == Approx(0.4).epsilon(1e-9));
    }
  }
  SUBCASE("nondecreasing in beta_b, ratios in [0, 1]") {
    for (double bw : {0.05, 0.25}) {
      for (double vol : {0.2, 0.4, 0.6}) {
        double prev = 0.0;
        for (const auto& pt : frontier_curve(p, bw, vol, fine)) {
          CHECK(pt.v_ratio >= prev);
          CHECK(pt.v_ratio <= 1.0);
          prev = pt.v_ratio;
        }
      }
    }
  }
  SUBCASE("scarce vaccines saturate at all-blue for high blue-collar risk") {
    const auto curve = frontier_curve(p, 0.05, 0.2, GridSpec{});
    CHECK(curve.back().v_ratio == 1.0);
    CHECK(curve.back().clamp == Clamp::AllBlue);
  }
  SUBCASE("V/L out of range") {
    CHECK_THROWS_AS(frontier_curve(p, 0.05, 0.0, GridSpec{}), InvalidInput);
    CHECK_THROWS_AS(frontier_curve(p, 0.05, 1.0, GridSpec{}), InvalidInput);
  }
}

TEST_CASE("sweep matrix") {
  const auto p = profile_with_share(0.42);
  const auto sweep = sweep_matrix(p, 0.4, GridSpec{});
  REQUIRE(sweep.axis_size() == 19);
  REQUIRE(sweep.cells().size() == 361);
  CHECK(sweep.vaccines() == Approx(0.4e6));

  SUBCASE("each cell uses exactly its lattice risks") {
    for (std::size_t i = 0; i < sweep.axis_size(); ++i) {
      for (std::size_t j = 0; j < sweep.axis_size(); ++j) {
        const auto& cell = sweep.at(i, j);
        CHECK(cell.beta_white == sweep.betas()[i]);
        CHECK(cell.beta_blue == sweep.betas()[j]);
        const auto direct = solve(p, {cell.beta_white, cell.beta_blue, sweep.vaccines()});
        CHECK(same_bits(direct.v_blue_star, cell.result.v_blue_star));
      }
    }
  }
  SUBCASE("sampled cells agree with the oracle") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> pick(0, sweep.cells().size() - 1);
    const double scale = p.alpha_white * p.labor_white + p.alpha_blue * p.labor_blue;
    for (int k = 0; k < 19; ++k) {  // ~5% of 361
      const auto& cell = sweep.cells()[pick(rng)];
      const auto o = brute_force_optimum(p, {cell.beta_white, cell.beta_blue, sweep.vaccines()});
      CHECK(cell.result.objective <= o.objective + 1e-9 * scale);
      CHECK(std::abs(cell.result.v_blue_star - o.v_blue) <= o.grid_step);
    }
  }
  SUBCASE("serial and parallel evaluation are bitwise identical") {
    const auto serial = sweep_matrix(p, 0.4, GridSpec{}, Execution::Serial);
    for (std::size_t k = 0; k < serial.cells().size(); ++k) {
      CHECK(same_bits(serial.cells()[k].result.v_blue_star, sweep.cells()[k].result.v_blue_star));
      CHECK(same_bits(serial.cells()[k].result.objective, sweep.cells()[k].result.objective));
    }
  }
}

TEST_CASE("high-telework economies favour white-collars in more scenarios") {
  auto low_ratio_cells = [](double share) {
    const auto sweep = sweep_matrix(profile_with_share(share), 0.6, GridSpec{});
    int count = 0;
    for (const auto& cell : sweep.cells()) {
      if (cell.beta_blue > cell.beta_white && sweep.v_ratio(cell) <= 0.66) ++count;
    }
    return count;
  };
  CHECK(low_ratio_cells(0.55) > low_ratio_cells(0.30));
}

TEST_CASE("threshold share") {
  SUBCASE("all-blue sweep") {
    const std::vector<double> betas{0.1, 0.5, 0.9};
    std::vector<SweepCell> cells;
    for (double bw : betas) {
      for (double bb : betas) {
        AllocationResult r;
        r.clamp = Clamp::AllBlue;
        r.v_blue_star = 10.0;
        cells.push_back({bw, bb, r});
      }
    }
    const SweepGrid sweep(GridSpec{0.1, 0.9, 0.4}, 0.1, 10.0, betas, cells);
    for (double t : {0.01, 0.5, 0.99}) {
      const auto s = threshold_share(sweep, t);
      CHECK(s.share_exceeding == 1.0);
      CHECK(s.cells_considered == 3);
    }
  }
  SUBCASE("counts only cells strictly above the diagonal") {
    const auto sweep = sweep_matrix(profile_with_share(0.4), 0.2, GridSpec{});
    const auto s = threshold_share(sweep, 0.66);
    CHECK(s.cells_considered == 19 * 18 / 2);
    CHECK(s.share_exceeding >= 0.0);
    CHECK(s.share_exceeding <= 1.0);
  }
  SUBCASE("nonincreasing in the threshold") {
    for (double share : {0.3, 0.42, 0.55}) {
      for (double vol : {0.2, 0.4, 0.6}) {
        const auto sweep = sweep_matrix(profile_with_share(share), vol, GridSpec{});
        double prev = 1.0;
        for (int k = 1; k < 100; ++k) {
          const double s = threshold_share(sweep, k / 100.0).share_exceeding;
          CHECK(s <= prev);
          prev = s;
        }
      }
    }
  }
  SUBCASE("errors") {
    const auto sweep = sweep_matrix(profile_with_share(0.4), 0.2, GridSpec{});
    CHECK_THROWS_AS(threshold_share(sweep, 0.0), InvalidInput);
    CHECK_THROWS_AS(threshold_share(sweep, 1.0), InvalidInput);

    AllocationResult r;
    const SweepGrid single(GridSpec{}, 0.2, 1.0, {0.5}, {SweepCell{0.5, 0.5, r}});
    CHECK_THROWS_AS(threshold_share(single, 0.5), InvalidInput);
    CHECK_THROWS_AS(SweepGrid(GridSpec{}, 0.2, 1.0, {0.1, 0.2}, {SweepCell{}}), InvalidInput);
  }
}
