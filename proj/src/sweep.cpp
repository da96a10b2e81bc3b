#include "vaxalloc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace vaxalloc {

namespace {

double snap(double x) { return std::round(x * 1e12) / 1e12; }

}  // namespace

std::vector<double> GridSpec::values() const {
  validate(*this);
  const auto count = static_cast<std::size_t>(std::floor((beta_max - beta_min) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(snap(beta_min + static_cast<double>(i) * step));
  }
  return out;
}

void validate(const GridSpec& g) {
  auto probability = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!probability(g.beta_min) || !probability(g.beta_max)) {
    throw InvalidInput("grid bounds must lie in [0, 1]");
  }
  if (!(g.beta_min < g.beta_max)) throw InvalidInput("grid needs beta_min < beta_max");
  if (!std::isfinite(g.step) || g.step <= 0.0) throw InvalidInput("grid step must be positive");
  if (g.step > g.beta_max - g.beta_min + 1e-12) {
    throw InvalidInput("grid needs at least two points per axis");
  }
}

SweepGrid::SweepGrid(GridSpec spec, double v_over_l, double vaccines, std::vector<double> betas,
                     std::vector<SweepCell> cells)
    : spec_(spec),
      v_over_l_(v_over_l),
      vaccines_(vaccines),
      betas_(std::move(betas)),
      cells_(std::move(cells)) {
  if (cells_.size() != betas_.size() * betas_.size()) {
    throw InvalidInput("sweep needs exactly one cell per lattice point");
  }
}

double vaccines_for(const EconomyProfile& profile, double v_over_l) {
  if (!std::isfinite(v_over_l) || v_over_l <= 0.0 || v_over_l >= 1.0) {
    throw InvalidInput("V/L must lie in (0, 1)");
  }
  return v_over_l * profile.total_labor();
}

std::vector<FrontierPoint> frontier_curve(const EconomyProfile& profile, double beta_white,
                                          double v_over_l, const GridSpec& grid) {
  validate(profile);
  const double vaccines = vaccines_for(profile, v_over_l);
  std::vector<FrontierPoint> curve;
  for (double beta_blue : grid.values()) {
    const AllocationResult r = solve(profile, {beta_white, beta_blue, vaccines});
    curve.push_back({beta_blue, r.blue_share(vaccines), r.clamp});
  }
  return curve;
}

SweepGrid sweep_matrix(const EconomyProfile& profile, double v_over_l, const GridSpec& grid,
                       Execution mode) {
  validate(profile);
  const double vaccines = vaccines_for(profile, v_over_l);
  std::vector<double> betas = grid.values();
  const std::size_t n = betas.size();
  std::vector<SweepCell> cells(n * n);

  auto fill_row = [&](std::size_t row) {
    for (std::size_t col = 0; col < n; ++col) {
      SweepCell& cell = cells[row * n + col];
      cell.beta_white = betas[row];
      cell.beta_blue = betas[col];
      cell.result = solve(profile, {cell.beta_white, cell.beta_blue, vaccines});
    }
  };

  if (mode == Execution::Serial) {
    for (std::size_t row = 0; row < n; ++row) fill_row(row);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t row = next++; row < n; row = next++) fill_row(row);
      });
    }
  }
  return SweepGrid(grid, v_over_l, vaccines, std::move(betas), std::move(cells));
}

ThresholdSummary threshold_share(const SweepGrid& sweep, double threshold) {
  if (!std::isfinite(threshold) || threshold <= 0.0 || threshold >= 1.0) {
    throw InvalidInput("threshold must lie in (0, 1)");
  }
  ThresholdSummary summary;
  summary.threshold = threshold;
  for (const SweepCell& cell : sweep.cells()) {
    if (!(cell.beta_blue > cell.beta_white)) continue;
    ++summary.cells_considered;
    if (sweep.v_ratio(cell) > threshold) ++summary.cells_exceeding;
  }
  if (summary.cells_considered == 0) {
    throw InvalidInput("grid has no cells above the diagonal");
  }
  summary.share_exceeding =
      static_cast<double>(summary.cells_exceeding) / static_cast<double>(summary.cells_considered);
  return summary;
}

}  // namespace vaxalloc
