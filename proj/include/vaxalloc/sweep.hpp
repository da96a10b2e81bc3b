#pragma once

#include <cstddef>
#include <vector>

#include "vaxalloc/model.hpp"

namespace vaxalloc {

/// Lattice of infection risks shared by both axes.
struct GridSpec {
  double beta_min = 0.05;
  double beta_max = 0.95;
  double step = 0.05;

  /// Lattice values beta_min + i * step up to beta_max, snapped to 12 decimals
  /// so that nominal values such as 0.15 are the nearest doubles.
  std::vector<double> values() const;
};

void validate(const GridSpec& grid);

enum class Execution { Serial, Parallel };

struct FrontierPoint {
  double beta_blue = 0.0;
  double v_ratio = 0.0;
  Clamp clamp = Clamp::Interior;
};

struct SweepCell {
  double beta_white = 0.0;
  double beta_blue = 0.0;
  AllocationResult result;
};

/// Allocation results over the (beta_white, beta_blue) lattice at fixed V/L.
/// Cells are stored row-major: beta_white selects the row.
class SweepGrid {
 public:
  SweepGrid(GridSpec spec, double v_over_l, double vaccines, std::vector<double> betas,
            std::vector<SweepCell> cells);

  const GridSpec& spec() const { return spec_; }
  double v_over_l() const { return v_over_l_; }
  double vaccines() const { return vaccines_; }
  const std::vector<double>& betas() const { return betas_; }
  std::size_t axis_size() const { return betas_.size(); }

  const SweepCell& at(std::size_t white_index, std::size_t blue_index) const {
    return cells_[white_index * betas_.size() + blue_index];
  }
  const std::vector<SweepCell>& cells() const { return cells_; }

  double v_ratio(const SweepCell& cell) const { return cell.result.blue_share(vaccines_); }

 private:
  GridSpec spec_;
  double v_over_l_;
  double vaccines_;
  std::vector<double> betas_;
  std::vector<SweepCell> cells_;
};

struct ThresholdSummary {
  double threshold = 0.0;
  double share_exceeding = 0.0;
  std::size_t cells_considered = 0;
  std::size_t cells_exceeding = 0;
};

/// Vaccine stock for a fraction of the workforce; v_over_l must lie in (0, 1).
double vaccines_for(const EconomyProfile& profile, double v_over_l);

/// Blue-collar share of vaccines as a function of beta_blue at fixed beta_white.
std::vector<FrontierPoint> frontier_curve(const EconomyProfile& profile, double beta_white,
                                          double v_over_l, const GridSpec& grid);

/// Solves every lattice cell. Cells are independent; results do not depend on
/// the execution mode or thread scheduling.
SweepGrid sweep_matrix(const EconomyProfile& profile, double v_over_l, const GridSpec& grid,
                       Execution mode = Execution::Parallel);

/// Fraction of cells strictly above the diagonal (beta_blue > beta_white)
/// whose blue-collar vaccine share strictly exceeds `threshold`.
ThresholdSummary threshold_share(const SweepGrid& sweep, double threshold);

}  // namespace vaxalloc
