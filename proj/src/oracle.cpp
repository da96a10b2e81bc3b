#include "vaxalloc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vaxalloc {

double oracle_objective(const EconomyProfile& p, const Scenario& s, double v_blue) {
  const double v_white = s.vaccines - v_blue;
  const double blue_at_work = v_blue + (1.0 - s.beta_blue) * (p.labor_blue - v_blue);
  const double white_at_work =
      v_white + p.gamma * (1.0 - s.beta_white) * (p.labor_white - v_white);
  return std::abs(p.alpha_blue * blue_at_work - p.alpha_white * white_at_work);
}

OracleResult brute_force_optimum(const EconomyProfile& p, const Scenario& s,
                                 const OracleConfig& config) {
  validate(p, s);
  if (config.grid_points < 3) throw InvalidInput("oracle grid needs at least 3 points");

  const double V = s.vaccines;
  const std::size_t last = config.grid_points - 1;
  const double step = V / static_cast<double>(last);
  auto grid_at = [&](std::size_t i) { return i == last ? V : V * static_cast<double>(i) / static_cast<double>(last); };

  OracleResult best{.v_blue = 0.0, .objective = oracle_objective(p, s, 0.0), .grid_step = step, .resolution = step};
  if (V == 0.0) return best;

  std::size_t best_index = 0;
  for (std::size_t i = 1; i <= last; ++i) {
    const double v = grid_at(i);
    const double f = oracle_objective(p, s, v);
    if (f < best.objective) {
      best.objective = f;
      best.v_blue = v;
      best_index = i;
    }
  }
  if (!config.refine) return best;

  double lo = grid_at(best_index == 0 ? 0 : best_index - 1);
  double hi = grid_at(std::min(best_index + 1, last));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = oracle_objective(p, s, a);
  double fb = oracle_objective(p, s, b);
  for (int iter = 0; iter < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * V; ++iter) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = oracle_objective(p, s, a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = oracle_objective(p, s, b);
    }
  }
  const double v_refined = fa <= fb ? a : b;
  const double f_refined = std::min(fa, fb);
  if (f_refined < best.objective) {
    best.v_blue = v_refined;
    best.objective = f_refined;
  }
  best.resolution = hi - lo;
  return best;
}

}  // namespace vaxalloc
