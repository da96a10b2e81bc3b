#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vaxalloc {

/// Raised when inputs violate a model precondition (ranges, allocation bounds).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when vaccination has no effect on effective labor, so the
/// interior optimum and its partials are undefined.
class DegenerateModel : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A two-task Leontief economy: output is min(alpha_white * L_w, alpha_blue * L_b).
/// White-collar labor works remotely at productivity `gamma` until vaccinated.
struct EconomyProfile {
  double labor_white = 0.0;
  double labor_blue = 0.0;
  double alpha_white = 1.0;
  double alpha_blue = 1.0;
  double gamma = 1.0;

  double total_labor() const { return labor_white + labor_blue; }
};

/// Infection risks per task and the vaccine stock (in worker heads).
struct Scenario {
  double beta_white = 0.0;
  double beta_blue = 0.0;
  double vaccines = 0.0;
};

enum class Clamp { AllWhite, Interior, AllBlue, Degenerate };

std::string_view to_string(Clamp clamp);
Clamp clamp_from_string(std::string_view name);

struct EffectiveLabor {
  double blue = 0.0;
  double white = 0.0;
};

/// Surplus is in effective-labor units. Headcounts lay off blue-collar workers
/// one-for-one; white-collar layoffs take unvaccinated remote workers
/// (productivity gamma) first, then vaccinated office workers.
struct Unemployment {
  double surplus_blue = 0.0;
  double surplus_white = 0.0;
  double headcount_blue = 0.0;
  double headcount_white = 0.0;
};

struct AllocationResult {
  double v_blue_star = 0.0;
  double v_blue_interior = 0.0;
  Clamp clamp = Clamp::Interior;
  double effective_blue = 0.0;
  double effective_white = 0.0;
  double objective = 0.0;
  double output = 0.0;
  double surplus_blue = 0.0;
  double surplus_white = 0.0;
  double headcount_blue = 0.0;
  double headcount_white = 0.0;

  /// Share of the vaccine stock given to blue-collar workers.
  double blue_share(double vaccines) const {
    return vaccines > 0.0 ? v_blue_star / vaccines : 0.0;
  }
};

struct Partials {
  double d_beta_blue = 0.0;
  double d_beta_white = 0.0;
};

void validate(const EconomyProfile& profile);
void validate(const EconomyProfile& profile, const Scenario& scenario);

EffectiveLabor effective_labor(const EconomyProfile& profile, const Scenario& scenario,
                               double v_blue);

/// |alpha_blue * L̄_b - alpha_white * L̄_w|: the complementarity gap the planner minimizes.
double objective(const EconomyProfile& profile, const Scenario& scenario, double v_blue);

/// Slope of alpha_blue * L̄_b - alpha_white * L̄_w in v_blue. Zero only when
/// beta_blue = 0, beta_white = 0 and gamma = 1.
double allocation_slope(const EconomyProfile& profile, const Scenario& scenario);

bool is_degenerate(const EconomyProfile& profile, const Scenario& scenario);

/// Unclamped blue-collar vaccine count that closes the complementarity gap.
/// Throws DegenerateModel when allocation_slope is zero.
double interior_optimum(const EconomyProfile& profile, const Scenario& scenario);

AllocationResult solve(const EconomyProfile& profile, const Scenario& scenario);

Unemployment unemployment(const EconomyProfile& profile, const Scenario& scenario,
                          double v_blue);

Partials partials(const EconomyProfile& profile, const Scenario& scenario);

/// Blue-collar risk at which both tasks shrink proportionally; there the
/// optimal split equals the labor split for every vaccine stock.
double crossing_point(double beta_white, double gamma);

}  // namespace vaxalloc
