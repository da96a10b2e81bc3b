#include "vaxalloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vaxalloc {

namespace {

bool is_probability(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

// Effective-labor gain per vaccine moved from blue-collar to white-collar workers:
// a vaccinated remote worker returns to the office at full productivity.
double white_vaccine_gain(double beta_white, double gamma) {
  return 1.0 - gamma + beta_white * gamma;
}

void check_allocation(const Scenario& scenario, double v_blue) {
  if (!std::isfinite(v_blue) || v_blue < 0.0 || v_blue > scenario.vaccines) {
    throw InvalidInput("blue-collar allocation " + std::to_string(v_blue) +
                       " outside [0, " + std::to_string(scenario.vaccines) + "]");
  }
}

}  // namespace

std::string_view to_string(Clamp clamp) {
  switch (clamp) {
    case Clamp::AllWhite: return "AllWhite";
    case Clamp::Interior: return "Interior";
    case Clamp::AllBlue: return "AllBlue";
    case Clamp::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

Clamp clamp_from_string(std::string_view name) {
  for (Clamp c : {Clamp::AllWhite, Clamp::Interior, Clamp::AllBlue, Clamp::Degenerate}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown clamp tag '" + std::string(name) + "'");
}

void validate(const EconomyProfile& p) {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(p.labor_white) || !positive(p.labor_blue)) {
    throw InvalidInput("labor supplies must be positive and finite");
  }
  if (!positive(p.alpha_white) || !positive(p.alpha_blue)) {
    throw InvalidInput("unit input requirements must be positive and finite");
  }
  if (!std::isfinite(p.gamma) || p.gamma <= 0.0 || p.gamma > 1.0) {
    throw InvalidInput("remote productivity gamma must lie in (0, 1]");
  }
}

void validate(const EconomyProfile& p, const Scenario& s) {
  validate(p);
  if (!is_probability(s.beta_white) || !is_probability(s.beta_blue)) {
    throw InvalidInput("infection risks must lie in [0, 1]");
  }
  if (!std::isfinite(s.vaccines) || s.vaccines < 0.0 || s.vaccines >= p.total_labor()) {
    throw InvalidInput("vaccine stock must lie in [0, L_w + L_b)");
  }
}

EffectiveLabor effective_labor(const EconomyProfile& p, const Scenario& s, double v_blue) {
  check_allocation(s, v_blue);
  const double gain = white_vaccine_gain(s.beta_white, p.gamma);
  return {
      .blue = (1.0 - s.beta_blue) * p.labor_blue + s.beta_blue * v_blue,
      .white = (1.0 - s.beta_white) * p.gamma * p.labor_white + gain * (s.vaccines - v_blue),
  };
}

double objective(const EconomyProfile& p, const Scenario& s, double v_blue) {
  const EffectiveLabor eff = effective_labor(p, s, v_blue);
  return std::abs(p.alpha_blue * eff.blue - p.alpha_white * eff.white);
}

double allocation_slope(const EconomyProfile& p, const Scenario& s) {
  return p.alpha_blue * s.beta_blue +
         p.alpha_white * white_vaccine_gain(s.beta_white, p.gamma);
}

bool is_degenerate(const EconomyProfile& p, const Scenario& s) {
  return allocation_slope(p, s) == 0.0;
}

double interior_optimum(const EconomyProfile& p, const Scenario& s) {
  const double slope = allocation_slope(p, s);
  if (slope == 0.0) {
    throw DegenerateModel("vaccination does not change effective labor (beta_blue = beta_white = 0, gamma = 1)");
  }
  const double gain = white_vaccine_gain(s.beta_white, p.gamma);
  const double numerator =
      p.alpha_white * ((1.0 - s.beta_white) * p.gamma * p.labor_white + gain * s.vaccines) -
      (1.0 - s.beta_blue) * p.alpha_blue * p.labor_blue;
  return numerator / slope;
}

Unemployment unemployment(const EconomyProfile& p, const Scenario& s, double v_blue) {
  const EffectiveLabor eff = effective_labor(p, s, v_blue);
  Unemployment u;
  u.surplus_blue = std::max(0.0, eff.blue - (p.alpha_white / p.alpha_blue) * eff.white);
  u.surplus_white = std::max(0.0, eff.white - (p.alpha_blue / p.alpha_white) * eff.blue);

  // Every healthy blue-collar worker, vaccinated or not, works at unit productivity.
  u.headcount_blue = u.surplus_blue;

  const double v_white = s.vaccines - v_blue;
  const double remote_heads = (1.0 - s.beta_white) * std::max(0.0, p.labor_white - v_white);
  const double remote_capacity = p.gamma * remote_heads;
  if (u.surplus_white <= remote_capacity) {
    u.headcount_white = u.surplus_white / p.gamma;
  } else {
    u.headcount_white = remote_heads + (u.surplus_white - remote_capacity);
  }
  return u;
}

AllocationResult solve(const EconomyProfile& p, const Scenario& s) {
  validate(p, s);

  AllocationResult r;
  if (is_degenerate(p, s)) {
    // Every split is optimal; pick the labor split.
    r.clamp = Clamp::Degenerate;
    r.v_blue_star = s.vaccines * p.labor_blue / p.total_labor();
    r.v_blue_interior = r.v_blue_star;
  } else {
    r.v_blue_interior = interior_optimum(p, s);
    if (r.v_blue_interior <= 0.0) {
      r.clamp = Clamp::AllWhite;
      r.v_blue_star = 0.0;
    } else if (r.v_blue_interior >= s.vaccines) {
      r.clamp = Clamp::AllBlue;
      r.v_blue_star = s.vaccines;
    } else {
      r.clamp = Clamp::Interior;
      r.v_blue_star = r.v_blue_interior;
    }
  }

  const EffectiveLabor eff = effective_labor(p, s, r.v_blue_star);
  r.effective_blue = eff.blue;
  r.effective_white = eff.white;
  const double blue_output = p.alpha_blue * eff.blue;
  const double white_output = p.alpha_white * eff.white;
  r.objective = std::abs(blue_output - white_output);
  r.output = std::min(blue_output, white_output);

  const Unemployment u = unemployment(p, s, r.v_blue_star);
  r.surplus_blue = u.surplus_blue;
  r.surplus_white = u.surplus_white;
  r.headcount_blue = u.headcount_blue;
  r.headcount_white = u.headcount_white;
  return r;
}

Partials partials(const EconomyProfile& p, const Scenario& s) {
  const double v = interior_optimum(p, s);  // throws on degenerate slope
  const double slope = allocation_slope(p, s);
  return {
      .d_beta_blue = p.alpha_blue / slope * (p.labor_blue - v),
      .d_beta_white = p.alpha_white * p.gamma / slope * (s.vaccines - p.labor_white - v),
  };
}

double crossing_point(double beta_white, double gamma) {
  if (!is_probability(beta_white)) throw InvalidInput("beta_white must lie in [0, 1]");
  if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0) {
    throw InvalidInput("gamma must lie in (0, 1]");
  }
  return 1.0 - (1.0 - beta_white) * gamma;
}

}  // namespace vaxalloc
