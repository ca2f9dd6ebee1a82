#pragma once

#include <optional>

#include "tvball/geometry.hpp"

namespace tvball {

enum class CaseFlag { ratio_lt, ratio_ge };

/// Critical radii and λ-breakpoints separating the solution regimes.
/// λ1, λ2 (and R1, R2) are absent for non-interacting configurations.
struct Thresholds {
  double R_c = 0;
  std::optional<double> R1;
  std::optional<double> R2;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  double lambda3 = 0;
  double dual_norm = 0;
  bool interacting = false;
  CaseFlag case_flag = CaseFlag::ratio_lt;
  bool lambda2_multiple_roots = false;  // fixed-point scan saw several sign changes
};

/// True iff the balls interact: P(S) > P(co(S)).
bool interaction_test(const TwoBallConfig& cfg);

/// P(Close_r(S)) + |Close_r(S) ∖ S| / r, continuous and strictly decreasing
/// on [R_c, ∞).
double closing_cost(const TwoBallConfig& cfg, double r, double R_c);

/// Root of closing_cost(r) = P(S); zero when d = 0.
double solve_R1(const TwoBallConfig& cfg);

/// Root of closing_cost(r) = P(S1)|S|/|S1|; only defined when
/// ρ(S1) < ρ(co(S)).
double solve_R2(const TwoBallConfig& cfg);

Thresholds breakpoints(const TwoBallConfig& cfg);

/// ‖χ_S‖* = max{ |S1|/P(S1), |S|/P(co(S)) }; the ROF solution vanishes
/// exactly for λ at or above this value.
double dual_norm(const TwoBallConfig& cfg);

}  // namespace tvball
