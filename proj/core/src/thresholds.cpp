#include "tvball/thresholds.hpp"

#include <cmath>

#include "tvball/energy.hpp"
#include "tvball/rootfind.hpp"
#include "tvball/transversal.hpp"

namespace tvball {

namespace {

constexpr double kPi = 3.14159265358979323846;

double perim_S(const TwoBallConfig& cfg) { return 2 * kPi * (cfg.r1 + cfg.r2); }

// Root of closing_cost(r) = rhs on [R_c, inf); the cost is strictly
// decreasing, so a doubling search brackets the root.
double solve_closing_cost(const TwoBallConfig& cfg, double R_c, double rhs) {
  auto f = [&](double r) { return closing_cost(cfg, r, R_c) - rhs; };
  double lo = std::max(R_c, 1e-14);
  if (f(lo) <= 0) return lo;
  double hi = std::max(2 * lo, 1.0);
  while (f(hi) > 0) hi *= 2;
  return bisect(f, lo, hi);
}

}  // namespace

bool interaction_test(const TwoBallConfig& cfg) {
  return perim_S(cfg) > hull_perimeter(cfg);
}

double closing_cost(const TwoBallConfig& cfg, double r, double R_c) {
  Region reg = closing_region(cfg, r, R_c);
  if (std::isinf(r)) return reg.perimeter;
  return reg.perimeter + reg.area_out_S / r;
}

double solve_R1(const TwoBallConfig& cfg) {
  if (!interaction_test(cfg)) throw Error(Errc::NotInteracting, "no root of the R1 equation");
  if (cfg.d == 0) return 0.0;
  return solve_closing_cost(cfg, connectivity_radius(cfg), perim_S(cfg));
}

double solve_R2(const TwoBallConfig& cfg) {
  if (!interaction_test(cfg)) throw Error(Errc::NotInteracting, "no root of the R2 equation");
  double area_S = kPi * (cfg.r1 * cfg.r1 + cfg.r2 * cfg.r2);
  double rho_S1 = cfg.r1 / 2;
  double rho_co = area_S / hull_perimeter(cfg);
  if (!(rho_S1 < rho_co))
    throw Error(Errc::CaseNotApplicable, "R2 requires rho(S1) < rho(co(S))");
  if (cfg.d == 0) return 0.0;
  double rhs = 2 * kPi * cfg.r1 * (area_S / (kPi * cfg.r1 * cfg.r1));  // P(S1)|S|/|S1|
  return solve_closing_cost(cfg, connectivity_radius(cfg), rhs);
}

double dual_norm(const TwoBallConfig& cfg) {
  double area_S = kPi * (cfg.r1 * cfg.r1 + cfg.r2 * cfg.r2);
  return std::max(cfg.r1 / 2, area_S / hull_perimeter(cfg));
}

Thresholds breakpoints(const TwoBallConfig& cfg) {
  Thresholds th;
  th.R_c = connectivity_radius(cfg);
  th.interacting = interaction_test(cfg);
  double P1 = 2 * kPi * cfg.r1, A1 = kPi * cfg.r1 * cfg.r1;
  double P2 = 2 * kPi * cfg.r2, A2 = kPi * cfg.r2 * cfg.r2;
  double area_S = A1 + A2;
  double P_co = hull_perimeter(cfg);
  double rho_co = area_S / P_co;
  th.case_flag = cfg.r1 / 2 < rho_co ? CaseFlag::ratio_lt : CaseFlag::ratio_ge;
  th.dual_norm = std::max(cfg.r1 / 2, rho_co);
  th.lambda3 = th.dual_norm;
  if (!th.interacting) return th;  // the solver short-circuits to the two-ball sum

  double R1 = solve_R1(cfg);
  th.R1 = R1;
  th.lambda1 = R1 * A2 / (R1 * P2 + A2);

  if (th.case_flag == CaseFlag::ratio_lt) {
    double R2 = solve_R2(cfg);
    th.R2 = R2;
    th.lambda2 = R2 * A1 / (R2 * P1 + A1);
  } else {
    double q = A2 / (P_co - P1);
    if (q <= cfg.r2) {
      th.lambda2 = q;
    } else {
      // λ2 solves λ (P(Γ_{0,λ}) - P(S1)) = |Γ_{0,λ} ∩ S2|; Γ_{0,λ} is the
      // hull for λ <= r2 and a transversal set beyond.
      auto g = [&](double lam) {
        Region gam = gamma_region(cfg, EnergyParams{0.0, lam}, th.R_c);
        if (gam.kind == RegionKind::Ball1 || gam.kind == RegionKind::Empty)
          return lam * 1e-30;  // S1 at least as good: already past the fixed point
        double in_S2 = gam.area_in_S - A1;
        return lam * (gam.perimeter - P1) - in_S2;
      };
      double lo = cfg.r2 / 2, hi = cfg.r1 / 2;
      SignScan scan = scan_sign_changes(g, lo, hi, 1000);
      if (scan.changes == 0)
        throw Error(Errc::RootNotBracketed, "lambda2 fixed point not bracketed");
      th.lambda2_multiple_roots = scan.changes > 1;
      th.lambda2 = bisect(g, scan.first_lo, scan.first_hi);
    }
  }
  return th;
}

}  // namespace tvball
