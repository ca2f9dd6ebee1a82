#include "tvball/energy.hpp"

#include <cmath>

namespace tvball {

namespace {
constexpr double kEnergyTie = 1e-9;
}

EnergyParams make_params(double s, double lambda) {
  if (!(s >= 0 && s <= 1)) throw Error(Errc::InvalidLevel, "level outside [0,1]");
  if (!(lambda > 0)) throw Error(Errc::DomainError, "lambda must be positive");
  return {s, lambda};
}

double region_energy(const Region& reg, const EnergyParams& p) {
  if (reg.kind == RegionKind::Empty) return 0.0;
  return reg.perimeter + (p.s / p.lambda) * reg.area_out_S -
         ((1 - p.s) / p.lambda) * reg.area_in_S;
}

double rho(const Region& reg) {
  if (reg.perimeter <= 0) throw Error(Errc::EmptyRegion, "rho undefined on empty region");
  return reg.area_in_S / reg.perimeter;
}

RegionKind compare_base_sets(const TwoBallConfig& cfg, const EnergyParams& p) {
  // F(S_i) <= 0 iff (1-s)/λ >= P(S_i)/|S_i| = 2/r_i; ties favor the larger set.
  double k = (1 - p.s) / p.lambda;
  if (k >= 2 / cfg.r2) return RegionKind::UnionBalls;
  if (k >= 2 / cfg.r1) return RegionKind::Ball1;
  return RegionKind::Empty;
}

BestOf best_of(const std::vector<Region>& regions, const EnergyParams& p) {
  if (regions.empty()) throw Error(Errc::EmptyCandidateList, "best_of needs candidates");
  double min_e = kInf;
  for (const auto& reg : regions) min_e = std::min(min_e, region_energy(reg, p));
  BestOf best;
  for (const auto& reg : regions) {
    double e = region_energy(reg, p);
    if (e > min_e + kEnergyTie) continue;
    if (!best.region || reg.area() > best.region->area()) {
      best.region = &reg;
      best.energy = e;
    }
  }
  return best;
}

}  // namespace tvball
