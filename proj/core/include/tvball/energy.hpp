#pragma once

#include <vector>

#include "tvball/geometry.hpp"

namespace tvball {

/// Level and regularization weight of the per-level geometric functional
/// F_{s,λ}(X) = P(X) + (s/λ)|X∖S| − ((1−s)/λ)|X∩S|.
struct EnergyParams {
  double s = 0;       // level in [0, 1]
  double lambda = 1;  // weight, > 0

  /// Radius of boundary arcs inside S: λ/(1−s); kInf at s = 1.
  double r_in() const { return s == 1 ? kInf : lambda / (1 - s); }
  /// Radius of boundary arcs outside S̄: λ/s; kInf at s = 0.
  double r_out() const { return s == 0 ? kInf : lambda / s; }
};

EnergyParams make_params(double s, double lambda);

double region_energy(const Region& reg, const EnergyParams& p);

/// ρ(X) = |X ∩ S| / P(X).
double rho(const Region& reg);

/// Argmin of F_{s,λ} over {∅, S1, S2, S}; ties go to the larger set.
RegionKind compare_base_sets(const TwoBallConfig& cfg, const EnergyParams& p);

/// Minimal-energy region of a candidate list; ties within 1e-9 resolved by
/// larger total area (maximal-solution convention).
struct BestOf {
  const Region* region = nullptr;
  double energy = 0;
};
BestOf best_of(const std::vector<Region>& regions, const EnergyParams& p);

}  // namespace tvball
