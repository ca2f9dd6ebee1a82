#pragma once

#include <optional>
#include <utility>

#include "tvball/energy.hpp"
#include "tvball/geometry.hpp"
#include "tvball/raster.hpp"

namespace tvball {

/// Points on the two center loci at parameter t, in canonical coordinates.
/// gamma_l(t): centers of outer circles tangent to the boundary of S1.
/// gamma_r(t): centers of outer circles joining the inner arc smoothly at
/// its crossing of the boundary of S2.
std::pair<Vec2, Vec2> tangent_curves(const TwoBallConfig& cfg, double r_in, double r_out,
                                     double t);

/// Smooth transversal geometry at (s, λ), when the two loci intersect.
/// Unique for r_in <= r2; for r_in > r2 up to two solutions exist and the
/// decreasing-type (outer) one is returned.
std::optional<TransversalGeom> solve_transversal(const TwoBallConfig& cfg,
                                                 const EnergyParams& p);

/// Region built from a transversal geometry, with exact measures.
Region transversal_region(const TwoBallConfig& cfg, const TransversalGeom& g);

/// Γ_{s,λ}(S): the closing for r_in <= r2, empty for r_in > r1, and the
/// decreasing transversal (or S1 when none exists) in between.
Region gamma_region(const TwoBallConfig& cfg, const EnergyParams& p);
Region gamma_region(const TwoBallConfig& cfg, const EnergyParams& p, double R_c);

/// Fixed point of the alternating opening/closing construction on a raster.
struct GammaIterate {
  Bitmap bitmap;
  bool converged = false;
  int iterations = 0;
};
GammaIterate gamma_iterative(const TwoBallConfig& cfg, const EnergyParams& p, double h,
                             int max_iter);

/// Intersection area of two disks.
double lens_area(Vec2 c1, double r1, Vec2 c2, double r2);

}  // namespace tvball
