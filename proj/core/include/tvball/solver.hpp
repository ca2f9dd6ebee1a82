#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "tvball/energy.hpp"
#include "tvball/field.hpp"
#include "tvball/geometry.hpp"
#include "tvball/raster.hpp"
#include "tvball/thresholds.hpp"

namespace tvball {

/// λ-intervals of the explicit solution. C1/C2 distinguish the two ratio
/// cases on (λ2, λ3]; NonInteracting bypasses the interval structure.
enum class Regime { A, B, C1, C2, D, NonInteracting };

const char* regime_name(Regime r);

Regime classify_regime(const Thresholds& th, double lambda);

struct BreakpointsUsed {
  std::optional<double> s_a, s_b, s_c;
};

/// The minimizer selected at one (s, λ) with its energy.
struct LevelDecision {
  double s = 0;
  double lambda = 0;
  Regime regime = Regime::D;
  Region region;
  double energy = 0;
  BreakpointsUsed breakpoints_used;
};

/// s_a(λ) = λ/R1 on regime A; the closing and S exchange optimality here.
double s_a(const TwoBallConfig& cfg, const Thresholds& th, double lambda);

/// Smallest s where the Γ-set and S1 have equal energy; regime B.
double s_b(const TwoBallConfig& cfg, const Thresholds& th, double lambda);

/// Maximal s with F_{s,λ}(Close_{λ/s}(S)) = 0; regime C1 only. A nonzero
/// plateau_width reports a flat zero-energy stretch above the root.
double s_c(const TwoBallConfig& cfg, const Thresholds& th, double lambda,
           double* plateau_width = nullptr);

LevelDecision minimizer(const TwoBallConfig& cfg, const Thresholds& th,
                        const EnergyParams& p);

/// Per-λ view of the solution: regime and breakpoints are computed once so
/// membership queries along s stay cheap (bisection for u, rasterization).
class LambdaSlice {
 public:
  LambdaSlice(const TwoBallConfig& cfg, const Thresholds& th, double lambda);

  Regime regime() const { return regime_; }
  const BreakpointsUsed& breakpoints() const { return bp_; }
  Region region(double s) const;
  bool member(double s, Vec2 x) const;
  double lambda() const { return lambda_; }

 private:
  enum class Piece { ClosingAt, Gamma, Union, Ball1Only, Nothing };
  Piece piece(double s) const;
  const Region& gamma_cached(double s) const;

  TwoBallConfig cfg_;
  Thresholds th_;
  double lambda_;
  Regime regime_;
  BreakpointsUsed bp_;
  double s_ball1_, s_ball2_;
  mutable std::map<double, Region> gamma_cache_;
  mutable std::mutex mu_;
};

/// Full candidate list at (s, λ): ∅, S1, S2, S, the closing, Γ, and the
/// decreasing transversal when one exists.
std::vector<Region> candidate_regions(const TwoBallConfig& cfg, const Thresholds& th,
                                      const EnergyParams& p);

/// u_λ(x) = sup{ s : x ∈ C_{s,λ} } by monotone bisection on s.
double evaluate_u(const TwoBallConfig& cfg, const Thresholds& th, double lambda, Vec2 x);

/// Lemma-formula solution for non-interacting configurations.
double noninteracting_u(const TwoBallConfig& cfg, double lambda, Vec2 x);

Field rasterize_u(const TwoBallConfig& cfg, const Thresholds& th, double lambda, Box box,
                  double h);

/// χ_S sampled on the grid (the ROF datum).
Field rasterize_indicator(const TwoBallConfig& cfg, Box box, double h);

}  // namespace tvball
