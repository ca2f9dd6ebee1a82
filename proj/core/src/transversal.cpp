#include "tvball/transversal.hpp"

#include <algorithm>
#include <cmath>

#include "tvball/rootfind.hpp"

namespace tvball {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

double angle_diff(double to, double from) {
  double d = std::fmod(to - from, 2 * kPi);
  if (d <= -kPi) d += 2 * kPi;
  if (d > kPi) d -= 2 * kPi;
  return d;
}

// Center abscissa of the inner circle in the S2-centered frame (negative,
// left of the center of S2).
double inner_center_offset(const TwoBallConfig& cfg, double r_in, double alpha) {
  double sin_delta = (r_in / cfg.r2) * std::sin(alpha);
  if (sin_delta > 1)
    throw Error(Errc::DomainError, "inner arc does not meet the boundary of S2");
  return -(r_in * std::cos(alpha) + cfg.r2 * std::cos(std::asin(sin_delta)));
}

// Tangency residual at half-span alpha: zero when the outer circle through
// the crossing point is tangent to the boundary of S1. Written with 1/r_out
// so the straight-segment limit at s = 0 needs no special case.
double tangency_residual(const TwoBallConfig& cfg, double r_in, double inv_rout,
                         double alpha) {
  Vec2 inner_center = {cfg.D + inner_center_offset(cfg, r_in, alpha), 0};
  Vec2 u = {std::cos(alpha), std::sin(alpha)};
  Vec2 crossing = inner_center + r_in * u;  // c1 is the origin
  return dot(crossing, u) - cfg.r1 + 0.5 * inv_rout * (dot(crossing, crossing) - cfg.r1 * cfg.r1);
}

}  // namespace

std::pair<Vec2, Vec2> tangent_curves(const TwoBallConfig& cfg, double r_in, double r_out,
                                     double t) {
  if (!(t > 0 && t < kPi / 2)) throw Error(Errc::DomainError, "parameter outside (0, pi/2)");
  if (!(r_in > 0) || !(r_out > 0)) throw Error(Errc::NonPositiveRadius, "arc radii");
  Vec2 gl = {(cfg.r1 + r_out) * std::cos(t), (cfg.r1 + r_out) * std::sin(t)};
  double c = inner_center_offset(cfg, r_in, t);
  Vec2 gr = {cfg.D + c + (r_in + r_out) * std::cos(t), (r_in + r_out) * std::sin(t)};
  return {gl, gr};
}

std::optional<TransversalGeom> solve_transversal(const TwoBallConfig& cfg,
                                                 const EnergyParams& p) {
  double r_in = p.r_in();
  if (std::isinf(r_in)) return std::nullopt;  // s = 1: no boundary inside S
  double inv_rout = p.s / p.lambda;

  double alpha_max = r_in <= cfg.r2 ? kPi / 2 : std::asin(cfg.r2 / r_in);
  double lo = 1e-9, hi = alpha_max * (1 - 1e-12);
  if (hi <= lo) return std::nullopt;
  auto g = [&](double a) { return tangency_residual(cfg, r_in, inv_rout, a); };
  SignScan scan = scan_sign_changes(g, lo, hi, 4096);
  if (scan.changes == 0) return std::nullopt;

  TransversalGeom geom;
  geom.r_in = r_in;
  geom.r_out = p.r_out();
  // The larger root bites deeper into S2: the decreasing-type set.
  geom.alpha = bisect(g, scan.last_lo, scan.last_hi);
  geom.type_tag = r_in <= cfg.r2 ? TransversalGeom::Type::unique
                                 : TransversalGeom::Type::decreasing;
  geom.inner_center = {cfg.D + inner_center_offset(cfg, r_in, geom.alpha), 0};
  Vec2 u = {std::cos(geom.alpha), std::sin(geom.alpha)};
  if (std::isinf(geom.r_out)) {
    geom.outer_center = geom.inner_center + r_in * u;  // crossing point stands in
    geom.theta = geom.alpha;                           // line normal is u
  } else {
    geom.outer_center = geom.inner_center + (r_in + geom.r_out) * u;
    geom.theta = std::atan2(geom.outer_center.y, geom.outer_center.x);
  }
  return geom;
}

double lens_area(Vec2 c1, double r1, Vec2 c2, double r2) {
  double d = norm(c2 - c1);
  if (d >= r1 + r2) return 0.0;
  if (d <= std::abs(r1 - r2)) {
    double r = std::min(r1, r2);
    return kPi * r * r;
  }
  double h1 = std::acos(clamp_unit((d * d + r1 * r1 - r2 * r2) / (2 * d * r1)));
  double h2 = std::acos(clamp_unit((d * d + r2 * r2 - r1 * r1) / (2 * d * r2)));
  return r1 * r1 * (h1 - std::sin(h1) * std::cos(h1)) +
         r2 * r2 * (h2 - std::sin(h2) * std::cos(h2));
}

Region transversal_region(const TwoBallConfig& cfg, const TransversalGeom& g) {
  Region reg;
  reg.kind = RegionKind::Transversal;
  reg.cfg = cfg;
  reg.trans = g;

  Vec2 u = {std::cos(g.alpha), std::sin(g.alpha)};
  Vec2 crossing = g.inner_center + g.r_in * u;  // upper joint on the boundary of S2
  Vec2 crossing_dn = {crossing.x, -crossing.y};
  ArcLoop loop;
  double outer_len = 0;
  if (std::isinf(g.r_out)) {
    Vec2 q_up = cfg.r1 * u;  // tangency of the straight outer piece
    Vec2 q_dn = {q_up.x, -q_up.y};
    loop.push_back(ArcSeg::arc(cfg.center1(), cfg.r1, g.alpha, 2 * kPi - 2 * g.alpha));
    loop.push_back(ArcSeg::segment(q_dn, crossing_dn));
    loop.push_back(ArcSeg::arc(g.inner_center, g.r_in, -g.alpha, 2 * g.alpha));
    loop.push_back(ArcSeg::segment(crossing, q_up));
    outer_len = norm(crossing - q_up);
  } else {
    Vec2 o_up = g.outer_center;
    Vec2 o_dn = {o_up.x, -o_up.y};
    Vec2 q_up = cfg.r1 * unit(o_up);
    double phi_out = std::acos(clamp_unit(dot(unit(Vec2{0, 0} - o_up), unit(g.inner_center - o_up))));
    loop.push_back(ArcSeg::arc(cfg.center1(), cfg.r1, g.theta, 2 * kPi - 2 * g.theta));
    {
      Vec2 q_dn = {q_up.x, -q_up.y};
      double a0 = std::atan2(q_dn.y - o_dn.y, q_dn.x - o_dn.x);
      double a1 = std::atan2(crossing_dn.y - o_dn.y, crossing_dn.x - o_dn.x);
      loop.push_back(ArcSeg::arc(o_dn, g.r_out, a0, angle_diff(a1, a0)));
    }
    loop.push_back(ArcSeg::arc(g.inner_center, g.r_in, -g.alpha, 2 * g.alpha));
    {
      double a0 = std::atan2(crossing.y - o_up.y, crossing.x - o_up.x);
      double a1 = std::atan2(q_up.y - o_up.y, q_up.x - o_up.x);
      loop.push_back(ArcSeg::arc(o_up, g.r_out, a0, angle_diff(a1, a0)));
    }
    outer_len = g.r_out * phi_out;
  }
  reg.boundary = {loop};

  double theta1 = std::isinf(g.r_out) ? g.alpha : g.theta;
  reg.perimeter = (2 * kPi - 2 * theta1) * cfg.r1 + 2 * outer_len + 2 * g.r_in * g.alpha;
  double total = loop_area(loop);
  reg.area_in_S = kPi * cfg.r1 * cfg.r1 +
                  lens_area(g.inner_center, g.r_in, cfg.center2(), cfg.r2);
  reg.area_out_S = total - reg.area_in_S;
  return reg;
}

Region gamma_region(const TwoBallConfig& cfg, const EnergyParams& p) {
  return gamma_region(cfg, p, connectivity_radius(cfg));
}

Region gamma_region(const TwoBallConfig& cfg, const EnergyParams& p, double R_c) {
  double r_in = p.r_in();
  if (r_in <= cfg.r2) return closing_region(cfg, p.r_out(), R_c);
  if (r_in > cfg.r1) return make_empty_region(cfg);
  auto geom = solve_transversal(cfg, p);
  if (!geom) return make_ball_region(cfg, 1);  // the S2 part erodes away
  return transversal_region(cfg, *geom);
}

GammaIterate gamma_iterative(const TwoBallConfig& cfg, const EnergyParams& p, double h,
                             int max_iter) {
  if (!(p.s > 0 && p.s < 1))
    throw Error(Errc::InvalidLevel, "raster construction needs 0 < s < 1");
  double r_in = p.r_in();
  double r_out = p.r_out();
  double margin = r_out + 4 * h;
  Box box{{-cfg.r1 - margin, -cfg.r1 - margin}, {cfg.D + cfg.r2 + margin, cfg.r1 + margin}};
  Bitmap S = raster_shape(cfg, box, h);

  GammaIterate out;
  Bitmap Y = morph(S, MorphOp::close, r_out);
  for (int k = 1; k <= max_iter; ++k) {
    Bitmap X = morph(Y, MorphOp::open, r_in);
    Bitmap Y_next = morph(bitmap_and(X, S), MorphOp::close, r_out);
    out.iterations = k;
    if (bitmap_equal(Y_next, Y)) {
      out.converged = true;
      out.bitmap = std::move(Y_next);
      return out;
    }
    Y = std::move(Y_next);
  }
  out.bitmap = std::move(Y);
  return out;
}

}  // namespace tvball
