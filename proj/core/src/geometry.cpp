#include "tvball/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "tvball/rootfind.hpp"

namespace tvball {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

// Normalizes an angle difference to (-pi, pi].
double angle_diff(double to, double from) {
  double d = std::fmod(to - from, 2 * kPi);
  if (d <= -kPi) d += 2 * kPi;
  if (d > kPi) d -= 2 * kPi;
  return d;
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveRadius: return "NonPositiveRadius";
    case Errc::NegativeGap: return "NegativeGap";
    case Errc::MalformedBoundary: return "MalformedBoundary";
    case Errc::EmptyRegion: return "EmptyRegion";
    case Errc::EmptyCandidateList: return "EmptyCandidateList";
    case Errc::NotInteracting: return "NotInteracting";
    case Errc::ConfigInteracting: return "ConfigInteracting";
    case Errc::CaseNotApplicable: return "CaseNotApplicable";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::StructuringElementTooSmall: return "StructuringElementTooSmall";
    case Errc::OutOfRegime: return "OutOfRegime";
    case Errc::RootNotBracketed: return "RootNotBracketed";
    case Errc::ConfigParseError: return "ConfigParseError";
    case Errc::IOError: return "IOError";
  }
  return "Unknown";
}

const char* region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::Empty: return "Empty";
    case RegionKind::Ball1: return "Ball1";
    case RegionKind::Ball2: return "Ball2";
    case RegionKind::UnionBalls: return "UnionBalls";
    case RegionKind::Closing: return "Closing";
    case RegionKind::Transversal: return "Transversal";
  }
  return "Unknown";
}

TwoBallConfig canonicalize(double r1, double r2, double d) {
  if (!(std::isfinite(r1) && std::isfinite(r2) && std::isfinite(d)))
    throw Error(Errc::DomainError, "non-finite input");
  if (!(r1 > 0) || !(r2 > 0))
    throw Error(Errc::NonPositiveRadius, "radii must be positive");
  if (d < 0) throw Error(Errc::NegativeGap, "gap must be non-negative");
  if (r1 < r2) std::swap(r1, r2);
  TwoBallConfig cfg;
  cfg.r1 = r1;
  cfg.r2 = r2;
  cfg.d = d;
  cfg.D = r1 + d + r2;
  return cfg;
}

ArcSeg ArcSeg::arc(Vec2 center, double radius, double phi0, double dphi) {
  ArcSeg s;
  s.center = center;
  s.radius = radius;
  s.phi0 = phi0;
  s.dphi = dphi;
  s.a = center + Vec2{radius * std::cos(phi0), radius * std::sin(phi0)};
  double phi1 = phi0 + dphi;
  s.b = center + Vec2{radius * std::cos(phi1), radius * std::sin(phi1)};
  return s;
}

ArcSeg ArcSeg::segment(Vec2 a, Vec2 b) {
  ArcSeg s;
  s.is_segment = true;
  s.a = a;
  s.b = b;
  return s;
}

double ArcSeg::length() const {
  return is_segment ? norm(b - a) : radius * std::abs(dphi);
}

double loop_perimeter(const ArcLoop& loop) {
  double p = 0;
  for (const auto& s : loop) p += s.length();
  return p;
}

double loop_area(const ArcLoop& loop) {
  // Green's theorem, A = 1/2 ∮ (x dy - y dx).
  double twice = 0;
  for (const auto& s : loop) {
    if (s.is_segment) {
      twice += cross(s.a, s.b);
    } else {
      twice += s.radius * s.radius * s.dphi + s.center.x * (s.b.y - s.a.y) -
               s.center.y * (s.b.x - s.a.x);
    }
  }
  return 0.5 * twice;
}

double loop_winding(const ArcLoop& loop, Vec2 p) {
  double total = 0;
  for (const auto& s : loop) {
    if (s.is_segment) {
      total += angle_diff(std::atan2(s.b.y - p.y, s.b.x - p.x),
                          std::atan2(s.a.y - p.y, s.a.x - p.x));
    } else {
      int pieces = std::max(1, (int)std::ceil(std::abs(s.dphi) / (kPi / 3)));
      double prev = std::atan2(s.a.y - p.y, s.a.x - p.x);
      for (int i = 1; i <= pieces; ++i) {
        double phi = s.phi0 + s.dphi * i / pieces;
        Vec2 q = s.center + Vec2{s.radius * std::cos(phi), s.radius * std::sin(phi)};
        double cur = std::atan2(q.y - p.y, q.x - p.x);
        total += angle_diff(cur, prev);
        prev = cur;
      }
    }
  }
  return total / (2 * kPi);
}

BallMeasures ball_measures(const TwoBallConfig& cfg, int which) {
  double r = which == 1 ? cfg.r1 : cfg.r2;
  return {2 * kPi * r, kPi * r * r};
}

HullGeom hull_geometry(const TwoBallConfig& cfg) {
  HullGeom h;
  double dr = cfg.r1 - cfg.r2;
  h.psi = std::asin(clamp_unit(dr / cfg.D));
  h.tangent_len = std::sqrt(std::max(0.0, cfg.D * cfg.D - dr * dr));
  h.perimeter = (kPi + 2 * h.psi) * cfg.r1 + (kPi - 2 * h.psi) * cfg.r2 + 2 * h.tangent_len;
  double trapezoid = (cfg.r1 + cfg.r2) * std::cos(h.psi) * (cfg.D - dr * dr / cfg.D);
  h.area = 0.5 * cfg.r1 * cfg.r1 * (kPi + 2 * h.psi) +
           0.5 * cfg.r2 * cfg.r2 * (kPi - 2 * h.psi) + trapezoid;
  return h;
}

double hull_perimeter(const TwoBallConfig& cfg) { return hull_geometry(cfg).perimeter; }

std::optional<NeckGeom> neck_geometry(const TwoBallConfig& cfg, double r) {
  double a = cfg.r1 + r;
  double b = cfg.r2 + r;
  if (a + b < cfg.D) return std::nullopt;  // expanded circles do not meet
  NeckGeom n;
  n.r = r;
  n.a1 = std::acos(clamp_unit((cfg.D * cfg.D + a * a - b * b) / (2 * cfg.D * a)));
  n.a2 = std::acos(clamp_unit((cfg.D * cfg.D + b * b - a * a) / (2 * cfg.D * b)));
  n.a3 = kPi - n.a1 - n.a2;
  n.c_plus = {a * std::cos(n.a1), a * std::sin(n.a1)};
  return n;
}

bool closing_connected(const TwoBallConfig& cfg, double r) {
  if (cfg.d == 0) return true;
  auto n = neck_geometry(cfg, r);
  if (!n) return false;  // an r-ball passes freely between the balls
  double yc = n->c_plus.y;
  if (yc >= r) return true;
  // The two tangent balls overlap across the axis; they sweep the strip
  // |x - xc| < w of axis points. Connected iff the strip misses the gap.
  double w = std::sqrt(r * r - yc * yc);
  double gap_lo = cfg.r1, gap_hi = cfg.r1 + cfg.d;
  return n->c_plus.x - w >= gap_hi || n->c_plus.x + w <= gap_lo;
}

double connectivity_radius(const TwoBallConfig& cfg) {
  if (cfg.d == 0) return 0.0;
  double lo = 0.5 * cfg.d;
  double hi = std::max(1.0, cfg.d);
  while (!closing_connected(cfg, hi)) hi *= 2;
  return bisect_bool([&](double r) { return closing_connected(cfg, r); }, lo, hi, 1e-12);
}

Region make_empty_region(const TwoBallConfig& cfg) {
  Region reg;
  reg.kind = RegionKind::Empty;
  reg.cfg = cfg;
  return reg;
}

Region make_ball_region(const TwoBallConfig& cfg, int which) {
  Region reg;
  reg.kind = which == 1 ? RegionKind::Ball1 : RegionKind::Ball2;
  reg.cfg = cfg;
  auto m = ball_measures(cfg, which);
  reg.perimeter = m.perimeter;
  reg.area_in_S = m.area;
  double r = which == 1 ? cfg.r1 : cfg.r2;
  Vec2 c = which == 1 ? cfg.center1() : cfg.center2();
  reg.boundary = {{ArcSeg::arc(c, r, 0, 2 * kPi)}};
  return reg;
}

Region make_union_region(const TwoBallConfig& cfg) {
  Region reg;
  reg.kind = RegionKind::UnionBalls;
  reg.cfg = cfg;
  auto m1 = ball_measures(cfg, 1);
  auto m2 = ball_measures(cfg, 2);
  reg.perimeter = m1.perimeter + m2.perimeter;
  reg.area_in_S = m1.area + m2.area;
  reg.boundary = {{ArcSeg::arc(cfg.center1(), cfg.r1, 0, 2 * kPi)},
                  {ArcSeg::arc(cfg.center2(), cfg.r2, 0, 2 * kPi)}};
  return reg;
}

namespace {

Region hull_region(const TwoBallConfig& cfg) {
  Region reg;
  reg.kind = RegionKind::Closing;
  reg.cfg = cfg;
  reg.closing_radius = kInf;
  HullGeom h = hull_geometry(cfg);
  reg.hull = h;
  double sp = std::sin(h.psi), cp = std::cos(h.psi);
  Vec2 t1_up = {cfg.r1 * sp, cfg.r1 * cp};
  Vec2 t1_dn = {cfg.r1 * sp, -cfg.r1 * cp};
  Vec2 t2_up = {cfg.D + cfg.r2 * sp, cfg.r2 * cp};
  Vec2 t2_dn = {cfg.D + cfg.r2 * sp, -cfg.r2 * cp};
  ArcLoop loop;
  loop.push_back(ArcSeg::arc(cfg.center1(), cfg.r1, kPi / 2 - h.psi, kPi + 2 * h.psi));
  loop.push_back(ArcSeg::segment(t1_dn, t2_dn));
  loop.push_back(ArcSeg::arc(cfg.center2(), cfg.r2, 3 * kPi / 2 + h.psi, kPi - 2 * h.psi));
  loop.push_back(ArcSeg::segment(t2_up, t1_up));
  reg.boundary = {loop};
  double area_S = kPi * (cfg.r1 * cfg.r1 + cfg.r2 * cfg.r2);
  reg.perimeter = h.perimeter;
  reg.area_in_S = area_S;
  reg.area_out_S = h.area - area_S;
  return reg;
}

}  // namespace

Region closing_region(const TwoBallConfig& cfg, double r) {
  return closing_region(cfg, r, connectivity_radius(cfg));
}

Region closing_region(const TwoBallConfig& cfg, double r, double R_c) {
  if (!(r > 0)) throw Error(Errc::NonPositiveRadius, "closing radius must be positive");
  if (std::isinf(r)) return hull_region(cfg);
  if (r < R_c) {
    Region reg = make_union_region(cfg);
    reg.closing_radius = r;
    return reg;
  }
  auto neck = neck_geometry(cfg, r);
  if (!neck) throw Error(Errc::MalformedBoundary, "no tangent circle at closing radius");
  Region reg;
  reg.kind = RegionKind::Closing;
  reg.cfg = cfg;
  reg.closing_radius = r;
  reg.neck = *neck;
  double xc = neck->c_plus.x, yc = neck->c_plus.y;
  Vec2 c_minus = {xc, -yc};
  ArcLoop loop;
  loop.push_back(ArcSeg::arc(cfg.center1(), cfg.r1, neck->a1, 2 * kPi - 2 * neck->a1));
  loop.push_back(ArcSeg::arc(c_minus, r, std::atan2(yc, -xc), -neck->a3));
  loop.push_back(
      ArcSeg::arc(cfg.center2(), cfg.r2, std::atan2(-yc, xc - cfg.D), 2 * kPi - 2 * neck->a2));
  loop.push_back(ArcSeg::arc(neck->c_plus, r, std::atan2(-yc, cfg.D - xc), -neck->a3));
  reg.boundary = {loop};
  reg.perimeter = (2 * kPi - 2 * neck->a1) * cfg.r1 + (2 * kPi - 2 * neck->a2) * cfg.r2 +
                  2 * neck->a3 * r;
  reg.area_in_S = kPi * (cfg.r1 * cfg.r1 + cfg.r2 * cfg.r2);
  reg.area_out_S = cfg.D * yc - neck->a1 * cfg.r1 * cfg.r1 - neck->a2 * cfg.r2 * cfg.r2 -
                   neck->a3 * r * r;
  return reg;
}

namespace {

bool in_ball(const TwoBallConfig& cfg, int which, Vec2 p) {
  Vec2 c = which == 1 ? cfg.center1() : cfg.center2();
  double r = which == 1 ? cfg.r1 : cfg.r2;
  return norm(p - c) <= r;
}

bool in_transversal(const Region& reg, Vec2 p) {
  const TwoBallConfig& cfg = reg.cfg;
  if (in_ball(cfg, 1, p)) return true;
  const TransversalGeom& t = *reg.trans;
  if (in_ball(cfg, 2, p)) return norm(p - t.inner_center) <= t.r_in;
  double w = 0;
  for (const auto& loop : reg.boundary) w += loop_winding(loop, p);
  return w > 0.25;
}

}  // namespace

bool in_two_balls(const TwoBallConfig& cfg, Vec2 p) {
  return in_ball(cfg, 1, p) || in_ball(cfg, 2, p);
}

bool hull_membership(const TwoBallConfig& cfg, Vec2 p) {
  if (in_two_balls(cfg, p)) return true;
  double dr = cfg.r1 - cfg.r2;
  double psi = std::asin(clamp_unit(dr / cfg.D));
  double sp = std::sin(psi), cp = std::cos(psi);
  Vec2 t1_up = {cfg.r1 * sp, cfg.r1 * cp};
  Vec2 t1_dn = {cfg.r1 * sp, -cfg.r1 * cp};
  Vec2 t2_up = {cfg.D + cfg.r2 * sp, cfg.r2 * cp};
  Vec2 t2_dn = {cfg.D + cfg.r2 * sp, -cfg.r2 * cp};
  // clockwise quad; inside means right of every edge
  const Vec2 quad[4] = {t1_up, t2_up, t2_dn, t1_dn};
  for (int i = 0; i < 4; ++i) {
    Vec2 a = quad[i], b = quad[(i + 1) % 4];
    if (cross(b - a, p - a) > 0) return false;
  }
  return true;
}

// Membership in Close_r(S) via the distance from p to the set A of
// admissible r-ball centers (complement of the two expanded disks):
// p is in the closing iff no admissible ball covers it, i.e. dist(p, A) >= r.
bool closing_membership(const TwoBallConfig& cfg, double r, double R_c, Vec2 p) {
  if (in_two_balls(cfg, p)) return true;
  if (std::isinf(r)) return hull_membership(cfg, p);
  if (r < R_c) return false;
  double a = cfg.r1 + r, b = cfg.r2 + r;
  Vec2 c1 = cfg.center1(), c2 = cfg.center2();
  double d1 = norm(p - c1), d2 = norm(p - c2);
  if (d1 >= a && d2 >= b) return false;  // p itself is an admissible center
  // nearest points on the expanded circles, when they lie on the free arcs
  Vec2 q1 = c1 + (a / d1) * (p - c1);
  if (norm(q1 - c2) >= b && std::abs(a - d1) < r) return false;
  Vec2 q2 = c2 + (b / d2) * (p - c2);
  if (norm(q2 - c1) >= a && std::abs(b - d2) < r) return false;
  // corners where the two expanded circles meet
  auto n = neck_geometry(cfg, r);
  if (!n) return false;
  Vec2 c_minus = {n->c_plus.x, -n->c_plus.y};
  return norm(p - n->c_plus) >= r && norm(p - c_minus) >= r;
}

bool point_in_region(const Region& reg, Vec2 p) {
  switch (reg.kind) {
    case RegionKind::Empty:
      return false;
    case RegionKind::Ball1:
      return in_ball(reg.cfg, 1, p);
    case RegionKind::Ball2:
      return in_ball(reg.cfg, 2, p);
    case RegionKind::UnionBalls:
      return in_two_balls(reg.cfg, p);
    case RegionKind::Closing:
      if (std::isinf(reg.closing_radius)) return hull_membership(reg.cfg, p);
      if (!reg.neck) return in_two_balls(reg.cfg, p);
      return closing_membership(reg.cfg, reg.closing_radius, 0.0, p);
    case RegionKind::Transversal:
      if (!reg.trans) throw Error(Errc::MalformedBoundary, "transversal region without geometry");
      return in_transversal(reg, p);
  }
  return false;
}

}  // namespace tvball
