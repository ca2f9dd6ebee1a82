#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "tvball/errors.hpp"

namespace tvball {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec2 {
  double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(Vec2 a) {
  double n = norm(a);
  return {a.x / n, a.y / n};
}

/// The datum S = S1 ∪ S2 in the canonical frame: centers on the x-axis,
/// the larger ball S1 centered at the origin, S2 at (D, 0).
struct TwoBallConfig {
  double r1 = 1;  // radius of S1, r1 >= r2
  double r2 = 1;  // radius of S2
  double d = 0;   // boundary gap, >= 0
  double D = 2;   // center distance = r1 + d + r2

  Vec2 center1() const { return {0, 0}; }
  Vec2 center2() const { return {D, 0}; }
};

TwoBallConfig canonicalize(double r1, double r2, double d);

/// One boundary piece: a circular arc, or a straight segment in the
/// infinite-radius limit (outer boundary at level s = 0).
struct ArcSeg {
  bool is_segment = false;
  // arc form
  Vec2 center;
  double radius = 0;
  double phi0 = 0;  // start angle
  double dphi = 0;  // signed sweep; > 0 ccw, |dphi| <= 2*pi
  // segment form (also caches arc endpoints)
  Vec2 a, b;

  static ArcSeg arc(Vec2 center, double radius, double phi0, double dphi);
  static ArcSeg segment(Vec2 a, Vec2 b);
  double length() const;
};

using ArcLoop = std::vector<ArcSeg>;

/// Arc-polygon measures via Green's theorem. Signed: ccw loops positive.
double loop_area(const ArcLoop& loop);
double loop_perimeter(const ArcLoop& loop);

/// Winding number of a loop around p (0 outside, ±1 inside for simple loops,
/// ±1/2 on the boundary up to roundoff).
double loop_winding(const ArcLoop& loop, Vec2 p);

enum class RegionKind { Empty, Ball1, Ball2, UnionBalls, Closing, Transversal };

const char* region_kind_name(RegionKind k);

/// Geometry of the closing neck: the circle of radius r tangent to both
/// balls from above, from the triangle with sides (r1+r, r2+r, D).
struct NeckGeom {
  double r = 0;        // closing radius (finite)
  double a1 = 0;       // angle at center1
  double a2 = 0;       // angle at center2
  double a3 = 0;       // angle at the tangent-circle center
  Vec2 c_plus;         // upper tangent-circle center; lower is the mirror image
};

/// Hull data for Close_inf(S) = co(S): two external tangent segments plus
/// the complementary arcs.
struct HullGeom {
  double psi = 0;      // tangent tilt, sin(psi) = (r1-r2)/D
  double tangent_len = 0;
  double perimeter = 0;
  double area = 0;
};

struct TransversalGeom {
  double r_in = 0;     // inner-arc radius lambda/(1-s)
  double r_out = 0;    // outer-arc radius lambda/s (kInf at s = 0)
  double alpha = 0;    // half angular span of the inner arc
  double theta = 0;    // tangency angle on the boundary of S1
  Vec2 inner_center;   // canonical frame
  Vec2 outer_center;   // upper outer-arc center (canonical frame)
  enum class Type { increasing, decreasing, unique } type_tag = Type::unique;
};

/// A candidate minimizer with exact measures. Boundary loops are ccw.
struct Region {
  RegionKind kind = RegionKind::Empty;
  TwoBallConfig cfg;
  double closing_radius = 0;  // Closing only; kInf encodes co(S)
  std::optional<NeckGeom> neck;
  std::optional<HullGeom> hull;
  std::optional<TransversalGeom> trans;
  std::vector<ArcLoop> boundary;
  double perimeter = 0;
  double area_in_S = 0;
  double area_out_S = 0;

  double area() const { return area_in_S + area_out_S; }
};

Region make_empty_region(const TwoBallConfig& cfg);
Region make_ball_region(const TwoBallConfig& cfg, int which);  // 1 or 2
Region make_union_region(const TwoBallConfig& cfg);

/// Perimeter and area of one ball of S.
struct BallMeasures {
  double perimeter = 0;
  double area = 0;
};
BallMeasures ball_measures(const TwoBallConfig& cfg, int which);

double hull_perimeter(const TwoBallConfig& cfg);
HullGeom hull_geometry(const TwoBallConfig& cfg);

/// Tangent-circle data at closing radius r, if the expanded circles
/// around the ball centers intersect (r >= d/2).
std::optional<NeckGeom> neck_geometry(const TwoBallConfig& cfg, double r);

/// True iff Close_r(S) is connected: no admissible r-ball sweeps an axis
/// transversal of the gap.
bool closing_connected(const TwoBallConfig& cfg, double r);

/// Minimal radius R_c with Close_r(S) connected for every r >= R_c.
/// Zero iff d = 0. Bisection to 1e-12 absolute.
double connectivity_radius(const TwoBallConfig& cfg);

/// Close_r(S) as a Region. For r < R_c the closing contract returns the
/// plain union of the balls (two loops); r = kInf yields co(S).
Region closing_region(const TwoBallConfig& cfg, double r);
Region closing_region(const TwoBallConfig& cfg, double r, double R_c);

/// Closed-region membership; boundary points count as inside.
bool point_in_region(const Region& reg, Vec2 p);

/// Allocation-free membership tests used in the inner evaluation loops.
bool in_two_balls(const TwoBallConfig& cfg, Vec2 p);
bool hull_membership(const TwoBallConfig& cfg, Vec2 p);
bool closing_membership(const TwoBallConfig& cfg, double r, double R_c, Vec2 p);

}  // namespace tvball
