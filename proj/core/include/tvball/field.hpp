#pragma once

#include <string>
#include <vector>

#include "tvball/geometry.hpp"

namespace tvball {

/// Scalar samples on a pixel-center grid: value (i, j) lives at
/// origin + h*(i+1/2, j+1/2).
struct Field {
  Vec2 origin;
  double h = 1;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, ny rows of nx

  double at(int i, int j) const { return values[(size_t)j * nx + i]; }
  double& at(int i, int j) { return values[(size_t)j * nx + i]; }
  Vec2 pixel_center(int i, int j) const {
    return {origin.x + h * (i + 0.5), origin.y + h * (j + 0.5)};
  }
  bool same_grid(const Field& o) const {
    return nx == o.nx && ny == o.ny && h == o.h && origin.x == o.origin.x &&
           origin.y == o.origin.y;
  }
};

struct FieldDistance {
  double l2_rel = 0;
  double linf = 0;
};
FieldDistance field_distance(const Field& a, const Field& b);

// CSV: header line "nx,ny,h,ox,oy", a line with those values, then ny rows
// of nx comma-separated samples (bottom row first). Doubles as %.17g.
void write_field_csv(const Field& f, const std::string& path);
Field read_field_csv(const std::string& path);

// 16-bit PGM (P5, maxval 65535, big-endian), value = round(u * 65535)
// clipped to [0, 1].
void write_field_pgm16(const Field& f, const std::string& path);

}  // namespace tvball
