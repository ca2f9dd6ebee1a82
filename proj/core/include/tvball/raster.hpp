#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvball/energy.hpp"
#include "tvball/geometry.hpp"

namespace tvball {

struct Box {
  Vec2 lo, hi;
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
};

/// Binary raster on a pixel-center grid: pixel (i, j) is centered at
/// origin + h*(i+1/2, j+1/2).
struct Bitmap {
  Vec2 origin;
  double h = 1;
  int nx = 0, ny = 0;
  std::vector<uint8_t> bits;  // row-major, ny rows of nx

  bool at(int i, int j) const { return bits[(size_t)j * nx + i] != 0; }
  void set(int i, int j, bool v) { bits[(size_t)j * nx + i] = v ? 1 : 0; }
  Vec2 pixel_center(int i, int j) const {
    return {origin.x + h * (i + 0.5), origin.y + h * (j + 0.5)};
  }
  size_t count() const;
  bool same_grid(const Bitmap& o) const;
};

Bitmap raster_shape(const TwoBallConfig& cfg, Box box, double h);
Bitmap raster_shape(const Region& reg, Box box, double h);

enum class MorphOp { dilate, erode, open, close };

/// Morphology with the discrete-ball structuring element
/// {pixels with center distance <= r}, via exact squared distance transforms.
Bitmap morph(const Bitmap& b, MorphOp op, double r);

struct RasterMeasures {
  double perimeter = 0;  // Cauchy-Crofton estimate, 16 directions
  double area = 0;       // pixel count * h^2
};
RasterMeasures raster_measures(const Bitmap& b);

double raster_energy(const Bitmap& b, const Bitmap& raster_S, const EnergyParams& p);

// bitwise set algebra (grids must match)
Bitmap bitmap_and(const Bitmap& a, const Bitmap& b);
Bitmap bitmap_andnot(const Bitmap& a, const Bitmap& b);
bool bitmap_equal(const Bitmap& a, const Bitmap& b);
bool bitmap_subset(const Bitmap& a, const Bitmap& b);

/// Number of 8-connected foreground components.
int connected_components(const Bitmap& b);

/// Symmetric Hausdorff distance between the two foreground sets, in world
/// units; 0 for two empty bitmaps, infinity if exactly one is empty.
double hausdorff_distance(const Bitmap& a, const Bitmap& b);

/// Exact squared Euclidean distance (in pixels) to the nearest foreground
/// pixel; kLargeDist2 where no foreground exists.
constexpr int64_t kLargeDist2 = INT64_C(1) << 60;
std::vector<int64_t> squared_distance_field(const Bitmap& b);

// PGM (P5, maxval 255, 0/255 coding)
void write_pgm(const Bitmap& b, const std::string& path);
Bitmap read_pgm(const std::string& path);

}  // namespace tvball
