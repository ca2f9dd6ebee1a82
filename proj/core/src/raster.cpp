#include "tvball/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>

#include "tvball/parallel.hpp"

namespace tvball {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_box(const Box& box, double h) {
  if (!(h > 0)) throw Error(Errc::DomainError, "grid step must be positive");
  if (!(box.hi.x > box.lo.x && box.hi.y > box.lo.y))
    throw Error(Errc::BoxTooSmall, "degenerate box");
}

Bitmap empty_bitmap(Box box, double h) {
  check_box(box, h);
  Bitmap b;
  b.origin = box.lo;
  b.h = h;
  b.nx = (int)std::ceil(box.width() / h);
  b.ny = (int)std::ceil(box.height() / h);
  b.bits.assign((size_t)b.nx * b.ny, 0);
  return b;
}

}  // namespace

size_t Bitmap::count() const {
  size_t n = 0;
  for (uint8_t v : bits) n += v != 0;
  return n;
}

bool Bitmap::same_grid(const Bitmap& o) const {
  return nx == o.nx && ny == o.ny && h == o.h && origin.x == o.origin.x &&
         origin.y == o.origin.y;
}

Bitmap raster_shape(const TwoBallConfig& cfg, Box box, double h) {
  if (box.lo.x > -cfg.r1 || box.lo.y > -cfg.r1 || box.hi.x < cfg.D + cfg.r2 ||
      box.hi.y < cfg.r1)
    throw Error(Errc::BoxTooSmall, "box does not cover S");
  Bitmap b = empty_bitmap(box, h);
  parallel_for(b.ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < b.nx; ++i) {
        Vec2 p = b.pixel_center(i, j);
        bool in = norm(p - cfg.center1()) <= cfg.r1 || norm(p - cfg.center2()) <= cfg.r2;
        b.set(i, j, in);
      }
  });
  return b;
}

Bitmap raster_shape(const Region& reg, Box box, double h) {
  if (reg.kind != RegionKind::Empty) {
    // every candidate region is contained in co(S)
    const TwoBallConfig& c = reg.cfg;
    if (box.lo.x > -c.r1 || box.lo.y > -c.r1 || box.hi.x < c.D + c.r2 || box.hi.y < c.r1)
      throw Error(Errc::BoxTooSmall, "box does not cover co(S)");
  }
  Bitmap b = empty_bitmap(box, h);
  parallel_for(b.ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < b.nx; ++i)
        b.set(i, j, point_in_region(reg, b.pixel_center(i, j)));
  });
  return b;
}

namespace {

// Exact 1D horizontal distance (in pixels) to the nearest foreground pixel
// in the same row; kLargeDist1 where the row is empty.
constexpr int32_t kLargeDist1 = INT32_C(1) << 29;

void row_distance(const Bitmap& b, std::vector<int32_t>& rowdist) {
  rowdist.assign((size_t)b.nx * b.ny, kLargeDist1);
  for (int j = 0; j < b.ny; ++j) {
    int32_t* row = rowdist.data() + (size_t)j * b.nx;
    int32_t run = kLargeDist1;
    for (int i = 0; i < b.nx; ++i) {
      run = b.at(i, j) ? 0 : (run >= kLargeDist1 ? run : run + 1);
      row[i] = run;
    }
    run = kLargeDist1;
    for (int i = b.nx - 1; i >= 0; --i) {
      run = b.at(i, j) ? 0 : (run >= kLargeDist1 ? run : run + 1);
      row[i] = std::min(row[i], run);
    }
  }
}

}  // namespace

std::vector<int64_t> squared_distance_field(const Bitmap& b) {
  // Felzenszwalb-Huttenlocher: 1D row distances, then a column-wise lower
  // envelope of parabolas j -> (j-q)^2 + rowdist(q)^2.
  std::vector<int32_t> rowdist;
  row_distance(b, rowdist);
  std::vector<int64_t> d2((size_t)b.nx * b.ny, kLargeDist2);
  const int ny = b.ny, nx = b.nx;
  parallel_for(nx, [&](int i0, int i1) {
    std::vector<int> qs(ny), v(ny);
    std::vector<int64_t> fs(ny);
    std::vector<double> z(ny + 1);
    for (int i = i0; i < i1; ++i) {
      int nq = 0;
      for (int j = 0; j < ny; ++j) {
        int64_t r = rowdist[(size_t)j * nx + i];
        if (r < kLargeDist1) {
          qs[nq] = j;
          fs[nq] = r * r;
          ++nq;
        }
      }
      if (nq == 0) continue;
      int k = 0;
      v[0] = 0;
      z[0] = -1e300;
      z[1] = 1e300;
      for (int t = 1; t < nq; ++t) {
        double s;
        while (true) {
          int p = v[k];
          s = (double)(fs[t] - fs[p] + (int64_t)qs[t] * qs[t] - (int64_t)qs[p] * qs[p]) /
              (2.0 * (qs[t] - qs[p]));
          if (k > 0 && s <= z[k])
            --k;
          else
            break;
        }
        ++k;
        v[k] = t;
        z[k] = s;
        z[k + 1] = 1e300;
      }
      int kk = 0;
      for (int j = 0; j < ny; ++j) {
        while (z[kk + 1] < j) ++kk;
        int64_t dj = j - qs[v[kk]];
        d2[(size_t)j * nx + i] = dj * dj + fs[v[kk]];
      }
    }
  });
  return d2;
}

namespace {

Bitmap pad(const Bitmap& b, int m) {
  Bitmap out;
  out.origin = {b.origin.x - m * b.h, b.origin.y - m * b.h};
  out.h = b.h;
  out.nx = b.nx + 2 * m;
  out.ny = b.ny + 2 * m;
  out.bits.assign((size_t)out.nx * out.ny, 0);
  for (int j = 0; j < b.ny; ++j)
    std::copy(b.bits.begin() + (size_t)j * b.nx, b.bits.begin() + (size_t)(j + 1) * b.nx,
              out.bits.begin() + (size_t)(j + m) * out.nx + m);
  return out;
}

Bitmap crop(const Bitmap& b, int m, int nx, int ny) {
  Bitmap out;
  out.origin = {b.origin.x + m * b.h, b.origin.y + m * b.h};
  out.h = b.h;
  out.nx = nx;
  out.ny = ny;
  out.bits.assign((size_t)nx * ny, 0);
  for (int j = 0; j < ny; ++j)
    std::copy(b.bits.begin() + (size_t)(j + m) * b.nx + m,
              b.bits.begin() + (size_t)(j + m) * b.nx + m + nx,
              out.bits.begin() + (size_t)j * nx);
  return out;
}

Bitmap complement(const Bitmap& b) {
  Bitmap out = b;
  for (auto& v : out.bits) v = v ? 0 : 1;
  return out;
}

Bitmap dilate_raw(const Bitmap& b, double rpx2) {
  auto d2 = squared_distance_field(b);
  Bitmap out = b;
  for (size_t k = 0; k < out.bits.size(); ++k) out.bits[k] = (double)d2[k] <= rpx2 ? 1 : 0;
  return out;
}

}  // namespace

Bitmap morph(const Bitmap& b, MorphOp op, double r) {
  if (r < b.h) throw Error(Errc::StructuringElementTooSmall, "radius below grid step");
  double rpx = r / b.h;
  double rpx2 = rpx * rpx;
  int m = (int)std::ceil(rpx) + 2;
  switch (op) {
    case MorphOp::dilate:
      return crop(dilate_raw(pad(b, m), rpx2), m, b.nx, b.ny);
    case MorphOp::erode:
      return crop(complement(dilate_raw(complement(pad(b, m)), rpx2)), m, b.nx, b.ny);
    case MorphOp::open: {
      Bitmap p = pad(b, m);
      Bitmap er = complement(dilate_raw(complement(p), rpx2));
      return crop(dilate_raw(er, rpx2), m, b.nx, b.ny);
    }
    case MorphOp::close: {
      Bitmap p = pad(b, m);
      Bitmap di = dilate_raw(p, rpx2);
      return crop(complement(dilate_raw(complement(di), rpx2)), m, b.nx, b.ny);
    }
  }
  throw Error(Errc::DomainError, "bad morph op");
}

namespace {

// directions for the Crofton estimate, roughly uniform over [0, pi)
constexpr int kNumDirs = 16;
constexpr int kDirs[kNumDirs][2] = {
    {1, 0},  {4, 1},  {2, 1},  {4, 3},  {1, 1},  {3, 4},  {1, 2},  {1, 4},
    {0, 1},  {-1, 4}, {-1, 2}, {-3, 4}, {-1, 1}, {-4, 3}, {-2, 1}, {-4, 1}};

size_t count_flips(const Bitmap& b, int a, int c) {
  // walk every lattice line of step (a, c); count 0/1 transitions
  size_t flips = 0;
  auto inside = [&](int i, int j) { return i >= 0 && i < b.nx && j >= 0 && j < b.ny; };
  for (int j = 0; j < b.ny; ++j)
    for (int i = 0; i < b.nx; ++i) {
      if (inside(i - a, j - c)) continue;  // not a line start
      bool prev = false;
      int x = i, y = j;
      while (inside(x, y)) {
        bool cur = b.at(x, y);
        flips += cur != prev;
        prev = cur;
        x += a;
        y += c;
      }
      flips += prev;  // closing transition at the far border
    }
  return flips;
}

}  // namespace

RasterMeasures raster_measures(const Bitmap& b) {
  RasterMeasures m;
  m.area = (double)b.count() * b.h * b.h;
  double sum = 0;
  for (const auto& dir : kDirs) {
    double spacing = b.h / std::hypot((double)dir[0], (double)dir[1]);
    sum += spacing * (double)count_flips(b, dir[0], dir[1]);
  }
  m.perimeter = sum * kPi / (2.0 * kNumDirs);
  return m;
}

double raster_energy(const Bitmap& b, const Bitmap& raster_S, const EnergyParams& p) {
  if (!b.same_grid(raster_S)) throw Error(Errc::GridMismatch, "raster energy grids differ");
  if (b.count() == 0) return 0.0;
  double perim = raster_measures(b).perimeter;
  size_t in = 0, out = 0;
  for (size_t k = 0; k < b.bits.size(); ++k) {
    if (!b.bits[k]) continue;
    if (raster_S.bits[k])
      ++in;
    else
      ++out;
  }
  double h2 = b.h * b.h;
  return perim + (p.s / p.lambda) * out * h2 - ((1 - p.s) / p.lambda) * in * h2;
}

Bitmap bitmap_and(const Bitmap& a, const Bitmap& b) {
  if (!a.same_grid(b)) throw Error(Errc::GridMismatch, "bitmap_and grids differ");
  Bitmap out = a;
  for (size_t k = 0; k < out.bits.size(); ++k) out.bits[k] = a.bits[k] & b.bits[k];
  return out;
}

Bitmap bitmap_andnot(const Bitmap& a, const Bitmap& b) {
  if (!a.same_grid(b)) throw Error(Errc::GridMismatch, "bitmap_andnot grids differ");
  Bitmap out = a;
  for (size_t k = 0; k < out.bits.size(); ++k) out.bits[k] = a.bits[k] & (b.bits[k] ^ 1);
  return out;
}

bool bitmap_equal(const Bitmap& a, const Bitmap& b) {
  return a.same_grid(b) && a.bits == b.bits;
}

bool bitmap_subset(const Bitmap& a, const Bitmap& b) {
  if (!a.same_grid(b)) throw Error(Errc::GridMismatch, "bitmap_subset grids differ");
  for (size_t k = 0; k < a.bits.size(); ++k)
    if (a.bits[k] && !b.bits[k]) return false;
  return true;
}

int connected_components(const Bitmap& b) {
  std::vector<uint8_t> seen(b.bits.size(), 0);
  int comps = 0;
  std::deque<std::pair<int, int>> queue;
  for (int j = 0; j < b.ny; ++j)
    for (int i = 0; i < b.nx; ++i) {
      size_t k = (size_t)j * b.nx + i;
      if (!b.bits[k] || seen[k]) continue;
      ++comps;
      seen[k] = 1;
      queue.push_back({i, j});
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            int nx_ = x + dx, ny_ = y + dy;
            if (nx_ < 0 || nx_ >= b.nx || ny_ < 0 || ny_ >= b.ny) continue;
            size_t nk = (size_t)ny_ * b.nx + nx_;
            if (b.bits[nk] && !seen[nk]) {
              seen[nk] = 1;
              queue.push_back({nx_, ny_});
            }
          }
      }
    }
  return comps;
}

double hausdorff_distance(const Bitmap& a, const Bitmap& b) {
  if (!a.same_grid(b)) throw Error(Errc::GridMismatch, "hausdorff grids differ");
  bool ea = a.count() == 0, eb = b.count() == 0;
  if (ea && eb) return 0.0;
  if (ea || eb) return kInf;
  auto da = squared_distance_field(a);
  auto db = squared_distance_field(b);
  int64_t worst = 0;
  for (size_t k = 0; k < a.bits.size(); ++k) {
    if (a.bits[k]) worst = std::max(worst, db[k]);
    if (b.bits[k]) worst = std::max(worst, da[k]);
  }
  return std::sqrt((double)worst) * a.h;
}

void write_pgm(const Bitmap& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IOError, "cannot open " + path);
  out << "P5\n" << b.nx << " " << b.ny << "\n255\n";
  // top row first
  for (int j = b.ny - 1; j >= 0; --j)
    for (int i = 0; i < b.nx; ++i) out.put(b.at(i, j) ? (char)255 : (char)0);
  if (!out) throw Error(Errc::IOError, "write failed: " + path);
}

Bitmap read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IOError, "cannot open " + path);
  std::string magic;
  int nx, ny, maxval;
  in >> magic >> nx >> ny >> maxval;
  if (magic != "P5" || maxval != 255) throw Error(Errc::IOError, "unsupported PGM: " + path);
  in.get();
  Bitmap b;
  b.nx = nx;
  b.ny = ny;
  b.bits.assign((size_t)nx * ny, 0);
  std::vector<char> row(nx);
  for (int j = ny - 1; j >= 0; --j) {
    in.read(row.data(), nx);
    for (int i = 0; i < nx; ++i) b.set(i, j, (uint8_t)row[i] >= 128);
  }
  if (!in) throw Error(Errc::IOError, "truncated PGM: " + path);
  return b;
}

}  // namespace tvball
