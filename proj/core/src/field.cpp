#include "tvball/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tvball {

FieldDistance field_distance(const Field& a, const Field& b) {
  if (!a.same_grid(b)) throw Error(Errc::GridMismatch, "field grids differ");
  double sq = 0, ref = 0, linf = 0;
  for (size_t k = 0; k < a.values.size(); ++k) {
    double diff = a.values[k] - b.values[k];
    sq += diff * diff;
    ref += b.values[k] * b.values[k];
    linf = std::max(linf, std::abs(diff));
  }
  FieldDistance out;
  out.linf = linf;
  out.l2_rel = ref > 0 ? std::sqrt(sq / ref) : std::sqrt(sq);
  return out;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_field_csv(const Field& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IOError, "cannot open " + path);
  out << "nx,ny,h,ox,oy\n";
  out << f.nx << "," << f.ny << "," << fmt17(f.h) << "," << fmt17(f.origin.x) << ","
      << fmt17(f.origin.y) << "\n";
  for (int j = 0; j < f.ny; ++j) {
    for (int i = 0; i < f.nx; ++i) {
      if (i) out << ",";
      out << fmt17(f.at(i, j));
    }
    out << "\n";
  }
  if (!out) throw Error(Errc::IOError, "write failed: " + path);
}

Field read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "nx,ny,h,ox,oy")
    throw Error(Errc::IOError, "bad field CSV header: " + path);
  if (!std::getline(in, line)) throw Error(Errc::IOError, "truncated field CSV: " + path);
  Field f;
  {
    std::istringstream ss(line);
    char comma;
    ss >> f.nx >> comma >> f.ny >> comma >> f.h >> comma >> f.origin.x >> comma >> f.origin.y;
    if (!ss) throw Error(Errc::IOError, "bad field CSV header values: " + path);
  }
  f.values.assign((size_t)f.nx * f.ny, 0.0);
  for (int j = 0; j < f.ny; ++j) {
    if (!std::getline(in, line)) throw Error(Errc::IOError, "truncated field CSV: " + path);
    std::istringstream ss(line);
    std::string cell;
    for (int i = 0; i < f.nx; ++i) {
      if (!std::getline(ss, cell, ',')) throw Error(Errc::IOError, "short row in " + path);
      f.at(i, j) = std::strtod(cell.c_str(), nullptr);
    }
  }
  return f;
}

void write_field_pgm16(const Field& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IOError, "cannot open " + path);
  out << "P5\n" << f.nx << " " << f.ny << "\n65535\n";
  for (int j = f.ny - 1; j >= 0; --j)
    for (int i = 0; i < f.nx; ++i) {
      double v = std::clamp(f.at(i, j), 0.0, 1.0);
      unsigned code = (unsigned)std::lround(v * 65535.0);
      out.put((char)(code >> 8));
      out.put((char)(code & 0xff));
    }
  if (!out) throw Error(Errc::IOError, "write failed: " + path);
}

}  // namespace tvball
