#include "tvball/solver.hpp"

#include <cmath>

#include "tvball/parallel.hpp"
#include "tvball/rootfind.hpp"
#include "tvball/transversal.hpp"

namespace tvball {

namespace {

constexpr double kRegimeTol = 1e-12;

double require(const std::optional<double>& v, const char* what) {
  if (!v) throw Error(Errc::OutOfRegime, what);
  return *v;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::A: return "A";
    case Regime::B: return "B";
    case Regime::C1: return "C1";
    case Regime::C2: return "C2";
    case Regime::D: return "D";
    case Regime::NonInteracting: return "non-interacting";
  }
  return "?";
}

Regime classify_regime(const Thresholds& th, double lambda) {
  if (!th.interacting) return Regime::NonInteracting;
  double tol = kRegimeTol * std::max(1.0, th.lambda3);
  if (lambda > th.lambda3 + tol) return Regime::D;
  if (lambda > *th.lambda2 + tol)
    return th.case_flag == CaseFlag::ratio_lt ? Regime::C1 : Regime::C2;
  if (lambda > *th.lambda1 + tol) return Regime::B;
  return Regime::A;
}

double s_a(const TwoBallConfig& cfg, const Thresholds& th, double lambda) {
  (void)cfg;
  double R1 = require(th.R1, "s_a needs an interacting configuration");
  if (R1 == 0) throw Error(Errc::OutOfRegime, "s_a undefined for tangent balls");
  if (classify_regime(th, lambda) != Regime::A)
    throw Error(Errc::OutOfRegime, "s_a defined on [0, lambda1]");
  return lambda / R1;
}

double s_b(const TwoBallConfig& cfg, const Thresholds& th, double lambda) {
  if (classify_regime(th, lambda) != Regime::B)
    throw Error(Errc::OutOfRegime, "s_b defined on (lambda1, lambda2]");
  double R1 = require(th.R1, "s_b needs an interacting configuration");
  double s_hi = 1 - 2 * lambda / cfg.r1;
  if (R1 > 0) s_hi = std::min(s_hi, lambda / R1);
  auto delta = [&](double s) {
    EnergyParams p{s, lambda};
    Region gamma = gamma_region(cfg, p, th.R_c);
    Region ball1 = make_ball_region(cfg, 1);
    return region_energy(gamma, p) - region_energy(ball1, p);
  };
  SignScan scan = scan_sign_changes(delta, 0.0, s_hi, 2048);
  if (scan.changes == 0) {
    // the equality can sit exactly on the upper endpoint (λ = λ2)
    if (std::abs(delta(s_hi)) < 1e-9) return s_hi;
    throw Error(Errc::RootNotBracketed, "s_b: no energy crossing on [0, s_hi]");
  }
  return bisect(delta, scan.first_lo, scan.first_hi);
}

double s_c(const TwoBallConfig& cfg, const Thresholds& th, double lambda,
           double* plateau_width) {
  if (classify_regime(th, lambda) != Regime::C1)
    throw Error(Errc::OutOfRegime, "s_c defined on (lambda2, lambda3], ratio_lt case");
  auto energy = [&](double s) {
    EnergyParams p{s, lambda};
    return region_energy(closing_region(cfg, p.r_out(), th.R_c), p);
  };
  double s3 = 1 - lambda / th.lambda3;
  double root;
  if (s3 <= 0) {
    root = 0.0;
  } else {
    double hi = s3;
    if (th.R_c > 0) hi = std::min(hi, lambda / th.R_c);
    if (energy(hi) < 0) {
      root = hi;
    } else {
      root = bisect(energy, 0.0, hi);
    }
  }
  if (plateau_width) {
    // maximal-solution convention: report any flat zero-energy stretch
    *plateau_width = 0;
    double tol = 1e-11;
    double step = 1e-4;
    double s = root + step;
    while (s <= 1 && std::abs(energy(s)) < tol) {
      *plateau_width = s - root;
      s += step;
    }
  }
  return root;
}

LevelDecision minimizer(const TwoBallConfig& cfg, const Thresholds& th,
                        const EnergyParams& p) {
  LevelDecision out;
  out.s = p.s;
  out.lambda = p.lambda;
  out.regime = classify_regime(th, p.lambda);

  double s_ball1 = 1 - 2 * p.lambda / cfg.r1;
  double s_ball2 = 1 - 2 * p.lambda / cfg.r2;
  switch (out.regime) {
    case Regime::NonInteracting:
      if (p.s <= s_ball2)
        out.region = make_union_region(cfg);
      else if (p.s <= s_ball1)
        out.region = make_ball_region(cfg, 1);
      else
        out.region = make_empty_region(cfg);
      break;
    case Regime::A: {
      double sa = s_a(cfg, th, p.lambda);
      out.breakpoints_used.s_a = sa;
      if (p.s <= sa)
        out.region = closing_region(cfg, p.r_out(), th.R_c);
      else if (p.s <= s_ball2)
        out.region = make_union_region(cfg);
      else if (p.s <= s_ball1)
        out.region = make_ball_region(cfg, 1);
      else
        out.region = make_empty_region(cfg);
      break;
    }
    case Regime::B: {
      double sb = s_b(cfg, th, p.lambda);
      out.breakpoints_used.s_b = sb;
      if (p.s <= sb)
        out.region = gamma_region(cfg, p, th.R_c);
      else if (p.s <= s_ball1)
        out.region = make_ball_region(cfg, 1);
      else
        out.region = make_empty_region(cfg);
      break;
    }
    case Regime::C1: {
      double sc = s_c(cfg, th, p.lambda);
      out.breakpoints_used.s_c = sc;
      out.region = p.s <= sc ? closing_region(cfg, p.r_out(), th.R_c)
                             : make_empty_region(cfg);
      break;
    }
    case Regime::C2:
      out.region = p.s <= s_ball1 ? make_ball_region(cfg, 1) : make_empty_region(cfg);
      break;
    case Regime::D:
      out.region = make_empty_region(cfg);
      break;
  }
  out.energy = region_energy(out.region, p);
  return out;
}

std::vector<Region> candidate_regions(const TwoBallConfig& cfg, const Thresholds& th,
                                      const EnergyParams& p) {
  std::vector<Region> out;
  out.push_back(make_empty_region(cfg));
  out.push_back(make_ball_region(cfg, 1));
  out.push_back(make_ball_region(cfg, 2));
  out.push_back(make_union_region(cfg));
  out.push_back(closing_region(cfg, p.r_out(), th.R_c));
  out.push_back(gamma_region(cfg, p, th.R_c));
  if (auto t = solve_transversal(cfg, p)) out.push_back(transversal_region(cfg, *t));
  return out;
}

double noninteracting_u(const TwoBallConfig& cfg, double lambda, Vec2 x) {
  if (interaction_test(cfg))
    throw Error(Errc::ConfigInteracting, "configuration interacts");
  auto plus = [](double v) { return v > 0 ? v : 0.0; };
  if (norm(x - cfg.center1()) <= cfg.r1) return plus(1 - 2 * lambda / cfg.r1);
  if (norm(x - cfg.center2()) <= cfg.r2) return plus(1 - 2 * lambda / cfg.r2);
  return 0.0;
}

double evaluate_u(const TwoBallConfig& cfg, const Thresholds& th, double lambda, Vec2 x) {
  if (!th.interacting) return noninteracting_u(cfg, lambda, x);
  if (lambda >= th.lambda3) return 0.0;
  auto member = [&](double s) {
    return point_in_region(minimizer(cfg, th, EnergyParams{s, lambda}).region, x);
  };
  if (!member(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 40; ++i) {
    double mid = 0.5 * (lo + hi);
    if (member(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Field rasterize_u(const TwoBallConfig& cfg, const Thresholds& th, double lambda, Box box,
                  double h) {
  if (box.lo.x > -cfg.r1 || box.lo.y > -cfg.r1 || box.hi.x < cfg.D + cfg.r2 ||
      box.hi.y < cfg.r1)
    throw Error(Errc::BoxTooSmall, "box does not cover co(S)");
  Field f;
  f.origin = box.lo;
  f.h = h;
  f.nx = (int)std::ceil(box.width() / h);
  f.ny = (int)std::ceil(box.height() / h);
  f.values.assign((size_t)f.nx * f.ny, 0.0);
  parallel_for(f.ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < f.nx; ++i)
        f.at(i, j) = evaluate_u(cfg, th, lambda, f.pixel_center(i, j));
  });
  return f;
}

Field rasterize_indicator(const TwoBallConfig& cfg, Box box, double h) {
  Field f;
  f.origin = box.lo;
  f.h = h;
  f.nx = (int)std::ceil(box.width() / h);
  f.ny = (int)std::ceil(box.height() / h);
  f.values.assign((size_t)f.nx * f.ny, 0.0);
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      Vec2 p = f.pixel_center(i, j);
      bool in = norm(p - cfg.center1()) <= cfg.r1 || norm(p - cfg.center2()) <= cfg.r2;
      f.at(i, j) = in ? 1.0 : 0.0;
    }
  return f;
}

}  // namespace tvball
