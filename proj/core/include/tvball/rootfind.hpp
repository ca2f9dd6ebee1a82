#pragma once

#include <cmath>
#include <utility>

#include "tvball/errors.hpp"

namespace tvball {

// Bracketed bisection for a continuous function with f(lo) and f(hi) of
// opposite sign. Runs until the bracket is below eps (absolute + relative)
// or max_iter halvings. Monotonicity is not required, only the sign change.
template <class F>
double bisect(F&& f, double lo, double hi, double eps = 1e-15, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw Error(Errc::RootNotBracketed, "bisect: no sign change on bracket");
  for (int i = 0; i < max_iter && (hi - lo) > eps * (1.0 + std::abs(lo) + std::abs(hi)); ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Bisection on a monotone boolean predicate: pred(lo) == false, pred(hi) == true.
// Returns the smallest r (within eps) where the predicate turns true.
template <class P>
double bisect_bool(P&& pred, double lo, double hi, double eps = 1e-12, int max_iter = 200) {
  for (int i = 0; i < max_iter && (hi - lo) > eps; ++i) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

// Scans [lo, hi] on n points and returns the first and the last bracketing
// subinterval where the sign of f changes, plus the total number of changes.
struct SignScan {
  int changes = 0;
  double first_lo = 0, first_hi = 0;
  double last_lo = 0, last_hi = 0;
};

template <class F>
SignScan scan_sign_changes(F&& f, double lo, double hi, int n) {
  SignScan out;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    double fx = f(x);
    if (prev_f == 0.0 || (fx > 0) != (prev_f > 0)) {
      if (out.changes == 0) {
        out.first_lo = prev_x;
        out.first_hi = x;
      }
      out.last_lo = prev_x;
      out.last_hi = x;
      ++out.changes;
    }
    prev_x = x;
    prev_f = fx;
  }
  return out;
}

}  // namespace tvball
