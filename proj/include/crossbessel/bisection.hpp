#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "crossbessel/errors.hpp"

namespace crossbessel {

struct BisectionResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double f_root = 0.0;
  int iterations = 0;
};

// Plain bisection on a sign change. Stops once the bracket is no wider than
// xtol and |f(midpoint)| <= ftol, or when the bracket cannot shrink further
// in binary64.
template <typename F>
BisectionResult bisect(F&& f, double lo, double hi, double xtol, int max_iterations = 200,
                       double ftol = std::numeric_limits<double>::infinity()) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0.0, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NoSignChangeError("bisection: f has the same sign at " + std::to_string(lo) +
                            " and " + std::to_string(hi));
  }
  BisectionResult r{0.5 * (lo + hi), lo, hi, 0.0, 0};
  for (int it = 1; it <= max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    r.iterations = it;
    if (fm == 0.0) return {mid, lo, hi, 0.0, it};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    r.root = next;
    r.lo = lo;
    r.hi = hi;
    const bool stalled = next <= lo || next >= hi;
    if (hi - lo <= xtol || stalled) {
      r.f_root = f(next);
      if (std::fabs(r.f_root) <= ftol || stalled) return r;
    }
  }
  throw NonConvergenceError("bisection: iteration budget exhausted");
}

}  // namespace crossbessel
