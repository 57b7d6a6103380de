#pragma once

// Positive zeros j_{nu,n} of J_nu and gamma_{nu,n} of the cross-product
// Phi_nu, with interlacing-derived brackets, and the structural scans over
// the order nu.

#include <span>
#include <string>
#include <vector>

#include "crossbessel/order.hpp"
#include "crossbessel/zero_table.hpp"

namespace crossbessel {

inline constexpr double kDefaultZeroTol = 1e-12;

// beta - (4 nu^2 - 1) / (8 beta),  beta = (n + nu/2 - 1/4) pi.
double mcmahon_guess(Order nu, int n);

// Sign-faithful evaluations used by the root scans. Within the series range
// these are the series values; beyond it J_nu comes from the backward
// recurrence and Phi_nu is replaced by Phi_nu / I_nu.
double j_scan_value(Order nu, double x);
double phi_scan_value(Order nu, double x);

ZeroTable j_zeros(Order nu, int count, double tol = kDefaultZeroTol);

// Zeros of Phi_nu inside (j_{nu,n}, min(j_{nu,n+1}, j_{nu+1,n})). The companion
// tables must hold the zeros of J_nu (count+1) and J_{nu+1} (count).
ZeroTable gamma_zeros(Order nu, int count, double tol, const ZeroTable& j_nu,
                      const ZeroTable& j_nu_plus_one);
ZeroTable gamma_zeros(Order nu, int count, double tol = kDefaultZeroTol);

struct InterlacingEntry {
  int n = 0;
  double j_n = 0.0;          // j_{nu,n}
  double gamma_n = 0.0;      // gamma_{nu,n}
  double j_next = 0.0;       // j_{nu,n+1}
  double j_shifted = 0.0;    // j_{nu+1,n}
  double margin_lower = 0.0;          // gamma_n - j_n
  double margin_next = 0.0;           // j_next - gamma_n
  double margin_shifted = 0.0;        // j_shifted - gamma_n
  bool pass = false;
};

struct InterlacingReport {
  Order nu;
  std::vector<InterlacingEntry> entries;
  bool all_pass = false;
  double min_margin = 0.0;
};

InterlacingReport verify_interlacing(Order nu, int count);

struct MonotonicityReport {
  ZeroKind kind = ZeroKind::J;
  int n = 1;
  std::vector<double> nu_grid;
  std::vector<double> zero_values;
  bool is_strictly_increasing = false;
  double min_gap = 0.0;
};

// n-th zero along an increasing grid of orders (length >= 2, all > -1).
MonotonicityReport monotonicity_scan(ZeroKind kind, int n, std::span<const double> nu_grid);

// Evenly spaced grid lo, lo+step, ..., up to hi (inclusive within step/1000).
std::vector<double> order_grid(double lo, double hi, double step);

}  // namespace crossbessel
