// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "crossbessel/criterion.hpp"
#include "crossbessel/cross_product.hpp"
#include "crossbessel/poly.hpp"
#include "crossbessel/zeros.hpp"
#include "oracles.hpp"

using namespace crossbessel;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s %2d  %s  (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void threshold_nu_star() {
  const auto t0 = Clock::now();
  const double root = solve_threshold(EquationId::Th1Paper, {-0.99, -0.5}).root;
  const double dt = seconds_since(t0);
  report(1, std::fabs(root + 0.9427) <= 5e-3 && dt < 1.0, "th1-paper root = -0.9427 +- 5e-3, < 1 s",
         fmt("root=%.12f, %.3f s", root, dt));
}

void threshold_nu_star_2() {
  const double root = solve_threshold(EquationId::Th2Paper, {-0.9, 0.2}).root;
  report(2, std::fabs(root + 0.4336) <= 5e-3, "th2-paper root = -0.4336 +- 5e-3",
         fmt("root=%.12f", root));
}

void algebraic_equivalence() {
  const double a = solve_threshold(EquationId::Th1Paper, {-0.99, -0.5}).root;
  const double b = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5}).root;
  report(3, std::fabs(a - b) <= 1e-8, "|root(th1-paper) - root(th1-sum)| <= 1e-8",
         fmt("diff=%.3e", std::fabs(a - b)));
}

void th2_audit() {
  bool ok = true;
  double worst = 0.0;
  for (double v : {-0.5, -0.25, 0.0, 0.5, 1.0}) {
    const CriterionReport d = s2_direct(Order(v), 6);
    const double gap = std::fabs(d.sum_value + d.tail_estimate - s2_closed(Order(v)).sum_value);
    ok = ok && gap <= 2.0 * d.tail_estimate;
    worst = std::fmax(worst, gap / (2.0 * d.tail_estimate));
  }
  const Th2Comparison c = compare_th2();
  std::printf("     th2 comparison: %s\n", to_json(c).dump().c_str());
  report(4, ok, "s2_closed vs s2_direct + tail within 2x tail; comparison generated",
         fmt("max gap/(2 tail)=%.3f, root difference=%.6f", worst, c.root_difference));
}

void s1_at_threshold() {
  const double root = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5}).root;
  const CriterionReport d = s1_direct(Order(root), 6);
  const double total = d.sum_value + d.tail_estimate;
  const double g1 = gamma_zeros(Order(root), 1)[1];
  std::printf("     gamma_{nu,1} at nu=%.17g: %.17g (reference 1.1639)\n", root, g1);
  report(5, std::fabs(total - 1.0) <= 1e-3 && std::fabs(g1 - 1.1639) <= 0.05,
         "s1_direct(N=6) + tail = 1 +- 1e-3; gamma_1 = 1.1639 +- 0.05",
         fmt("sum=%.9f, gamma_1=%.9f", total, g1));
}

void closed_form_zeros() {
  const double jm = j_zeros(Order(-0.5), 1)[1];
  const ZeroTable jp = j_zeros(Order(0.5), 6);
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) worst = std::fmax(worst, std::fabs(jp[n] - n * oracle::pi));
  const ZeroTable g = gamma_zeros(Order(-0.5), 2);
  const double o1 = oracle::gamma_minus_half(1);
  const double o2 = oracle::gamma_minus_half(2);
  const bool ok = std::fabs(jm - oracle::pi / 2) <= 1e-10 && worst <= 1e-9 &&
                  std::fabs(g[1] - 2.3650204) <= 1e-6 && std::fabs(g[2] - 5.4978039) <= 1e-6 &&
                  std::fabs(g[1] - o1) <= 1e-6 && std::fabs(g[2] - o2) <= 1e-6;
  report(6, ok, "closed-form zeros of J_{+-1/2} and Phi_{-1/2}",
         fmt("|j-pi/2|=%.2e, max|j_n-n pi|=%.2e, |gamma_1-oracle|=%.2e", std::fabs(jm - oracle::pi / 2),
             worst, std::fabs(g[1] - o1)));
}

void series_equivalence() {
  double worst = 0.0;
  double worst10 = 0.0;
  for (double v : {-0.9, -0.5, 0.0, 1.7, 5.0}) {
    for (double z : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      worst = std::fmax(worst, oracle::rel(phi_series(Order(v), z).value, phi_direct(Order(v), z).value));
    }
    worst10 = std::fmax(worst10, oracle::rel(phi_series(Order(v), 10.0).value, phi_direct(Order(v), 10.0).value));
  }
  report(7, worst <= 1e-10 && worst10 <= 1e-8, "phi_series = phi_direct (1e-10; 1e-8 at z=10)",
         fmt("max rel=%.2e, at z=10 %.2e", worst, worst10));
}

void hadamard() {
  bool ok = true;
  double worst_diff = 0.0;
  double worst_bound = 0.0;
  for (double v : {-0.5, 0.0, 1.0}) {
    const ZeroTable g = gamma_zeros(Order(v), 50);
    const CoefficientTable c = cross_coefficients(Order(v));
    for (double z : {0.5, 1.0, 2.0}) {
      const double h = hadamard_partial(Order(v), z, g, 50);
      const double bound = hadamard_tail_bound(Order(v), z, 50, h);
      const double diff = std::fabs(psi_series(c, z) - h);
      ok = ok && diff <= bound && bound <= 1e-6;
      worst_diff = std::fmax(worst_diff, diff);
      worst_bound = std::fmax(worst_bound, bound);
    }
  }
  report(8, ok, "|Psi - Hadamard(N=50)| within tail bound <= 1e-6",
         fmt("max diff=%.3e, max bound=%.3e", worst_diff, worst_bound));
}

void interlacing_monotonicity() {
  bool ok = true;
  for (double v : {-0.95, -0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0}) ok = ok && verify_interlacing(Order(v), 5).all_pass;
  const bool inter = ok;
  const std::vector<double> grid = order_grid(-0.95, 2.0, 0.05);
  double min_gap = 1e300;
  for (ZeroKind kind : {ZeroKind::Cross, ZeroKind::J}) {
    for (int n : {1, 2}) {
      const MonotonicityReport r = monotonicity_scan(kind, n, grid);
      ok = ok && r.is_strictly_increasing;
      min_gap = std::fmin(min_gap, r.min_gap);
    }
  }
  report(9, ok, "interlacing for 8 orders, n <= 5; zeros increase in nu",
         std::string(inter ? "interlacing ok" : "interlacing failed") + fmt(", min gap=%.4f", min_gap));
}

void jacobi() {
  std::mt19937_64 rng(20240229);
  std::uniform_real_distribution<double> d(-0.99, 5.0);
  double rec = 0.0;
  double sym = 0.0;
  double odd = 0.0;
  double key = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const double a = d(rng);
    const double b = d(rng);
    const double v = d(rng);
    for (int n = 0; n <= 20; ++n) {
      const double pa = jacobi_p0(n, a + 1, b);
      const double pb = jacobi_p0(n, a, b + 1);
      const double p0 = jacobi_p0(n, a, b);
      rec = std::fmax(rec, std::fabs(pa + pb - 2 * p0) / std::fmax(std::fmax(std::fabs(pa), std::fabs(pb)), std::fabs(p0)));
      const double closed = jacobi_symmetric_zero(n, Order(v));
      const double scale = std::fabs(jacobi_p0(n, v + 1, v));
      if (n % 2 == 0) {
        sym = std::fmax(sym, oracle::rel(jacobi_p0(n, v, v), closed));
      } else {
        odd = std::fmax(odd, std::fmax(std::fabs(closed), std::fabs(jacobi_p0(n, v, v)) / scale));
      }
      key = std::fmax(key, std::fabs(jacobi_p0(n, v + 1, v) + jacobi_p0(n, v, v + 1) - 2 * closed) / scale);
    }
  }
  const bool ok = rec <= 1e-12 && sym <= 1e-12 && odd <= 1e-12 && key <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof buf, "recurrence %.1e, symmetric %.1e, odd %.1e, sum %.1e", rec, sym, odd, key);
  report(10, ok, "Jacobi identities at the origin within 1e-12", buf);
}

void starlike() {
  const double root = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5}).root;
  bool ok = true;
  double min_re = 1e300;
  for (double v : {root, 0.0, 1.0}) {
    const StarlikeResult r = starlike_min_re(SumKind::Cross, Order(v));
    ok = ok && r.min_re > -1e-12 && !r.denominator_underflow;
    min_re = std::fmin(min_re, r.min_re);
  }
  for (double v : {-0.5, 0.5, 1.0}) {
    const StarlikeResult r = starlike_min_re(SumKind::Product, Order(v));
    ok = ok && r.min_re > -1e-12 && !r.denominator_underflow;
    min_re = std::fmin(min_re, r.min_re);
  }
  report(11, ok, "min Re(t f'/f) > -1e-12 on the 64x256 grid", fmt("min=%.6e", min_re));
}

void product_sum_half() {
  const double closed = s2_closed(Order(0.5)).sum_value;
  const double explicit_sum = oracle::sum_npi();
  report(12, std::fabs(closed - 0.011218) <= 1e-5 && std::fabs(closed - explicit_sum) <= 1e-5,
         "s2_closed(1/2) = 0.011218 +- 1e-5 vs explicit sum over n pi",
         fmt("closed=%.12f, explicit=%.12f", closed, explicit_sum));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  void (*const criteria[])() = {threshold_nu_star, threshold_nu_star_2, algebraic_equivalence,
                                th2_audit,         s1_at_threshold,     closed_form_zeros,
                                series_equivalence, hadamard,           interlacing_monotonicity,
                                jacobi,            starlike,            product_sum_half};
  for (auto* c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL    exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 12 criteria failed, %.2f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
