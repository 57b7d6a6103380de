#include "crossbessel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "crossbessel/criterion.hpp"
#include "crossbessel/cross_product.hpp"
#include "crossbessel/poly.hpp"
#include "crossbessel/specfun.hpp"
#include "crossbessel/zeros.hpp"

namespace crossbessel {

namespace {

using nlohmann::json;

constexpr std::uint64_t kSeed = 20240229;

Check make(std::string suite, std::string name, bool passed, json detail) {
  return {std::move(suite), std::move(name), passed, false, std::move(detail)};
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

// sin z cosh z + cos z sinh z, proportional to Phi_{-1/2}(z).
double phi_minus_half_kernel(double z) {
  return std::sin(z) * std::cosh(z) + std::cos(z) * std::sinh(z);
}

void series_suite(std::vector<Check>& out) {
  const std::string s = "series";
  {
    double worst = 0.0;
    bool ok = true;
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      for (auto half : {HalfOrder::PlusHalf, HalfOrder::MinusHalf}) {
        const Order nu(half == HalfOrder::PlusHalf ? 0.5 : -0.5);
        for (auto kind : {BesselKind::J, BesselKind::I}) {
          const double series =
              kind == BesselKind::J ? bessel_j(nu, x).value : bessel_i(nu, x).value;
          const double exact = half_integer_closed_form(kind, half, x);
          const double scale = std::max(1.0, std::fabs(exact));
          const double limit = (kind == BesselKind::J && x == 10.0) ? 1e-8 : 1e-11;
          const double err = std::fabs(series - exact) / scale;
          worst = std::max(worst, err);
          ok = ok && err <= limit;
        }
      }
    }
    out.push_back(make(s, "half-integer closed forms", ok, {{"max_scaled_error", worst}}));
  }
  {
    // x J_nu' - nu J_nu + x J_{nu+1} = 0 and x I_nu' - nu I_nu - x I_{nu+1} = 0
    double worst = 0.0;
    const double h = 1e-5;
    for (double v : {-0.7, 0.0, 1.5}) {
      const Order nu(v);
      for (double x : {0.5, 2.0, 7.0}) {
        const double dj = (bessel_j(nu, x + h).value - bessel_j(nu, x - h).value) / (2 * h);
        const double di = (bessel_i(nu, x + h).value - bessel_i(nu, x - h).value) / (2 * h);
        const double j0 = bessel_j(nu, x).value;
        const double j1 = bessel_j(nu.shifted(1), x).value;
        const double i0 = bessel_i(nu, x).value;
        const double i1 = bessel_i(nu.shifted(1), x).value;
        const double rj = std::fabs(x * dj - v * j0 + x * j1) /
                          std::max({std::fabs(x * dj), std::fabs(v * j0), std::fabs(x * j1)});
        const double ri = std::fabs(x * di - v * i0 - x * i1) /
                          std::max({std::fabs(x * di), std::fabs(v * i0), std::fabs(x * i1)});
        worst = std::max({worst, rj, ri});
      }
    }
    out.push_back(make(s, "recurrence residual", worst <= 1e-6, {{"max_relative", worst}}));
  }
  {
    double worst = 0.0;
    double worst10 = 0.0;
    for (double v : {-0.9, -0.5, 0.0, 1.7, 5.0}) {
      for (double z : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double d = rel_diff(phi_series(Order(v), z).value, phi_direct(Order(v), z).value);
        (z == 10.0 ? worst10 : worst) = std::max(z == 10.0 ? worst10 : worst, d);
      }
    }
    out.push_back(make(s, "power series equals J_{nu+1}I_nu + J_nu I_{nu+1}",
                       worst <= 1e-10 && worst10 <= 1e-8,
                       {{"max_relative", worst}, {"max_relative_z10", worst10}}));
  }
  {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> nu_dist(-0.9, 3.0);
    std::uniform_real_distribution<double> z_dist(0.3, 6.0);
    double worst = 0.0;
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
      const Order nu(nu_dist(rng));
      const double z = z_dist(rng);
      const double fd = (phi_direct(nu, z + h).value - phi_direct(nu, z - h).value) / (2 * h);
      worst = std::max(worst, std::fabs(fd - phi_prime(nu, z).value));
    }
    out.push_back(make(s, "derivative identity vs finite difference", worst <= 1e-6,
                       {{"max_abs", worst}}));
  }
  {
    const Order nu(0.5);
    const ZeroTable t = j_zeros(nu, 200);
    const double mj = mittag_leffler_ratio(BesselKind::J, nu, 1.0, t, 200);
    const double mi = mittag_leffler_ratio(BesselKind::I, nu, 1.0, t, 200);
    const double dj = std::fabs(mj - ratio_j(nu, 1.0));
    const double di = std::fabs(mi - ratio_i(nu, 1.0));
    out.push_back(make(s, "Mittag-Leffler partial sums (N=200)", dj <= 5e-3 && di <= 5e-3,
                       {{"j_error", dj}, {"i_error", di}}));
  }
  {
    double worst = 0.0;
    for (double v : {-0.9, -0.5, 0.0, 1.7}) {
      const Order nu(v);
      const CoefficientTable a = pi_general(v + 1.0, nu, 60);
      const CoefficientTable b = pi_general(v, nu.shifted(1.0), 60);
      for (double z : {0.5, 1.0, 2.0, 5.0}) {
        const double w = 0.25 * z * z;
        const double sum = coefficient_sum(a, w) + coefficient_sum(b, w);
        const double phi = std::pow(0.5 * z, 2.0 * v + 1.0) * sum;
        worst = std::max(worst, rel_diff(phi, phi_series(nu, z).value));
      }
    }
    out.push_back(make(s, "symmetric product sum reproduces the series", worst <= 1e-10,
                       {{"max_relative", worst}}));
  }
  {
    double worst_excess = -1.0;
    double worst_bound = 0.0;
    for (double v : {-0.5, 0.0, 1.0}) {
      const Order nu(v);
      const ZeroTable g = gamma_zeros(nu, 50);
      const CoefficientTable c = cross_coefficients(nu);
      for (double z : {0.5, 1.0, 2.0}) {
        const double h = hadamard_partial(nu, z, g, 50);
        const double bound = hadamard_tail_bound(nu, z, 50, h);
        worst_excess = std::max(worst_excess, std::fabs(psi_series(c, z) - h) - bound);
        worst_bound = std::max(worst_bound, bound);
      }
    }
    out.push_back(make(s, "Hadamard product (N=50) within tail bound",
                       worst_excess <= 0.0 && worst_bound <= 1e-6,
                       {{"max_excess", worst_excess}, {"max_bound", worst_bound}}));
  }
}

void zeros_suite(std::vector<Check>& out) {
  const std::string s = "zeros";
  {
    const double jm = j_zeros(Order(-0.5), 1)[1];
    const ZeroTable jp = j_zeros(Order(0.5), 6);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) worst = std::max(worst, std::fabs(jp[n] - n * std::numbers::pi));
    const ZeroTable g = gamma_zeros(Order(-0.5), 2);
    const double e1 = std::fabs(g[1] - 2.3650204);
    const double e2 = std::fabs(g[2] - 5.4978039);
    const double k1 = std::fabs(phi_minus_half_kernel(g[1]));
    out.push_back(make(s, "closed-form zeros",
                       std::fabs(jm - std::numbers::pi / 2) <= 1e-10 && worst <= 1e-9 &&
                           e1 <= 1e-6 && e2 <= 1e-6,
                       {{"j_minus_half_1_error", std::fabs(jm - std::numbers::pi / 2)},
                        {"j_half_max_error", worst},
                        {"gamma_1_error", e1},
                        {"gamma_2_error", e2},
                        {"kernel_at_gamma_1", k1}}));
  }
  {
    bool ok = true;
    double min_margin = 1e300;
    for (double v : {-0.95, -0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0}) {
      const InterlacingReport r = verify_interlacing(Order(v), 5);
      ok = ok && r.all_pass;
      min_margin = std::min(min_margin, r.min_margin);
    }
    out.push_back(make(s, "interlacing", ok, {{"min_margin", min_margin}}));
  }
  {
    const std::vector<double> grid = order_grid(-0.95, 2.0, 0.05);
    bool ok = true;
    json gaps = json::object();
    for (ZeroKind kind : {ZeroKind::Cross, ZeroKind::J}) {
      for (int n : {1, 2}) {
        const MonotonicityReport r = monotonicity_scan(kind, n, grid);
        ok = ok && r.is_strictly_increasing;
        gaps[std::string(to_string(kind)) + "_" + std::to_string(n)] = r.min_gap;
      }
    }
    out.push_back(make(s, "zeros increase with nu", ok, {{"min_gaps", gaps}}));
  }
  {
    double worst = 0.0;
    for (double v : {-0.9, -0.5, 0.0, 1.0, 3.0}) {
      const Order nu(v);
      const ZeroTable g = gamma_zeros(nu, 5);
      for (std::size_t n = 1; n <= g.size(); ++n) {
        if (g[n] > kSeriesArgumentCap) continue;
        const double scale = std::max(std::fabs(phi_direct(nu, g.brackets[n - 1].lo).value),
                                      std::fabs(phi_direct(nu, g.brackets[n - 1].hi).value));
        worst = std::max(worst, std::fabs(phi_direct(nu, g[n]).value) / scale);
      }
    }
    out.push_back(make(s, "refined zeros annihilate Phi", worst <= 1e-9,
                       {{"max_scaled_residual", worst}}));
  }
  {
    // phi_nu = J_{nu+1}/J_nu + I_{nu+1}/I_nu = sum 4 j^2 z / (j^4 - z^4), so
    // phi_nu' = sum 4 j^2 (j^4 + 3 z^4) / (j^4 - z^4)^2. Summed as
    // 4 sum j^-2 = 1/(nu+1) plus the remainder (20 j^4 z^4 - 4 z^8)/(j^2 (j^4 - z^4)^2)
    // over 200 zeros. The transposed form 4 j^2 (3 j^4 + z^4)/(j^4 - z^4)^2 is
    // reported alongside for comparison only.
    double min_fd = 1e300;
    double worst = 0.0;
    double transposed = 0.0;
    const double h = 1e-5;
    for (double v : {-0.5, 0.0, 1.0}) {
      const Order nu(v);
      const ZeroTable t = j_zeros(nu, 200);
      double left = 0.0;
      for (int interval = 0; interval < 3; ++interval) {
        const double right = t[interval + 1];
        for (int i = 0; i < 10; ++i) {
          const double z = left + (right - left) * (0.05 + 0.9 * i / 9.0);
          auto phi = [&](double x) { return ratio_j(nu, x) + ratio_i(nu, x); };
          const double fd = (phi(z + h) - phi(z - h)) / (2 * h);
          double rem = 0.0;
          double rem_t = 0.0;
          const double z4 = z * z * z * z;
          for (double j : t.zeros) {
            const double j2 = j * j;
            const double j4 = j2 * j2;
            const double d2 = j2 * (j4 - z4) * (j4 - z4);
            rem += (20.0 * j4 * z4 - 4.0 * z4 * z4) / d2;
            rem_t += (28.0 * j4 * z4 - 12.0 * z4 * z4) / d2;
          }
          const double series = 1.0 / (v + 1.0) + rem;
          const double series_t = 3.0 / (v + 1.0) + rem_t;
          const double scale = std::max(1.0, std::fabs(series));
          min_fd = std::min(min_fd, fd);
          worst = std::max(worst, std::fabs(fd - series) / scale);
          transposed = std::max(transposed, std::fabs(fd - series_t) / scale);
        }
        left = right;
      }
    }
    out.push_back(make(s, "phi_nu' positive and equal to its zero series",
                       min_fd > 0.0 && worst <= 1e-4,
                       {{"min_derivative", min_fd},
                        {"max_scaled_mismatch", worst},
                        {"transposed_form_mismatch", transposed}}));
  }
}

void jacobi_suite(std::vector<Check>& out) {
  const std::string s = "jacobi";
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> param(-0.99, 5.0);
  double rec = 0.0;
  double sym = 0.0;
  double odd = 0.0;
  double key = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const double a = param(rng);
    const double b = param(rng);
    const double v = param(rng);
    for (int n = 0; n <= 20; ++n) {
      const double p0 = jacobi_p0(n, a, b);
      const double pa = jacobi_p0(n, a + 1.0, b);
      const double pb = jacobi_p0(n, a, b + 1.0);
      rec = std::max(rec, std::fabs(pa + pb - 2.0 * p0) /
                              std::max({std::fabs(pa), std::fabs(pb), std::fabs(p0)}));
      const double closed = jacobi_symmetric_zero(n, Order(v));
      const double direct = jacobi_p0(n, v, v);
      if (n % 2 == 0) {
        sym = std::max(sym, rel_diff(direct, closed));
      } else {
        odd = std::max(odd, std::fabs(closed));
        odd = std::max(odd, std::fabs(direct) / std::max(1.0, std::fabs(jacobi_p0(n, v + 1, v))));
      }
      const double l = jacobi_p0(n, v + 1.0, v) + jacobi_p0(n, v, v + 1.0);
      key = std::max(key, std::fabs(l - 2.0 * closed) /
                              std::max({std::fabs(jacobi_p0(n, v + 1.0, v)), std::fabs(closed),
                                        1e-300}));
    }
  }
  out.push_back(make(s, "recurrence at the origin", rec <= 1e-12, {{"max_relative", rec}}));
  out.push_back(make(s, "symmetric closed form", sym <= 1e-12, {{"max_relative", sym}}));
  out.push_back(make(s, "odd index vanishes", odd <= 1e-12, {{"max_scaled", odd}}));
  out.push_back(make(s, "P^(nu+1,nu) + P^(nu,nu+1) = 2 P^(nu,nu) at 0", key <= 1e-12,
                     {{"max_relative", key}}));

  // sum_m C(n,m) (-1)^m / (Gamma(mu+n-m+1) Gamma(nu+m+1))
  //   = 2F1(-n, -mu-n; nu+1; -1) / (Gamma(nu+1) Gamma(mu+n+1))
  double binom = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const double mu = param(rng);
    const double v = param(rng);
    for (int n = 0; n <= 15; ++n) {
      long double lhs = 0.0L;
      long double mag = 0.0L;
      long double c = 1.0L;
      for (int m = 0; m <= n; ++m) {
        const long double t = c * ((m % 2) ? -1.0L : 1.0L) /
                              (std::tgamma(static_cast<long double>(mu + n - m + 1)) *
                               std::tgamma(static_cast<long double>(v + m + 1)));
        lhs += t;
        mag += std::fabs(t);
        c = c * (n - m) / (m + 1);
      }
      const double rhs = f21_terminating(n, -mu - n, v + 1.0, -1.0) /
                         (std::tgamma(v + 1.0) * std::tgamma(mu + n + 1.0));
      binom = std::max(binom, static_cast<double>(std::fabs(lhs - rhs) / mag));
    }
  }
  out.push_back(make(s, "binomial sum equals terminating 2F1", binom <= 1e-12,
                     {{"max_relative", binom}}));
}

void criterion_suite(std::vector<Check>& out) {
  const std::string s = "criterion";
  const ThresholdResult th1 = solve_threshold(EquationId::Th1Paper, {-0.99, -0.5});
  const ThresholdResult th1s = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5});
  const ThresholdResult th2 = solve_threshold(EquationId::Th2Paper, {-0.9, 0.2});
  out.push_back(make(s, "nu* from the threshold equation", std::fabs(th1.root + 0.9427) <= 5e-3,
                     to_json(th1)));
  out.push_back(make(s, "nu_star from the threshold equation",
                     std::fabs(th2.root + 0.4336) <= 5e-3, to_json(th2)));
  out.push_back(make(s, "threshold equation equals sum = 1",
                     std::fabs(th1.root - th1s.root) <= 1e-8,
                     {{"th1_paper", th1.root}, {"th1_sum", th1s.root}}));
  {
    bool ok = true;
    json rows = json::array();
    for (double v : {-0.5, -0.25, 0.0, 0.5, 1.0}) {
      const CriterionReport d = s2_direct(Order(v), 6);
      const CriterionReport c = s2_closed(Order(v));
      const double gap = std::fabs(d.sum_value + d.tail_estimate - c.sum_value);
      ok = ok && gap <= 2.0 * d.tail_estimate;
      rows.push_back({{"nu", v}, {"closed", c.sum_value}, {"direct", d.sum_value},
                      {"tail", d.tail_estimate}});
    }
    out.push_back(make(s, "product sum: closed form vs zeros", ok, rows));
  }
  {
    bool ok = true;
    json rows = json::array();
    for (double v : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
      const CriterionReport d = s1_direct(Order(v), 6);
      const CriterionReport c = s1_closed(Order(v));
      const double gap = std::fabs(d.sum_value + d.tail_estimate - c.sum_value);
      ok = ok && gap <= 2.0 * d.tail_estimate;
      rows.push_back({{"nu", v}, {"closed", c.sum_value}, {"direct", d.sum_value},
                      {"tail", d.tail_estimate}});
    }
    out.push_back(make(s, "cross sum: closed form vs zeros", ok, rows));
  }
  {
    const CriterionReport d = s1_direct(Order(th1s.root), 6);
    const double g1 = gamma_zeros(Order(th1s.root), 1)[1];
    const double total = d.sum_value + d.tail_estimate;
    out.push_back(make(s, "cross sum equals 1 at the threshold",
                       std::fabs(total - 1.0) <= 1e-3 && std::fabs(g1 - 1.1639) <= 0.05,
                       {{"direct_plus_tail", total}, {"gamma_1", g1}}));
  }
  {
    bool dec1 = true;
    bool dec2 = true;
    double prev1 = 1e300;
    double prev2 = 1e300;
    for (double v : order_grid(-0.95, 3.0, 0.05)) {
      const double a = s1_closed(Order(v)).sum_value;
      dec1 = dec1 && a < prev1;
      prev1 = a;
      if (v > -0.75) {
        const double b = s2_closed(Order(v)).sum_value;
        dec2 = dec2 && b < prev2;
        prev2 = b;
      }
    }
    out.push_back(make(s, "sums decrease in nu", dec1 && dec2, {{"cross", dec1}, {"product", dec2}}));
  }
  {
    const bool above = s1_closed(Order(th1s.root + 1e-6)).satisfies_bound;
    const bool below = s1_closed(Order(th1s.root - 1e-6)).satisfies_bound;
    out.push_back(make(s, "bound switches at the threshold", above && !below,
                       {{"above", above}, {"below", below}}));
  }
  {
    const CriterionReport a = s1_closed(Order(-0.5));
    const CriterionReport b = s2_closed(Order(-0.5));
    out.push_back(make(s, "nu = -1/2 satisfies both criteria",
                       a.satisfies_bound && b.satisfies_bound,
                       {{"cross", a.sum_value}, {"product", b.sum_value}}));
  }
  {
    // explicit sum over n pi, integral tail
    double acc = 0.0;
    for (int n = 100000; n >= 1; --n) {
      const double x = n * std::numbers::pi;
      acc += 1.0 / (x * x * x * x - 1.0);
    }
    acc += 1.0 / (3.0 * std::pow(std::numbers::pi, 4) * std::pow(100000.5, 3));
    const double c = s2_closed(Order(0.5)).sum_value;
    out.push_back(make(s, "product sum at nu = 1/2", std::fabs(c - 0.011218) <= 1e-5 &&
                                                         std::fabs(c - acc) <= 1e-10,
                       {{"closed", c}, {"explicit", acc}}));
  }
  Check info = make(s, "th2 comparison", true, to_json(compare_th2()));
  info.informational = true;
  out.push_back(info);
}

void starlike_suite(std::vector<Check>& out) {
  const std::string s = "starlike";
  const double root = solve_threshold(EquationId::Th1Sum, {-0.99, -0.5}).root;
  json rows = json::array();
  bool ok = true;
  auto run = [&](SumKind which, double v) {
    const StarlikeResult r = starlike_min_re(which, Order(v));
    ok = ok && r.passes;
    json row = to_json(r);
    row["which"] = std::string(to_string(which));
    row["nu"] = v;
    rows.push_back(row);
  };
  for (double v : {root, 0.0, 1.0}) run(SumKind::Cross, v);
  for (double v : {-0.5, 0.5, 1.0}) run(SumKind::Product, v);
  out.push_back(make(s, "Re(t f'/f) > -1e-12 on the 64x256 disk grid", ok, rows));
}

}  // namespace

Suite suite_from_string(std::string_view text) {
  if (text == "all") return Suite::All;
  if (text == "series") return Suite::Series;
  if (text == "zeros") return Suite::Zeros;
  if (text == "jacobi") return Suite::Jacobi;
  if (text == "criterion") return Suite::Criterion;
  if (text == "starlike") return Suite::Starlike;
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

std::vector<Check> run_verification(Suite suite) {
  std::vector<Check> out;
  auto want = [suite](Suite s) { return suite == Suite::All || suite == s; };
  if (want(Suite::Series)) series_suite(out);
  if (want(Suite::Zeros)) zeros_suite(out);
  if (want(Suite::Jacobi)) jacobi_suite(out);
  if (want(Suite::Criterion)) criterion_suite(out);
  if (want(Suite::Starlike)) starlike_suite(out);
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed || c.informational; });
}

json to_json(const std::vector<Check>& checks) {
  json list = json::array();
  int failed = 0;
  for (const Check& c : checks) {
    list.push_back({{"suite", c.suite},
                    {"name", c.name},
                    {"passed", c.passed},
                    {"informational", c.informational},
                    {"detail", c.detail}});
    if (!c.passed && !c.informational) ++failed;
  }
  return {{"checks", list},
          {"total", checks.size()},
          {"failed", failed},
          {"passed", failed == 0}};
}

}  // namespace crossbessel
