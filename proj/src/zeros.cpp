#include "crossbessel/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crossbessel/bisection.hpp"
#include "crossbessel/cross_product.hpp"
#include "crossbessel/specfun.hpp"

namespace crossbessel {

namespace {

constexpr double kScanStep = std::numbers::pi / 8.0;
constexpr int kBisectionBudget = 200;

void check_count(int count) {
  if (count < 1) throw DomainError("zero count must be at least 1");
}

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("zero tolerance must be positive");
}

}  // namespace

std::string_view to_string(ZeroKind kind) { return kind == ZeroKind::J ? "J" : "CROSS"; }

ZeroKind zero_kind_from_string(std::string_view text) {
  if (text == "J" || text == "j") return ZeroKind::J;
  if (text == "CROSS" || text == "cross" || text == "gamma") return ZeroKind::Cross;
  throw DomainError("unknown zero kind '" + std::string(text) + "'");
}

double mcmahon_guess(Order nu, int n) {
  if (n < 1) throw DomainError("mcmahon_guess: n must be >= 1");
  const double v = nu.value();
  const double beta = (n + 0.5 * v - 0.25) * std::numbers::pi;
  return beta - (4.0 * v * v - 1.0) / (8.0 * beta);
}

double j_scan_value(Order nu, double x) {
  if (x <= kSeriesArgumentCap) return bessel_j(nu, x).value;
  return bessel_j_pair_recurrence(nu, x).first;
}

double phi_scan_value(Order nu, double x) {
  if (x <= kSeriesArgumentCap) return phi_direct(nu, x).value;
  const auto [j0, j1] = bessel_j_pair_recurrence(nu, x);
  return j1 + j0 * ratio_i_continued_fraction(nu, x);
}

ZeroTable j_zeros(Order nu, int count, double tol) {
  check_count(count);
  check_tol(tol);
  ZeroTable table{nu, ZeroKind::J, tol, {}, {}};
  table.zeros.reserve(count);
  table.brackets.reserve(count);

  // j_{nu,1} > nu for nu >= 0, which keeps the start left of the first zero
  // even where the asymptotic hint runs ahead of it.
  double lo = std::max(tol, std::min(mcmahon_guess(nu, 1) - 0.5 * std::numbers::pi, nu.value()));
  double flo = j_scan_value(nu, lo);
  auto f = [nu](double x) { return j_scan_value(nu, x); };
  const double scan_limit = mcmahon_guess(nu, count) + 4.0 * std::numbers::pi + 10.0;
  while (static_cast<int>(table.zeros.size()) < count) {
    const double hi = lo + kScanStep;
    if (hi > scan_limit) {
      throw StructuralError("j_zeros: scan passed x=" + std::to_string(hi) + " with only " +
                            std::to_string(table.zeros.size()) + " zeros found");
    }
    const double fhi = f(hi);
    if (flo == 0.0) {
      table.zeros.push_back(lo);
      table.brackets.push_back({lo, lo});
    } else if (std::signbit(flo) != std::signbit(fhi) && fhi != 0.0) {
      const BisectionResult r = bisect(f, lo, hi, tol, kBisectionBudget);
      table.zeros.push_back(r.root);
      table.brackets.push_back({lo, hi});
    }
    lo = hi;
    flo = fhi;
  }
  return table;
}

ZeroTable gamma_zeros(Order nu, int count, double tol, const ZeroTable& j_nu,
                      const ZeroTable& j_nu_plus_one) {
  check_count(count);
  check_tol(tol);
  if (j_nu.kind != ZeroKind::J || j_nu_plus_one.kind != ZeroKind::J) {
    throw DomainError("gamma_zeros: companion tables must be J tables");
  }
  if (std::fabs(j_nu.nu.value() - nu.value()) > 1e-12 ||
      std::fabs(j_nu_plus_one.nu.value() - (nu.value() + 1.0)) > 1e-12) {
    throw DomainError("gamma_zeros: companion tables have the wrong orders");
  }
  if (static_cast<int>(j_nu.size()) < count + 1 ||
      static_cast<int>(j_nu_plus_one.size()) < count) {
    throw InsufficientDepthError("gamma_zeros: companion tables too shallow");
  }
  ZeroTable table{nu, ZeroKind::Cross, tol, {}, {}};
  auto f = [nu](double x) { return phi_scan_value(nu, x); };
  for (int n = 1; n <= count; ++n) {
    const double lo = j_nu[n];
    const double hi = std::min(j_nu[n + 1], j_nu_plus_one[n]);
    if (!(lo < hi)) {
      throw StructuralError("gamma_zeros: empty interlacing bracket at n=" + std::to_string(n));
    }
    const double flo = f(lo);
    const double fhi = f(hi);
    if (std::signbit(flo) == std::signbit(fhi)) {
      throw StructuralError("gamma_zeros: Phi_nu has no sign change on bracket n=" +
                            std::to_string(n));
    }
    const BisectionResult r = bisect(f, lo, hi, tol, kBisectionBudget);
    table.zeros.push_back(r.root);
    table.brackets.push_back({lo, hi});
  }
  return table;
}

ZeroTable gamma_zeros(Order nu, int count, double tol) {
  check_count(count);
  const ZeroTable a = j_zeros(nu, count + 1, tol);
  const ZeroTable b = j_zeros(nu.shifted(1.0), count, tol);
  return gamma_zeros(nu, count, tol, a, b);
}

InterlacingReport verify_interlacing(Order nu, int count) {
  check_count(count);
  const ZeroTable a = j_zeros(nu, count + 1, kDefaultZeroTol);
  const ZeroTable b = j_zeros(nu.shifted(1.0), count, kDefaultZeroTol);
  InterlacingReport report{nu, {}, true, std::numeric_limits<double>::infinity()};

  // The brackets built from the J tables would make the check circular, so
  // each gamma is located by an independent sign scan of Phi_nu instead.
  auto f = [nu](double x) { return phi_scan_value(nu, x); };
  double lo = kDefaultZeroTol;
  double flo = f(lo);
  std::vector<double> gammas;
  const double limit = a[count + 1] + std::numbers::pi;
  while (static_cast<int>(gammas.size()) < count && lo < limit) {
    const double hi = lo + kScanStep / 4.0;
    const double fhi = f(hi);
    if (std::signbit(flo) != std::signbit(fhi)) {
      gammas.push_back(bisect(f, lo, hi, kDefaultZeroTol, kBisectionBudget).root);
    }
    lo = hi;
    flo = fhi;
  }

  for (int n = 1; n <= count; ++n) {
    InterlacingEntry e;
    e.n = n;
    e.j_n = a[n];
    e.j_next = a[n + 1];
    e.j_shifted = b[n];
    if (n <= static_cast<int>(gammas.size())) {
      e.gamma_n = gammas[n - 1];
      e.margin_lower = e.gamma_n - e.j_n;
      e.margin_next = e.j_next - e.gamma_n;
      e.margin_shifted = e.j_shifted - e.gamma_n;
      e.pass = e.margin_lower > 0.0 && e.margin_next > 0.0 && e.margin_shifted > 0.0;
      report.min_margin =
          std::min({report.min_margin, e.margin_lower, e.margin_next, e.margin_shifted});
    } else {
      e.gamma_n = std::numeric_limits<double>::quiet_NaN();
      e.pass = false;
      report.min_margin = -std::numeric_limits<double>::infinity();
    }
    report.all_pass = report.all_pass && e.pass;
    report.entries.push_back(e);
  }
  return report;
}

MonotonicityReport monotonicity_scan(ZeroKind kind, int n, std::span<const double> nu_grid) {
  if (n < 1) throw DomainError("monotonicity_scan: n must be >= 1");
  if (nu_grid.size() < 2) throw DomainError("monotonicity_scan: grid needs at least two orders");
  for (std::size_t i = 0; i < nu_grid.size(); ++i) {
    if (!(nu_grid[i] > -1.0)) throw DomainError("monotonicity_scan: orders must exceed -1");
    if (i > 0 && !(nu_grid[i] > nu_grid[i - 1])) {
      throw DomainError("monotonicity_scan: grid must be strictly increasing");
    }
  }
  MonotonicityReport report;
  report.kind = kind;
  report.n = n;
  report.nu_grid.assign(nu_grid.begin(), nu_grid.end());
  for (double v : nu_grid) {
    const Order nu(v);
    const ZeroTable t = kind == ZeroKind::J ? j_zeros(nu, n) : gamma_zeros(nu, n);
    report.zero_values.push_back(t[n]);
  }
  report.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < report.zero_values.size(); ++i) {
    report.min_gap = std::min(report.min_gap, report.zero_values[i] - report.zero_values[i - 1]);
  }
  report.is_strictly_increasing = report.min_gap > 0.0;
  return report;
}

std::vector<double> order_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw DomainError("order_grid: need step > 0 and hi >= lo");
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-3));
  for (long i = 0; i <= count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

}  // namespace crossbessel
