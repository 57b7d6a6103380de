#include "crossbessel/criterion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crossbessel/bisection.hpp"
#include "crossbessel/compensated.hpp"
#include "crossbessel/cross_product.hpp"
#include "crossbessel/specfun.hpp"
#include "crossbessel/zeros.hpp"

namespace crossbessel {

namespace {

constexpr int kTailExplicitEnd = 10000;
// Relative size of the value at the pole below which the closed sums refuse
// to divide; corresponds to |first zero - 1| of about 1e-8.
constexpr double kUnitZeroGuard = 1e-8;
constexpr double kSumBracketMargin = 1e-7;

void check_zero_count(int n) {
  if (n < 1) throw DomainError("direct sums need at least one zero (N >= 1)");
}

CriterionReport direct_report(Order nu, SumKind which, const ZeroTable& zeros, int used) {
  if (zeros[1] <= 1.0) {
    throw FirstZeroInsideDiskError("first zero " + std::to_string(zeros[1]) +
                                   " lies inside the unit disk; Shah-Trimble inapplicable");
  }
  CompensatedSum acc;
  for (int n = 1; n <= used; ++n) {
    const double z = zeros[n];
    const double z2 = z * z;
    acc += 1.0 / ((z2 - 1.0) * (z2 + 1.0));
  }
  CriterionReport r;
  r.nu = nu;
  r.which = which;
  r.method = SumMethod::Direct;
  r.sum_value = acc.value();
  r.zeros_used = used;
  r.tail_estimate = direct_tail_estimate(nu, used);
  r.satisfies_bound = r.sum_value + r.tail_estimate <= 1.0;
  return r;
}

struct UnitValues {
  double j0, j1, i0, i1;
};

UnitValues at_unit(Order nu) {
  const Order nu1 = nu.shifted(1.0);
  return {bessel_j(nu, 1.0).value, bessel_j(nu1, 1.0).value, bessel_i(nu, 1.0).value,
          bessel_i(nu1, 1.0).value};
}

// s1 - 1 and s2 - 1 without the pole guards, for bracketing.
double s1_minus_one(Order nu) {
  const UnitValues u = at_unit(nu);
  const double phi = u.j1 * u.i0 + u.j0 * u.i1;
  const double phi_prime = 2.0 * u.j0 * u.i0 - phi;
  return 0.25 * (2.0 * nu.value() + 1.0 - phi_prime / phi) - 1.0;
}

double s2_minus_one(Order nu) {
  const UnitValues u = at_unit(nu);
  return 0.25 * (u.j1 / u.j0 - u.i1 / u.i0) - 1.0;
}

}  // namespace

std::string_view to_string(SumKind which) { return which == SumKind::Cross ? "cross" : "product"; }
std::string_view to_string(SumMethod method) {
  return method == SumMethod::Direct ? "direct" : "closed";
}
std::string_view to_string(EquationId id) {
  switch (id) {
    case EquationId::Th1Paper: return "th1-paper";
    case EquationId::Th1Sum: return "th1-sum";
    case EquationId::Th2Paper: return "th2-paper";
    case EquationId::Th2Sum: return "th2-sum";
  }
  return "th1-paper";
}

SumKind sum_kind_from_string(std::string_view text) {
  if (text == "cross") return SumKind::Cross;
  if (text == "product") return SumKind::Product;
  throw DomainError("unknown criterion kind '" + std::string(text) + "'");
}

SumMethod sum_method_from_string(std::string_view text) {
  if (text == "direct") return SumMethod::Direct;
  if (text == "closed") return SumMethod::Closed;
  throw DomainError("unknown method '" + std::string(text) + "'");
}

EquationId equation_from_string(std::string_view text) {
  for (EquationId id : {EquationId::Th1Paper, EquationId::Th1Sum, EquationId::Th2Paper,
                        EquationId::Th2Sum}) {
    if (text == to_string(id)) return id;
  }
  throw DomainError("unknown equation '" + std::string(text) + "'");
}

void DiskGrid::validate() const {
  if (radii < 1 || angles < 1) throw DomainError("disk grid needs radii >= 1 and angles >= 1");
  if (!(min_radius > 0.0) || !(min_radius <= max_radius) || !(max_radius <= 1.0 - 1e-9)) {
    throw DomainError("disk grid radii must satisfy 0 < min <= max <= 1 - 1e-9");
  }
}

double DiskGrid::radius(int i) const {
  if (radii == 1) return max_radius;
  const double frac = static_cast<double>(i) / static_cast<double>(radii - 1);
  return min_radius * std::pow(max_radius / min_radius, frac);
}

double direct_tail_estimate(Order order, int zeros_used) {
  const double nu = order.value();
  auto lower = [nu](double n) { return (n + 0.5 * nu - 0.25) * std::numbers::pi - 1.0; };
  CompensatedSum acc;
  for (int n = zeros_used + 1; n <= kTailExplicitEnd; ++n) {
    const double b = lower(n);
    const double b2 = b * b;
    acc += 1.0 / ((b2 - 1.0) * (b2 + 1.0));
  }
  const double b_end = lower(std::max(kTailExplicitEnd, zeros_used));
  acc += 1.0 / (3.0 * std::numbers::pi * b_end * b_end * b_end * (1.0 - std::pow(b_end, -4.0)));
  return 2.0 * acc.value();
}

CriterionReport s1_direct(Order nu, int zeros_used) {
  check_zero_count(zeros_used);
  return direct_report(nu, SumKind::Cross, gamma_zeros(nu, zeros_used), zeros_used);
}

CriterionReport s2_direct(Order nu, int zeros_used) {
  check_zero_count(zeros_used);
  return direct_report(nu, SumKind::Product, j_zeros(nu, zeros_used), zeros_used);
}

CriterionReport s1_closed(Order nu) {
  const EvalResult phi = phi_direct(nu, 1.0);
  const EvalResult dphi = phi_prime(nu, 1.0);
  // At a zero of Phi_nu, Phi_nu' = 2 J_nu I_nu.
  const double scale = std::fabs(dphi.value + phi.value);
  if (std::fabs(phi.value) < kPoleFloor || std::fabs(phi.value) < kUnitZeroGuard * scale) {
    throw PoleError("s1_closed: Phi_nu(1) vanishes (gamma_{nu,1} = 1)");
  }
  CriterionReport r;
  r.nu = nu;
  r.which = SumKind::Cross;
  r.method = SumMethod::Closed;
  r.sum_value = 0.25 * (2.0 * nu.value() + 1.0 - dphi.value / phi.value);
  r.satisfies_bound = phi.value > 0.0 && r.sum_value <= 1.0;
  return r;
}

CriterionReport s2_closed(Order nu) {
  const UnitValues u = at_unit(nu);
  // At a zero of J_nu, J_nu' = -J_{nu+1}.
  if (std::fabs(u.j0) < kPoleFloor || std::fabs(u.j0) < kUnitZeroGuard * std::fabs(u.j1)) {
    throw PoleError("s2_closed: J_nu(1) vanishes (j_{nu,1} = 1)");
  }
  CriterionReport r;
  r.nu = nu;
  r.which = SumKind::Product;
  r.method = SumMethod::Closed;
  r.sum_value = 0.25 * (ratio_j(nu, 1.0) - ratio_i(nu, 1.0));
  r.satisfies_bound = u.j0 > 0.0 && r.sum_value <= 1.0;
  return r;
}

double theorem1_residual(Order nu) {
  const UnitValues u = at_unit(nu);
  const double v = nu.value();
  return (v - 1.0) * u.j0 * u.i1 + (v - 1.0) * u.j1 * u.i0 - u.j0 * u.i0;
}

double theorem2_residual(Order nu) {
  const UnitValues u = at_unit(nu);
  return u.j1 * u.i0 - u.j0 * u.i1 - (nu.value() + 1.0) * u.j0 * u.i0;
}

double equation_residual(EquationId id, Order nu) {
  switch (id) {
    case EquationId::Th1Paper: return theorem1_residual(nu);
    case EquationId::Th1Sum: return s1_minus_one(nu);
    case EquationId::Th2Paper: return theorem2_residual(nu);
    case EquationId::Th2Sum: return s2_minus_one(nu);
  }
  return 0.0;
}

double unit_first_zero_order(SumKind which) {
  // Phi_nu(1) and J_nu(1) are negative as nu -> -1+ (first zero inside the
  // disk) and positive at nu = -1/2 (first zero pi/2 resp. 2.365).
  auto f = [which](double v) {
    const Order nu(v);
    return which == SumKind::Cross ? phi_direct(nu, 1.0).value : bessel_j(nu, 1.0).value;
  };
  return bisect(f, -1.0 + 1e-9, -0.5, 1e-14).root;
}

ThresholdResult solve_threshold(EquationId id, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_threshold: tol must be positive");
  if (!(bracket.lo < bracket.hi) || !(bracket.lo > -1.0)) {
    throw DomainError("solve_threshold: need -1 < lo < hi");
  }
  Bracket search = bracket;
  if (id == EquationId::Th1Sum || id == EquationId::Th2Sum) {
    const double pole =
        unit_first_zero_order(id == EquationId::Th1Sum ? SumKind::Cross : SumKind::Product);
    search.lo = std::max(search.lo, pole + kSumBracketMargin);
    if (!(search.lo < search.hi)) {
      throw DomainError("solve_threshold: bracket lies left of the sum's pole at nu=" +
                        std::to_string(pole));
    }
  }
  auto f = [id](double v) { return equation_residual(id, Order(v)); };
  const BisectionResult r = bisect(f, search.lo, search.hi, tol, 200, tol);
  return {id, r.root, search, r.f_root, r.iterations};
}

StarlikeResult starlike_min_re(SumKind which, Order nu, const DiskGrid& grid) {
  grid.validate();
  const CoefficientTable table =
      which == SumKind::Cross ? cross_coefficients(nu) : product_coefficients(nu);
  StarlikeResult out;
  out.min_re = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.radii; ++i) {
    const double r = grid.radius(i);
    for (int k = 0; k < grid.angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / grid.angles;
      const std::complex<double> t = std::polar(r, theta);
      const LogDerivativeParts parts = f_log_derivative_parts(table, t);
      if (parts.denominator_underflow) {
        out.denominator_underflow = true;
        continue;
      }
      if (parts.value.real() < out.min_re) {
        out.min_re = parts.value.real();
        out.argmin = t;
      }
    }
  }
  out.passes = !out.denominator_underflow && out.min_re > kStarlikeFloor;
  return out;
}

Th2Comparison compare_th2(Bracket bracket) {
  Th2Comparison c;
  c.paper = solve_threshold(EquationId::Th2Paper, bracket);
  c.sum = solve_threshold(EquationId::Th2Sum, bracket);
  c.root_difference = c.paper.root - c.sum.root;
  c.s2_at_paper_root = s2_closed(Order(c.paper.root)).sum_value;
  return c;
}

nlohmann::json to_json(const CriterionReport& r) {
  return {{"nu", r.nu.value()},
          {"which", std::string(to_string(r.which))},
          {"method", std::string(to_string(r.method))},
          {"sum", r.sum_value},
          {"zeros_used", r.zeros_used},
          {"tail", r.tail_estimate},
          {"satisfies_bound", r.satisfies_bound}};
}

nlohmann::json to_json(const ThresholdResult& r) {
  return {{"equation_id", std::string(to_string(r.equation_id))},
          {"root", r.root},
          {"bracket", {r.bracket.lo, r.bracket.hi}},
          {"residual", r.residual_at_root},
          {"iterations", r.iterations}};
}

nlohmann::json to_json(const StarlikeResult& r) {
  return {{"min_re", r.min_re},
          {"argmin", {r.argmin.real(), r.argmin.imag()}},
          {"denominator_underflow", r.denominator_underflow},
          {"passes", r.passes}};
}

nlohmann::json to_json(const Th2Comparison& c) {
  return {{"th2_paper", to_json(c.paper)},
          {"th2_sum", to_json(c.sum)},
          {"root_difference", c.root_difference},
          {"s2_at_paper_root", c.s2_at_paper_root},
          {"note",
           "informational: th2-paper carries the factor (nu+1), th2-sum is the "
           "Shah-Trimble sum identity with the factor 4; a root difference is expected"}};
}

}  // namespace crossbessel
