#include "crossbessel/cross_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crossbessel/compensated.hpp"
#include "crossbessel/errors.hpp"
#include "crossbessel/poly.hpp"

namespace crossbessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kDiskMargin = 1e-9;
constexpr double kDiskTailTarget = 1e-14;
constexpr double kUnderflow = 1e-200;

void check_depth(int depth) {
  if (depth < 0) throw DomainError("coefficient depth must be non-negative");
}

void check_disk(const CoefficientTable& table, std::complex<double> t) {
  const double r = std::abs(t);
  if (!(r <= 1.0 - kDiskMargin)) {
    throw DomainError("disk functions need |t| <= 1 - 1e-9");
  }
  if (table.kind == CoefficientKind::General) {
    throw DomainError("disk functions are defined for Cross and Product tables only");
  }
  if (table.coeffs.empty()) throw InsufficientDepthError("empty coefficient table");
  const double tail = std::fabs(table.coeffs.back()) / (1.0 - r);
  if (table.depth() > 0 && tail > kDiskTailTarget) {
    throw InsufficientDepthError("coefficient table too shallow for |t| = " +
                                 std::to_string(r));
  }
}

}  // namespace

std::string_view to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Cross: return "cross";
    case CoefficientKind::Product: return "product";
    case CoefficientKind::General: return "general";
  }
  return "cross";
}

EvalResult phi_direct(Order nu, double z, const SeriesControl& ctl) {
  const Order nu1 = nu.shifted(1.0);
  const EvalResult j0 = bessel_j(nu, z, ctl);
  const EvalResult j1 = bessel_j(nu1, z, ctl);
  const EvalResult i0 = bessel_i(nu, z, ctl);
  const EvalResult i1 = bessel_i(nu1, z, ctl);
  EvalResult out;
  const double a = j1.value * i0.value;
  const double b = j0.value * i1.value;
  out.value = a + b;
  out.abs_error_estimate = std::fabs(j1.value) * i0.abs_error_estimate +
                           std::fabs(i0.value) * j1.abs_error_estimate +
                           std::fabs(j0.value) * i1.abs_error_estimate +
                           std::fabs(i1.value) * j0.abs_error_estimate +
                           kEps * (std::fabs(a) + std::fabs(b));
  out.terms_used = j0.terms_used + j1.terms_used + i0.terms_used + i1.terms_used;
  out.cancellation_flag = j0.cancellation_flag || j1.cancellation_flag ||
                          std::fabs(a) + std::fabs(b) > kCancellationRatio * std::fabs(out.value);
  return out;
}

EvalResult phi_series(Order order, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (!(z > 0.0) || !(z <= kCrossSeriesArgumentCap)) {
    throw DomainError("phi_series: argument must lie in (0, 50]");
  }
  const double nu = order.value();
  const double half = 0.5 * z;
  const double log_half = std::log(half);
  const double log_lead =
      std::log(2.0) + (2.0 * nu + 1.0) * log_half - ln_gamma(nu + 1.0) - ln_gamma(nu + 2.0);
  const double lead = std::exp(log_lead);

  const auto h2 = two_prod(half, half);
  const DoubleDouble q2(h2.sum, h2.err);
  const DoubleDouble q4 = q2 * q2;  // (z/2)^4
  const double q_approx = half * half * half * half;

  DoubleDouble term(1.0);
  DoubleDouble sum;
  double max_abs = 1.0;
  int used = 0;
  double tail = 0.0;
  bool converged = false;
  for (int n = 0; n < ctl.max_terms; ++n) {
    sum += term;
    used = n + 1;
    max_abs = std::max(max_abs, std::fabs(term.hi()));
    const double n1 = n + 1.0;
    const auto a = two_sum(nu, n1);                // nu + n + 1
    const auto b = two_sum(nu, 2.0 * n + 2.0);     // nu + 2n + 2
    const auto c = two_sum(nu, 2.0 * n + 3.0);     // nu + 2n + 3
    const DoubleDouble denom = DoubleDouble(n1) * DoubleDouble(a.sum, a.err) *
                               DoubleDouble(b.sum, b.err) * DoubleDouble(c.sum, c.err);
    const DoubleDouble next = -(term * q4 / denom);
    const double ratio = q_approx / (n1 * (nu + n1) * (nu + 2 * n + 2) * (nu + 2 * n + 3));
    const double magnitude = std::max(std::fabs(sum.hi()), 1e-31 * max_abs);
    if (ratio < 1.0 && std::fabs(next.hi()) <= ctl.rel_tol * magnitude) {
      tail = std::fabs(next.hi());
      converged = true;
      break;
    }
    term = next;
  }
  if (!converged) {
    throw NonConvergenceError("phi_series did not converge within " +
                              std::to_string(ctl.max_terms) + " terms");
  }
  EvalResult out;
  out.value = lead * sum.hi() + lead * sum.lo();
  out.terms_used = used;
  out.abs_error_estimate = std::fabs(lead) * (tail + 1e-31 * max_abs * used) +
                           std::fabs(out.value) * kEps * (4.0 + std::fabs(log_lead));
  out.cancellation_flag = std::fabs(lead) * max_abs > kCancellationRatio * std::fabs(out.value);
  return out;
}

EvalResult phi_prime(Order nu, double z, const SeriesControl& ctl) {
  const EvalResult phi = phi_direct(nu, z, ctl);
  const EvalResult j0 = bessel_j(nu, z, ctl);
  const EvalResult i0 = bessel_i(nu, z, ctl);
  EvalResult out;
  const double prod = 2.0 * j0.value * i0.value;
  out.value = prod - phi.value / z;
  out.abs_error_estimate = 2.0 * (std::fabs(j0.value) * i0.abs_error_estimate +
                                  std::fabs(i0.value) * j0.abs_error_estimate) +
                           phi.abs_error_estimate / z +
                           kEps * (std::fabs(prod) + std::fabs(phi.value / z));
  out.terms_used = phi.terms_used + j0.terms_used + i0.terms_used;
  out.cancellation_flag = phi.cancellation_flag || j0.cancellation_flag;
  return out;
}

CoefficientTable cross_coefficients(Order order, int depth) {
  check_depth(depth);
  const double nu = order.value();
  const double log_norm = ln_gamma(nu + 1.0) + ln_gamma(nu + 2.0);
  CoefficientTable table{order, CoefficientKind::Cross, std::nullopt, {}};
  table.coeffs.reserve(depth + 1);
  table.coeffs.push_back(1.0);
  for (int n = 1; n <= depth; ++n) {
    const double log_mag = log_norm - n * std::log(16.0) - ln_gamma(n + 1.0) -
                           ln_gamma(nu + n + 1.0) - ln_gamma(nu + 2.0 * n + 2.0);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    table.coeffs.push_back(sign * std::exp(log_mag));
  }
  return table;
}

CoefficientTable product_coefficients(Order order, int depth) {
  check_depth(depth);
  const double nu = order.value();
  const double log_norm = 2.0 * ln_gamma(nu + 1.0);
  CoefficientTable table{order, CoefficientKind::Product, std::nullopt, {}};
  table.coeffs.reserve(depth + 1);
  table.coeffs.push_back(1.0);
  for (int k = 1; k <= depth; ++k) {
    const double p = jacobi_p0(2 * k, nu, nu);
    const double log_scale = log_norm - k * std::log(4.0) - 2.0 * ln_gamma(nu + 2.0 * k + 1.0);
    table.coeffs.push_back(p * std::exp(log_scale));
  }
  return table;
}

CoefficientTable pi_general(double mu, Order nu_order, int depth) {
  check_depth(depth);
  if (!(mu > -1.0)) throw DomainError("pi_general: mu must exceed -1");
  const double nu = nu_order.value();
  CoefficientTable table{nu_order, CoefficientKind::General, mu, {}};
  table.coeffs.reserve(depth + 1);
  const auto c = two_sum(nu, 1.0);
  const double log_nu = ln_gamma(nu + 1.0);
  for (int n = 0; n <= depth; ++n) {
    const auto b = two_sum(-mu, -static_cast<double>(n));
    const double hyp = f21_terminating_dd(n, DoubleDouble(b.sum, b.err),
                                          DoubleDouble(c.sum, c.err), DoubleDouble(-1.0))
                           .value();
    const double log_scale = -ln_gamma(n + 1.0) - ln_gamma(mu + n + 1.0) - log_nu;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    table.coeffs.push_back(sign * hyp * std::exp(log_scale));
  }
  return table;
}

double coefficient_sum(const CoefficientTable& table, double w) {
  DoubleDouble acc;
  for (auto it = table.coeffs.rbegin(); it != table.coeffs.rend(); ++it) {
    acc = acc * DoubleDouble(w) + DoubleDouble(*it);
  }
  return acc.value();
}

double psi_series(const CoefficientTable& cross, double z) {
  if (cross.kind != CoefficientKind::Cross) {
    throw DomainError("psi_series needs a Cross coefficient table");
  }
  const double w = z * z * z * z;
  if (!cross.coeffs.empty()) {
    const double last = std::fabs(cross.coeffs.back()) * std::pow(w, static_cast<double>(cross.depth()));
    if (last > 1e-17) {
      throw InsufficientDepthError("psi_series: coefficient table too shallow for z = " +
                                   std::to_string(z));
    }
  }
  return coefficient_sum(cross, w);
}

std::complex<double> f_eval(const CoefficientTable& table, std::complex<double> t) {
  check_disk(table, t);
  std::complex<double> acc = 0.0;
  for (auto it = table.coeffs.rbegin(); it != table.coeffs.rend(); ++it) {
    acc = acc * t + *it;
  }
  return t * acc;
}

LogDerivativeParts f_log_derivative_parts(const CoefficientTable& table,
                                          std::complex<double> t) {
  check_disk(table, t);
  std::complex<double> s = 0.0;
  std::complex<double> ds = 0.0;
  const auto n_max = static_cast<double>(table.depth());
  double n = n_max;
  for (auto it = table.coeffs.rbegin(); it != table.coeffs.rend(); ++it, n -= 1.0) {
    s = s * t + *it;
    ds = ds * t + n * *it;
  }
  LogDerivativeParts parts;
  parts.series = s;
  parts.t_dseries = ds;
  parts.denominator_underflow = std::abs(s) < kUnderflow;
  parts.value = parts.denominator_underflow ? std::complex<double>(0.0) : 1.0 + ds / s;
  return parts;
}

std::complex<double> f_log_derivative(const CoefficientTable& table, std::complex<double> t) {
  const LogDerivativeParts parts = f_log_derivative_parts(table, t);
  if (parts.denominator_underflow) {
    throw PoleError("f_log_derivative: f(t)/t vanishes numerically inside the disk");
  }
  return parts.value;
}

double hadamard_partial(Order nu, double z, const ZeroTable& table, std::size_t terms) {
  if (table.kind != ZeroKind::Cross) {
    throw DomainError("hadamard_partial needs a table of cross-product zeros");
  }
  if (std::fabs(table.nu.value() - nu.value()) > 1e-12) {
    throw DomainError("hadamard_partial: table order does not match nu");
  }
  if (table.size() < terms) {
    throw InsufficientDepthError("hadamard_partial: table holds " +
                                 std::to_string(table.size()) + " zeros, " +
                                 std::to_string(terms) + " requested");
  }
  const double z4 = z * z * z * z;
  double prod = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double g = table.zeros[n];
    prod *= 1.0 - z4 / (g * g * g * g);
  }
  return prod;
}

double hadamard_tail_bound(Order order, double z, std::size_t terms, double partial) {
  const double nu = order.value();
  const double z4 = z * z * z * z;
  auto lower = [nu](double n) { return (n + 0.5 * nu - 0.25) * std::numbers::pi - 1.0; };
  // sum_{n>N} z^4 / b_n^4, explicit to N + 10^4 then an integral bound.
  CompensatedSum tail;
  const std::size_t explicit_end = terms + 10000;
  for (std::size_t n = terms + 1; n <= explicit_end; ++n) {
    const double b = lower(static_cast<double>(n));
    if (b <= z) return std::numeric_limits<double>::infinity();
    tail += z4 / (b * b * b * b);
  }
  const double b_end = lower(static_cast<double>(explicit_end));
  tail += z4 / (3.0 * std::numbers::pi * b_end * b_end * b_end);
  const double t = tail.value();
  if (t >= 1.0) return std::numeric_limits<double>::infinity();
  // |Psi - P_N| = |P_N| |1 - prod_{n>N}(1 - z^4/g^4)| <= |P_N| T / (1 - T)
  return std::fabs(partial) * t / (1.0 - t);
}

}  // namespace crossbessel
