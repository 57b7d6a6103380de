#include "crossbessel/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crossbessel/compensated.hpp"

namespace crossbessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Residual precision of a double-double accumulation, relative to the
// largest term.
constexpr double kDoubleDoubleEps = 1e-31;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double ln_gamma_lanczos(double x) {  // x >= 0.5
  const double xm = x - 1.0;
  CompensatedSum a;
  a += kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t +
         std::log(a.value());
}

void check_series_argument(double x, const char* who) {
  if (!(x > 0.0) || !(x <= kSeriesArgumentCap)) {
    throw DomainError(std::string(who) + ": argument must lie in (0, 25], got " +
                      std::to_string(x));
  }
}

// Shared ascending series  sum_k s^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)),
// s = -1 for J and +1 for I. The leading factor is formed in log space; the
// term ratios and the sum are carried in double-double.
EvalResult ascending_series(Order order, double x, const SeriesControl& ctl, double sign) {
  ctl.validate();
  const double nu = order.value();
  const double half = 0.5 * x;
  const double log_half = std::log(half);
  const double lg = ln_gamma(nu + 1.0);
  const double lead = std::exp(nu * log_half - lg);

  const auto hh = two_prod(half, half);
  const DoubleDouble q(hh.sum, hh.err);
  const double q_approx = half * half;

  DoubleDouble term(1.0);
  DoubleDouble sum;
  double max_abs = 1.0;
  double tail = 0.0;
  bool converged = false;
  int used = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    sum += term;
    used = k + 1;
    max_abs = std::max(max_abs, std::fabs(term.hi()));

    const double kp1 = static_cast<double>(k + 1);
    const auto shifted = two_sum(nu, kp1);
    const DoubleDouble denom = DoubleDouble(kp1) * DoubleDouble(shifted.sum, shifted.err);
    DoubleDouble next = term * q / denom;
    if (sign < 0.0) next = -next;

    const double ratio = q_approx / (kp1 * (nu + kp1));
    const double magnitude = std::max(std::fabs(sum.hi()), kDoubleDoubleEps * max_abs);
    if (ratio < 1.0 && std::fabs(next.hi()) <= ctl.rel_tol * magnitude) {
      const double next_ratio = q_approx / ((kp1 + 1.0) * (nu + kp1 + 1.0));
      tail = sign < 0.0 ? std::fabs(next.hi())
                        : std::fabs(next.hi()) / (1.0 - std::min(next_ratio, 0.5));
      converged = true;
      break;
    }
    term = next;
  }
  if (!converged) {
    throw NonConvergenceError("Bessel ascending series did not converge within " +
                              std::to_string(ctl.max_terms) + " terms");
  }

  EvalResult out;
  out.value = lead * sum.hi() + lead * sum.lo();
  out.terms_used = used;
  const double lead_rel_err = kEps * (4.0 + std::fabs(nu * log_half) + std::fabs(lg));
  out.abs_error_estimate = std::fabs(lead) * (tail + kDoubleDoubleEps * max_abs * used) +
                           std::fabs(out.value) * lead_rel_err;
  out.cancellation_flag = std::fabs(lead) * max_abs > kCancellationRatio * std::fabs(out.value);
  return out;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("SeriesControl.rel_tol must lie in (0, 1)");
  }
  if (max_terms < 1) {
    throw DomainError("SeriesControl.max_terms must be >= 1");
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
  }
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x), sin(pi x) > 0 on (0, 1/2).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           ln_gamma_lanczos(1.0 - x);
  }
  return ln_gamma_lanczos(x);
}

EvalResult bessel_j(Order nu, double x, const SeriesControl& ctl) {
  check_series_argument(x, "bessel_j");
  return ascending_series(nu, x, ctl, -1.0);
}

EvalResult bessel_i(Order nu, double x, const SeriesControl& ctl) {
  check_series_argument(x, "bessel_i");
  EvalResult r = ascending_series(nu, x, ctl, +1.0);
  r.cancellation_flag = false;
  return r;
}

double half_integer_closed_form(BesselKind kind, HalfOrder half, double x) {
  if (!(x > 0.0)) {
    throw DomainError("half_integer_closed_form: argument must be positive");
  }
  const double scale = std::sqrt(2.0 / (std::numbers::pi * x));
  if (kind == BesselKind::J) {
    return scale * (half == HalfOrder::PlusHalf ? std::sin(x) : std::cos(x));
  }
  return scale * (half == HalfOrder::PlusHalf ? std::sinh(x) : std::cosh(x));
}

double ratio_j(Order nu, double z, const SeriesControl& ctl, const ZeroTable* guard) {
  if (!(z > 0.0)) throw DomainError("ratio_j: argument must be positive");
  if (guard != nullptr) {
    for (double zero : guard->zeros) {
      if (std::fabs(z - zero) < kPoleGuard) {
        throw PoleError("ratio_j: argument within guard distance of a zero of J_nu");
      }
    }
  }
  const double den = bessel_j(nu, z, ctl).value;
  if (std::fabs(den) < kPoleFloor) {
    throw PoleError("ratio_j: J_nu(z) vanishes numerically");
  }
  return bessel_j(nu.shifted(1.0), z, ctl).value / den;
}

double ratio_i(Order nu, double z, const SeriesControl& ctl) {
  if (!(z > 0.0)) throw DomainError("ratio_i: argument must be positive");
  return bessel_i(nu.shifted(1.0), z, ctl).value / bessel_i(nu, z, ctl).value;
}

double mittag_leffler_ratio(BesselKind kind, Order nu, double z, const ZeroTable& table,
                            std::size_t terms) {
  if (table.kind != ZeroKind::J) {
    throw DomainError("mittag_leffler_ratio needs a table of J_nu zeros");
  }
  if (std::fabs(table.nu.value() - nu.value()) > 1e-12) {
    throw DomainError("mittag_leffler_ratio: table order does not match nu");
  }
  if (table.size() < terms) {
    throw InsufficientDepthError("mittag_leffler_ratio: table holds " +
                                 std::to_string(table.size()) + " zeros, " +
                                 std::to_string(terms) + " requested");
  }
  const double z2 = z * z;
  CompensatedSum acc;
  for (std::size_t n = 0; n < terms; ++n) {
    const double j = table.zeros[n];
    if (kind == BesselKind::J) {
      if (std::fabs(z - j) < kPoleGuard) {
        throw PoleError("mittag_leffler_ratio: argument at a zero of J_nu");
      }
      acc += 2.0 * z / ((j - z) * (j + z));
    } else {
      acc += 2.0 * z / (j * j + z2);
    }
  }
  return acc.value();
}

}  // namespace crossbessel
