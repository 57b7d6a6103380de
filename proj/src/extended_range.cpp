#include <cmath>
#include <string>

#include "crossbessel/compensated.hpp"
#include "crossbessel/specfun.hpp"

namespace crossbessel {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

// (nu + 2k) Gamma(nu + k) / k!, with the k = 0 term read as Gamma(nu + 1).
double neumann_weight(double nu, int k) {
  if (k == 0) return std::exp(ln_gamma(nu + 1.0));
  const double kd = static_cast<double>(k);
  return (nu + 2.0 * kd) * std::exp(ln_gamma(nu + kd) - ln_gamma(kd + 1.0));
}

}  // namespace

std::pair<double, double> bessel_j_pair_recurrence(Order order, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_j_pair_recurrence: argument must be positive and finite");
  }
  const double nu = order.value();
  // Start well inside the region where J_{nu+m}(x) is negligible.
  int top = static_cast<int>(std::ceil(x + 10.0 * std::cbrt(x) + 40.0));
  if (top % 2 != 0) ++top;

  double above = 0.0;   // J_{nu+m+1}, unnormalised
  double cur = 1e-300;  // J_{nu+m}
  CompensatedSum norm;
  for (int m = top; m >= 1; --m) {
    if (m % 2 == 0) norm += neumann_weight(nu, m / 2) * cur;
    const double below = 2.0 * (nu + static_cast<double>(m)) / x * cur - above;
    above = cur;
    cur = below;
    if (std::fabs(cur) > kRescaleAbove) {
      cur *= kRescaleBy;
      above *= kRescaleBy;
      const double s = norm.value() * kRescaleBy;
      norm = CompensatedSum{};
      norm += s;
    }
  }
  norm += neumann_weight(nu, 0) * cur;
  const double total = norm.value();
  if (total == 0.0 || !std::isfinite(total)) {
    throw NonConvergenceError("bessel_j_pair_recurrence: degenerate normalisation at x=" +
                              std::to_string(x));
  }
  const double factor = std::exp(nu * std::log(0.5 * x)) / total;
  return {cur * factor, above * factor};
}

double ratio_i_continued_fraction(Order order, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ratio_i_continued_fraction: argument must be positive and finite");
  }
  const double nu = order.value();
  const int depth = static_cast<int>(std::ceil(x + 60.0));
  double r = 0.0;  // I_{mu+1}/I_mu at mu = nu + depth
  for (int m = depth; m >= 1; --m) {
    r = 1.0 / (2.0 * (nu + static_cast<double>(m)) / x + r);
  }
  return r;
}

}  // namespace crossbessel
