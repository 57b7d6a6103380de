#include "crossbessel/poly.hpp"

#include <cmath>
#include <string>

#include "crossbessel/specfun.hpp"

namespace crossbessel {

namespace {

// Above this length Pochhammer products switch from running recursion to
// gamma quotients.
constexpr int kRecursionLimit = 30;

void check_degree(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": degree must be non-negative");
}

DoubleDouble exact_sum(double a, double b) {
  const auto s = two_sum(a, b);
  return {s.sum, s.err};
}

// (a)_n / n! for a > 0.
DoubleDouble rising_over_factorial(double a, int n) {
  if (n <= kRecursionLimit) {
    DoubleDouble acc(1.0);
    for (int i = 0; i < n; ++i) {
      acc *= exact_sum(a, static_cast<double>(i)) / DoubleDouble(static_cast<double>(i + 1));
    }
    return acc;
  }
  return std::exp(ln_gamma(a + n) - ln_gamma(a) - ln_gamma(n + 1.0));
}

}  // namespace

DoubleDouble f21_terminating_dd(int n, DoubleDouble b, DoubleDouble c, DoubleDouble x) {
  check_degree(n, "f21_terminating");
  for (int m = 0; m < n; ++m) {
    if ((c + DoubleDouble(static_cast<double>(m))).value() == 0.0) {
      throw PoleError("f21_terminating: denominator parameter c = " +
                      std::to_string(c.value()) + " hits a non-positive integer");
    }
  }
  DoubleDouble term(1.0);
  DoubleDouble sum(1.0);
  for (int m = 0; m < n; ++m) {
    const DoubleDouble md(static_cast<double>(m));
    term *= DoubleDouble(static_cast<double>(m - n)) * (b + md) * x /
            ((c + md) * DoubleDouble(static_cast<double>(m + 1)));
    sum += term;
  }
  return sum;
}

double f21_terminating(int n, double b, double c, double x) {
  return f21_terminating_dd(n, b, c, x).value();
}

double jacobi_p0(int n, double alpha, double beta) {
  check_degree(n, "jacobi_p0");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("jacobi_p0: parameters must exceed -1");
  }
  if (n == 0) return 1.0;
  // -n - beta assembled exactly; alpha + 1 likewise.
  const DoubleDouble b = exact_sum(-static_cast<double>(n), -beta);
  const DoubleDouble c = exact_sum(alpha, 1.0);
  const DoubleDouble hyp = f21_terminating_dd(n, b, c, DoubleDouble(-1.0));
  const DoubleDouble pre = rising_over_factorial(1.0 + alpha, n);
  return std::ldexp((pre * hyp).value(), -n);
}

double double_factorial_odd(int k) {
  if (k < 0) throw DomainError("double_factorial_odd: k must be non-negative");
  if (k <= 10) {
    double acc = 1.0;
    for (int j = 1; j <= k; ++j) acc *= 2.0 * j - 1.0;
    return acc;
  }
  // (2k-1)!! = (2k)! / (2^k k!)
  return std::exp(ln_gamma(2.0 * k + 1.0) - k * std::log(2.0) - ln_gamma(k + 1.0));
}

double jacobi_symmetric_zero(int n, Order order) {
  check_degree(n, "jacobi_symmetric_zero");
  if (n % 2 != 0) return 0.0;
  const int k = n / 2;
  const double nu = order.value();
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (n <= kRecursionLimit) {
    // Gamma(nu+2k+1)/Gamma(nu+k+1) = prod_{j=1}^{k} (nu+k+j)
    DoubleDouble ratio(1.0);
    for (int j = 1; j <= k; ++j) ratio *= exact_sum(nu, static_cast<double>(k + j));
    DoubleDouble factorial(1.0);
    for (int j = 2; j <= n; ++j) factorial *= DoubleDouble(static_cast<double>(j));
    const DoubleDouble value =
        DoubleDouble(double_factorial_odd(k)) * ratio / factorial;
    return sign * std::ldexp(value.value(), -k);
  }
  const double log_mag = std::log(double_factorial_odd(k)) + ln_gamma(nu + 2.0 * k + 1.0) -
                         ln_gamma(2.0 * k + 1.0) - k * std::log(2.0) -
                         ln_gamma(nu + k + 1.0);
  return sign * std::exp(log_mag);
}

}  // namespace crossbessel
