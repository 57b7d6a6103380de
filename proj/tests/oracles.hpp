#pragma once

// Reference values computed without the library: closed forms, std special
// functions, plain long-double series and a local bisection.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double j_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::sin(x); }
inline double j_minus_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::cos(x); }
inline double i_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::sinh(x); }
inline double i_minus_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::cosh(x); }
inline double j_three_half(double x) { return j_half(x) / x - j_minus_half(x); }
inline double i_three_half(double x) { return i_minus_half(x) - i_half(x) / x; }

// Plain long-double ascending series, fine for moderate x and any nu > -1.
inline double bessel_series(double nu, double x, int sign) {
  const long double h = 0.5L * x;
  long double term = std::pow(h, static_cast<long double>(nu)) /
                     std::tgamma(static_cast<long double>(nu) + 1.0L);
  long double sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= sign * h * h / (k * (nu + k));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}
inline double j(double nu, double x) { return bessel_series(nu, x, -1); }
inline double i(double nu, double x) { return bessel_series(nu, x, +1); }

inline double phi(double nu, double x) {
  return j(nu + 1, x) * i(nu, x) + j(nu, x) * i(nu + 1, x);
}

// (2/(pi z)) (sin z cosh z + cos z sinh z)
inline double phi_minus_half(double z) {
  return (2.0 / pi) * (std::sin(z) * std::cosh(z) + std::cos(z) * std::sinh(z)) / z;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-14) {
  double flo = f(lo);
  for (int it = 0; it < 300 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// kth root of sin z cosh z + cos z sinh z = 0, i.e. tan z + tanh z = 0.
inline double gamma_minus_half(int k) {
  auto f = [](double z) { return std::sin(z) * std::cosh(z) + std::cos(z) * std::sinh(z); };
  return bisect(f, (k - 0.5) * pi + 1e-9, k * pi - 1e-9);
}

// sum_{n>=1} 1/((n pi)^4 - 1), explicit to n_max with an integral tail.
inline double sum_npi(int n_max = 200000) {
  double acc = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const double x = n * pi;
    acc += 1.0 / (x * x * x * x - 1.0);
  }
  return acc + 1.0 / (3.0 * std::pow(pi, 4) * std::pow(n_max + 0.5, 3));
}

inline double rel(double a, double b) {
  return std::fabs(a - b) / std::fmax(std::fabs(b), 1e-300);
}

}  // namespace oracle
