#pragma once

// Bessel J_nu and modified Bessel I_nu of real order nu > -1 from their
// ascending power series, plus the elementary half-integer closed forms used
// as oracles.

#include <utility>

#include "crossbessel/order.hpp"
#include "crossbessel/zero_table.hpp"

namespace crossbessel {

struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 200;

  // Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 1.
  void validate() const;
};

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int terms_used = 0;
  // Set when the largest partial term exceeds 1e8 * |value|.
  bool cancellation_flag = false;
};

// Largest argument accepted by the ascending-series evaluators.
inline constexpr double kSeriesArgumentCap = 25.0;
// Largest argument accepted by the cross-product power series.
inline constexpr double kCrossSeriesArgumentCap = 50.0;
inline constexpr double kCancellationRatio = 1e8;
inline constexpr double kPoleFloor = 1e-280;
inline constexpr double kPoleGuard = 1e-10;

// ln Gamma(x) for x > 0. Lanczos approximation with reflection below 1/2.
double ln_gamma(double x);

EvalResult bessel_j(Order nu, double x, const SeriesControl& ctl = {});
EvalResult bessel_i(Order nu, double x, const SeriesControl& ctl = {});

enum class BesselKind { J, I };
enum class HalfOrder { PlusHalf, MinusHalf };

// sqrt(2/pi) x^{-1/2} {sin, cos, sinh, cosh}(x).
double half_integer_closed_form(BesselKind kind, HalfOrder half, double x);

// J_{nu+1}(z)/J_nu(z) by direct division of series values. Raises PoleError
// when |J_nu(z)| < kPoleFloor or, if a zero table of J_nu is supplied, when z
// lies within kPoleGuard of a tabulated zero.
double ratio_j(Order nu, double z, const SeriesControl& ctl = {},
               const ZeroTable* guard = nullptr);
double ratio_i(Order nu, double z, const SeriesControl& ctl = {});

// Partial Mittag-Leffler sum  sum_{n<=N} 2z / (j_{nu,n}^2 -+ z^2)  (minus for J,
// plus for I), over the first N zeros of a J_nu table.
double mittag_leffler_ratio(BesselKind kind, Order nu, double z, const ZeroTable& table,
                            std::size_t terms);

// Extended-range evaluators, used where the ascending series is unusable.
//
// J_nu(x) and J_{nu+1}(x) by Miller's backward recurrence, normalised with
// the Neumann series (x/2)^nu = sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(x).
std::pair<double, double> bessel_j_pair_recurrence(Order nu, double x);
// I_{nu+1}(x)/I_nu(x) via the backward continued fraction.
double ratio_i_continued_fraction(Order nu, double x);

}  // namespace crossbessel
