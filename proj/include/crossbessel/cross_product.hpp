#pragma once

// The cross-product Phi_nu(z) = J_{nu+1}(z) I_nu(z) + J_nu(z) I_{nu+1}(z),
// its power series, derivative and Hadamard product, and the normalised
// unit-disk functions built from it.

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "crossbessel/order.hpp"
#include "crossbessel/specfun.hpp"
#include "crossbessel/zero_table.hpp"

namespace crossbessel {

EvalResult phi_direct(Order nu, double z, const SeriesControl& ctl = {});
// 2 sum_n (-1)^n (z/2)^{2nu+4n+1} / (n! Gamma(nu+n+1) Gamma(nu+2n+2)).
EvalResult phi_series(Order nu, double z, const SeriesControl& ctl = {});
// Phi_nu'(z) = 2 J_nu(z) I_nu(z) - Phi_nu(z) / z.
EvalResult phi_prime(Order nu, double z, const SeriesControl& ctl = {});

enum class CoefficientKind { Cross, Product, General };
std::string_view to_string(CoefficientKind kind);

struct CoefficientTable {
  Order nu;
  CoefficientKind kind = CoefficientKind::Cross;
  std::optional<double> mu;  // General only
  std::vector<double> coeffs;

  std::size_t depth() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

inline constexpr int kDefaultDiskDepth = 40;

// c_n = (-1)^n Gamma(nu+1) Gamma(nu+2) / (16^n n! Gamma(nu+n+1) Gamma(nu+2n+2)),
// the Taylor coefficients of f1(t)/t.
CoefficientTable cross_coefficients(Order nu, int depth = kDefaultDiskDepth);

// d_k with 2^{2nu} z^{-2nu} Gamma(nu+1)^2 J_nu(z) I_nu(z) = sum_k d_k z^{4k},
// the Taylor coefficients of f2(t)/t.
CoefficientTable product_coefficients(Order nu, int depth = kDefaultDiskDepth);

// Coefficients of Pi_{mu,nu}(z) = (2/z)^{mu+nu} J_mu(z) I_nu(z) in powers of
// (z/2)^2:  (-1)^n 2F1(-n, -mu-n; nu+1; -1) / (n! Gamma(mu+n+1) Gamma(nu+1)).
CoefficientTable pi_general(double mu, Order nu, int depth);

// Sum_n c_n w^n (double-double Horner); for a Cross table at w = z^4 this is
// the normalised cross-product Psi_nu(z).
double coefficient_sum(const CoefficientTable& table, double w);
double psi_series(const CoefficientTable& cross, double z);

// f(t) = t sum c_n t^n on the closed disk |t| <= 1 - 1e-9.
std::complex<double> f_eval(const CoefficientTable& table, std::complex<double> t);

struct LogDerivativeParts {
  std::complex<double> series;       // sum c_n t^n  (= f(t)/t)
  std::complex<double> t_dseries;    // sum n c_n t^n
  std::complex<double> value;        // t f'(t) / f(t)
  bool denominator_underflow = false;
};

LogDerivativeParts f_log_derivative_parts(const CoefficientTable& table,
                                          std::complex<double> t);
// t f'(t)/f(t) = 1 + sum n c_n t^n / sum c_n t^n. PoleError when f(t)/t
// underflows (a zero of f inside the disk).
std::complex<double> f_log_derivative(const CoefficientTable& table, std::complex<double> t);

// prod_{n<=N} (1 - z^4 / gamma_{nu,n}^4) over a Cross zero table.
double hadamard_partial(Order nu, double z, const ZeroTable& table, std::size_t terms);
// Bound on |Psi_nu(z) - hadamard_partial|: the omitted factors are controlled
// through gamma_{nu,n} > (n + nu/2 - 1/4) pi - 1.
double hadamard_tail_bound(Order nu, double z, std::size_t terms, double partial);

}  // namespace crossbessel
