#pragma once

// Terminating Gauss hypergeometric sums and Jacobi polynomial values at the
// origin, the machinery behind the product series of J_mu(z) I_nu(z).

#include "crossbessel/compensated.hpp"
#include "crossbessel/order.hpp"

namespace crossbessel {

// 2F1(-n, b; c; x) = sum_{m=0}^{n} (-n)_m (b)_m x^m / ((c)_m m!).
// Throws PoleError if c is one of 0, -1, ..., -(n-1).
double f21_terminating(int n, double b, double c, double x);
DoubleDouble f21_terminating_dd(int n, DoubleDouble b, DoubleDouble c, DoubleDouble x);

// P_n^{(alpha,beta)}(0) = ((1+alpha)_n / n!) 2^{-n} 2F1(-n, -n-beta; alpha+1; -1).
double jacobi_p0(int n, double alpha, double beta);

// P_n^{(nu,nu)}(0) in closed form: zero for odd n, and for n = 2k
//   (-1)^k (2k-1)!! Gamma(nu+2k+1) / (2^k (2k)! Gamma(nu+k+1)).
double jacobi_symmetric_zero(int n, Order nu);

// (2k-1)!!, with (-1)!! = 1.
double double_factorial_odd(int k);

}  // namespace crossbessel
