#pragma once

// Special functions and log-space combinatorics shared by the simulation
// modules. Everything here is pure and thread-safe.

#include <complex>
#include <vector>

namespace jcm::specfun {

using Complex = std::complex<double>;

/// log|x| together with the sign of x. sign == 0 means x == 0 exactly and
/// log_abs is -inf.
struct SignedLog {
  double log_abs;
  int sign;
};

/// Physicists' Hermite polynomial at the origin, H_n(0).
/// Zero for odd n, (-1)^(n/2) n!/(n/2)! for even n. Returns +-inf once the
/// value leaves double range (around n = 300); use log_hermite_at_zero there.
double hermite_at_zero(int n);

SignedLog log_hermite_at_zero(int n);

/// H_n(0)^2 / (2^n n!), the squared normalized Hermite function at the origin
/// times sqrt(pi). Exactly zero for odd n. Evaluated in log space so it is
/// valid for any n.
double hermite_zero_weight(int n);

/// Table of hermite_zero_weight(0..n_max) by the ratio recurrence
/// w_{n+2} = w_n (n+1)/(n+2).
std::vector<double> hermite_zero_weights(int n_max);

/// Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre(int n, double x);

/// Largest |z| accepted by bessel_i. Beyond this exp(Re z) overflows a double.
inline constexpr double kBesselMaxAbsArg = 700.0;

/// Modified Bessel function of the first kind, integer order 0 or 1, complex
/// argument. Small |z| uses the power series; larger |z| uses the periodic
/// trapezoid rule on (1/pi) int_0^pi exp(z cos t) cos(order t) dt, which stays
/// accurate when Re z is small and the series would cancel.
/// Throws Overflow when |z| > kBesselMaxAbsArg, InvalidArgument for other
/// orders.
Complex bessel_i(int order, Complex z);

/// ln[(n+k)!/n!] = sum_{m=1..k} ln(n+m). Exactly 0 for k == 0.
double log_rising_factorial(int n, int k);

/// Normalized Hermite functions psi_0(x) .. psi_{n_max}(x) (position-space
/// number-state wavefunctions with int psi_n^2 = 1).
std::vector<double> hermite_functions(int n_max, double x);

}  // namespace jcm::specfun
