#include "jcm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jcm/error.hpp"

namespace jcm::specfun {

namespace {

// Below this modulus the power series loses at most ~e^10 * eps to
// cancellation, which keeps it inside 1e-11 relative in the worst direction.
constexpr double kSeriesMaxAbsArg = 10.0;

Complex bessel_i_series(int order, Complex z) {
  const Complex half = 0.5 * z;
  const Complex half_sq = half * half;
  Complex term = order == 0 ? Complex{1.0, 0.0} : half;
  Complex sum = term;
  for (int m = 0; m < 10000; ++m) {
    term *= half_sq / (static_cast<double>(m + 1) * static_cast<double>(m + 1 + order));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

Complex bessel_i_trapezoid(int order, Complex z) {
  // The integrand is 2pi-periodic and entire, so the trapezoid rule converges
  // geometrically once the node count exceeds ~2|z|.
  const int nodes = 2 * static_cast<int>(std::ceil(std::abs(z))) + 64;
  const double step = 2.0 * std::numbers::pi / nodes;
  Complex sum{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double t = step * j;
    sum += std::exp(z * std::cos(t)) * std::cos(order * t);
  }
  return sum / static_cast<double>(nodes);
}

}  // namespace

double hermite_at_zero(int n) {
  if (n < 0) {
    throw InvalidArgument("hermite_at_zero: negative order " + std::to_string(n));
  }
  if (n % 2 != 0) {
    return 0.0;
  }
  // H_{m+2}(0) = -2(m+1) H_m(0), exact in double while representable.
  double h = 1.0;
  for (int m = 0; m < n; m += 2) {
    h *= -2.0 * (m + 1);
  }
  return h;
}

SignedLog log_hermite_at_zero(int n) {
  if (n < 0) {
    throw InvalidArgument("log_hermite_at_zero: negative order " + std::to_string(n));
  }
  if (n % 2 != 0) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  const int half = n / 2;
  return {std::lgamma(n + 1.0) - std::lgamma(half + 1.0), half % 2 == 0 ? 1 : -1};
}

double hermite_zero_weight(int n) {
  if (n < 0) {
    throw InvalidArgument("hermite_zero_weight: negative order " + std::to_string(n));
  }
  if (n % 2 != 0) {
    return 0.0;
  }
  // binom(2m, m) / 4^m
  const double m = n / 2;
  return std::exp(std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0) - n * std::numbers::ln2);
}

std::vector<double> hermite_zero_weights(int n_max) {
  if (n_max < 0) {
    throw InvalidArgument("hermite_zero_weights: negative order");
  }
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1, 0.0);
  w[0] = 1.0;
  for (int n = 0; n + 2 <= n_max; n += 2) {
    w[static_cast<std::size_t>(n) + 2] = w[static_cast<std::size_t>(n)] * (n + 1.0) / (n + 2.0);
  }
  return w;
}

double laguerre(int n, double x) {
  if (n < 0) {
    throw InvalidArgument("laguerre: negative order " + std::to_string(n));
  }
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * curr - k * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

Complex bessel_i(int order, Complex z) {
  if (order != 0 && order != 1) {
    throw InvalidArgument("bessel_i: only orders 0 and 1 are supported, got " +
                          std::to_string(order));
  }
  const double modulus = std::abs(z);
  if (!std::isfinite(modulus) || modulus > kBesselMaxAbsArg) {
    throw Overflow("bessel_i: |z| = " + std::to_string(modulus) + " exceeds limit " +
                   std::to_string(kBesselMaxAbsArg));
  }
  if (modulus <= kSeriesMaxAbsArg) {
    return bessel_i_series(order, z);
  }
  return bessel_i_trapezoid(order, z);
}

double log_rising_factorial(int n, int k) {
  if (n < 0 || k < 0) {
    throw InvalidArgument("log_rising_factorial: negative argument");
  }
  if (k > 64) {
    return std::lgamma(static_cast<double>(n) + k + 1.0) - std::lgamma(n + 1.0);
  }
  double sum = 0.0;
  for (int m = 1; m <= k; ++m) {
    sum += std::log(static_cast<double>(n) + m);
  }
  return sum;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) {
    throw InvalidArgument("hermite_functions: negative order");
  }
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n_max >= 1) {
    psi[1] = std::numbers::sqrt2 * x * psi[0];
  }
  for (int n = 1; n < n_max; ++n) {
    psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * psi[n - 1];
  }
  return psi;
}

}  // namespace jcm::specfun
