#include "jcm/asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "jcm/error.hpp"
#include "jcm/specfun.hpp"

namespace jcm {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// Uniform spacing of a time grid; throws GridMismatch otherwise.
double uniform_step(const std::vector<double>& t) {
  if (t.size() < 2) {
    throw GridMismatch("estimator: need at least two samples");
  }
  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) {
    throw GridMismatch("estimator: time grid is not increasing");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double expected = t.front() + dt * static_cast<double>(i);
    if (std::abs(t[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw GridMismatch("estimator: time grid is not uniform at sample " + std::to_string(i));
    }
  }
  return dt;
}

}  // namespace

AsymptoticParams AsymptoticParams::from_n_bar(double n_bar) {
  AsymptoticParams params{n_bar, n_bar * n_bar};
  params.validate();
  return params;
}

void AsymptoticParams::validate() const {
  if (!(n_bar > 0.0) || !std::isfinite(n_bar)) {
    throw InvalidArgument("AsymptoticParams: n_bar must be positive and finite");
  }
  if (std::abs(alpha_sq - n_bar * n_bar) > 1e-12 * std::max(1.0, alpha_sq)) {
    throw InvalidArgument("AsymptoticParams: alpha_sq must equal n_bar^2");
  }
}

double sqrt_harmonic(int n, const AsymptoticParams& params) {
  const double nb = params.n_bar;
  return 0.5 * (nb + 1.0 / nb + n / nb);
}

double wigner_origin_asymptotic(const AsymptoticParams& params, double T) {
  const double nb = params.n_bar;
  const double c = std::cos(T / (2.0 * nb));
  return std::exp(-2.0 * nb * c * c) * std::cos(T * (nb + 1.0 / nb) - nb * std::sin(T / nb));
}

double homodyne_asymptotic(const AsymptoticParams& params, double T) {
  params.validate();
  const double x = params.alpha_sq;
  const double nb = params.n_bar;
  const specfun::Complex z = std::polar(x, T / nb);
  const specfun::Complex rotating =
      std::polar(1.0, T * (nb + 1.0 / nb)) * (specfun::bessel_i(0, z) - specfun::bessel_i(1, z));
  const double constant = specfun::bessel_i(0, x).real() + specfun::bessel_i(1, x).real();
  return 0.5 * std::exp(-x) * (constant + rotating.real()) * kInvSqrtPi;
}

PExtrema p_extrema(const AsymptoticParams& params) {
  params.validate();
  const double x = params.alpha_sq;
  const double i0 = specfun::bessel_i(0, x).real();
  const double i1 = specfun::bessel_i(1, x).real();
  const double scale = std::exp(-x) * kInvSqrtPi;
  return {scale * i0, scale * (i0 + i1)};
}

double estimate_inversion(double p_value, double p_reference, double p_max) {
  return (p_value - p_reference) / p_max;
}

ObservableSeries estimator_on_tau_grid(const ObservableSeries& p_series,
                                       const AsymptoticParams& params, std::string_view column) {
  uniform_step(p_series.t);
  if (std::abs(p_series.t.front()) > 1e-12) {
    throw GridMismatch("estimator: the P(0, tau) series must start at tau = 0");
  }
  const std::vector<double>& p = p_series.column(column);
  const double p_max = p_extrema(params).p_max;
  std::vector<double> values(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    values[i] = estimate_inversion(p[i], p.front(), p_max);
  }
  ObservableSeries out;
  out.t = p_series.t;
  out.add_column("estimator_tau", std::move(values));
  return out;
}

ObservableSeries inversion_estimator(const ObservableSeries& p_series,
                                     const AsymptoticParams& params, std::string_view column) {
  const ObservableSeries on_tau = estimator_on_tau_grid(p_series, params, column);
  const double dt = uniform_step(p_series.t);
  const auto shift = static_cast<std::size_t>(std::lround(std::numbers::pi * params.n_bar / dt));
  if (shift >= on_tau.t.size()) {
    throw GridMismatch("estimator: tau shift of " + std::to_string(shift) +
                       " samples exceeds the series length " + std::to_string(on_tau.t.size()));
  }
  const std::vector<double>& values = on_tau.column("estimator_tau");
  ObservableSeries out;
  out.t.assign(on_tau.t.begin(), on_tau.t.end() - static_cast<std::ptrdiff_t>(shift));
  out.add_column("estimator", std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(shift),
                                                  values.end()));
  return out;
}

std::complex<double> hermite_poisson_sum(HermitePoissonVariant variant, double alpha_sq,
                                         double phase) {
  if (!(alpha_sq >= 0.0) || !std::isfinite(alpha_sq)) {
    throw InvalidArgument("hermite_poisson_sum: alpha_sq must be non-negative");
  }
  if (variant == HermitePoissonVariant::kI0) {
    phase = 0.0;
  }
  const int offset = variant == HermitePoissonVariant::kI1 ? 1 : 0;
  const Wide x = alpha_sq;
  const Wide theta = phase;

  // power = x^n / n!, weight = H_m(0)^2 / (2^m m!) with m = n + offset.
  Wide power = 1;
  Wide weight_even = 1;  // H_{2j}(0)^2 / (2^{2j} (2j)!) for the current even index
  Wide re = 0;
  Wide im = 0;
  Wide largest = 0;
  const int peak = static_cast<int>(std::ceil(alpha_sq)) + 2;
  for (int n = 0; n < 100000; ++n) {
    const int m = n + offset;
    if (n > 0) {
      power *= x / n;
    }
    if (m > 0 && m % 2 == 0) {
      weight_even *= Wide(m - 1) / m;
    }
    if (m % 2 != 0) {
      continue;
    }
    const Wide magnitude = power * weight_even;
    re += magnitude * boost::multiprecision::cos(theta * n);
    im += magnitude * boost::multiprecision::sin(theta * n);
    if (magnitude > largest) {
      largest = magnitude;
    }
    // Past the peak the terms fall faster than geometrically, so a term below
    // 1e-17 |sum| bounds the remaining tail well under 1e-14 |sum|.
    if (n > peak) {
      const Wide sum_abs = boost::multiprecision::sqrt(re * re + im * im);
      if (magnitude <= 1e-17 * sum_abs || magnitude <= 1e-45 * largest) {
        break;
      }
    }
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace jcm
