#pragma once

// Strong-field closed forms for the single-mode, one-photon, resonant model
// with a coherent initial field of mean photon number n_bar^2.
//
// The harmonic approximation 2 sqrt(n + 1) ~ n_bar + 1/n_bar + n/n_bar turns
// the Poisson sums over cos(2 T sqrt(n + 1)) into Bessel functions of complex
// argument. Only single-mode formulas are provided.

#include <complex>
#include <string_view>

#include "jcm/series.hpp"

namespace jcm {

struct AsymptoticParams {
  /// sqrt(<n>) = |alpha| for a coherent state.
  double n_bar;
  /// |alpha|^2
  double alpha_sq;

  static AsymptoticParams from_n_bar(double n_bar);
  /// Throws InvalidArgument unless n_bar > 0 and alpha_sq == n_bar^2 to 1e-12.
  void validate() const;
};

/// (1/2)(n_bar + 1/n_bar + n/n_bar), the harmonic approximation to
/// sqrt(n + 1). Exact at n = n_bar^2 - 1.
double sqrt_harmonic(int n, const AsymptoticParams& params);

/// exp[-2 n_bar cos^2(T / 2n_bar)] cos[T (n_bar + 1/n_bar) - n_bar sin(T/n_bar)]
///
/// The envelope scale is kept at 2 n_bar, the usual quoted form.
/// Resumming the harmonic series gives 2 n_bar^2; the envelope peak at
/// T = pi n_bar is the same either way.
double wigner_origin_asymptotic(const AsymptoticParams& params, double T);

/// Strong-field homodyne density at the origin,
///   pi^{-1/2} (1/2) e^{-x} { I0(x) + I1(x)
///       + Re[e^{i T (n_bar + 1/n_bar)} (I0(x e^{iT/n_bar}) - I1(x e^{iT/n_bar}))] },
/// x = alpha_sq. Periodic in T with period 2 pi n_bar when n_bar^2 is an
/// integer.
double homodyne_asymptotic(const AsymptoticParams& params, double T);

struct PExtrema {
  double p_zero;
  double p_max;
};

/// p_zero = pi^{-1/2} e^{-x} I0(x), p_max = pi^{-1/2} e^{-x} (I0(x) + I1(x)).
PExtrema p_extrema(const AsymptoticParams& params);

/// (p_value - p_reference) / p_max
double estimate_inversion(double p_value, double p_reference, double p_max);

/// Estimator evaluated on the tau grid of p_series itself:
/// (P(0, tau) - P(0, 0)) / p_max, where P(0, 0) is the series' own tau = 0
/// sample. Output column "estimator_tau". The series must be uniform and start
/// at tau = 0; throws GridMismatch otherwise.
ObservableSeries estimator_on_tau_grid(const ObservableSeries& p_series,
                                       const AsymptoticParams& params,
                                       std::string_view column = "homodyne_origin");

/// Inversion estimate on the interaction-time grid: the tau-grid estimator
/// shifted by round(pi n_bar / dT) samples, so the output at T uses
/// P(0, T + pi n_bar). Output column "estimator". Throws GridMismatch when the
/// shift leaves no samples.
ObservableSeries inversion_estimator(const ObservableSeries& p_series,
                                     const AsymptoticParams& params,
                                     std::string_view column = "homodyne_origin");

enum class HermitePoissonVariant {
  /// sum_n x^n H_n(0)^2 / ((n!)^2 2^n)                      = I0(x)
  kI0,
  /// sum_n x^n H_{n+1}(0)^2 / (n! (n+1)! 2^{n+1}) e^{i phase n} = I1(x e^{i phase})
  kI1,
  /// sum_n x^n H_n(0)^2 / ((n!)^2 2^n) e^{i phase n}         = I0(x e^{i phase})
  kPhased,
};

/// Direct term-by-term summation of the Hermite-Poisson series, carried out
/// in 50-digit arithmetic: for x = 64 and phase = pi/2 the terms reach 1e25
/// while the sum is O(0.1). Stops once the remaining terms fall below 1e-14
/// of the running sum. The kI0 variant ignores phase.
std::complex<double> hermite_poisson_sum(HermitePoissonVariant variant, double alpha_sq,
                                         double phase = 0.0);

}  // namespace jcm
