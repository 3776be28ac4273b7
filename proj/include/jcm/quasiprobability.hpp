#pragma once

// Quasiprobability observables at the phase-space origin.
//
// Conventions:
//  * wigner_origin is the photon-number parity expectation
//    Tr[rho exp(i pi sum_j n_j)], with no 2^N/pi^N prefactor, so the vacuum
//    gives 1 and |value| <= 1.
//  * homodyne_origin carries the pi^{-N/2} Gaussian prefactor, making it a
//    genuine value of the (phase-averaged) quadrature density at the origin.
//  * The number-state marginal uses exp(-q^2), the exact p-integral of the
//    number-state Wigner function.

#include <functional>
#include <vector>

#include "jcm/dynamics.hpp"

namespace jcm {

/// ((-1)^n / pi) exp(-q^2 - p^2) L_n(2q^2 + 2p^2)
double wigner_number_state(int n, double q, double p);

/// (1/sqrt(pi)) H_n(q)^2 / (2^n n!) exp(-q^2)
double marginal_number_state(int n, double q);

/// Parity expectation of the field at time T.
double wigner_origin(const SystemConfig& config, double T);
double wigner_origin(const EvolvedState& state);

/// prod_j sum_n (-1)^n |C^{(j)}_n|^2. Equals wigner_origin at every T when
/// sum_j k_j is even.
double wigner_origin_initial_product(const SystemConfig& config);

/// Phase-independent homodyne density at the origin of every quadrature,
/// built from the Fock-diagonal part of the field density matrix.
double homodyne_origin(const SystemConfig& config, double T);
double homodyne_origin(const EvolvedState& state);

/// Husimi Q at the origin, (1/pi) <0|rho_field|0>. Single mode only.
double q_origin(const SystemConfig& config, double T);
double q_origin(const EvolvedState& state);

/// sum_n (-1)^n P(n). Throws NotNormalized when sum P deviates from 1 by more
/// than 1e-8, InvalidArgument for a negative entry.
double parity_sum(const std::vector<double>& count_dist);

/// <zeta|rho_field(T)|zeta> for the quadrature at local-oscillator phase 0,
/// including the coherences between Fock components of each atomic branch.
/// Single mode only.
double position_distribution(const SystemConfig& config, double T, double zeta);

/// Local-oscillator-phase average of the quadrature distribution,
/// sum_n rho_nn psi_n(zeta)^2. This is the phase-independent marginal whose
/// value at zeta = 0 is homodyne_origin. Single mode only.
double phase_averaged_position_distribution(const SystemConfig& config, double T, double zeta);

/// Numerical settings for inverse_radon_origin.
struct RadonQuadrature {
  double zeta_min = -12.0;
  double zeta_max = 12.0;
  double zeta_step = 0.02;
  double eta_max = 40.0;
  double eta_step = 0.02;
  /// Gaussian cutoff exp(-epsilon eta^2) on the |eta| kernel; the result is
  /// Richardson-extrapolated from epsilon and epsilon / 2 to epsilon -> 0.
  double epsilon = 1e-5;
  /// Maximum allowed change between the two regularized values.
  double tolerance = 1e-3;
};

/// Single-projection filtered back-projection at the phase-space origin,
///   pi * (1/4pi) int dzeta int deta |eta| pr(zeta) exp(i eta zeta),
/// scaled by pi so that the vacuum marginal returns 1 (the wigner_origin
/// convention). The result equals the origin parity only when pr is
/// phase-independent, e.g. phase_averaged_position_distribution.
/// Throws QuadratureDiverged when the regularized integrals disagree by more
/// than the tolerance, when the kernel has not decayed at eta_max, or when the
/// imaginary part exceeds 1e-6.
double inverse_radon_origin(const std::function<double(double)>& pr,
                            const RadonQuadrature& quadrature = {});

}  // namespace jcm
