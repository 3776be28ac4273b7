#include "jcm/quasiprobability.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcm/error.hpp"
#include "jcm/specfun.hpp"

namespace jcm {

namespace {

void require_single_mode(const SystemConfig& config, const char* what) {
  if (config.modes.size() != 1) {
    throw UnsupportedArity(std::string(what) + " is defined for a single mode only, got " +
                           std::to_string(config.modes.size()));
  }
}

int index_sum(std::span<const int> n) {
  int sum = 0;
  for (const int v : n) {
    sum += v;
  }
  return sum;
}

double parity_sign(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

int num_steps(double lo, double hi, double step) {
  return static_cast<int>(std::lround((hi - lo) / step));
}

}  // namespace

double wigner_number_state(int n, double q, double p) {
  const double r2 = q * q + p * p;
  return parity_sign(n) / std::numbers::pi * std::exp(-r2) * specfun::laguerre(n, 2.0 * r2);
}

double marginal_number_state(int n, double q) {
  const std::vector<double> psi = specfun::hermite_functions(n, q);
  return psi.back() * psi.back();
}

double wigner_origin(const EvolvedState& state) {
  int total_k = 0;
  for (const int k : state.k) {
    total_k += k;
  }
  double sum = 0.0;
  state.grid.for_each([&](std::size_t flat, std::span<const int> n) {
    const int parity = index_sum(n);
    sum += parity_sign(parity) * std::norm(state.a_plus[flat]) +
           parity_sign(parity + total_k) * std::norm(state.a_minus[flat]);
  });
  return sum;
}

double wigner_origin(const SystemConfig& config, double T) { return wigner_origin(evolve(config, T)); }

double wigner_origin_initial_product(const SystemConfig& config) {
  config.validate();
  double product = 1.0;
  for (const ModeConfig& mode : config.modes) {
    double sum = 0.0;
    for (int n = 0; n <= mode.state.n_max(); ++n) {
      sum += parity_sign(n) * mode.state.probability(n);
    }
    product *= sum;
  }
  return product;
}

double homodyne_origin(const EvolvedState& state) {
  const std::size_t modes = state.grid.rank();
  std::vector<std::vector<double>> weights;
  weights.reserve(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    weights.push_back(specfun::hermite_zero_weights(state.grid.extent(j) - 1 + state.k[j]));
  }
  double sum = 0.0;
  state.grid.for_each([&](std::size_t flat, std::span<const int> n) {
    double plus_weight = 1.0;
    double minus_weight = 1.0;
    for (std::size_t j = 0; j < modes; ++j) {
      plus_weight *= weights[j][static_cast<std::size_t>(n[j])];
      minus_weight *= weights[j][static_cast<std::size_t>(n[j] + state.k[j])];
    }
    sum += std::norm(state.a_plus[flat]) * plus_weight +
           std::norm(state.a_minus[flat]) * minus_weight;
  });
  return sum * std::pow(std::numbers::pi, -0.5 * static_cast<double>(modes));
}

double homodyne_origin(const SystemConfig& config, double T) {
  return homodyne_origin(evolve(config, T));
}

double q_origin(const SystemConfig& config, double T) {
  require_single_mode(config, "q_origin");
  return q_origin(evolve(config, T));
}

double q_origin(const EvolvedState& state) {
  if (state.grid.rank() != 1) {
    throw UnsupportedArity("q_origin is defined for a single mode only, got " +
                           std::to_string(state.grid.rank()));
  }
  // k >= 1, so the |-, n + k> branch never reaches the vacuum.
  return std::norm(state.a_plus[0]) / std::numbers::pi;
}

double parity_sum(const std::vector<double>& count_dist) {
  double total = 0.0;
  double alternating = 0.0;
  for (std::size_t n = 0; n < count_dist.size(); ++n) {
    if (count_dist[n] < 0.0 || !std::isfinite(count_dist[n])) {
      throw InvalidArgument("parity_sum: entry " + std::to_string(n) + " is not a probability");
    }
    total += count_dist[n];
    alternating += n % 2 == 0 ? count_dist[n] : -count_dist[n];
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw NotNormalized("parity_sum: distribution sums to " + std::to_string(total));
  }
  return alternating;
}

double position_distribution(const SystemConfig& config, double T, double zeta) {
  require_single_mode(config, "position_distribution");
  const EvolvedState state = evolve(config, T);
  const int k = state.k[0];
  const int n_max = state.grid.extent(0) - 1;
  const std::vector<double> psi = specfun::hermite_functions(n_max + k, zeta);
  Complex plus{0.0, 0.0};
  Complex minus{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    plus += state.a_plus[static_cast<std::size_t>(n)] * psi[static_cast<std::size_t>(n)];
    minus += state.a_minus[static_cast<std::size_t>(n)] * psi[static_cast<std::size_t>(n + k)];
  }
  return std::norm(plus) + std::norm(minus);
}

double phase_averaged_position_distribution(const SystemConfig& config, double T, double zeta) {
  require_single_mode(config, "phase_averaged_position_distribution");
  const EvolvedState state = evolve(config, T);
  const int k = state.k[0];
  const int n_max = state.grid.extent(0) - 1;
  const std::vector<double> psi = specfun::hermite_functions(n_max + k, zeta);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double up = psi[static_cast<std::size_t>(n)];
    const double down = psi[static_cast<std::size_t>(n + k)];
    sum += std::norm(state.a_plus[static_cast<std::size_t>(n)]) * up * up +
           std::norm(state.a_minus[static_cast<std::size_t>(n)]) * down * down;
  }
  return sum;
}

double inverse_radon_origin(const std::function<double(double)>& pr, const RadonQuadrature& quad) {
  if (!(quad.zeta_max > quad.zeta_min) || !(quad.zeta_step > 0.0) || !(quad.eta_max > 0.0) ||
      !(quad.eta_step > 0.0) || !(quad.epsilon > 0.0)) {
    throw InvalidArgument("inverse_radon_origin: invalid quadrature settings");
  }
  const int zeta_steps = num_steps(quad.zeta_min, quad.zeta_max, quad.zeta_step);
  const double dz = (quad.zeta_max - quad.zeta_min) / zeta_steps;
  std::vector<double> zeta(static_cast<std::size_t>(zeta_steps) + 1);
  std::vector<double> weighted(zeta.size());
  for (int i = 0; i <= zeta_steps; ++i) {
    zeta[static_cast<std::size_t>(i)] = quad.zeta_min + dz * i;
    const double w = (i == 0 || i == zeta_steps) ? 0.5 * dz : dz;
    weighted[static_cast<std::size_t>(i)] = w * pr(zeta[static_cast<std::size_t>(i)]);
  }

  const int eta_steps = num_steps(0.0, quad.eta_max, quad.eta_step);
  const double de = quad.eta_max / eta_steps;
  // Characteristic function phi(eta) = int pr(zeta) exp(i eta zeta) on the
  // symmetric grid eta_j = j * de, j = -J .. J.
  const std::size_t eta_count = 2 * static_cast<std::size_t>(eta_steps) + 1;
  std::vector<double> eta(eta_count);
  std::vector<Complex> phi(eta_count);
  for (std::size_t j = 0; j < eta_count; ++j) {
    eta[j] = de * (static_cast<double>(j) - eta_steps);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < zeta.size(); ++i) {
      const double arg = eta[j] * zeta[i];
      acc += weighted[i] * Complex{std::cos(arg), std::sin(arg)};
    }
    phi[j] = acc;
  }

  // Trapezoid over |eta| >= |eta_from| of |eta| phi(eta) exp(-eps eta^2).
  const auto regularized = [&](double eps, double eta_from) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < eta_count; ++j) {
      const double a = std::abs(eta[j]);
      if (a < eta_from) {
        continue;
      }
      const double end_weight = (j == 0 || j + 1 == eta_count) ? 0.5 : 1.0;
      acc += end_weight * de * a * std::exp(-eps * a * a) * phi[j];
    }
    // pi * (1 / 4pi)
    return acc / 4.0;
  };

  const Complex coarse = regularized(quad.epsilon, 0.0);
  const Complex fine = regularized(0.5 * quad.epsilon, 0.0);
  if (std::abs(fine.imag()) > 1e-6) {
    throw QuadratureDiverged("inverse_radon_origin: imaginary part " +
                             std::to_string(fine.imag()) + " exceeds 1e-6");
  }
  if (std::abs(fine.real() - coarse.real()) > quad.tolerance) {
    throw QuadratureDiverged("inverse_radon_origin: regularized values differ by " +
                             std::to_string(std::abs(fine.real() - coarse.real())));
  }
  const Complex edge = regularized(0.5 * quad.epsilon, 0.95 * quad.eta_max);
  if (std::abs(edge.real()) > quad.tolerance) {
    throw QuadratureDiverged("inverse_radon_origin: kernel has not decayed by eta_max = " +
                             std::to_string(quad.eta_max));
  }
  return 2.0 * fine.real() - coarse.real();
}

}  // namespace jcm
