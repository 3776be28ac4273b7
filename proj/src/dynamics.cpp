#include "jcm/dynamics.hpp"

#include <cmath>
#include <string>

#include "jcm/error.hpp"
#include "jcm/specfun.hpp"

namespace jcm {

namespace {

// exp() overflows a double just above 709.
constexpr double kMaxLogCoupling = 700.0;

double log_coupling_sq(std::span<const int> n, const SystemConfig& config) {
  double log_sum = 0.0;
  for (std::size_t j = 0; j < config.modes.size(); ++j) {
    log_sum += specfun::log_rising_factorial(n[j], config.modes[j].k);
  }
  if (log_sum > kMaxLogCoupling) {
    throw Overflow("coupling product exp(" + std::to_string(log_sum) + ") overflows");
  }
  return log_sum;
}

BranchFactors branch_factors(double coupling, double T, double detuning) {
  const double h = coupling + detuning * detuning;
  const double root = std::sqrt(h);
  const double c = std::cos(T * root);
  const double s = std::sin(T * root) / root;
  return {Complex{c, -detuning * s}, -s * std::sqrt(coupling)};
}

void require_single_mode(const SystemConfig& config, const char* what) {
  if (config.modes.size() != 1) {
    throw UnsupportedArity(std::string(what) + " is defined for a single mode only, got " +
                           std::to_string(config.modes.size()));
  }
}

}  // namespace

FockGrid::FockGrid(std::vector<int> extents) : extents_(std::move(extents)), size_(1) {
  for (const int e : extents_) {
    if (e <= 0) {
      throw InvalidArgument("FockGrid: extents must be positive");
    }
    size_ *= static_cast<std::size_t>(e);
  }
}

std::size_t FockGrid::flat(std::span<const int> n) const {
  if (n.size() != extents_.size()) {
    throw IndexOutOfRange("FockGrid: multi-index rank mismatch");
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 0 || n[j] >= extents_[j]) {
      throw IndexOutOfRange("FockGrid: index " + std::to_string(n[j]) + " outside mode " +
                            std::to_string(j));
    }
    index = index * static_cast<std::size_t>(extents_[j]) + static_cast<std::size_t>(n[j]);
  }
  return index;
}

void SystemConfig::validate() const {
  if (modes.empty()) {
    throw InvalidArgument("SystemConfig: at least one mode is required");
  }
  for (const ModeConfig& mode : modes) {
    mode.validate();
  }
  if (!std::isfinite(detuning_ratio)) {
    throw InvalidArgument("SystemConfig: detuning ratio must be finite");
  }
}

FockGrid SystemConfig::grid() const {
  std::vector<int> extents;
  extents.reserve(modes.size());
  for (const ModeConfig& mode : modes) {
    extents.push_back(mode.state.n_max() + 1);
  }
  return FockGrid(std::move(extents));
}

int SystemConfig::total_k() const {
  int sum = 0;
  for (const ModeConfig& mode : modes) {
    sum += mode.k;
  }
  return sum;
}

double EvolvedState::norm_sq() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < a_plus.size(); ++i) {
    sum += std::norm(a_plus[i]) + std::norm(a_minus[i]);
  }
  return sum;
}

double coupling_sq(std::span<const int> n, const SystemConfig& config) {
  if (n.size() != config.modes.size()) {
    throw IndexOutOfRange("multi-index rank does not match the number of modes");
  }
  return std::exp(log_coupling_sq(n, config));
}

double rabi_sq(std::span<const int> n, const SystemConfig& config) {
  return coupling_sq(n, config) + config.detuning_ratio * config.detuning_ratio;
}

BranchFactors g1_g2(std::span<const int> n, double T, const SystemConfig& config) {
  return branch_factors(coupling_sq(n, config), T, config.detuning_ratio);
}

EvolvedState evolve(const SystemConfig& config, double T) {
  config.validate();
  if (!std::isfinite(T)) {
    throw InvalidArgument("evolve: non-finite time");
  }
  EvolvedState state;
  state.grid = config.grid();
  state.T = T;
  state.k.reserve(config.modes.size());
  for (const ModeConfig& mode : config.modes) {
    state.k.push_back(mode.k);
  }
  state.a_plus.resize(state.grid.size());
  state.a_minus.resize(state.grid.size());
  const Complex i_unit{0.0, 1.0};
  state.grid.for_each([&](std::size_t flat, std::span<const int> n) {
    const Complex f = joint_weight(config.modes, n);
    const BranchFactors g = branch_factors(std::exp(log_coupling_sq(n, config)), T,
                                           config.detuning_ratio);
    state.a_plus[flat] = f * g.g1;
    // +i G2 reproduces exp(-i T C2 / lambda) acting on |+, n> with the G2 sign
    // convention above.
    state.a_minus[flat] = i_unit * f * g.g2;
  });
  return state;
}

double atomic_inversion(const SystemConfig& config, double T) {
  config.validate();
  double sum = 0.0;
  config.grid().for_each([&](std::size_t, std::span<const int> n) {
    const double weight = std::norm(joint_weight(config.modes, n));
    if (weight == 0.0) {
      return;
    }
    const BranchFactors g = branch_factors(std::exp(log_coupling_sq(n, config)), T,
                                           config.detuning_ratio);
    sum += weight * (std::norm(g.g1) - g.g2 * g.g2);
  });
  return sum;
}

double atomic_inversion(const EvolvedState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.a_plus.size(); ++i) {
    sum += std::norm(state.a_plus[i]) - std::norm(state.a_minus[i]);
  }
  return sum;
}

std::vector<double> photon_count_distribution(const SystemConfig& config, double T) {
  require_single_mode(config, "photon_count_distribution");
  return photon_count_distribution(evolve(config, T));
}

std::vector<double> photon_count_distribution(const EvolvedState& state) {
  if (state.grid.rank() != 1) {
    throw UnsupportedArity("photon_count_distribution is defined for a single mode only, got " +
                           std::to_string(state.grid.rank()));
  }
  const int n_max = state.grid.extent(0) - 1;
  const int k = state.k[0];
  std::vector<double> counts(static_cast<std::size_t>(n_max + k) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    counts[static_cast<std::size_t>(n)] += std::norm(state.a_plus[static_cast<std::size_t>(n)]);
    counts[static_cast<std::size_t>(n + k)] += std::norm(state.a_minus[static_cast<std::size_t>(n)]);
  }
  return counts;
}

}  // namespace jcm
