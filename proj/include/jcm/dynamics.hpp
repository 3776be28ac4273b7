#pragma once

// Exact interaction-picture evolution of a two-level atom, initially excited,
// coupled to N field modes through k_j-photon transitions.
//
// Each joint Fock index n spans a two-dimensional invariant subspace
// {|+, n>, |-, n + k>}, so the evolution is closed form per index:
//
//   |psi(T)> = sum_n F(n) [ G1(n,T) |+, n> + i G2(n,T) |-, n + k> ]
//
// with h(n) = prod_j (n_j+k_j)!/n_j! + (Delta/lambda)^2,
//   G1 = cos(T sqrt h) - i (Delta/lambda) sin(T sqrt h) / sqrt h,
//   G2 = -sin(T sqrt h) sqrt(prod_j (n_j+k_j)!/n_j!) / sqrt h.
// Time is the scaled time T = lambda t throughout.

#include <cstddef>
#include <span>
#include <vector>

#include "jcm/fock.hpp"

namespace jcm {

/// Dense row-major index space over prod_j extent_j Fock indices.
class FockGrid {
 public:
  FockGrid() = default;
  explicit FockGrid(std::vector<int> extents);

  [[nodiscard]] std::size_t rank() const { return extents_.size(); }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] int extent(std::size_t mode) const { return extents_[mode]; }
  [[nodiscard]] std::span<const int> extents() const { return extents_; }

  [[nodiscard]] std::size_t flat(std::span<const int> n) const;

  /// Calls fn(flat_index, multi_index) for every grid point in flat order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    MultiIndex n(extents_.size(), 0);
    for (std::size_t i = 0; i < size_; ++i) {
      fn(i, std::span<const int>(n));
      for (std::size_t j = n.size(); j-- > 0;) {
        if (++n[j] < extents_[j]) {
          break;
        }
        n[j] = 0;
      }
    }
  }

 private:
  std::vector<int> extents_;
  std::size_t size_ = 0;
};

/// The full atom + N-mode problem. detuning_ratio is Delta/lambda.
struct SystemConfig {
  std::vector<ModeConfig> modes;
  double detuning_ratio = 0.0;

  /// Throws InvalidArgument for an empty mode list or an invalid mode.
  void validate() const;

  [[nodiscard]] FockGrid grid() const;
  [[nodiscard]] int total_k() const;
};

struct BranchFactors {
  Complex g1;
  double g2;
};

/// Joint amplitudes at time T. a_plus(n) multiplies |+, n>; a_minus(n)
/// multiplies |-, n + k> and is stored at the base index n, so nothing is
/// lost at the truncation edge.
struct EvolvedState {
  FockGrid grid;
  std::vector<int> k;
  double T = 0.0;
  std::vector<Complex> a_plus;
  std::vector<Complex> a_minus;

  [[nodiscard]] double norm_sq() const;
};

/// prod_j (n_j + k_j)!/n_j!, evaluated through log_rising_factorial.
/// Throws Overflow when the product leaves double range.
double coupling_sq(std::span<const int> n, const SystemConfig& config);

/// h(n; k) = coupling_sq + (Delta/lambda)^2.
double rabi_sq(std::span<const int> n, const SystemConfig& config);

BranchFactors g1_g2(std::span<const int> n, double T, const SystemConfig& config);

EvolvedState evolve(const SystemConfig& config, double T);

/// <sigma_z(T)> = sum_n |F(n)|^2 (|G1|^2 - |G2|^2), summed directly without
/// building the state.
double atomic_inversion(const SystemConfig& config, double T);

/// sum_n |a_plus|^2 - |a_minus|^2 of an evolved state.
double atomic_inversion(const EvolvedState& state);

/// Single-mode photon-number distribution of the field at time T, indexed
/// 0 .. n_max + k. Throws UnsupportedArity for N > 1.
std::vector<double> photon_count_distribution(const SystemConfig& config, double T);
std::vector<double> photon_count_distribution(const EvolvedState& state);

}  // namespace jcm
