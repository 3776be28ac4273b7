#pragma once

// Initial single-mode field states in the Fock basis and their product
// distribution over several modes.

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace jcm {

using Complex = std::complex<double>;

/// Default bound on the probability mass a constructor may leave above the
/// truncation.
inline constexpr double kDefaultTailTolerance = 1e-12;

enum class Parity { kEven, kOdd };

/// Pure single-mode state sum_n C_n |n>, truncated at n_max.
///
/// Invariant: the kept mass sum_{n<=n_max} |C_n|^2 lies in
/// [1 - tail_bound, 1 + 1e-12], and tail_bound is an upper bound on the
/// discarded mass. Immutable after construction.
class FieldAmplitudes {
 public:
  /// Wraps user coefficients. Throws NotNormalized when the kept mass falls
  /// outside [1 - tail_bound, 1 + 1e-12].
  static FieldAmplitudes from_coefficients(std::vector<Complex> coeffs, double tail_bound = 0.0);

  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] double tail_bound() const { return tail_bound_; }

  [[nodiscard]] Complex operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  /// |C_n|^2
  [[nodiscard]] double probability(int n) const { return std::norm(coeffs_[static_cast<std::size_t>(n)]); }

  [[nodiscard]] double norm_sq() const;
  [[nodiscard]] double mean_photon_number() const;

 private:
  FieldAmplitudes(std::vector<Complex> coeffs, double tail_bound)
      : coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {}

  std::vector<Complex> coeffs_;
  double tail_bound_;
};

/// Coherent state |alpha>. Throws TruncationTooSmall when the Poisson tail
/// above n_max is >= tail_tolerance.
FieldAmplitudes coherent(Complex alpha, int n_max, double tail_tolerance = kDefaultTailTolerance);

/// Even or odd coherent state, normalized superposition of |alpha> and
/// |-alpha>. Throws DegenerateState for the odd state at alpha == 0.
FieldAmplitudes cat(Complex alpha, Parity parity, int n_max,
                    double tail_tolerance = kDefaultTailTolerance);

/// Number state |m>. Throws IndexOutOfRange unless 0 <= m <= n_max.
FieldAmplitudes number(int m, int n_max);

/// One field mode: multiphoton transition order k and its initial state.
struct ModeConfig {
  int k;
  FieldAmplitudes state;
  /// Mode frequency. Informational only: the interaction-picture dynamics
  /// see frequencies only through the detuning ratio.
  std::optional<double> omega;

  /// Checks k >= 1 and n_max >= k. Throws InvalidArgument.
  void validate() const;
};

/// Multi-index (n_1, ..., n_N) over the joint Fock grid.
using MultiIndex = std::vector<int>;

/// F(n) = prod_j C^{(j)}_{n_j}. Throws IndexOutOfRange for an index outside
/// some mode's truncation or of the wrong length.
Complex joint_weight(std::span<const ModeConfig> modes, std::span<const int> n);

}  // namespace jcm
