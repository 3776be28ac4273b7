#include "jcm/fock.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jcm/error.hpp"

namespace jcm {

namespace {

// Rounding slack on the norm check; the kept mass of a state built in log
// space differs from 1 - tail by a few ulps per coefficient.
constexpr double kNormSlack = 1e-12;

void require_n_max(int n_max) {
  if (n_max < 0) {
    throw InvalidArgument("negative truncation n_max = " + std::to_string(n_max));
  }
}

// Sum of exp(log_term(n)) over n > n_max restricted to n with the given
// stride (1 for all n, 2 for one parity). The terms are unimodal in n, so we
// stop once past the peak and negligible.
template <typename LogTerm>
double tail_mass(int n_max, int stride, double peak, LogTerm log_term) {
  double sum = 0.0;
  for (int n = n_max + 1;; n += stride) {
    const double term = std::exp(log_term(n));
    sum += term;
    if (n > peak && term <= 1e-30 * sum) {
      break;
    }
    if (n > n_max + 100000) {
      break;
    }
  }
  return sum;
}

void check_tail(double tail, double tolerance, int n_max, const char* what) {
  if (!(tail < tolerance)) {
    throw TruncationTooSmall(std::string(what) + ": probability mass " + std::to_string(tail) +
                             " above n_max = " + std::to_string(n_max) +
                             " exceeds tolerance " + std::to_string(tolerance));
  }
}

// log cosh(x) and log sinh(x) for x >= 0 without overflow.
double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0); }
double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::log(2.0); }

}  // namespace

FieldAmplitudes FieldAmplitudes::from_coefficients(std::vector<Complex> coeffs, double tail_bound) {
  if (coeffs.empty()) {
    throw InvalidArgument("FieldAmplitudes: empty coefficient vector");
  }
  if (!(tail_bound >= 0.0)) {
    throw InvalidArgument("FieldAmplitudes: tail_bound must be non-negative");
  }
  double mass = 0.0;
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("FieldAmplitudes: non-finite coefficient");
    }
    mass += std::norm(c);
  }
  if (mass < 1.0 - tail_bound - kNormSlack || mass > 1.0 + kNormSlack) {
    throw NotNormalized("FieldAmplitudes: kept mass " + std::to_string(mass) +
                        " outside [1 - tail_bound, 1]");
  }
  return FieldAmplitudes(std::move(coeffs), tail_bound);
}

double FieldAmplitudes::norm_sq() const {
  double sum = 0.0;
  for (const Complex& c : coeffs_) {
    sum += std::norm(c);
  }
  return sum;
}

double FieldAmplitudes::mean_photon_number() const {
  double sum = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    sum += static_cast<double>(n) * std::norm(coeffs_[n]);
  }
  return sum;
}

FieldAmplitudes coherent(Complex alpha, int n_max, double tail_tolerance) {
  require_n_max(n_max);
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
  const double modulus = std::abs(alpha);
  if (modulus == 0.0) {
    coeffs[0] = 1.0;
    return FieldAmplitudes::from_coefficients(std::move(coeffs), 0.0);
  }
  const double mean = modulus * modulus;
  const double log_mod = std::log(modulus);
  const double phase = std::arg(alpha);
  for (int n = 0; n <= n_max; ++n) {
    const double log_c = -0.5 * mean + n * log_mod - 0.5 * std::lgamma(n + 1.0);
    coeffs[static_cast<std::size_t>(n)] = std::polar(std::exp(log_c), n * phase);
  }
  const double tail = tail_mass(n_max, 1, mean, [&](int n) {
    return -mean + 2.0 * n * log_mod - std::lgamma(n + 1.0);
  });
  check_tail(tail, tail_tolerance, n_max, "coherent");
  return FieldAmplitudes::from_coefficients(std::move(coeffs), tail);
}

FieldAmplitudes cat(Complex alpha, Parity parity, int n_max, double tail_tolerance) {
  require_n_max(n_max);
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
  const double modulus = std::abs(alpha);
  if (modulus == 0.0) {
    if (parity == Parity::kOdd) {
      throw DegenerateState("odd cat state is undefined at alpha = 0");
    }
    coeffs[0] = 1.0;
    return FieldAmplitudes::from_coefficients(std::move(coeffs), 0.0);
  }
  const double mean = modulus * modulus;
  const double log_norm = parity == Parity::kEven ? log_cosh(mean) : log_sinh(mean);
  const double log_mod = std::log(modulus);
  const double phase = std::arg(alpha);
  const int first = parity == Parity::kEven ? 0 : 1;
  for (int n = first; n <= n_max; n += 2) {
    const double log_c = n * log_mod - 0.5 * std::lgamma(n + 1.0) - 0.5 * log_norm;
    coeffs[static_cast<std::size_t>(n)] = std::polar(std::exp(log_c), n * phase);
  }
  int start = n_max + 1;
  if ((start - first) % 2 != 0) {
    ++start;
  }
  const double tail = tail_mass(start - 1, 2, mean, [&](int n) {
    return 2.0 * n * log_mod - std::lgamma(n + 1.0) - log_norm;
  });
  check_tail(tail, tail_tolerance, n_max, "cat");
  return FieldAmplitudes::from_coefficients(std::move(coeffs), tail);
}

FieldAmplitudes number(int m, int n_max) {
  require_n_max(n_max);
  if (m < 0 || m > n_max) {
    throw IndexOutOfRange("number state |" + std::to_string(m) + "> outside [0, " +
                          std::to_string(n_max) + "]");
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
  coeffs[static_cast<std::size_t>(m)] = 1.0;
  return FieldAmplitudes::from_coefficients(std::move(coeffs), 0.0);
}

void ModeConfig::validate() const {
  if (k < 1) {
    throw InvalidArgument("transition parameter k must be >= 1, got " + std::to_string(k));
  }
  if (state.n_max() < k) {
    throw InvalidArgument("truncation n_max = " + std::to_string(state.n_max()) +
                          " is below k = " + std::to_string(k));
  }
}

Complex joint_weight(std::span<const ModeConfig> modes, std::span<const int> n) {
  if (n.size() != modes.size()) {
    throw IndexOutOfRange("multi-index has " + std::to_string(n.size()) + " entries for " +
                          std::to_string(modes.size()) + " modes");
  }
  Complex weight{1.0, 0.0};
  for (std::size_t j = 0; j < modes.size(); ++j) {
    if (n[j] < 0 || n[j] > modes[j].state.n_max()) {
      throw IndexOutOfRange("index " + std::to_string(n[j]) + " outside mode " +
                            std::to_string(j) + " truncation");
    }
    weight *= modes[j].state[n[j]];
  }
  return weight;
}

}  // namespace jcm
