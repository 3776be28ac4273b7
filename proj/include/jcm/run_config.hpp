#pragma once

// Text configuration for the experiment runner.
//
//   # comment
//   detuning_ratio = 0
//   observables = inversion, wigner_origin
//   output = fig1.csv
//   tau_shift = false
//
//   [time]
//   start = 0
//   stop = 60
//   steps = 6001
//
//   [mode]
//   kind = coherent        # coherent | even_cat | odd_cat | number
//   alpha_re = 8
//   alpha_im = 0
//   n_max = 140
//   k = 1
//
// `[mode]` may repeat, one block per field mode. Number states use `m`
// instead of alpha. Optional per-mode keys: `omega`, `tail_tolerance`.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jcm/dynamics.hpp"
#include "jcm/error.hpp"

namespace jcm {

/// Parse or validation failure, with the offending line (0 when the problem
/// is not tied to one line).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

enum class StateKind { kCoherent, kEvenCat, kOddCat, kNumber };

struct ModeRecipe {
  StateKind kind = StateKind::kCoherent;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  int m = 0;
  int n_max = -1;
  int k = 1;
  std::optional<double> omega;
  double tail_tolerance = kDefaultTailTolerance;
  int line = 0;
};

struct TimeGridSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

enum class Observable {
  kInversion,
  kWignerOrigin,
  kHomodyneOrigin,
  kQOrigin,
  kPhotonCounts,
  kEstimator,
  kAsymptotics,
};

/// Returns std::nullopt for an unknown name.
std::optional<Observable> observable_from_name(std::string_view name);
std::string_view observable_name(Observable observable);

struct RunConfig {
  std::vector<ModeRecipe> modes;
  double detuning_ratio = 0.0;
  TimeGridSpec time;
  std::vector<Observable> observables;
  std::string output;
  /// Adds `<observable>_tau` columns evaluated at T + pi n_bar for
  /// wigner_origin and homodyne_origin.
  bool tau_shift = false;
  std::string source = "<config>";
};

RunConfig parse_run_config(std::istream& in, const std::string& source_name = "<config>");
RunConfig load_run_config(const std::string& path);

/// Builds the field states. Constructor failures are rethrown as ConfigError
/// naming the mode index and its line.
SystemConfig build_system(const RunConfig& config);

}  // namespace jcm
