#pragma once

// Evaluates the observables of a RunConfig over its time grid.

#include <string>

#include "jcm/run_config.hpp"
#include "jcm/series.hpp"

namespace jcm {

/// Column layout, in config order:
///   inversion, wigner_origin, homodyne_origin, q_origin   one column each
///   photon_counts     P_0 .. P_{n_max + k}
///   estimator         estimator (needs time.start = 0)
///   asymptotics       wigner_origin_asymptotic, homodyne_asymptotic
/// With tau_shift, wigner_origin and homodyne_origin gain a `<name>_tau`
/// column evaluated at T + pi n_bar.
///
/// n_bar is sqrt(<n>) of the first mode. Observables restricted to one mode
/// are rejected with ConfigError for multimode configs.
///
/// threads >= 1. Each sample is computed independently, so the result does
/// not depend on the thread count.
ObservableSeries run(const RunConfig& config, int threads = 1);

/// Writes the CSV to path. Throws Error when the file cannot be written.
void write_series(const ObservableSeries& series, const std::string& path);

}  // namespace jcm
