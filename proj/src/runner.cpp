#include "jcm/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <thread>

#include "jcm/asymptotics.hpp"
#include "jcm/quasiprobability.hpp"

namespace jcm {

namespace {

// Calls fn(i) for i in [0, count), split into contiguous blocks per thread.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      try {
        for (std::size_t i = begin; i < end; ++i) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& thread : pool) {
    thread.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
}

bool wants(const RunConfig& config, Observable observable) {
  return std::find(config.observables.begin(), config.observables.end(), observable) !=
         config.observables.end();
}

AsymptoticParams params_for(const RunConfig& config, const SystemConfig& system, const char* what) {
  const double n_bar = std::sqrt(system.modes.front().state.mean_photon_number());
  try {
    return AsymptoticParams::from_n_bar(n_bar);
  } catch (const Error& e) {
    throw ConfigError(config.source, 0, std::string(what) + ": " + e.what());
  }
}

}  // namespace

ObservableSeries run(const RunConfig& config, int threads) {
  if (threads < 1) {
    throw InvalidArgument("run: thread count must be >= 1");
  }
  const SystemConfig system = build_system(config);
  const bool single = system.modes.size() == 1;
  for (const Observable observable : config.observables) {
    const bool single_only = observable == Observable::kQOrigin ||
                             observable == Observable::kPhotonCounts ||
                             observable == Observable::kEstimator ||
                             observable == Observable::kAsymptotics;
    if (single_only && !single) {
      throw ConfigError(config.source, 0,
                        "observable '" + std::string(observable_name(observable)) +
                            "' requires exactly one mode");
    }
  }

  ObservableSeries series;
  series.t = uniform_grid(config.time.start, config.time.stop, config.time.steps);
  const std::size_t samples = series.t.size();

  const bool need_n_bar = config.tau_shift || wants(config, Observable::kEstimator) ||
                          wants(config, Observable::kAsymptotics);
  const AsymptoticParams params =
      need_n_bar ? params_for(config, system, "n_bar") : AsymptoticParams{1.0, 1.0};
  const double shift = std::numbers::pi * params.n_bar;

  // Observables that only need the state at T (and optionally T + pi n_bar).
  const int count_width = system.modes.front().state.n_max() + system.modes.front().k + 1;
  std::vector<std::vector<double>> inversion, wigner, homodyne, q, counts, wigner_tau,
      homodyne_tau;
  const auto sized = [&](std::vector<std::vector<double>>& target, bool on, std::size_t width) {
    if (on) {
      target.assign(width, std::vector<double>(samples));
    }
  };
  sized(inversion, wants(config, Observable::kInversion), 1);
  sized(wigner, wants(config, Observable::kWignerOrigin), 1);
  sized(homodyne, wants(config, Observable::kHomodyneOrigin), 1);
  sized(q, wants(config, Observable::kQOrigin), 1);
  sized(counts, wants(config, Observable::kPhotonCounts), static_cast<std::size_t>(count_width));
  sized(wigner_tau, config.tau_shift && !wigner.empty(), 1);
  sized(homodyne_tau, config.tau_shift && !homodyne.empty(), 1);

  parallel_for(samples, threads, [&](std::size_t i) {
    const double T = series.t[i];
    const EvolvedState state = evolve(system, T);
    if (!inversion.empty()) inversion[0][i] = atomic_inversion(state);
    if (!wigner.empty()) wigner[0][i] = wigner_origin(state);
    if (!homodyne.empty()) homodyne[0][i] = homodyne_origin(state);
    if (!q.empty()) q[0][i] = q_origin(state);
    if (!counts.empty()) {
      const std::vector<double> dist = photon_count_distribution(state);
      for (std::size_t n = 0; n < dist.size(); ++n) {
        counts[n][i] = dist[n];
      }
    }
    if (!wigner_tau.empty() || !homodyne_tau.empty()) {
      const EvolvedState later = evolve(system, T + shift);
      if (!wigner_tau.empty()) wigner_tau[0][i] = wigner_origin(later);
      if (!homodyne_tau.empty()) homodyne_tau[0][i] = homodyne_origin(later);
    }
  });

  for (const Observable observable : config.observables) {
    switch (observable) {
      case Observable::kInversion:
        series.add_column("inversion", std::move(inversion[0]));
        break;
      case Observable::kWignerOrigin:
        series.add_column("wigner_origin", std::move(wigner[0]));
        if (!wigner_tau.empty()) series.add_column("wigner_origin_tau", std::move(wigner_tau[0]));
        break;
      case Observable::kHomodyneOrigin:
        series.add_column("homodyne_origin", std::move(homodyne[0]));
        if (!homodyne_tau.empty()) {
          series.add_column("homodyne_origin_tau", std::move(homodyne_tau[0]));
        }
        break;
      case Observable::kQOrigin:
        series.add_column("q_origin", std::move(q[0]));
        break;
      case Observable::kPhotonCounts:
        for (std::size_t n = 0; n < counts.size(); ++n) {
          series.add_column("P_" + std::to_string(n), std::move(counts[n]));
        }
        break;
      case Observable::kEstimator: {
        if (std::abs(config.time.start) > 0.0) {
          throw ConfigError(config.source, 0, "estimator requires [time] start = 0");
        }
        // P(0, tau) on tau = j dT, long enough to cover T + pi n_bar.
        const double dt = (config.time.stop - config.time.start) / (config.time.steps - 1);
        const auto extra = static_cast<std::size_t>(std::lround(shift / dt));
        ObservableSeries tau;
        tau.t.resize(samples + extra);
        for (std::size_t j = 0; j < tau.t.size(); ++j) {
          tau.t[j] = dt * static_cast<double>(j);
        }
        std::vector<double> p(tau.t.size());
        parallel_for(tau.t.size(), threads,
                     [&](std::size_t j) { p[j] = homodyne_origin(system, tau.t[j]); });
        tau.add_column("homodyne_origin", std::move(p));
        ObservableSeries estimate = inversion_estimator(tau, params);
        series.add_column("estimator", std::vector<double>(estimate.columns[0].begin(),
                                                           estimate.columns[0].begin() +
                                                               static_cast<std::ptrdiff_t>(samples)));
        break;
      }
      case Observable::kAsymptotics: {
        std::vector<double> w(samples);
        std::vector<double> p(samples);
        parallel_for(samples, threads, [&](std::size_t i) {
          w[i] = wigner_origin_asymptotic(params, series.t[i]);
          p[i] = homodyne_asymptotic(params, series.t[i]);
        });
        series.add_column("wigner_origin_asymptotic", std::move(w));
        series.add_column("homodyne_asymptotic", std::move(p));
        break;
      }
    }
  }
  series.validate();
  return series;
}

void write_series(const ObservableSeries& series, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  series.write_csv(out);
  out.flush();
  if (!out) {
    throw Error("failed writing '" + path + "'");
  }
}

}  // namespace jcm
