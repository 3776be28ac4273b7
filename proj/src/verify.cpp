#include "jcm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include "jcm/asymptotics.hpp"
#include "jcm/error.hpp"
#include "jcm/quasiprobability.hpp"
#include "jcm/series.hpp"
#include "jcm/specfun.hpp"

namespace jcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SystemConfig single_mode(FieldAmplitudes state, int k, double detuning) {
  SystemConfig config;
  config.modes.push_back(ModeConfig{k, std::move(state), std::nullopt});
  config.detuning_ratio = detuning;
  return config;
}

// f(T) over the grid, evaluated on `threads` workers.
std::vector<double> map_over(const std::vector<double>& grid, int threads,
                             const std::function<double(double)>& f) {
  std::vector<double> values(grid.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(threads, 1));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = grid.size() * w / workers; i < grid.size() * (w + 1) / workers; ++i) {
          values[i] = f(grid[i]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return values;
}

double max_abs(const std::vector<double>& values) {
  double worst = 0.0;
  for (const double v : values) {
    // NaN must not slip through as a pass.
    worst = std::isnan(v) ? kInf : std::max(worst, std::abs(v));
  }
  return worst;
}

double max_over(const std::vector<double>& grid, int threads,
                const std::function<double(double)>& f) {
  return max_abs(map_over(grid, threads, f));
}

CheckResult check(std::string name, double tolerance, const std::function<double()>& deviation) {
  CheckResult result{std::move(name), kInf, tolerance, false, {}};
  try {
    result.max_deviation = deviation();
    result.passed = result.max_deviation < tolerance;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

std::vector<CheckResult> parity_suite(int threads) {
  std::vector<CheckResult> out;
  const std::vector<double> grid = uniform_grid(0.0, 25.0, 1000);
  for (const double detuning : {0.0, 1.0}) {
    for (const Parity parity : {Parity::kEven, Parity::kOdd}) {
      const bool even = parity == Parity::kEven;
      std::string name = std::string(even ? "even" : "odd") + "_cat_alpha2_k1_detuning" +
                         (detuning == 0.0 ? "0" : "1");
      out.push_back(check(std::move(name), 1e-10, [&] {
        const SystemConfig config = single_mode(cat(2.0, parity, 40), 1, detuning);
        const double sign = even ? 1.0 : -1.0;
        return max_over(grid, threads, [&](double T) {
          const EvolvedState state = evolve(config, T);
          return wigner_origin(state) - sign * atomic_inversion(config, T);
        });
      }));
    }
  }
  return out;
}

std::vector<CheckResult> localization_suite(int threads) {
  std::vector<CheckResult> out;
  const std::vector<double> grid = uniform_grid(0.0, 20.0, 101);
  SystemConfig config;
  config.modes.push_back(ModeConfig{1, coherent(1.5, 30), std::nullopt});
  config.modes.push_back(ModeConfig{1, coherent(2.0, 30), std::nullopt});
  std::vector<double> values;
  std::string failure;
  try {
    values = map_over(grid, threads, [&](double T) { return wigner_origin(config, T); });
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto report = [&](std::string name, const std::function<double()>& deviation) {
    if (!failure.empty()) {
      out.push_back({std::move(name), kInf, 1e-10, false, failure});
    } else {
      out.push_back(check(std::move(name), 1e-10, deviation));
    }
  };
  report("two_mode_coherent_k11_time_independent", [&] {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
  });
  report("two_mode_coherent_k11_closed_form", [&] {
    const double expected = std::exp(-2.0 * 1.5 * 1.5 - 2.0 * 2.0 * 2.0);
    return max_over(values, 1, [&](double v) { return v - expected; });
  });
  report("two_mode_coherent_k11_initial_product", [&] {
    const double expected = wigner_origin_initial_product(config);
    return max_over(values, 1, [&](double v) { return v - expected; });
  });
  return out;
}

std::vector<CheckResult> counting_suite(int threads) {
  std::vector<CheckResult> out;
  const std::vector<double> grid = uniform_grid(0.0, 20.0, 200);
  for (const int k : {1, 2}) {
    out.push_back(check("coherent_alpha2_k" + std::to_string(k), 1e-10, [&] {
      const SystemConfig config = single_mode(coherent(2.0, 40), k, 0.0);
      return max_over(grid, threads, [&](double T) {
        const EvolvedState state = evolve(config, T);
        return parity_sum(photon_count_distribution(state)) - wigner_origin(state);
      });
    }));
  }
  return out;
}

std::vector<CheckResult> radon_suite() {
  std::vector<CheckResult> out;
  out.push_back(check("vacuum", 2e-3, [] {
    return std::abs(inverse_radon_origin([](double z) { return marginal_number_state(0, z); }) - 1.0);
  }));
  out.push_back(check("number_state_1", 2e-3, [] {
    return std::abs(inverse_radon_origin([](double z) { return marginal_number_state(1, z); }) + 1.0);
  }));
  const SystemConfig config = single_mode(coherent(2.0, 40), 1, 0.0);
  for (const double T : {0.5, 2.0, 7.0}) {
    char name[64];
    std::snprintf(name, sizeof name, "coherent_alpha2_k1_T%g", T);
    out.push_back(check(name, 5e-3, [&] {
      const double reconstructed = inverse_radon_origin(
          [&](double z) { return phase_averaged_position_distribution(config, T, z); });
      return std::abs(reconstructed - wigner_origin(config, T));
    }));
  }
  return out;
}

std::vector<CheckResult> appendix_suite() {
  std::vector<CheckResult> out;
  const auto relative = [](std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::abs(want);
  };
  for (const double x : {1.0, 4.0, 16.0, 64.0}) {
    char name[64];
    std::snprintf(name, sizeof name, "I0_x%g", x);
    out.push_back(check(name, 1e-8, [&] {
      return relative(hermite_poisson_sum(HermitePoissonVariant::kI0, x),
                      specfun::bessel_i(0, x));
    }));
    for (const double theta : {0.0, 0.3, std::numbers::pi / 2}) {
      const std::complex<double> z = std::polar(x, theta);
      std::snprintf(name, sizeof name, "I1_x%g_theta%.4g", x, theta);
      out.push_back(check(name, 1e-8, [&] {
        return relative(hermite_poisson_sum(HermitePoissonVariant::kI1, x, theta),
                        specfun::bessel_i(1, z));
      }));
      std::snprintf(name, sizeof name, "phased_x%g_theta%.4g", x, theta);
      out.push_back(check(name, 1e-8, [&] {
        return relative(hermite_poisson_sum(HermitePoissonVariant::kPhased, x, theta),
                        specfun::bessel_i(0, z));
      }));
    }
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string_view> suite_names() {
  return {"parity", "localization", "counting", "radon", "appendix"};
}

SuiteReport run_suite(std::string_view suite, int threads) {
  SuiteReport report{std::string(suite), {}};
  if (suite == "parity") {
    report.checks = parity_suite(threads);
  } else if (suite == "localization") {
    report.checks = localization_suite(threads);
  } else if (suite == "counting") {
    report.checks = counting_suite(threads);
  } else if (suite == "radon") {
    report.checks = radon_suite();
  } else if (suite == "appendix") {
    report.checks = appendix_suite();
  } else {
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  }
  return report;
}

void write_report(const SuiteReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %s/%s max_dev=%.3e tol=%.1e", c.passed ? "PASS" : "FAIL",
                  report.suite.c_str(), c.name.c_str(), c.max_deviation, c.tolerance);
    out << line;
    if (!c.error.empty()) {
      out << " error=\"" << c.error << '"';
    }
    out << '\n';
  }
  out << (report.passed() ? "PASS " : "FAIL ") << report.suite << '\n';
}

}  // namespace jcm
