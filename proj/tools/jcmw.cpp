// Command-line runner: `jcmw run --config <path> --out <path>` and
// `jcmw verify --suite <name>`. Exit codes: 0 ok, 1 verification failure,
// 2 config or usage error.

#include <CLI11.hpp>
#include <iostream>

#include "jcm/error.hpp"
#include "jcm/runner.hpp"
#include "jcm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multimode multiphoton Jaynes-Cummings simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads may follow the subcommand
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for time-grid evaluation")
      ->check(CLI::PositiveNumber);

  std::string config_path;
  std::string out_path;
  CLI::App* run = app.add_subcommand("run", "Evaluate a config over its time grid and write CSV");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--out", out_path, "Output CSV (overrides the config's output key)");

  std::string suite;
  std::vector<std::string> suites;
  for (const std::string_view name : jcm::suite_names()) {
    suites.emplace_back(name);
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a named identity suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*run) {
    try {
      const jcm::RunConfig config = jcm::load_run_config(config_path);
      const std::string path = out_path.empty() ? config.output : out_path;
      if (path.empty()) {
        std::cerr << "error: no output path (pass --out or set output in the config)\n";
        return kExitConfig;
      }
      jcm::write_series(jcm::run(config, threads), path);
      return kExitOk;
    } catch (const jcm::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfig;
    }
  }

  const jcm::SuiteReport report = jcm::run_suite(suite, threads);
  jcm::write_report(report, std::cout);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}
