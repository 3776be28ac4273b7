#include "jcm/run_config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>

namespace jcm {

namespace {

constexpr std::pair<std::string_view, Observable> kObservableNames[] = {
    {"inversion", Observable::kInversion},
    {"wigner_origin", Observable::kWignerOrigin},
    {"homodyne_origin", Observable::kHomodyneOrigin},
    {"q_origin", Observable::kQOrigin},
    {"photon_counts", Observable::kPhotonCounts},
    {"estimator", Observable::kEstimator},
    {"asymptotics", Observable::kAsymptotics},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ConfigError(source_, line, message);
  }

  double to_double(int line, std::string_view key, std::string_view text) const {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      fail(line, "field '" + std::string(key) + "': expected a number, got '" + std::string(text) + "'");
    }
    return value;
  }

  int to_int(int line, std::string_view key, std::string_view text) const {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(line, "field '" + std::string(key) + "': expected an integer, got '" + std::string(text) + "'");
    }
    return value;
  }

  bool to_bool(int line, std::string_view key, std::string_view text) const {
    if (text == "true" || text == "1" || text == "yes") {
      return true;
    }
    if (text == "false" || text == "0" || text == "no") {
      return false;
    }
    fail(line, "field '" + std::string(key) + "': expected true or false, got '" + std::string(text) + "'");
  }

  RunConfig parse(std::istream& in) {
    RunConfig config;
    config.source = source_;
    enum class Section { kTop, kTime, kMode } section = Section::kTop;
    std::set<std::string> seen;  // keys of the current section
    bool have_time = false;
    int observables_line = 0;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail(line_no, "malformed section header '" + std::string(line) + "'");
        }
        const std::string_view name = trim(line.substr(1, line.size() - 2));
        seen.clear();
        if (name == "time") {
          if (have_time) {
            fail(line_no, "duplicate [time] section");
          }
          have_time = true;
          section = Section::kTime;
        } else if (name == "mode") {
          config.modes.emplace_back();
          config.modes.back().line = line_no;
          section = Section::kMode;
        } else {
          fail(line_no, "unknown section [" + std::string(name) + "]");
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        fail(line_no, "expected 'key = value', got '" + std::string(line) + "'");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key.empty()) {
        fail(line_no, "missing key before '='");
      }
      if (!seen.insert(key).second) {
        fail(line_no, "duplicate field '" + key + "'");
      }
      switch (section) {
        case Section::kTop:
          if (key == "detuning_ratio") {
            config.detuning_ratio = to_double(line_no, key, value);
          } else if (key == "output") {
            config.output = std::string(value);
          } else if (key == "tau_shift") {
            config.tau_shift = to_bool(line_no, key, value);
          } else if (key == "observables") {
            observables_line = line_no;
            parse_observables(line_no, value, config.observables);
          } else {
            fail(line_no, "unknown field '" + key + "'");
          }
          break;
        case Section::kTime:
          if (key == "start") {
            config.time.start = to_double(line_no, key, value);
          } else if (key == "stop") {
            config.time.stop = to_double(line_no, key, value);
          } else if (key == "steps") {
            config.time.steps = to_int(line_no, key, value);
          } else {
            fail(line_no, "unknown field '" + key + "' in [time]");
          }
          break;
        case Section::kMode:
          parse_mode_field(line_no, key, value, config.modes.back());
          break;
      }
    }

    if (!have_time) {
      fail(0, "missing [time] section");
    }
    if (config.time.steps < 2) {
      fail(0, "[time] steps must be >= 2");
    }
    if (!(config.time.stop > config.time.start)) {
      fail(0, "[time] stop must exceed start");
    }
    if (config.observables.empty()) {
      fail(observables_line, "observables must name at least one observable");
    }
    if (config.modes.empty()) {
      fail(0, "at least one [mode] section is required");
    }
    for (const ModeRecipe& mode : config.modes) {
      if (mode.n_max < 0) {
        fail(mode.line, "[mode] requires a non-negative n_max");
      }
    }
    return config;
  }

 private:
  void parse_observables(int line, std::string_view value, std::vector<Observable>& out) const {
    while (!value.empty()) {
      const auto comma = value.find(',');
      const std::string_view item = trim(value.substr(0, comma));
      if (!item.empty()) {
        const auto observable = observable_from_name(item);
        if (!observable) {
          fail(line, "unknown observable '" + std::string(item) + "'");
        }
        for (const Observable existing : out) {
          if (existing == *observable) {
            fail(line, "observable '" + std::string(item) + "' listed twice");
          }
        }
        out.push_back(*observable);
      }
      if (comma == std::string_view::npos) {
        break;
      }
      value = value.substr(comma + 1);
    }
  }

  void parse_mode_field(int line, const std::string& key, std::string_view value,
                        ModeRecipe& mode) const {
    if (key == "kind") {
      if (value == "coherent") {
        mode.kind = StateKind::kCoherent;
      } else if (value == "even_cat") {
        mode.kind = StateKind::kEvenCat;
      } else if (value == "odd_cat") {
        mode.kind = StateKind::kOddCat;
      } else if (value == "number") {
        mode.kind = StateKind::kNumber;
      } else {
        fail(line, "unknown state kind '" + std::string(value) + "'");
      }
    } else if (key == "alpha_re") {
      mode.alpha_re = to_double(line, key, value);
    } else if (key == "alpha_im") {
      mode.alpha_im = to_double(line, key, value);
    } else if (key == "m") {
      mode.m = to_int(line, key, value);
    } else if (key == "n_max") {
      mode.n_max = to_int(line, key, value);
    } else if (key == "k") {
      mode.k = to_int(line, key, value);
    } else if (key == "omega") {
      mode.omega = to_double(line, key, value);
    } else if (key == "tail_tolerance") {
      mode.tail_tolerance = to_double(line, key, value);
    } else {
      fail(line, "unknown field '" + key + "' in [mode]");
    }
  }

  std::string source_;
};

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

std::optional<Observable> observable_from_name(std::string_view name) {
  for (const auto& [text, observable] : kObservableNames) {
    if (text == name) {
      return observable;
    }
  }
  return std::nullopt;
}

std::string_view observable_name(Observable observable) {
  for (const auto& [text, value] : kObservableNames) {
    if (value == observable) {
      return text;
    }
  }
  return "?";
}

RunConfig parse_run_config(std::istream& in, const std::string& source_name) {
  return Parser(source_name).parse(in);
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path, 0, "cannot open config file");
  }
  return parse_run_config(in, path);
}

SystemConfig build_system(const RunConfig& config) {
  SystemConfig system;
  system.detuning_ratio = config.detuning_ratio;
  for (std::size_t i = 0; i < config.modes.size(); ++i) {
    const ModeRecipe& recipe = config.modes[i];
    const Complex alpha{recipe.alpha_re, recipe.alpha_im};
    try {
      FieldAmplitudes state = [&] {
        switch (recipe.kind) {
          case StateKind::kCoherent:
            return coherent(alpha, recipe.n_max, recipe.tail_tolerance);
          case StateKind::kEvenCat:
            return cat(alpha, Parity::kEven, recipe.n_max, recipe.tail_tolerance);
          case StateKind::kOddCat:
            return cat(alpha, Parity::kOdd, recipe.n_max, recipe.tail_tolerance);
          case StateKind::kNumber:
            return number(recipe.m, recipe.n_max);
        }
        throw InvalidArgument("unknown state kind");
      }();
      ModeConfig mode{recipe.k, std::move(state), recipe.omega};
      mode.validate();
      system.modes.push_back(std::move(mode));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(config.source, recipe.line, "mode " + std::to_string(i) + ": " + e.what());
    }
  }
  system.validate();
  return system;
}

}  // namespace jcm
