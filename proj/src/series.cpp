#include "jcm/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "jcm/error.hpp"

namespace jcm {

namespace {

void append_number(std::string& line, double value) {
  char buffer[32];
  const int written = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  line.append(buffer, static_cast<std::size_t>(written));
}

}  // namespace

void ObservableSeries::add_column(std::string name, std::vector<double> values) {
  if (values.size() != t.size()) {
    throw InvalidArgument("column '" + name + "' has " + std::to_string(values.size()) +
                          " samples, time grid has " + std::to_string(t.size()));
  }
  if (has_column(name)) {
    throw InvalidArgument("duplicate column '" + name + "'");
  }
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

bool ObservableSeries::has_column(std::string_view name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

const std::vector<double>& ObservableSeries::column(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw InvalidArgument("no column named '" + std::string(name) + "'");
  }
  return columns[static_cast<std::size_t>(it - names.begin())];
}

void ObservableSeries::validate() const {
  if (names.size() != columns.size()) {
    throw InvalidArgument("series has mismatched names and columns");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != t.size()) {
      throw InvalidArgument("column '" + names[c] + "' length differs from the time grid");
    }
    for (const double v : columns[c]) {
      if (std::isnan(v)) {
        throw InvalidArgument("column '" + names[c] + "' contains NaN");
      }
    }
  }
}

void ObservableSeries::write_csv(std::ostream& out) const {
  validate();
  std::string line = "T";
  for (const std::string& name : names) {
    line += ',';
    line += name;
  }
  line += '\n';
  out << line;
  for (std::size_t i = 0; i < t.size(); ++i) {
    line.clear();
    append_number(line, t[i]);
    for (const auto& column : columns) {
      line += ',';
      append_number(line, column[i]);
    }
    line += '\n';
    out << line;
  }
}

std::vector<double> uniform_grid(double start, double stop, int steps) {
  if (steps < 2 || !(stop > start)) {
    throw InvalidArgument("uniform_grid: need steps >= 2 and stop > start");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double dt = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = start + dt * i;
  }
  grid.back() = stop;
  return grid;
}

}  // namespace jcm
