#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jcm {

/// Named real columns sampled on a common time grid.
struct ObservableSeries {
  std::vector<double> t;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  /// Throws InvalidArgument on a length mismatch or a duplicate name.
  void add_column(std::string name, std::vector<double> values);

  [[nodiscard]] bool has_column(std::string_view name) const;
  /// Throws InvalidArgument for an unknown column.
  [[nodiscard]] const std::vector<double>& column(std::string_view name) const;

  /// Checks equal lengths and the absence of NaN. Throws InvalidArgument.
  void validate() const;

  /// Header `T,<name>...`, then one row per sample, values printed with 17
  /// significant digits and '\n' line endings.
  void write_csv(std::ostream& out) const;
};

/// Uniform grid of `steps` points from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, int steps);

}  // namespace jcm
