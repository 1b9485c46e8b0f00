#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace delta1d {

/// Ordered rows of computed quantities over an input grid, ready for CSV or
/// JSON emission. Rows that failed to compute carry an error note instead of
/// aborting the sweep; their numeric slots hold nan.
struct SweepTable {
  struct Row {
    std::vector<double> values;
    std::string error;  // empty = computed cleanly

    bool flagged() const { return !error.empty(); }
  };

  std::vector<std::string> columns;
  std::vector<Row> rows;

  bool any_flagged() const;

  /// CSV with a header line; every value printed with 17 significant digits,
  /// '.' decimal separator, '\n' line endings. Byte-stable for a fixed table.
  void write_csv(std::ostream& out) const;

  /// JSON array of one record per row; flagged rows gain an "error" member.
  void write_json(std::ostream& out) const;
};

/// Deterministic shortest-faithful double formatting used by every emitter
/// (printf %.17g).
std::string format_double(double v);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Inclusive endpoints, n >= 2 (n == 1 allowed, yielding {lo}).
std::vector<double> linear_grid(double lo, double hi, int n);
/// Log-spaced grid; requires lo, hi > 0.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace delta1d
