#include "delta1d/sweep_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "delta1d/errors.hpp"
#include "json.hpp"

namespace delta1d {

bool SweepTable::any_flagged() const {
  for (const auto& row : rows) {
    if (row.flagged()) return true;
  }
  return false;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void SweepTable::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    out << columns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      const double v = c < row.values.size()
                           ? row.values[c]
                           : std::numeric_limits<double>::quiet_NaN();
      out << format_double(v);
    }
    out << '\n';
  }
}

void SweepTable::write_json(std::ostream& out) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rec;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const double v = c < row.values.size()
                           ? row.values[c]
                           : std::numeric_limits<double>::quiet_NaN();
      if (std::isfinite(v)) {
        rec[columns[c]] = v;
      } else {
        rec[columns[c]] = nullptr;  // JSON has no nan/inf
      }
    }
    if (row.flagged()) rec["error"] = row.error;
    arr.push_back(std::move(rec));
  }
  out << arr.dump(2) << '\n';
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 1 || (n > 1 && !(lo < hi))) {
    throw InvalidParams("linear_grid: need n >= 1 and lo < hi");
  }
  std::vector<double> g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw InvalidParams("log_grid: endpoints must be positive");
  }
  auto g = linear_grid(std::log(lo), std::log(hi), n);
  for (auto& x : g) x = std::exp(x);
  if (n > 1) g.back() = hi;
  return g;
}

}  // namespace delta1d
