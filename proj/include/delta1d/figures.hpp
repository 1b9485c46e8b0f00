#pragma once

#include <filesystem>
#include <vector>

namespace delta1d {

struct FigureOutput {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> curve_files;
};

/// Emits the plot-ready data behind the four figures into out_dir: one CSV
/// per curve plus a manifest JSON naming the files, their parameters, and
/// the default column to plot.
///   1: |s|^2 vs k, mu = lambda0 = 1, k0 in {inf, 4, 2, 1}
///   2: E vs lambda0 in [-3,3], mu in {0.5, 1, 1.5} x E0 in {inf, 1}
///   3: psi(x), mu = 1, lambda0 = 2, E0 in {inf, 4, 1, 0.25}
///   4: psi(x), mu = 2, lambda0 = exp(-mu^2/(8 E0)), E0 in {inf, 2, 1, 0.5}
FigureOutput write_figure_data(int index, const std::filesystem::path& out_dir);

}  // namespace delta1d
