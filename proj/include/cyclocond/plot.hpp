/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace cyclocond {

struct PlotOptions {
  bool log_y = false;
  bool partition_by_omega = true;
  std::string script_name = "plot.gp";
  std::string image_name = "cond.png";
};

struct PlotSummary {
  // Series file name -> number of points written.
  std::map<std::string, std::size_t> series;
  std::size_t skipped_failed = 0;
  std::vector<std::string> warnings;
  std::filesystem::path script;
};

/// Reads a scan CSV and writes one "n cond" series file per omega(n) (or a
/// single series) plus a gnuplot script into out_dir. Lines starting with
/// '#' are comments. Throws SchemaError when the header or any row does not
/// match the scan schema, std::runtime_error on I/O failure.
PlotSummary emit_plot_data(const std::filesystem::path& csv, const std::filesystem::path& out_dir,
                           const PlotOptions& opts = {});

/// Series file name for one omega value.
std::string omega_series_name(unsigned omega);

}  // namespace cyclocond
