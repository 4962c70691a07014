/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/plot.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cyclocond/scan.hpp"

namespace cyclocond {

std::string omega_series_name(unsigned omega) { return "omega_" + std::to_string(omega) + ".dat"; }

namespace {

struct Series {
  std::string title;
  std::ostringstream body;
  std::size_t points = 0;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

PlotSummary emit_plot_data(const std::filesystem::path& csv, const std::filesystem::path& out_dir,
                           const PlotOptions& opts) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + csv.string());

  PlotSummary summary;
  std::map<std::string, Series> series;
  std::string line;
  bool saw_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (!saw_header) {
      if (line != kScanHeader) throw SchemaError("line " + std::to_string(lineno) + ": header does not match schema");
      saw_header = true;
      continue;
    }
    ScanRecord rec;
    try {
      rec = parse_row(line);
    } catch (const SchemaError& e) {
      throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (rec.status == ScanStatus::failed) {
      ++summary.skipped_failed;
      continue;
    }
    const std::string name = opts.partition_by_omega ? omega_series_name(rec.omega) : "all.dat";
    auto& s = series[name];
    if (s.points == 0) {
      s.title = opts.partition_by_omega ? "omega(n) = " + std::to_string(rec.omega) : "all n";
      s.body << "# n cond\n";
    }
    s.body << rec.n << ' ' << rec.cond << '\n';
    ++s.points;
  }
  if (!saw_header) summary.warnings.push_back(csv.string() + " is empty; no series written");

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());

  std::ostringstream script;
  script << "# Condition number of V_n against n, one series per number of distinct prime factors.\n"
         << "# Run with: gnuplot " << opts.script_name << "\n"
         << "set terminal pngcairo size 1200,800\n"
         << "set output '" << opts.image_name << "'\n"
         << "set xlabel 'n'\n"
         << "set ylabel 'Cond(V_n)'\n"
         << "set key top left\n";
  if (opts.log_y) script << "set logscale y\n";
  std::string sep = "plot ";
  for (auto& [name, s] : series) {
    write_file(out_dir / name, s.body.str());
    summary.series[name] = s.points;
    script << sep << "'" << name << "' using 1:2 with points pt 7 ps 0.4 title '" << s.title << "'";
    sep = ", \\\n     ";
  }
  if (series.empty()) {
    script << "# no data\n";
  } else {
    script << '\n';
  }
  summary.script = out_dir / opts.script_name;
  write_file(summary.script, script.str());
  return summary;
}

}  // namespace cyclocond
