/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocond/error.hpp"
#include "cyclocond/numeric.hpp"

namespace cyclocond {

/// Column order of the scan CSV.
inline constexpr std::string_view kScanHeader =
    "n,m,omega,squarefree,height,cond_sq_num,cond_sq_den,cond,hlb,vaughan,status";
inline constexpr std::size_t kScanColumns = 11;

/// Version tag written in the extra trailing column of cache rows.
inline constexpr int kCacheFormatVersion = 1;

enum class ScanStatus { exact, exact_numeric_verified, failed };

std::string_view to_string(ScanStatus s);
std::optional<ScanStatus> parse_status(std::string_view s);

/// One row of the condition-number dataset.
struct ScanRecord {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  unsigned omega = 0;
  bool squarefree = false;
  std::optional<mpz_class> height;    // A(n); empty when the row failed early
  std::optional<mpq_class> cond_sq;   // reduced; empty on failure
  std::string cond = "NA";            // sqrt(cond_sq) rendered
  std::string hlb = "NA";             // sqrt(m/n) A(n) rendered
  std::string vaughan = "NA";         // "NA" for n < 3
  ScanStatus status = ScanStatus::failed;
  std::string error;                  // diagnostic, not serialized
};

/// Thrown when CSV text does not match the scan schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the cache file cannot be read or written.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanConfig {
  unsigned digits = 6;
  bool squarefree_only = false;
  bool keep_going = false;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_path;
  bool numeric_check = false;
  std::uint64_t numeric_max_m = 200;
  double numeric_rel_tolerance = 1e-6;
  NumericOptions numeric;
  ExactLimits limits;
  bool timestamp = true;
  // Rows computed in parallel before being emitted and appended to the cache.
  std::size_t block_size = 256;
};

/// Computes every field of the record for n. Errors are captured in the
/// record (status failed, error set) rather than thrown.
ScanRecord compute_record(std::uint64_t n, const ScanConfig& config);

/// Rebuilds the rendered fields (cond, hlb, vaughan) from the exact ones.
void render_decimals(ScanRecord& rec, unsigned digits);

/// Re-checks the bound chain, the Frobenius floor, reduction of cond_sq and
/// the arithmetic fields against n. Returns an empty string when valid.
std::string validate_record(const ScanRecord& rec);

std::string format_row(const ScanRecord& rec);

/// Parses one data row. Throws SchemaError on any deviation from the schema.
ScanRecord parse_row(std::string_view line);

/// Splits on commas; no quoting is used by the schema.
std::vector<std::string_view> split_fields(std::string_view line);

/// Append-only cache in the scan schema plus a format_version column. On
/// load the last row for each n wins; malformed rows are ignored.
class ScanCache {
 public:
  explicit ScanCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  const ScanRecord* find(std::uint64_t n) const;
  std::size_t size() const { return rows_.size(); }

  /// Appends rows and flushes. Throws CacheError on I/O failure.
  void append(const std::vector<ScanRecord>& rows);

 private:
  std::filesystem::path path_;
  std::map<std::uint64_t, ScanRecord> rows_;
};

/// Default cache location: $CYCLOCOND_CACHE_DIR/scan-cache.csv if set.
std::optional<std::filesystem::path> default_cache_path();

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::size_t cache_hits = 0;
};

/// Thrown when a row fails and keep_going is off. Rows before it were emitted.
class ScanAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The n in [from, to] selected by the config, ascending.
std::vector<std::uint64_t> scan_indices(std::uint64_t from, std::uint64_t to, const ScanConfig& config);

/// Writes the CSV for [from, to] to `out` in ascending n.
ScanSummary run_scan(std::uint64_t from, std::uint64_t to, const ScanConfig& config, std::ostream& out);

namespace reference {

/// Serial scan without cache, for comparison against run_scan.
ScanSummary run_scan(std::uint64_t from, std::uint64_t to, const ScanConfig& config, std::ostream& out);

}  // namespace reference

/// Renders a double with `digits` significant digits using the same
/// plain/scientific rule as sqrt_decimal.
std::string format_significant(double value, unsigned digits);

}  // namespace cyclocond
