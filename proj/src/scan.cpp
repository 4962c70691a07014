/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>

#include "cyclocond/cond.hpp"
#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/numtheory.hpp"

namespace cyclocond {

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::exact:
      return "exact";
    case ScanStatus::exact_numeric_verified:
      return "exact+numeric-verified";
    case ScanStatus::failed:
      return "failed";
  }
  return "failed";
}

std::optional<ScanStatus> parse_status(std::string_view s) {
  if (s == "exact") return ScanStatus::exact;
  if (s == "exact+numeric-verified") return ScanStatus::exact_numeric_verified;
  if (s == "failed") return ScanStatus::failed;
  return std::nullopt;
}

namespace {

mpz_class to_mpz(std::uint64_t x) { return mpz_class(static_cast<unsigned long>(x)); }

mpq_class ratio(std::uint64_t num, std::uint64_t den) {
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return q;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw SchemaError(std::string("bad ") + what + " field: '" + std::string(s) + "'");
  }
  return v;
}

mpz_class parse_mpz(std::string_view s, const char* what) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  const bool digits_only = s.size() > start && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                                           [](char c) { return c >= '0' && c <= '9'; });
  if (!digits_only) throw SchemaError(std::string("bad ") + what + " field: '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

}  // namespace

std::string format_significant(double value, unsigned digits) {
  if (digits == 0) throw InvalidArgument("format_significant: digits must be >= 1");
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", static_cast<int>(digits) - 1, value);
  std::string s = buf;
  const auto epos = s.find('e');
  const int e = std::atoi(s.c_str() + epos + 1);
  std::string sign;
  std::string mant = s.substr(0, epos);
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  mant.erase(std::remove(mant.begin(), mant.end(), '.'), mant.end());
  if (value != 0.0 && (e < 0 || e >= static_cast<int>(digits))) {
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    std::snprintf(buf, sizeof buf, "e%c%02d", e < 0 ? '-' : '+', std::abs(e));
    return out + buf;
  }
  const std::size_t int_len = static_cast<std::size_t>(std::max(e, 0)) + 1;
  if (int_len >= mant.size()) return sign + mant;
  return sign + mant.substr(0, int_len) + "." + mant.substr(int_len);
}

void render_decimals(ScanRecord& rec, unsigned digits) {
  rec.cond = rec.cond_sq ? sqrt_decimal(*rec.cond_sq, digits) : "NA";
  if (rec.height) {
    mpq_class hlb_sq = ratio(rec.m, rec.n) * mpq_class(*rec.height * *rec.height);
    hlb_sq.canonicalize();
    rec.hlb = sqrt_decimal(hlb_sq, digits);
  } else {
    rec.hlb = "NA";
  }
  rec.vaughan = rec.n >= 3 ? vaughan_bound(rec.n, digits) : "NA";
}

std::string validate_record(const ScanRecord& rec) {
  if (rec.n == 0) return "n must be >= 1";
  const auto f = factorize(rec.n);
  if (rec.m != euler_phi(f)) return "m != phi(n)";
  if (rec.omega != f.factors.size()) return "omega mismatch";
  if (rec.squarefree != is_squarefree(f)) return "squarefree flag mismatch";
  if (rec.status == ScanStatus::failed) return {};
  if (!rec.height || !rec.cond_sq) return "exact fields missing";

  const auto& c = *rec.cond_sq;
  if (sgn(c.get_den()) <= 0) return "cond_sq denominator not positive";
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  if (g != 1) return "cond_sq not reduced";
  if (!mpz_divisible_p(to_mpz(rec.n).get_mpz_t(), c.get_den_mpz_t())) return "cond_sq denominator does not divide n";
  if (c < mpq_class(to_mpz(rec.m) * to_mpz(rec.m))) return "cond_sq below m^2";

  const mpq_class a_sq(*rec.height * *rec.height);
  const mpq_class hlb_sq = ratio(rec.m, rec.n) * a_sq;
  const mpq_class weak_sq = a_sq / mpq_class(to_mpz(rec.n));
  if (c < hlb_sq) return "cond_sq below (m/n) A(n)^2";
  if (hlb_sq < weak_sq) return "(m/n) A(n)^2 below A(n)^2 / n";
  return {};
}

ScanRecord compute_record(std::uint64_t n, const ScanConfig& config) {
  ScanRecord rec;
  rec.n = n;
  try {
    const auto f = factorize(n);
    rec.m = euler_phi(f);
    rec.omega = static_cast<unsigned>(f.factors.size());
    rec.squarefree = is_squarefree(f);

    rec.height = height(*cyclotomic_shared(n, config.limits));
    rec.cond_sq = cond_exact(n, config.limits).cond_sq;
    rec.status = ScanStatus::exact;

    if (config.numeric_check && rec.m <= config.numeric_max_m) {
      auto opts = config.numeric;
      opts.parallel = false;
      const auto num = cond_numeric(n, opts);
      if (num.trusted) {
        const double exact = std::sqrt(rec.cond_sq->get_d());
        if (std::abs(num.estimate - exact) <= config.numeric_rel_tolerance * exact) {
          rec.status = ScanStatus::exact_numeric_verified;
        } else {
          rec.status = ScanStatus::failed;
          rec.error = "numeric estimate " + format_significant(num.estimate, 10) + " disagrees with exact value";
        }
      }
    }
    if (rec.status != ScanStatus::failed) {
      if (auto problem = validate_record(rec); !problem.empty()) {
        rec.status = ScanStatus::failed;
        rec.error = "invariant violated: " + problem;
      }
    }
  } catch (const std::exception& e) {
    rec.status = ScanStatus::failed;
    rec.error = e.what();
  }
  if (rec.status == ScanStatus::failed) rec.cond_sq.reset();
  try {
    render_decimals(rec, config.digits);
  } catch (const std::exception& e) {
    rec.status = ScanStatus::failed;
    if (rec.error.empty()) rec.error = e.what();
  }
  return rec;
}

std::string format_row(const ScanRecord& rec) {
  std::string out;
  out += std::to_string(rec.n) + ',' + std::to_string(rec.m) + ',' + std::to_string(rec.omega) + ',';
  out += rec.squarefree ? "true," : "false,";
  out += (rec.height ? rec.height->get_str() : std::string()) + ',';
  if (rec.cond_sq) {
    out += rec.cond_sq->get_num().get_str() + ',' + rec.cond_sq->get_den().get_str() + ',';
  } else {
    out += ",,";
  }
  out += rec.cond + ',' + rec.hlb + ',' + rec.vaughan + ',';
  out += to_string(rec.status);
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

ScanRecord parse_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') throw SchemaError("CRLF line endings are not allowed");
  const auto f = split_fields(line);
  if (f.size() != kScanColumns) {
    throw SchemaError("expected " + std::to_string(kScanColumns) + " fields, got " + std::to_string(f.size()));
  }
  ScanRecord rec;
  rec.n = parse_u64(f[0], "n");
  rec.m = parse_u64(f[1], "m");
  rec.omega = static_cast<unsigned>(parse_u64(f[2], "omega"));
  if (f[3] == "true") {
    rec.squarefree = true;
  } else if (f[3] == "false") {
    rec.squarefree = false;
  } else {
    throw SchemaError("bad squarefree field: '" + std::string(f[3]) + "'");
  }
  if (!f[4].empty()) rec.height = parse_mpz(f[4], "height");
  if (f[5].empty() != f[6].empty()) throw SchemaError("cond_sq_num and cond_sq_den must both be present or absent");
  if (!f[5].empty()) {
    const auto den = parse_mpz(f[6], "cond_sq_den");
    if (sgn(den) <= 0) throw SchemaError("cond_sq_den must be positive");
    rec.cond_sq = mpq_class(parse_mpz(f[5], "cond_sq_num"), den);
  }
  for (std::size_t i : {7u, 8u, 9u}) {
    if (f[i].empty()) throw SchemaError("empty decimal field");
  }
  rec.cond = std::string(f[7]);
  rec.hlb = std::string(f[8]);
  rec.vaughan = std::string(f[9]);
  const auto status = parse_status(f[10]);
  if (!status) throw SchemaError("bad status field: '" + std::string(f[10]) + "'");
  rec.status = *status;
  if (rec.status != ScanStatus::failed && (!rec.height || !rec.cond_sq)) {
    throw SchemaError("non-failed row without exact fields");
  }
  return rec;
}

ScanCache::ScanCache(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  if (ec) throw CacheError("cannot create cache directory " + path_.parent_path().string() + ": " + ec.message());

  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    if (!in) throw CacheError("cannot read cache " + path_.string());
    std::string line;
    bool first = true;
    const std::string header = std::string(kScanHeader) + ",format_version";
    while (std::getline(in, line)) {
      if (first) {
        first = false;
        if (line != header) throw CacheError("cache " + path_.string() + " has an unexpected header");
        continue;
      }
      const auto comma = line.rfind(',');
      if (comma == std::string::npos || line.substr(comma + 1) != std::to_string(kCacheFormatVersion)) continue;
      try {
        auto rec = parse_row(std::string_view(line).substr(0, comma));
        rows_[rec.n] = std::move(rec);
      } catch (const SchemaError&) {
        // A torn trailing line from an interrupted write.
      }
    }
  }
  std::ofstream probe(path_, std::ios::app);
  if (!probe) throw CacheError("cache " + path_.string() + " is not writable");
}

const ScanRecord* ScanCache::find(std::uint64_t n) const {
  auto it = rows_.find(n);
  return it == rows_.end() ? nullptr : &it->second;
}

void ScanCache::append(const std::vector<ScanRecord>& rows) {
  if (rows.empty()) return;
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_, ec) == 0;
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw CacheError("cannot open cache " + path_.string() + " for append");
  if (fresh) out << kScanHeader << ",format_version\n";
  for (const auto& rec : rows) {
    out << format_row(rec) << ',' << kCacheFormatVersion << '\n';
    rows_[rec.n] = rec;
  }
  out.flush();
  if (!out) throw CacheError("write to cache " + path_.string() + " failed");
}

std::optional<std::filesystem::path> default_cache_path() {
  const char* dir = std::getenv("CYCLOCOND_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "scan-cache.csv";
}

std::vector<std::uint64_t> scan_indices(std::uint64_t from, std::uint64_t to, const ScanConfig& config) {
  if (from < 1 || from > to) throw InvalidArgument("scan: need 1 <= from <= to");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = from; n <= to; ++n) {
    if (!config.squarefree_only || is_squarefree(n)) out.push_back(n);
  }
  return out;
}

namespace {

void write_preamble(std::uint64_t from, std::uint64_t to, const ScanConfig& config, std::ostream& out) {
  if (config.timestamp) out << "# cyclocond scan " << from << ".." << to << " generated " << utc_timestamp() << '\n';
  out << kScanHeader << '\n';
}

// A cached row is reused when it is valid and matches what the current
// configuration would report for n.
std::optional<ScanRecord> reuse_cached(const ScanCache& cache, std::uint64_t n, const ScanConfig& config) {
  const auto* hit = cache.find(n);
  if (hit == nullptr || hit->status == ScanStatus::failed) return std::nullopt;
  ScanRecord rec = *hit;
  const bool numeric_applies = config.numeric_check && rec.m <= config.numeric_max_m;
  if (numeric_applies && rec.status != ScanStatus::exact_numeric_verified) return std::nullopt;
  if (!numeric_applies) rec.status = ScanStatus::exact;
  if (!validate_record(rec).empty()) return std::nullopt;
  try {
    render_decimals(rec, config.digits);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return rec;
}

}  // namespace

ScanSummary run_scan(std::uint64_t from, std::uint64_t to, const ScanConfig& config, std::ostream& out) {
  const auto indices = scan_indices(from, to, config);
  std::optional<ScanCache> cache;
  if (config.cache_path) cache.emplace(*config.cache_path);

  write_preamble(from, to, config, out);
  ScanSummary summary;
  const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
  const std::size_t block = std::max<std::size_t>(config.block_size, 1);

  for (std::size_t start = 0; start < indices.size(); start += block) {
    const std::size_t count = std::min(block, indices.size() - start);
    std::vector<ScanRecord> recs(count);
    std::vector<char> cached(count, 0);
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < count; ++i) {
      if (cache) {
        if (auto hit = reuse_cached(*cache, indices[start + i], config)) {
          recs[i] = std::move(*hit);
          cached[i] = 1;
          continue;
        }
      }
      todo.push_back(i);
    }

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::size_t t = 0; t < todo.size(); ++t) recs[todo[t]] = compute_record(indices[start + todo[t]], config);

    std::vector<ScanRecord> fresh;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& rec = recs[i];
      if (rec.status == ScanStatus::failed && !config.keep_going) {
        if (cache) cache->append(fresh);
        out.flush();
        throw ScanAborted("n = " + std::to_string(rec.n) + ": " + rec.error);
      }
      out << format_row(rec) << '\n';
      ++summary.rows;
      if (cached[i]) {
        ++summary.cache_hits;
      } else if (rec.status != ScanStatus::failed) {
        fresh.push_back(rec);
      }
      if (rec.status == ScanStatus::failed) ++summary.failed;
    }
    if (cache) cache->append(fresh);
    out.flush();
  }
  return summary;
}

namespace reference {

ScanSummary run_scan(std::uint64_t from, std::uint64_t to, const ScanConfig& config, std::ostream& out) {
  write_preamble(from, to, config, out);
  ScanSummary summary;
  for (auto n : scan_indices(from, to, config)) {
    const auto rec = compute_record(n, config);
    if (rec.status == ScanStatus::failed && !config.keep_going) {
      throw ScanAborted("n = " + std::to_string(rec.n) + ": " + rec.error);
    }
    out << format_row(rec) << '\n';
    ++summary.rows;
    if (rec.status == ScanStatus::failed) ++summary.failed;
  }
  return summary;
}

}  // namespace reference

}  // namespace cyclocond
