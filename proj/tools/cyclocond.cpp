/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

// cyclocond: condition numbers of cyclotomic Vandermonde matrices.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 untrusted
// numeric result, 4 resource cap, 5 cache I/O, 6 schema mismatch.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "cyclocond/cond.hpp"
#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/error.hpp"
#include "cyclocond/numeric.hpp"
#include "cyclocond/plot.hpp"
#include "cyclocond/scan.hpp"
#include "cyclocond/verify.hpp"

namespace {

using namespace cyclocond;

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArgs = 2,
  kUntrusted = 3,
  kResourceCap = 4,
  kCacheIo = 5,
  kSchema = 6,
};

constexpr auto kMaxN = std::numeric_limits<std::uint32_t>::max();

int cmd_phi(std::uint64_t n, const ExactLimits& limits) {
  const auto p = cyclotomic_poly(n, limits);
  for (std::size_t j = 0; j <= p.degree(); ++j) std::cout << j << ' ' << p[j].get_str() << '\n';
  std::cout << "# n = " << n << ", m = " << p.degree() << ", A(n) = " << height(p).get_str() << '\n';
  return kOk;
}

struct CondArgs {
  std::uint64_t n = 1;
  bool exact = false;
  bool numeric = false;
  bool both = false;
  unsigned digits = 7;
  NumericOptions numeric_opts;
};

int cmd_cond(const CondArgs& a, const ExactLimits& limits) {
  const bool want_numeric = a.numeric || a.both;
  const bool want_exact = a.exact || a.both || !a.numeric;
  std::string sep;
  if (want_exact) {
    const auto c = cond_exact(a.n, limits);
    std::cout << "cond^2 = " << c.cond_sq.get_num().get_str() << '/' << c.cond_sq.get_den().get_str()
              << "; cond = " << cond_decimal(c, a.digits);
    sep = "; ";
  }
  int code = kOk;
  if (want_numeric) {
    const auto num = cond_numeric(a.n, a.numeric_opts);
    std::cout << sep << "numeric = " << format_significant(num.estimate, a.digits) << " ("
              << (num.trusted ? "trusted" : "untrusted") << "); residual = " << format_significant(num.residual, 3);
    if (!num.trusted && !want_exact) code = kUntrusted;
  }
  std::cout << '\n';
  return code;
}

bool parse_range(const std::string& text, std::uint64_t& from, std::uint64_t& to) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      from = to = std::stoull(text, &used);
      return used == text.size();
    }
    const auto lhs = text.substr(0, dots);
    const auto rhs = text.substr(dots + 2);
    from = std::stoull(lhs, &used);
    if (used != lhs.size()) return false;
    to = std::stoull(rhs, &used);
    return used == rhs.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric condition numbers of cyclotomic Vandermonde matrices"};
  app.require_subcommand(1);

  ExactLimits limits;
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-entry-bits", limits.max_entry_bits, "Cap on bits of any companion-power entry")
        ->capture_default_str();
    sub->add_option("--max-poly-bits", limits.max_poly_bits, "Cap on total coefficient bits of Phi_n")
        ->capture_default_str();
  };

  // phi
  std::uint64_t phi_n = 1;
  auto* phi = app.add_subcommand("phi", "Print the coefficients a_n(j) of the n-th cyclotomic polynomial");
  phi->add_option("n", phi_n, "Index n >= 1")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{kMaxN}));
  add_limits(phi);

  // cond
  CondArgs cond_args;
  auto* cond = app.add_subcommand("cond", "Condition number of V_n (exact by default)");
  cond->add_option("n", cond_args.n, "Index n >= 1")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{kMaxN}));
  auto* f_exact = cond->add_flag("--exact", cond_args.exact, "Exact rational computation");
  auto* f_numeric = cond->add_flag("--numeric", cond_args.numeric, "Floating-point inversion only");
  auto* f_both = cond->add_flag("--both", cond_args.both, "Exact and numeric");
  f_exact->excludes(f_numeric);
  f_both->excludes(f_exact)->excludes(f_numeric);
  cond->add_option("--digits", cond_args.digits, "Significant digits")->capture_default_str()->check(CLI::Range(1u, 10000u));
  cond->add_option("--precision-bits", cond_args.numeric_opts.mantissa_bits,
                   "Mantissa bits for the numeric path (53 double, 64 long double, more uses MPFR)")
      ->capture_default_str();
  cond->add_option("--residual-threshold", cond_args.numeric_opts.residual_threshold,
                   "Max |V V^-1 - Id| entry for a trusted estimate")
      ->capture_default_str();
  add_limits(cond);

  // scan
  std::uint64_t scan_from = 1, scan_to = 1;
  ScanConfig scan_cfg;
  std::string scan_output;
  std::string cache_path;
  bool no_cache = false;
  bool no_timestamp = false;
  auto* scan = app.add_subcommand("scan", "Emit the condition-number dataset for a range of n as CSV");
  scan->add_option("from", scan_from, "First n")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{kMaxN}));
  scan->add_option("to", scan_to, "Last n")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{kMaxN}));
  scan->add_flag("--squarefree-only", scan_cfg.squarefree_only, "Only squarefree n");
  scan->add_flag("--keep-going", scan_cfg.keep_going, "Record failures with status 'failed' instead of aborting");
  scan->add_option("-j,--jobs", scan_cfg.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  scan->add_option("--cache-path", cache_path, "Cache file (default $CYCLOCOND_CACHE_DIR/scan-cache.csv)");
  scan->add_flag("--no-cache", no_cache, "Disable the cache");
  scan->add_option("--digits", scan_cfg.digits, "Significant digits of decimal fields")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1000u));
  scan->add_flag("--numeric", scan_cfg.numeric_check, "Cross-check with the floating-point path");
  scan->add_option("--numeric-max-m", scan_cfg.numeric_max_m, "Largest m for the numeric cross-check")
      ->capture_default_str();
  scan->add_option("-o,--output", scan_output, "Write CSV here instead of stdout");
  scan->add_flag("--no-timestamp", no_timestamp, "Omit the timestamped comment line");
  add_limits(scan);

  // verify
  std::string verify_range;
  std::string verify_suite = "all";
  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Check lemma identities, the numeric oracle and invariants");
  verify->add_option("range", verify_range, "n or from..to")->required();
  verify->add_option("--suite", verify_suite, "lemmas, oracle, invariants or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"lemmas", "oracle", "invariants", "all"}));
  verify->add_option("-j,--jobs", verify_cfg.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_option("--lemma1-tol", verify_cfg.lemma1_rel_tol, "Relative tolerance (times mn)")->capture_default_str();
  verify->add_option("--lemma2-tol", verify_cfg.lemma2_tol, "Absolute tolerance")->capture_default_str();
  verify->add_option("--oracle-tol", verify_cfg.oracle_rel_tol, "Relative exact/numeric gap")->capture_default_str();
  verify->add_option("--residual-threshold", verify_cfg.residual_threshold, "Trust threshold of the numeric path")
      ->capture_default_str();
  verify->add_option("--lemma4-trials", verify_cfg.lemma4_trials, "Random companion vectors")->capture_default_str();
  verify->add_option("--seed", verify_cfg.seed, "Seed of the random lemma4 vectors")->capture_default_str();

  // plot-data
  std::string plot_csv, plot_out;
  PlotOptions plot_opts;
  auto* plot = app.add_subcommand("plot-data", "Split a scan CSV into gnuplot series files and a script");
  plot->add_option("csv", plot_csv, "Scan CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("out", plot_out, "Output directory")->required();
  plot->add_flag("--log-y", plot_opts.log_y, "Logarithmic vertical axis");
  plot->add_flag("--partition-by-omega,!--no-partition-by-omega", plot_opts.partition_by_omega,
                 "One series per number of distinct prime factors (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (*phi) return cmd_phi(phi_n, limits);
    if (*cond) return cmd_cond(cond_args, limits);

    if (*scan) {
      if (scan_from > scan_to) {
        std::cerr << "scan: from must not exceed to\n";
        return kBadArgs;
      }
      scan_cfg.limits = limits;
      scan_cfg.timestamp = !no_timestamp;
      if (!no_cache) {
        if (!cache_path.empty()) {
          scan_cfg.cache_path = cache_path;
        } else {
          scan_cfg.cache_path = default_cache_path();
        }
      }
      std::ofstream file;
      if (!scan_output.empty()) {
        file.open(scan_output, std::ios::binary | std::ios::trunc);
        if (!file) {
          std::cerr << "scan: cannot write " << scan_output << '\n';
          return kBadArgs;
        }
      }
      std::ostream& out = scan_output.empty() ? std::cout : file;
      const auto summary = run_scan(scan_from, scan_to, scan_cfg, out);
      std::cerr << "scan: " << summary.rows << " rows, " << summary.cache_hits << " from cache, " << summary.failed
                << " failed\n";
      return kOk;
    }

    if (*verify) {
      if (!parse_range(verify_range, verify_cfg.from, verify_cfg.to) || verify_cfg.from < 1 ||
          verify_cfg.from > verify_cfg.to) {
        std::cerr << "verify: range must be n or from..to with 1 <= from <= to\n";
        return kBadArgs;
      }
      verify_cfg.suite = *parse_suite(verify_suite);
      const auto report = run_verify(verify_cfg);
      print_report(report, std::cout);
      return report.passed() ? kOk : kVerifyFailed;
    }

    if (*plot) {
      const auto summary = emit_plot_data(plot_csv, plot_out, plot_opts);
      for (const auto& w : summary.warnings) std::cerr << "plot-data: warning: " << w << '\n';
      for (const auto& [name, points] : summary.series) std::cout << name << ' ' << points << '\n';
      std::cout << "script " << summary.script.string() << '\n';
      return kOk;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ScanAborted& e) {
    std::cerr << "scan aborted: " << e.what() << '\n';
    return kResourceCap;
  } catch (const CacheError& e) {
    std::cerr << "cache: " << e.what() << '\n';
    return kCacheIo;
  } catch (const SchemaError& e) {
    std::cerr << "schema: " << e.what() << '\n';
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  return kOk;
}
