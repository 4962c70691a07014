/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclocond {

enum class VerifySuite { lemmas, oracle, invariants, all };

std::optional<VerifySuite> parse_suite(const std::string& s);

struct VerifyConfig {
  std::uint64_t from = 1;
  std::uint64_t to = 1;
  VerifySuite suite = VerifySuite::all;
  // lemma1 residual must be <= lemma1_rel_tol * m n
  double lemma1_rel_tol = 1e-8;
  double lemma2_tol = 1e-8;
  std::uint64_t lemma2_blocks = 4;  // clipped to n
  double oracle_rel_tol = 1e-6;
  double residual_threshold = 1e-8;
  int lemma4_trials = 100;
  std::size_t lemma4_max_k = 12;
  std::uint64_t seed = 20260101;
  double budget = 4e9;
  int jobs = 0;  // 0 = OpenMP default
};

/// Aggregate of one family of checks over the range.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // e.g. untrusted numeric estimates
  double worst = 0.0;       // largest residual or gap seen
  std::uint64_t worst_n = 0;
  double tolerance = 0.0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<CheckReport> checks;
  bool passed() const;
};

/// Runs the selected suite over [from, to]. Per-n work runs concurrently;
/// the report is assembled in ascending n.
VerifyReport run_verify(const VerifyConfig& config);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace cyclocond
