/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclocond {

/// e^{2 pi i k / n} for 1 <= k <= n with gcd(k, n) = 1, increasing k.
std::vector<std::complex<double>> primitive_roots(std::uint64_t n);

/// The exponents k used by primitive_roots, in the same order.
std::vector<std::uint64_t> primitive_exponents(std::uint64_t n);

struct NumericOptions {
  // 53 selects double, up to 64 long double, anything larger MPFR.
  unsigned mantissa_bits = 53;
  double residual_threshold = 1e-8;
  bool parallel = true;
};

/// Floating-point Cond(V_n) = m ||V_n^{-1}||, validated by the residual of V V^{-1} - Id.
struct NumericCond {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double estimate = 0.0;
  double residual = 0.0;
  bool trusted = false;
};

NumericCond cond_numeric(std::uint64_t n, const NumericOptions& opts = {});

/// Same, with the rows of V_n ordered by the given primitive exponents.
NumericCond cond_numeric(std::uint64_t n, std::span<const std::uint64_t> exponents, const NumericOptions& opts = {});

namespace reference {

/// Serial double-precision inversion without OpenMP.
NumericCond cond_numeric(std::uint64_t n, double residual_threshold = 1e-8);

}  // namespace reference

/// Default operation budget for the lemma residual checks.
inline constexpr double kDefaultLemmaBudget = 4e9;

/// max_{i,j} |sum_{k < mn} (z_i conj z_j)^k - mn delta_ij|.
/// Throws BudgetExceeded when m^3 n exceeds the budget.
double lemma1_residual(std::uint64_t n, double budget = kDefaultLemmaBudget);

/// Max entrywise deviation between (z_i^{j+t})_{i,t} and V_n C_n^j for
/// j = 0, m, ..., (blocks - 1) m. Requires 1 <= blocks <= n.
double lemma2_residual(std::uint64_t n, std::uint64_t blocks, double budget = kDefaultLemmaBudget);

}  // namespace cyclocond
