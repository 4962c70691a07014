/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cyclocond/error.hpp"

namespace cyclocond {

/// Exact squared Frobenius condition number of V_n.
struct ExactCond {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  mpq_class cond_sq;  // canonical (reduced, positive denominator)
};

/// cond_sq = m^2 * ||V_n^{-1}||^2 = (m / n) * frobenius_sum(n).total.
ExactCond cond_exact(std::uint64_t n, const ExactLimits& limits = {});

/// ||V_n|| = m: V_n is m x m with unit-modulus entries.
std::uint64_t vandermonde_norm(std::uint64_t n);

/// Square of sqrt(m/n) * A(n), i.e. (m/n) A(n)^2.
mpq_class height_lower_bound(std::uint64_t n, const ExactLimits& limits = {});

/// Square of A(n) / sqrt(n).
mpq_class weak_height_lower_bound(std::uint64_t n, const ExactLimits& limits = {});

/// sqrt(value) rounded to `digits` significant digits (round half up).
/// Plain notation when the decimal exponent is in [0, digits), otherwise
/// d.ddd...e+XX. Throws InvalidArgument for negative values or digits == 0.
std::string sqrt_decimal(const mpq_class& value, unsigned digits);

std::string cond_decimal(const ExactCond& c, unsigned digits);

/// exp(n^(log 2 / log log n)) to `digits` correct significant digits,
/// rendered as d.ddd...e+XX. Requires n >= 3.
std::string vaughan_bound(std::uint64_t n, unsigned digits);

}  // namespace cyclocond
