/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclocond {

/// Thrown for inputs outside an operation's domain (n = 0, bad index, size mismatch).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when exact arithmetic would exceed a configured storage or growth cap.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a floating-point validation would exceed its operation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps applied to the exact big-integer paths.
struct ExactLimits {
  // Total bits across the coefficient vector of a single cyclotomic polynomial.
  std::size_t max_poly_bits = std::size_t{1} << 28;
  // Bits of any single entry reached while iterating companion powers.
  std::size_t max_entry_bits = std::size_t{1} << 16;
};

}  // namespace cyclocond
