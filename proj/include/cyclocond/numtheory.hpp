/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

namespace cyclocond {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n; primes strictly increasing, empty for n = 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

// All functions below reject n = 0 with InvalidArgument.

Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
unsigned omega(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
int moebius(const Factorization& f);
std::uint64_t radical(const Factorization& f);
bool is_squarefree(const Factorization& f);

}  // namespace cyclocond
