/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "cyclocond/error.hpp"

namespace cyclocond {

/// Dense integer polynomial, index j holds the coefficient of X^j.
using IntPoly = std::vector<mpz_class>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact quotient of a by a monic divisor. Throws std::logic_error when the
/// remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& monic_divisor);

/// The n-th cyclotomic polynomial with exact integer coefficients.
class CyclotomicPoly {
 public:
  CyclotomicPoly(std::uint64_t n, IntPoly coeffs);

  std::uint64_t n() const { return n_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const IntPoly& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t j) const { return coeffs_[j]; }

  mpz_class evaluate(const mpz_class& x) const;

 private:
  std::uint64_t n_;
  IntPoly coeffs_;
};

/// Memo of cyclotomic polynomials keyed by n. Readers share a lock, writers
/// are serialized; when full the oldest entry is evicted.
class CyclotomicCache {
 public:
  explicit CyclotomicCache(std::size_t capacity = 4096) : capacity_(capacity) {}

  std::shared_ptr<const CyclotomicPoly> find(std::uint64_t n) const;
  void insert(std::shared_ptr<const CyclotomicPoly> p);
  void clear();
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const CyclotomicPoly>> entries_;
  std::deque<std::uint64_t> order_;
};

CyclotomicCache& default_cyclotomic_cache();

/// Computes Phi_rad(n) by dividing X^rad(n) - 1 by Phi_d for every proper
/// divisor d, then substitutes X -> X^(n / rad(n)).
std::shared_ptr<const CyclotomicPoly> cyclotomic_shared(std::uint64_t n,
                                                        const ExactLimits& limits = {},
                                                        CyclotomicCache& cache = default_cyclotomic_cache());

CyclotomicPoly cyclotomic_poly(std::uint64_t n, const ExactLimits& limits = {});

/// A(n): max |a_n(j)| over 0 <= j < m. The leading coefficient is excluded.
mpz_class height(const CyclotomicPoly& p);

/// Smallest index j < m with |a_n(j)| == height(p).
std::size_t height_index(const CyclotomicPoly& p);

/// Whether the product of Phi_d over d | n equals X^n - 1.
bool product_formula_check(std::uint64_t n);

}  // namespace cyclocond
