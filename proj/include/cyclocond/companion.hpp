/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/error.hpp"

namespace cyclocond {

using IntVector = std::vector<mpz_class>;

/// Companion matrix of Phi_n, stored by its last column (-a_n(0), ..., -a_n(m-1)).
/// The implicit m x m matrix has ones on the subdiagonal and zeros elsewhere.
class CompanionMatrix {
 public:
  CompanionMatrix(std::uint64_t n, IntVector neg_coeffs);

  std::uint64_t n() const { return n_; }
  std::size_t m() const { return neg_coeffs_.size(); }
  const IntVector& neg_coeffs() const { return neg_coeffs_; }

  /// v <- C v: shift entries down by one, then add v[m-1] * last column.
  void apply_in_place(IntVector& v) const;

 private:
  std::uint64_t n_;
  IntVector neg_coeffs_;
};

CompanionMatrix companion(const CyclotomicPoly& p);

/// Returns C v. Throws InvalidArgument when v.size() != m.
IntVector apply(const CompanionMatrix& c, std::span<const mpz_class> v);

/// Sum over k = 0..n-1 of ||C_n^{km}||^2 (squared Frobenius norms).
struct FrobeniusSum {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  mpz_class total;
  std::optional<IntVector> per_k;
};

/// Production path. Column i of C^t is the coefficient vector of X^{i+t} mod
/// Phi_n, and X^n = 1 mod Phi_n, so every column trajectory is a shift of the
/// single orbit of e_0 over one period of length n. Cost O(nm).
FrobeniusSum frobenius_sum(std::uint64_t n, bool keep_per_k = false, const ExactLimits& limits = {});

/// Column-by-column accumulation: each basis vector is pushed through
/// (n-1)m applications of C and its squared norm is sampled every m steps.
/// Columns run concurrently under OpenMP; the exact merge is order independent.
FrobeniusSum frobenius_sum_columnwise(std::uint64_t n, bool keep_per_k = false, const ExactLimits& limits = {});

namespace reference {

/// Serial version of frobenius_sum_columnwise, kept as the test baseline.
FrobeniusSum frobenius_sum_columnwise(std::uint64_t n, bool keep_per_k = false, const ExactLimits& limits = {});

}  // namespace reference

/// Dense exact matrix, row major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static IntMatrix identity(std::size_t k);

  mpz_class& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  IntVector column(std::size_t j) const;
  mpz_class frobenius_sq() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Dense k x k companion-form matrix with last column c (entries not negated).
IntMatrix companion_dense(std::span<const mpz_class> c);

/// Checks, with dense powers, that column (k - j) of C^j equals c and that
/// columns 0..k-j of C^j equal columns j-1..k-1 of C. Requires 1 <= j <= k.
bool lemma4_check(std::span<const mpz_class> c, std::size_t j);

}  // namespace cyclocond
