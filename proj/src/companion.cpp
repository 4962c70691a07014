/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/companion.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <string>

namespace cyclocond {

CompanionMatrix::CompanionMatrix(std::uint64_t n, IntVector neg_coeffs) : n_(n), neg_coeffs_(std::move(neg_coeffs)) {
  if (neg_coeffs_.empty()) throw InvalidArgument("CompanionMatrix: empty last column");
}

void CompanionMatrix::apply_in_place(IntVector& v) const {
  // After the rotation v[0] holds the old v[m-1].
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
  mpz_class carry;
  mpz_swap(carry.get_mpz_t(), v[0].get_mpz_t());
  v[0] = 0;
  if (sgn(carry) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_addmul(v[i].get_mpz_t(), carry.get_mpz_t(), neg_coeffs_[i].get_mpz_t());
  }
}

CompanionMatrix companion(const CyclotomicPoly& p) {
  IntVector neg(p.degree());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -p[j];
  return CompanionMatrix(p.n(), std::move(neg));
}

IntVector apply(const CompanionMatrix& c, std::span<const mpz_class> v) {
  if (v.size() != c.m()) {
    throw InvalidArgument("apply: vector length " + std::to_string(v.size()) + " != m = " + std::to_string(c.m()));
  }
  IntVector out(v.begin(), v.end());
  c.apply_in_place(out);
  return out;
}

namespace {

mpz_class norm_sq(const IntVector& v) {
  mpz_class acc = 0;
  for (const auto& x : v) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
  return acc;
}

void check_growth(const IntVector& v, std::uint64_t n, const ExactLimits& limits) {
  for (const auto& x : v) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > limits.max_entry_bits) {
      throw ResourceExhausted("frobenius_sum(" + std::to_string(n) + "): companion power entries exceed " +
                              std::to_string(limits.max_entry_bits) + " bits");
    }
  }
}

// Squared norms of every power C^t applied to column `col`, sampled at t = km.
void accumulate_column(const CompanionMatrix& c, std::size_t col, std::vector<mpz_class>& per_k,
                       const ExactLimits& limits) {
  const auto n = c.n();
  const auto m = c.m();
  IntVector v(m, 0);
  v[col] = 1;
  per_k[0] += 1;
  for (std::uint64_t k = 1; k < n; ++k) {
    for (std::size_t s = 0; s < m; ++s) c.apply_in_place(v);
    check_growth(v, n, limits);
    per_k[k] += norm_sq(v);
  }
}

// One period of orbit norms ||C^t e_0||^2 in machine integers. Returns false
// as soon as any entry or norm would overflow. The vector lives in a ring
// buffer so the shift is an index update, and the norm is updated only at
// the nonzero coefficients of the last column.
bool orbit_norms_small(const CompanionMatrix& c, std::vector<mpz_class>& norms) {
  const std::uint64_t n = c.n();
  const std::size_t m = c.m();
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = c.neg_coeffs()[i];
    if (!x.fits_slong_p()) return false;
    if (sgn(x) != 0) terms.emplace_back(i, x.get_si());
  }
  std::vector<std::int64_t> buf(m, 0);
  std::size_t off = 0;  // logical v[i] is buf[(off + i) % m]
  buf[0] = 1;
  __int128 norm = 1;
  for (std::uint64_t t = 0; t < n; ++t) {
    const auto un = static_cast<unsigned __int128>(norm);
    norms[t] = mpz_class(static_cast<unsigned long>(un >> 64));
    norms[t] <<= 64;
    norms[t] += static_cast<unsigned long>(un & ~std::uint64_t{0});
    if (t + 1 == n) break;

    off = (off == 0 ? m : off) - 1;
    const std::int64_t carry = buf[off];
    buf[off] = 0;
    if (carry == 0) continue;
    norm -= static_cast<__int128>(carry) * carry;
    for (const auto& [i, coeff] : terms) {
      std::size_t pos = off + i;
      if (pos >= m) pos -= m;
      const std::int64_t before = buf[pos];
      std::int64_t prod, after;
      if (__builtin_mul_overflow(carry, coeff, &prod) || __builtin_add_overflow(before, prod, &after)) return false;
      if (after == std::numeric_limits<std::int64_t>::min()) return false;
      buf[pos] = after;
      const __int128 delta = static_cast<__int128>(after) * after - static_cast<__int128>(before) * before;
      if (__builtin_add_overflow(norm, delta, &norm)) return false;
    }
  }
  return true;
}

FrobeniusSum finish(std::uint64_t n, std::uint64_t m, std::vector<mpz_class>&& per_k, bool keep_per_k) {
  FrobeniusSum out;
  out.n = n;
  out.m = m;
  out.total = 0;
  for (const auto& x : per_k) out.total += x;
  if (keep_per_k) out.per_k = std::move(per_k);
  return out;
}

}  // namespace

FrobeniusSum frobenius_sum(std::uint64_t n, bool keep_per_k, const ExactLimits& limits) {
  if (n == 0) throw InvalidArgument("frobenius_sum: n must be >= 1");
  const auto c = companion(*cyclotomic_shared(n, limits));
  const std::size_t m = c.m();

  // orbit_norm[t] = ||X^t mod Phi_n||^2 for one period t = 0..n-1.
  std::vector<mpz_class> orbit_norm(n);
  if (limits.max_entry_bits < 64 || !orbit_norms_small(c, orbit_norm)) {
    IntVector v(m, 0);
    v[0] = 1;
    for (std::uint64_t t = 0; t < n; ++t) {
      orbit_norm[t] = norm_sq(v);
      if (t + 1 < n) {
        c.apply_in_place(v);
        check_growth(v, n, limits);
      }
    }
  }

  // ||C^s||^2 is the cyclic window sum of m consecutive orbit norms from s.
  std::vector<mpz_class> prefix(2 * n + 1);
  prefix[0] = 0;
  for (std::uint64_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + orbit_norm[i % n];

  std::vector<mpz_class> per_k(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t s = (k % n) * (m % n) % n;
    per_k[k] = prefix[s + m] - prefix[s];
  }
  return finish(n, m, std::move(per_k), keep_per_k);
}

FrobeniusSum frobenius_sum_columnwise(std::uint64_t n, bool keep_per_k, const ExactLimits& limits) {
  if (n == 0) throw InvalidArgument("frobenius_sum: n must be >= 1");
  const auto c = companion(*cyclotomic_shared(n, limits));
  const std::size_t m = c.m();

  std::vector<mpz_class> per_k(n, 0);
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::vector<mpz_class> local(n, 0);
#pragma omp for schedule(dynamic)
    for (std::size_t col = 0; col < m; ++col) {
      try {
        accumulate_column(c, col, local, limits);
      } catch (...) {
#pragma omp critical(cyclocond_columnwise_error)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(cyclocond_columnwise_merge)
    for (std::uint64_t k = 0; k < n; ++k) per_k[k] += local[k];
  }
  if (failure) std::rethrow_exception(failure);
  return finish(n, m, std::move(per_k), keep_per_k);
}

namespace reference {

FrobeniusSum frobenius_sum_columnwise(std::uint64_t n, bool keep_per_k, const ExactLimits& limits) {
  if (n == 0) throw InvalidArgument("frobenius_sum: n must be >= 1");
  const auto c = companion(*cyclotomic_shared(n, limits));
  std::vector<mpz_class> per_k(n, 0);
  for (std::size_t col = 0; col < c.m(); ++col) accumulate_column(c, col, per_k, limits);
  return finish(n, c.m(), std::move(per_k), keep_per_k);
}

}  // namespace reference

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix id(k, k);
  for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
  return id;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector col(rows);
  for (std::size_t i = 0; i < rows; ++i) col[i] = (*this)(i, j);
  return col;
}

mpz_class IntMatrix::frobenius_sq() const {
  mpz_class acc = 0;
  for (const auto& x : data) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
  return acc;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("IntMatrix: dimension mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t l = 0; l < a.cols; ++l) {
      const auto& ail = a(i, l);
      if (sgn(ail) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), ail.get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix companion_dense(std::span<const mpz_class> c) {
  const std::size_t k = c.size();
  if (k == 0) throw InvalidArgument("companion_dense: empty column");
  IntMatrix out(k, k);
  for (std::size_t i = 1; i < k; ++i) out(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) out(i, k - 1) = c[i];
  return out;
}

bool lemma4_check(std::span<const mpz_class> c, std::size_t j) {
  const std::size_t k = c.size();
  if (k == 0 || j < 1 || j > k) {
    throw InvalidArgument("lemma4_check: need 1 <= j <= k, got j = " + std::to_string(j) + ", k = " + std::to_string(k));
  }
  const auto base = companion_dense(c);
  IntMatrix power = base;
  for (std::size_t s = 1; s < j; ++s) power = base * power;

  if (power.column(k - j) != IntVector(c.begin(), c.end())) return false;
  for (std::size_t t = 0; t <= k - j; ++t) {
    if (power.column(t) != base.column(j - 1 + t)) return false;
  }
  return true;
}

}  // namespace cyclocond
