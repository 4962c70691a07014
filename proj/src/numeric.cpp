/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/numeric.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "cyclocond/companion.hpp"
#include "cyclocond/error.hpp"
#include "cyclocond/numtheory.hpp"

namespace cyclocond {

std::vector<std::uint64_t> primitive_exponents(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("primitive_roots: n must be >= 1");
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ks.push_back(k);
  }
  return ks;
}

namespace {

// Root of unity e^{2 pi i t / n} with t reduced mod n.
std::complex<double> unit_root(std::uint64_t t, std::uint64_t n) {
  if (t % n == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t % n) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<std::complex<double>> root_table(std::uint64_t n) {
  std::vector<std::complex<double>> table(n);
  for (std::uint64_t t = 0; t < n; ++t) table[t] = unit_root(t, n);
  return table;
}

template <class Real>
struct Cx {
  Real re;
  Real im;
};

template <class Real>
Cx<Real> operator+(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class Real>
Cx<Real> operator-(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class Real>
Cx<Real> operator*(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class Real>
Real abs2(const Cx<Real>& a) {
  return a.re * a.re + a.im * a.im;
}
template <class Real>
Cx<Real> operator/(const Cx<Real>& a, const Cx<Real>& b) {
  const Real d = abs2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

template <class Real>
Real pi_value() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
struct DenseCx {
  std::size_t m;
  std::vector<Cx<Real>> a;
  Cx<Real>& operator()(std::size_t i, std::size_t j) { return a[i * m + j]; }
  const Cx<Real>& operator()(std::size_t i, std::size_t j) const { return a[i * m + j]; }
};

template <class Real>
DenseCx<Real> vandermonde(std::uint64_t n, std::span<const std::uint64_t> exponents) {
  const std::size_t m = exponents.size();
  DenseCx<Real> v{m, std::vector<Cx<Real>>(m * m)};
  const Real two_pi = 2 * pi_value<Real>();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t t = 0; t < m; ++t) {
      // Reduce the exponent before evaluating so every entry is a direct root.
      const auto e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(exponents[i]) * t) % n);
      const Real angle = two_pi * Real(e) / Real(n);
      using std::cos;
      using std::sin;
      v(i, t) = {cos(angle), sin(angle)};
    }
  }
  return v;
}

// In-place LU with partial pivoting; returns false when a zero pivot appears.
template <class Real>
bool lu_factor(DenseCx<Real>& lu, std::vector<std::size_t>& perm) {
  const std::size_t m = lu.m;
  perm.resize(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    Real best = abs2(lu(c, c));
    for (std::size_t r = c + 1; r < m; ++r) {
      const Real mag = abs2(lu(r, c));
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best == 0) return false;
    if (piv != c) {
      for (std::size_t j = 0; j < m; ++j) std::swap(lu(c, j), lu(piv, j));
      std::swap(perm[c], perm[piv]);
    }
    for (std::size_t r = c + 1; r < m; ++r) {
      const Cx<Real> l = lu(r, c) / lu(c, c);
      lu(r, c) = l;
      for (std::size_t j = c + 1; j < m; ++j) lu(r, j) = lu(r, j) - l * lu(c, j);
    }
  }
  return true;
}

// Column j of the inverse: solve L U x = P e_j.
template <class Real>
void lu_solve_unit(const DenseCx<Real>& lu, const std::vector<std::size_t>& perm, std::size_t j,
                   std::vector<Cx<Real>>& x) {
  const std::size_t m = lu.m;
  x.assign(m, Cx<Real>{Real(0), Real(0)});
  for (std::size_t i = 0; i < m; ++i) {
    if (perm[i] == j) x[i].re = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < i; ++k) x[i] = x[i] - lu(i, k) * x[k];
  }
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t k = i + 1; k < m; ++k) x[i] = x[i] - lu(i, k) * x[k];
    x[i] = x[i] / lu(i, i);
  }
}

template <class Real>
NumericCond solve_cond(std::uint64_t n, std::span<const std::uint64_t> exponents, double threshold, bool parallel) {
  NumericCond out;
  out.n = n;
  out.m = exponents.size();
  const std::size_t m = exponents.size();
  const auto v = vandermonde<Real>(n, exponents);

  auto lu = v;
  std::vector<std::size_t> perm;
  if (!lu_factor(lu, perm)) {
    out.estimate = std::numeric_limits<double>::infinity();
    out.residual = std::numeric_limits<double>::infinity();
    out.trusted = false;
    return out;
  }

  // inv_cols[j] is column j of V^{-1}.
  std::vector<std::vector<Cx<Real>>> inv_cols(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t j = 0; j < m; ++j) lu_solve_unit(lu, perm, j, inv_cols[j]);

  Real frob = 0;
  for (const auto& col : inv_cols) {
    for (const auto& x : col) frob += abs2(x);
  }

  double residual = 0.0;
#pragma omp parallel for schedule(static) reduction(max : residual) if (parallel)
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      Cx<Real> acc{Real(i == j ? -1 : 0), Real(0)};
      for (std::size_t k = 0; k < m; ++k) acc = acc + v(i, k) * inv_cols[j][k];
      using std::sqrt;
      residual = std::max(residual, static_cast<double>(sqrt(abs2(acc))));
    }
  }

  using std::sqrt;
  out.estimate = static_cast<double>(Real(m) * sqrt(frob));
  out.residual = residual;
  out.trusted = std::isfinite(out.estimate) && residual <= threshold;
  return out;
}

using BigReal = boost::multiprecision::mpfr_float;

// Boost's default MPFR precision is process global in this version.
std::mutex& mpfr_precision_mutex() {
  static std::mutex mu;
  return mu;
}

void require_permutation(std::uint64_t n, std::span<const std::uint64_t> exponents) {
  auto sorted = std::vector<std::uint64_t>(exponents.begin(), exponents.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != primitive_exponents(n)) {
    throw InvalidArgument("cond_numeric: exponents must be a permutation of the primitive exponents of n");
  }
}

}  // namespace

std::vector<std::complex<double>> primitive_roots(std::uint64_t n) {
  std::vector<std::complex<double>> out;
  for (auto k : primitive_exponents(n)) out.push_back(unit_root(k, n));
  return out;
}

NumericCond cond_numeric(std::uint64_t n, std::span<const std::uint64_t> exponents, const NumericOptions& opts) {
  require_permutation(n, exponents);
  if (opts.mantissa_bits <= 53) return solve_cond<double>(n, exponents, opts.residual_threshold, opts.parallel);
  if (opts.mantissa_bits <= static_cast<unsigned>(std::numeric_limits<long double>::digits)) {
    return solve_cond<long double>(n, exponents, opts.residual_threshold, opts.parallel);
  }
  std::lock_guard lock(mpfr_precision_mutex());
  const auto saved = BigReal::default_precision();
  BigReal::default_precision(static_cast<unsigned>(std::ceil(opts.mantissa_bits * 0.30102999566398120)) + 1);
  auto out = solve_cond<BigReal>(n, exponents, opts.residual_threshold, false);
  BigReal::default_precision(saved);
  return out;
}

NumericCond cond_numeric(std::uint64_t n, const NumericOptions& opts) {
  const auto ks = primitive_exponents(n);
  return cond_numeric(n, ks, opts);
}

namespace reference {

NumericCond cond_numeric(std::uint64_t n, double residual_threshold) {
  const auto ks = primitive_exponents(n);
  return solve_cond<double>(n, ks, residual_threshold, false);
}

}  // namespace reference

double lemma1_residual(std::uint64_t n, double budget) {
  const auto ks = primitive_exponents(n);
  const std::uint64_t m = ks.size();
  const std::uint64_t len = m * n;
  if (static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(len) > budget) {
    throw BudgetExceeded("lemma1_residual(" + std::to_string(n) + "): m^3 n exceeds budget");
  }
  const auto roots = root_table(n);

  double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < m; ++j) {
      // (z_i conj z_j)^k = e^{2 pi i (k_i - k_j) k / n}; rows of W are generated on the fly.
      const std::uint64_t step = (ks[i] + n - ks[j]) % n;
      std::complex<double> acc = 0.0;
      std::uint64_t idx = 0;
      for (std::uint64_t k = 0; k < len; ++k) {
        acc += roots[idx];
        idx += step;
        if (idx >= n) idx -= n;
      }
      if (i == j) acc -= static_cast<double>(len);
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double lemma2_residual(std::uint64_t n, std::uint64_t blocks, double budget) {
  if (blocks < 1 || blocks > n) {
    throw InvalidArgument("lemma2_residual: blocks must satisfy 1 <= blocks <= n");
  }
  const auto ks = primitive_exponents(n);
  const std::uint64_t m = ks.size();
  if (static_cast<double>(blocks) * static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m) >
      budget) {
    throw BudgetExceeded("lemma2_residual(" + std::to_string(n) + "): blocks m^3 exceeds budget");
  }
  const auto roots = root_table(n);
  const auto c = companion(*cyclotomic_shared(n));

  // power_cols[t] is column t of C^j, advanced by m applications per block.
  std::vector<IntVector> power_cols(m, IntVector(m, 0));
  for (std::uint64_t t = 0; t < m; ++t) power_cols[t][t] = 1;

  double worst = 0.0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t j = b * m;
    std::vector<std::vector<double>> cols(m, std::vector<double>(m));
    for (std::uint64_t t = 0; t < m; ++t) {
      for (std::uint64_t s = 0; s < m; ++s) cols[t][s] = power_cols[t][s].get_d();
    }
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::uint64_t i = 0; i < m; ++i) {
      for (std::uint64_t t = 0; t < m; ++t) {
        const auto lhs = roots[static_cast<std::uint64_t>((static_cast<unsigned __int128>(ks[i]) * (j + t)) % n)];
        std::complex<double> rhs = 0.0;
        for (std::uint64_t s = 0; s < m; ++s) {
          rhs += roots[static_cast<std::uint64_t>((static_cast<unsigned __int128>(ks[i]) * s) % n)] * cols[t][s];
        }
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    if (b + 1 < blocks) {
      for (auto& col : power_cols) {
        for (std::uint64_t s = 0; s < m; ++s) c.apply_in_place(col);
      }
    }
  }
  return worst;
}

}  // namespace cyclocond
