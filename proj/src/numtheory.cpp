/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/numtheory.hpp"

#include <algorithm>
#include <string>

#include "cyclocond/error.hpp"

namespace cyclocond {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw InvalidArgument(std::string(what) + ": n must be >= 1");
  }
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = f.n;
  for (const auto& pe : f.factors) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

int moebius(const Factorization& f) {
  if (!is_squarefree(f)) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t radical(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& pe : f.factors) r *= pe.prime;
  return r;
}

bool is_squarefree(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pe) { return pe.exponent == 1; });
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }
int moebius(std::uint64_t n) { return moebius(factorize(n)); }
unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).factors.size()); }
std::uint64_t radical(std::uint64_t n) { return radical(factorize(n)); }
bool is_squarefree(std::uint64_t n) { return is_squarefree(factorize(n)); }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace cyclocond
