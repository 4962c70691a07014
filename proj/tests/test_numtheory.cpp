/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <random>

#include "cyclocond/error.hpp"
#include "cyclocond/numtheory.hpp"
#include "oracle.hpp"

using namespace cyclocond;

TEST_SUITE("numtheory") {
  TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());
    CHECK((factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}}));
    CHECK(oracle::is_prime_trial(9973));
    CHECK((factorize(9973).factors == std::vector<PrimePower>{{9973, 1}}));
    CHECK_THROWS_AS(factorize(0), InvalidArgument);
  }

  TEST_CASE("factorization invariants up to 10^4") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      const auto f = factorize(n);
      std::uint64_t prod = 1;
      std::uint64_t last = 1;
      for (const auto& pe : f.factors) {
        REQUIRE(pe.prime > last);
        REQUIRE(pe.exponent >= 1);
        REQUIRE(oracle::is_prime_trial(pe.prime));
        for (unsigned e = 0; e < pe.exponent; ++e) prod *= pe.prime;
        last = pe.prime;
      }
      REQUIRE(prod == n);
    }
  }

  TEST_CASE("euler_phi against gcd counting") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == oracle::phi_by_gcd_count(12));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(105) == oracle::phi_by_gcd_count(105));
    CHECK(euler_phi(105) == 48);
    for (std::uint64_t n = 1; n <= 500; ++n) REQUIRE(euler_phi(n) == oracle::phi_by_gcd_count(n));
    CHECK_THROWS_AS(euler_phi(0), InvalidArgument);
  }

  TEST_CASE("moebius, omega, radical, squarefree") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(omega(1) == 0);
    CHECK(radical(1) == 1);
    CHECK(is_squarefree(1));
    CHECK(omega(12) == 2);
    CHECK(radical(12) == 6);
    CHECK_FALSE(is_squarefree(12));
    CHECK(omega(105) == 3);
    CHECK(radical(105) == 105);
    CHECK(is_squarefree(105));
    CHECK_THROWS_AS(moebius(0), InvalidArgument);
    CHECK_THROWS_AS(omega(0), InvalidArgument);
    CHECK_THROWS_AS(radical(0), InvalidArgument);
    CHECK_THROWS_AS(is_squarefree(0), InvalidArgument);
  }

  TEST_CASE("divisor sums of phi and mu") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      std::uint64_t phi_sum = 0;
      long mu_sum = 0;
      for (auto d : divisors(n)) {
        phi_sum += euler_phi(d);
        mu_sum += moebius(d);
      }
      REQUIRE(phi_sum == n);
      REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
  }

  TEST_CASE("euler_phi is multiplicative on coprime pairs") {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    int checked = 0;
    while (checked < 500) {
      const auto a = dist(rng);
      const auto b = dist(rng);
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      ++checked;
    }
  }
}
