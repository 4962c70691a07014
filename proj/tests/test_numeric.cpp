/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cyclocond/cond.hpp"
#include "cyclocond/error.hpp"
#include "cyclocond/numeric.hpp"

using namespace cyclocond;

namespace {

double exact_cond(std::uint64_t n) { return std::sqrt(cond_exact(n).cond_sq.get_d()); }

}  // namespace

TEST_SUITE("numeric") {
  TEST_CASE("primitive roots") {
    const auto r1 = primitive_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == std::complex<double>(1.0, 0.0));

    const auto r4 = primitive_roots(4);
    REQUIRE(r4.size() == 2);
    CHECK(std::abs(r4[0] - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(r4[1] - std::complex<double>(0, -1)) < 1e-15);

    const auto r3 = primitive_roots(3);
    REQUIRE(r3.size() == 2);
    CHECK(std::abs(r3[0] - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-15);
    CHECK(std::abs(r3[1] - std::polar(1.0, 4 * std::numbers::pi / 3)) < 1e-15);
    CHECK_THROWS_AS(primitive_roots(0), InvalidArgument);
  }

  TEST_CASE("cond_numeric spot values") {
    const auto c4 = cond_numeric(4);
    CHECK(c4.estimate == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c4.trusted);
    CHECK(cond_numeric(3).estimate == doctest::Approx(2.309401076758503).epsilon(1e-12));
    CHECK(cond_numeric(1).estimate == 1.0);
    // 60-digit mpmath inversion values.
    CHECK(cond_numeric(12).estimate == doctest::Approx(4.6188021535170061).epsilon(1e-10));
    CHECK(cond_numeric(105).estimate == doctest::Approx(159.54220220905278).epsilon(1e-9));
  }

  TEST_CASE("numeric and exact paths agree up to 200") {
    int trusted = 0;
    for (std::uint64_t n = 2; n <= 200; ++n) {
      const auto num = cond_numeric(n);
      if (!num.trusted) continue;
      ++trusted;
      const double ex = exact_cond(n);
      REQUIRE(std::abs(num.estimate - ex) / ex <= 1e-6);
    }
    CHECK(trusted > 150);
  }

  TEST_CASE("parallel and serial inversion agree") {
    for (std::uint64_t n : {7, 30, 105, 143, 180}) {
      const auto par = cond_numeric(n);
      const auto ser = reference::cond_numeric(n);
      CHECK(par.estimate == ser.estimate);
      CHECK(par.residual == ser.residual);
    }
  }

  TEST_CASE("row ordering does not change the estimate") {
    std::mt19937_64 rng(99);
    for (std::uint64_t n : {15, 21, 60, 105, 120}) {
      auto ks = primitive_exponents(n);
      const auto base = cond_numeric(n, ks);
      std::shuffle(ks.begin(), ks.end(), rng);
      const auto shuffled = cond_numeric(n, ks);
      CHECK(std::abs(base.estimate - shuffled.estimate) / base.estimate <= 1e-10);
    }
    std::vector<std::uint64_t> bogus{1, 1};
    CHECK_THROWS_AS(cond_numeric(3, bogus), InvalidArgument);
  }

  TEST_CASE("extended precision") {
    NumericOptions ld;
    ld.mantissa_bits = 64;
    NumericOptions big;
    big.mantissa_bits = 200;
    big.residual_threshold = 1e-40;
    for (std::uint64_t n : {3, 35, 105}) {
      const double ex = exact_cond(n);
      CHECK(std::abs(cond_numeric(n, ld).estimate - ex) / ex <= 1e-12);
      const auto hp = cond_numeric(n, big);
      CHECK(hp.trusted);
      CHECK(std::abs(hp.estimate - ex) / ex <= 1e-15);
    }
  }

  TEST_CASE("lemma1 residual") {
    CHECK(lemma1_residual(1) == 0.0);
    CHECK(lemma1_residual(4) <= 1e-9);
    CHECK(lemma1_residual(12) <= 1e-8);
    for (std::uint64_t n = 1; n <= 64; ++n) {
      const double mn = static_cast<double>(primitive_exponents(n).size() * n);
      REQUIRE(lemma1_residual(n) <= 1e-8 * mn);
    }
    CHECK_THROWS_AS(lemma1_residual(64, 10.0), BudgetExceeded);
  }

  TEST_CASE("lemma2 residual") {
    for (std::uint64_t n : {1, 5, 12, 64}) CHECK(lemma2_residual(n, 1) <= 1e-12);
    CHECK(lemma2_residual(3, 3) <= 1e-9);
    CHECK(lemma2_residual(8, 4) <= 1e-8);
    for (std::uint64_t n = 1; n <= 64; ++n) REQUIRE(lemma2_residual(n, std::min<std::uint64_t>(n, 4)) <= 1e-8);
    CHECK_THROWS_AS(lemma2_residual(3, 4), InvalidArgument);
    CHECK_THROWS_AS(lemma2_residual(3, 0), InvalidArgument);
    CHECK_THROWS_AS(lemma2_residual(64, 4, 10.0), BudgetExceeded);
  }
}
