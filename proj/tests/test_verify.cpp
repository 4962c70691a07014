/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <sstream>

#include "cyclocond/verify.hpp"

using namespace cyclocond;

namespace {

const CheckReport* find_check(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("suite names") {
    CHECK(parse_suite("lemmas") == VerifySuite::lemmas);
    CHECK(parse_suite("all") == VerifySuite::all);
    CHECK_FALSE(parse_suite("everything").has_value());
  }

  TEST_CASE("lemma suite on a small range") {
    VerifyConfig cfg;
    cfg.from = 2;
    cfg.to = 40;
    cfg.suite = VerifySuite::lemmas;
    cfg.lemma4_trials = 20;
    const auto report = run_verify(cfg);
    CHECK(report.passed());
    const auto* l1 = find_check(report, "lemma1");
    REQUIRE(l1 != nullptr);
    CHECK(l1->checked == 39);
    CHECK(l1->worst < 1e-10);
    CHECK(find_check(report, "lemma2") != nullptr);
    CHECK(find_check(report, "lemma4") != nullptr);
  }

  TEST_CASE("oracle and invariants") {
    VerifyConfig cfg;
    cfg.from = 1;
    cfg.to = 60;
    cfg.suite = VerifySuite::oracle;
    auto report = run_verify(cfg);
    CHECK(report.passed());
    CHECK(find_check(report, "oracle")->checked + find_check(report, "oracle")->skipped == 60);

    cfg.suite = VerifySuite::invariants;
    report = run_verify(cfg);
    CHECK(report.passed());
    CHECK(find_check(report, "bound-chain") != nullptr);
  }

  TEST_CASE("an impossible tolerance is reported as a failure") {
    VerifyConfig cfg;
    cfg.from = 5;
    cfg.to = 8;
    cfg.suite = VerifySuite::lemmas;
    cfg.lemma2_tol = -1.0;
    const auto report = run_verify(cfg);
    CHECK_FALSE(report.passed());
    std::ostringstream out;
    print_report(report, out);
    CHECK(out.str().find("[FAIL] lemma2") != std::string::npos);
    CHECK(out.str().find("[PASS] lemma1") != std::string::npos);
  }
}
