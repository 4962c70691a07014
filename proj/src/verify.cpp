/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "cyclocond/companion.hpp"
#include "cyclocond/cond.hpp"
#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/numeric.hpp"
#include "cyclocond/numtheory.hpp"

namespace cyclocond {

std::optional<VerifySuite> parse_suite(const std::string& s) {
  if (s == "lemmas") return VerifySuite::lemmas;
  if (s == "oracle") return VerifySuite::oracle;
  if (s == "invariants") return VerifySuite::invariants;
  if (s == "all") return VerifySuite::all;
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

namespace {

struct Outcome {
  double value = 0.0;
  bool ok = true;
  bool skipped = false;
  std::string detail;
};

using PerN = std::function<std::vector<Outcome>(std::uint64_t)>;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Runs fn for every n in the range (concurrently) and folds outcome slot i
// into the report named names[i], in ascending n.
std::vector<CheckReport> run_families(const std::vector<std::string>& names, const std::vector<double>& tolerances,
                                      const VerifyConfig& config, const PerN& fn) {
  std::vector<std::uint64_t> ns;
  for (auto n = config.from; n <= config.to; ++n) ns.push_back(n);
  std::vector<std::vector<Outcome>> results(ns.size());
  const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < ns.size(); ++i) {
    try {
      results[i] = fn(ns[i]);
    } catch (const std::exception& e) {
      results[i].assign(names.size(), Outcome{0.0, false, false, e.what()});
    }
  }

  std::vector<CheckReport> reports(names.size());
  for (std::size_t f = 0; f < names.size(); ++f) {
    reports[f].name = names[f];
    reports[f].tolerance = tolerances[f];
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t f = 0; f < names.size(); ++f) {
      const auto& o = results[i][f];
      auto& r = reports[f];
      if (o.skipped) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (r.checked == 1 || o.value > r.worst) {
        r.worst = o.value;
        r.worst_n = ns[i];
      }
      if (!o.ok) r.failures.push_back("n=" + std::to_string(ns[i]) + ": " + o.detail);
    }
  }
  return reports;
}

Outcome within(double value, double tol) {
  Outcome o;
  o.value = value;
  o.ok = std::isfinite(value) && value <= tol;
  if (!o.ok) o.detail = "value " + fmt(value) + " exceeds " + fmt(tol);
  return o;
}

Outcome holds(bool ok, const std::string& what) {
  Outcome o;
  o.value = ok ? 0.0 : 1.0;
  o.ok = ok;
  if (!ok) o.detail = what;
  return o;
}

std::vector<CheckReport> lemma_checks(const VerifyConfig& c) {
  auto reports = run_families(
      {"lemma1", "lemma2"}, {c.lemma1_rel_tol, c.lemma2_tol}, c, [&](std::uint64_t n) {
        const double mn = static_cast<double>(euler_phi(n)) * static_cast<double>(n);
        const auto blocks = std::min<std::uint64_t>(n, c.lemma2_blocks);
        std::vector<Outcome> out;
        out.push_back(within(lemma1_residual(n, c.budget) / mn, c.lemma1_rel_tol));
        out.push_back(within(lemma2_residual(n, blocks, c.budget), c.lemma2_tol));
        return out;
      });

  CheckReport l4;
  l4.name = "lemma4";
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(c.lemma4_max_k, 1));
  std::uniform_int_distribution<long> val(-50, 50);
  for (int t = 0; t < c.lemma4_trials; ++t) {
    IntVector vec(len(rng));
    for (auto& x : vec) x = val(rng);
    for (std::size_t j = 1; j <= vec.size(); ++j) {
      ++l4.checked;
      if (!lemma4_check(vec, j)) {
        l4.failures.push_back("trial " + std::to_string(t) + " k=" + std::to_string(vec.size()) +
                              " j=" + std::to_string(j));
      }
    }
  }
  l4.worst = static_cast<double>(l4.failures.size());
  reports.push_back(std::move(l4));
  return reports;
}

std::vector<CheckReport> oracle_checks(const VerifyConfig& c) {
  return run_families({"oracle"}, {c.oracle_rel_tol}, c, [&](std::uint64_t n) {
    NumericOptions opts;
    opts.residual_threshold = c.residual_threshold;
    opts.parallel = false;
    const auto num = cond_numeric(n, opts);
    if (!num.trusted) {
      Outcome o;
      o.skipped = true;
      return std::vector<Outcome>{o};
    }
    const double exact = std::sqrt(cond_exact(n).cond_sq.get_d());
    return std::vector<Outcome>{within(std::abs(num.estimate - exact) / exact, c.oracle_rel_tol)};
  });
}

std::vector<CheckReport> invariant_checks(const VerifyConfig& c) {
  return run_families(
      {"product-formula", "cyclotomic-structure", "bound-chain", "frobenius-floor", "power-of-two"},
      {0, 0, 0, 0, 0}, c, [&](std::uint64_t n) {
        std::vector<Outcome> out;
        out.push_back(holds(product_formula_check(n), "product of Phi_d over d | n != X^n - 1"));

        const auto p = cyclotomic_shared(n);
        const auto m = p->degree();
        bool ok = m == euler_phi(n) && (*p)[m] == 1 && (*p)[0] == (n == 1 ? -1 : 1);
        for (std::size_t j = 0; n >= 2 && j <= m; ++j) ok = ok && (*p)[j] == (*p)[m - j];
        const auto f = factorize(n);
        const mpz_class at_one = p->evaluate(1);
        if (n == 1) {
          ok = ok && at_one == 0;
        } else if (f.factors.size() == 1) {
          ok = ok && at_one == static_cast<unsigned long>(f.factors[0].prime);
        } else {
          ok = ok && at_one == 1;
        }
        out.push_back(holds(ok, "degree/monic/constant/palindrome/Phi(1) invariant violated"));

        const auto c_sq = cond_exact(n).cond_sq;
        const auto hlb = height_lower_bound(n);
        out.push_back(holds(c_sq >= hlb && hlb >= weak_height_lower_bound(n), "bound chain violated"));
        const mpq_class m_sq(mpz_class(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m));
        out.push_back(holds(c_sq >= m_sq, "cond_sq below m^2"));
        if ((n & (n - 1)) == 0) {
          out.push_back(holds(c_sq == m_sq, "power of two with cond_sq != m^2"));
        } else {
          Outcome skip;
          skip.skipped = true;
          out.push_back(skip);
        }
        return out;
      });
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.from < 1 || config.from > config.to) throw InvalidArgument("verify: need 1 <= from <= to");
  VerifyReport report;
  auto add = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) report.checks.push_back(std::move(r));
  };
  const auto s = config.suite;
  if (s == VerifySuite::lemmas || s == VerifySuite::all) add(lemma_checks(config));
  if (s == VerifySuite::oracle || s == VerifySuite::all) add(oracle_checks(config));
  if (s == VerifySuite::invariants || s == VerifySuite::all) add(invariant_checks(config));
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t failing = 0;
  for (const auto& c : report.checks) {
    out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.checked << " checked";
    if (c.skipped > 0) out << ", " << c.skipped << " skipped";
    out << ", worst " << fmt(c.worst);
    if (c.worst_n > 0) out << " at n=" << c.worst_n;
    out << " (tol " << fmt(c.tolerance) << ")\n";
    for (const auto& f : c.failures) out << "    " << f << '\n';
    failing += c.passed() ? 0 : 1;
  }
  if (failing == 0) {
    out << "verify: all " << report.checks.size() << " checks passed\n";
  } else {
    out << "verify: " << failing << " of " << report.checks.size() << " checks failed\n";
  }
}

}  // namespace cyclocond
