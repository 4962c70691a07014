/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

// Acceptance run. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.
//
//   acceptance <path-to-cyclocond-cli> <scratch-dir>

#include <gmpxx.h>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclocond/companion.hpp"
#include "cyclocond/cond.hpp"
#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/numeric.hpp"
#include "cyclocond/numtheory.hpp"
#include "cyclocond/scan.hpp"
#include "oracle.hpp"

using namespace cyclocond;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. cond_sq = phi(n)^2 for n = 2^k.
Outcome power_of_two() {
  Outcome o;
  int count = 0;
  for (std::uint64_t n = 2; n <= 1024; n *= 2, ++count) {
    const auto c = cond_exact(n);
    const mpq_class want(mpz_class(euler_phi(n)) * euler_phi(n));
    if (c.cond_sq != want) o.fail("n = " + std::to_string(n) + " gives " + c.cond_sq.get_str());
  }
  if (o.pass) o.detail = std::to_string(count) + " powers of two, exact equality";
  return o;
}

// 2. Exact vs floating point where the numeric path is trusted.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t trusted = 0, untrusted = 0;
  double worst = 0;
  std::uint64_t worst_n = 0;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    NumericOptions opts;
    opts.residual_threshold = 1e-8;
    const auto num = cond_numeric(n, opts);
    if (!num.trusted) {
      ++untrusted;
      continue;
    }
    ++trusted;
    const double exact = std::sqrt(cond_exact(n).cond_sq.get_d());
    const double gap = std::abs(num.estimate - exact) / exact;
    if (gap > worst) {
      worst = gap;
      worst_n = n;
    }
    if (gap > 1e-6) o.fail("n = " + std::to_string(n) + " gap " + fmt("%.3e", gap));
  }
  if (o.pass)
    o.detail = std::to_string(trusted) + " trusted, " + std::to_string(untrusted) + " untrusted, max gap " +
               fmt("%.2e", worst) + " at n = " + std::to_string(worst_n);
  return o;
}

// 3. Lemma residuals for n <= 64 and the column-shift identity.
Outcome lemma_suite() {
  Outcome o;
  double worst1 = 0, worst2 = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const double m = static_cast<double>(euler_phi(n));
    const double r1 = lemma1_residual(n);
    const double r2 = lemma2_residual(n, std::min<std::uint64_t>(n, 4));
    worst1 = std::max(worst1, r1 / (m * n));
    worst2 = std::max(worst2, r2);
    if (r1 > 1e-8 * m * n) o.fail("lemma1 at n = " + std::to_string(n) + ": " + fmt("%.3e", r1));
    if (r2 > 1e-8) o.fail("lemma2 at n = " + std::to_string(n) + ": " + fmt("%.3e", r2));
  }
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::size_t identities = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<mpz_class> c(len(rng));
    for (auto& x : c) x = coef(rng);
    for (std::size_t j = 1; j <= c.size(); ++j, ++identities)
      if (!lemma4_check(c, j)) o.fail("lemma4 trial " + std::to_string(t) + ", j = " + std::to_string(j));
  }
  if (o.pass)
    o.detail = "max lemma1 residual/(mn) " + fmt("%.2e", worst1) + ", max lemma2 residual " + fmt("%.2e", worst2) +
               ", " + std::to_string(identities) + " exact lemma4 identities";
  return o;
}

// 4. cond_sq >= (m/n) A^2 >= A^2/n.
Outcome bound_chain() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto c = cond_exact(n);
    const auto strong = height_lower_bound(n);
    const auto weak = weak_height_lower_bound(n);
    if (!(c.cond_sq >= strong)) o.fail("cond_sq < (m/n)A^2 at n = " + std::to_string(n));
    if (!(strong >= weak)) o.fail("(m/n)A^2 < A^2/n at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 1..2000, exact rational comparisons";
  return o;
}

// 5. Product formula, structural invariants, and A(105).
Outcome cyclotomic_correctness() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 300; ++n)
    if (!product_formula_check(n)) o.fail("product formula at n = " + std::to_string(n));
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto p = cyclotomic_poly(n);
    const auto& a = p.coeffs();
    const std::size_t m = p.degree();
    const auto f = factorize(n);
    std::string bad;
    if (m != oracle::phi_by_gcd_count(n)) bad = "degree";
    if (a.back() != 1) bad = "leading coefficient";
    if (a.front() != (n == 1 ? -1 : 1)) bad = "constant term";
    if (n >= 2)
      for (std::size_t j = 0; j <= m; ++j)
        if (a[j] != a[m - j]) bad = "palindrome";
    mpz_class at_one = 0;
    for (const auto& x : a) at_one += x;
    const mpz_class want = n == 1 ? 0 : (f.factors.size() == 1 ? mpz_class(f.factors[0].prime) : mpz_class(1));
    if (at_one != want) bad = "Phi_n(1)";
    if (!bad.empty()) o.fail(bad + " at n = " + std::to_string(n));
  }
  const auto p105 = cyclotomic_poly(105);
  if (height(p105) != 2) o.fail("A(105) = " + height(p105).get_str());
  if (height_index(p105) != 7) o.fail("first |a_105(j)| = 2 at j = " + std::to_string(height_index(p105)));
  if (o.pass) o.detail = "product formula n <= 300, invariants n <= 2000, A(105) = 2 at j = 7";
  return o;
}

// 6. Spot values.
Outcome spot_values() {
  Outcome o;
  if (cond_exact(3).cond_sq != mpq_class(16, 3)) o.fail("cond_sq(3) = " + cond_exact(3).cond_sq.get_str());
  const auto brute = oracle::sum(oracle::frobenius_per_k_dense({1, 1, 1}, 3));
  if (brute != 8) o.fail("brute-force frobenius sum(3) = " + brute.get_str());
  if (frobenius_sum(3).total != 8) o.fail("frobenius_sum(3) = " + frobenius_sum(3).total.get_str());
  if (frobenius_sum_columnwise(3).total != 8) o.fail("columnwise frobenius_sum(3) differs");
  if (cond_exact(1).cond_sq != 1) o.fail("cond(V_1) != 1");
  if (cond_exact(2).cond_sq != 1) o.fail("cond(V_2) != 1");
  if (o.pass) o.detail = "cond_sq(3) = 16/3, frobenius_sum(3) = 8 (brute force agrees), cond(V_1) = cond(V_2) = 1";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + '\n';
  return out;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

struct ScanRuns {
  bool ran = false;
  std::string error;
  fs::path first, cached, fresh, plot_dir;
  double first_seconds = 0, cached_seconds = 0;
};

ScanRuns run_scans(const std::string& cli, const fs::path& work) {
  ScanRuns r;
  fs::remove_all(work);
  fs::create_directories(work);
  const auto cache = work / "cache.csv";
  r.first = work / "first.csv";
  r.cached = work / "cached.csv";
  r.fresh = work / "fresh.csv";
  r.plot_dir = work / "plot";
  const std::string base = quote(cli) + " scan 2 2999 --squarefree-only --cache-path " + quote(cache);

  auto t0 = Clock::now();
  if (int rc = run(base + " -j 0 -o " + quote(r.first)); rc != 0) {
    r.error = "first scan exited " + std::to_string(rc);
    return r;
  }
  r.first_seconds = seconds_since(t0);
  t0 = Clock::now();
  if (int rc = run(base + " -j 0 -o " + quote(r.cached)); rc != 0) {
    r.error = "cached scan exited " + std::to_string(rc);
    return r;
  }
  r.cached_seconds = seconds_since(t0);
  fs::remove(cache);
  if (int rc = run(base + " -j 1 -o " + quote(r.fresh)); rc != 0) {
    r.error = "scan after cache deletion exited " + std::to_string(rc);
    return r;
  }
  if (int rc = run(quote(cli) + " plot-data " + quote(r.first) + " " + quote(r.plot_dir)); rc != 0) {
    r.error = "plot-data exited " + std::to_string(rc);
    return r;
  }
  r.ran = true;
  return r;
}

// 7. Desk-scale scan: schema, chain, m^2 floor, omega partition.
Outcome figure_scan(const ScanRuns& runs) {
  Outcome o;
  if (!runs.ran) {
    o.fail(runs.error.empty() ? "scan did not run" : runs.error);
    return o;
  }
  std::istringstream in(slurp(runs.first));
  std::string line;
  std::getline(in, line);
  if (line.rfind("# cyclocond scan 2..2999 generated ", 0) != 0) o.fail("missing provenance comment");
  std::getline(in, line);
  if (line != kScanHeader) o.fail("bad header: " + line);

  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 2; n <= 2999; ++n)
    if (is_squarefree(n)) expected.push_back(n);

  std::vector<std::uint64_t> seen;
  std::map<std::uint64_t, unsigned> omega_of;
  while (std::getline(in, line)) {
    ScanRecord rec;
    try {
      rec = parse_row(line);
    } catch (const std::exception& e) {
      o.fail(std::string("schema: ") + e.what());
      continue;
    }
    seen.push_back(rec.n);
    omega_of[rec.n] = rec.omega;
    if (rec.status == ScanStatus::failed) {
      o.fail("row " + std::to_string(rec.n) + " failed");
      continue;
    }
    const mpq_class m(rec.m), n(rec.n);
    const mpq_class a2(*rec.height * *rec.height);
    if (rec.m != euler_phi(rec.n) || rec.omega != omega(rec.n) || !rec.squarefree)
      o.fail("arithmetic fields wrong at n = " + std::to_string(rec.n));
    if (!(*rec.cond_sq >= m / n * a2) || !(m / n * a2 >= a2 / n))
      o.fail("bound chain violated at n = " + std::to_string(rec.n));
    if (!(*rec.cond_sq >= m * m)) o.fail("cond_sq < m^2 at n = " + std::to_string(rec.n));
    if (auto why = validate_record(rec); !why.empty()) o.fail("n = " + std::to_string(rec.n) + ": " + why);
  }
  if (seen != expected) o.fail("row set differs from squarefree n in [2, 2999]");

  // Every row lands in the series of its own omega, exactly once.
  std::map<std::uint64_t, int> placed;
  std::set<unsigned> omegas;
  for (const auto& entry : fs::directory_iterator(runs.plot_dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("omega_", 0) != 0) continue;
    const unsigned w = std::stoul(name.substr(6));
    omegas.insert(w);
    std::istringstream s(slurp(entry.path()));
    while (std::getline(s, line)) {
      if (line.empty() || line[0] == '#') continue;
      const std::uint64_t n = std::stoull(line.substr(0, line.find(' ')));
      ++placed[n];
      if (omega(n) != w) o.fail("n = " + std::to_string(n) + " in series omega_" + std::to_string(w));
    }
  }
  for (auto n : expected)
    if (placed[n] != 1) o.fail("n = " + std::to_string(n) + " plotted " + std::to_string(placed[n]) + " times");

  if (o.pass) {
    std::string ws;
    for (auto w : omegas) ws += (ws.empty() ? "" : ",") + std::to_string(w);
    std::map<unsigned, std::size_t> counts;
    for (auto [n, w] : omega_of) ++counts[w];
    std::string cs;
    for (auto [w, c] : counts) cs += (cs.empty() ? "" : " ") + std::to_string(w) + ":" + std::to_string(c);
    o.detail = std::to_string(seen.size()) + " rows in " + fmt("%.1f", runs.first_seconds) +
               " s, omega series {" + ws + "} (" + cs + ")";
  }
  return o;
}

// 8. Cached rerun and rerun after cache deletion give identical bodies.
Outcome determinism(const ScanRuns& runs) {
  Outcome o;
  if (!runs.ran) {
    o.fail(runs.error.empty() ? "scan did not run" : runs.error);
    return o;
  }
  const auto a = body(slurp(runs.first));
  if (a != body(slurp(runs.cached))) o.fail("cached rerun differs");
  if (a != body(slurp(runs.fresh))) o.fail("rerun after cache deletion differs");
  if (o.pass)
    o.detail = "bodies byte-identical (cached rerun " + fmt("%.2f", runs.cached_seconds) +
               " s, fresh single-threaded rerun)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cyclocond-binary> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argv[2];

  struct Row {
    int id;
    const char* title;
    Outcome outcome;
    double seconds;
  };
  std::vector<Row> rows;
  auto timed = [&](int id, const char* title, auto&& fn) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    rows.push_back({id, title, o, seconds_since(t0)});
    std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title << ": " << o.detail
              << " (" << fmt("%.1f", rows.back().seconds) << " s)" << std::endl;
  };

  timed(1, "power-of-two exactness", power_of_two);
  timed(2, "exact/numeric agreement, 2 <= n <= 200", oracle_equivalence);
  timed(3, "lemma residuals and column-shift identity", lemma_suite);
  timed(4, "bound chain, 1 <= n <= 2000", bound_chain);
  timed(5, "cyclotomic correctness", cyclotomic_correctness);
  timed(6, "spot exact values", spot_values);

  ScanRuns runs;
  timed(7, "squarefree scan 2..2999 and omega partition", [&] {
    runs = run_scans(cli, work);
    return figure_scan(runs);
  });
  timed(8, "scan determinism", [&] { return determinism(runs); });

  const auto failed = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.outcome.pass; });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
