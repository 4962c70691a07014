/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "cyclocond/numtheory.hpp"

namespace cyclocond {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& monic_divisor) {
  if (monic_divisor.empty() || monic_divisor.back() != 1) {
    throw InvalidArgument("poly_div_exact: divisor must be monic");
  }
  const std::size_t db = monic_divisor.size() - 1;
  if (a.size() < monic_divisor.size()) {
    throw std::logic_error("poly_div_exact: dividend degree below divisor degree");
  }
  // Cyclotomic divisors are sparse with mostly unit coefficients.
  struct Term {
    std::size_t index;
    int unit;  // +1 or -1, 0 for a general coefficient
    const mpz_class* coeff;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < db; ++i) {
    const auto& c = monic_divisor[i];
    if (sgn(c) == 0) continue;
    terms.push_back({i, c == 1 ? 1 : (c == -1 ? -1 : 0), &c});
  }

  IntPoly rem = a;
  IntPoly quot(a.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_swap(quot[k].get_mpz_t(), rem[k + db].get_mpz_t());
    const auto lead = quot[k].get_mpz_t();
    if (mpz_sgn(lead) == 0) continue;
    for (const auto& t : terms) {
      auto target = rem[k + t.index].get_mpz_t();
      if (t.unit == 1) {
        mpz_sub(target, target, lead);
      } else if (t.unit == -1) {
        mpz_add(target, target, lead);
      } else {
        mpz_submul(target, lead, t.coeff->get_mpz_t());
      }
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  }
  return quot;
}

CyclotomicPoly::CyclotomicPoly(std::uint64_t n, IntPoly coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ == 0 || coeffs_.size() < 2) throw InvalidArgument("CyclotomicPoly: bad index or degree");
}

mpz_class CyclotomicPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
  return acc;
}

std::shared_ptr<const CyclotomicPoly> CyclotomicCache::find(std::uint64_t n) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(n);
  return it == entries_.end() ? nullptr : it->second;
}

void CyclotomicCache::insert(std::shared_ptr<const CyclotomicPoly> p) {
  if (capacity_ == 0) return;
  std::unique_lock lock(mutex_);
  const auto n = p->n();
  if (entries_.contains(n)) return;
  while (entries_.size() >= capacity_ && !order_.empty()) {
    entries_.erase(order_.front());
    order_.pop_front();
  }
  entries_.emplace(n, std::move(p));
  order_.push_back(n);
}

void CyclotomicCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  order_.clear();
}

std::size_t CyclotomicCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

CyclotomicCache& default_cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

namespace {

std::size_t storage_bits(const IntPoly& p) {
  std::size_t bits = 0;
  for (const auto& c : p) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  return bits;
}

void check_storage(std::uint64_t n, std::uint64_t m, const IntPoly* p, const ExactLimits& limits) {
  const bool over = (m + 1 > limits.max_poly_bits) || (p != nullptr && storage_bits(*p) > limits.max_poly_bits);
  if (over) {
    throw ResourceExhausted("cyclotomic_poly(" + std::to_string(n) + "): coefficient storage exceeds " +
                            std::to_string(limits.max_poly_bits) + " bits");
  }
}

// Phi_r for squarefree r.
IntPoly squarefree_coeffs(std::uint64_t r, const ExactLimits& limits, CyclotomicCache& cache) {
  if (r == 1) return {-1, 1};
  IntPoly p(r + 1);
  p[0] = -1;
  p[r] = 1;
  // Largest divisors first so the running quotient shrinks fastest.
  auto ds = divisors(r);
  ds.pop_back();
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    p = poly_div_exact(p, cyclotomic_shared(*it, limits, cache)->coeffs());
  }
  return p;
}

}  // namespace

std::shared_ptr<const CyclotomicPoly> cyclotomic_shared(std::uint64_t n, const ExactLimits& limits,
                                                        CyclotomicCache& cache) {
  if (n == 0) throw InvalidArgument("cyclotomic_poly: n must be >= 1");
  if (auto hit = cache.find(n)) return hit;

  const auto f = factorize(n);
  const auto m = euler_phi(f);
  check_storage(n, m, nullptr, limits);
  const auto r = radical(f);

  IntPoly coeffs;
  if (r == n) {
    coeffs = squarefree_coeffs(r, limits, cache);
  } else {
    const auto& base = cyclotomic_shared(r, limits, cache)->coeffs();
    const auto stride = n / r;
    coeffs.assign(m + 1, 0);
    for (std::size_t j = 0; j < base.size(); ++j) coeffs[j * stride] = base[j];
  }
  check_storage(n, m, &coeffs, limits);

  auto p = std::make_shared<const CyclotomicPoly>(n, std::move(coeffs));
  cache.insert(p);
  return p;
}

CyclotomicPoly cyclotomic_poly(std::uint64_t n, const ExactLimits& limits) {
  return *cyclotomic_shared(n, limits);
}

mpz_class height(const CyclotomicPoly& p) {
  mpz_class best = 0;
  for (std::size_t j = 0; j < p.degree(); ++j) {
    if (mpz_cmpabs(p[j].get_mpz_t(), best.get_mpz_t()) > 0) best = abs(p[j]);
  }
  return best;
}

std::size_t height_index(const CyclotomicPoly& p) {
  const auto h = height(p);
  for (std::size_t j = 0; j < p.degree(); ++j) {
    if (mpz_cmpabs(p[j].get_mpz_t(), h.get_mpz_t()) == 0) return j;
  }
  return 0;
}

bool product_formula_check(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("product_formula_check: n must be >= 1");
  IntPoly prod{1};
  for (auto d : divisors(n)) prod = poly_mul(prod, cyclotomic_shared(d)->coeffs());
  IntPoly expected(n + 1);
  expected[0] = -1;
  expected[n] = 1;
  return prod == expected;
}

}  // namespace cyclocond
