/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cyclocond/cond.hpp"

#include "cyclocond/companion.hpp"
#include "cyclocond/cyclotomic.hpp"
#include "cyclocond/numtheory.hpp"

namespace cyclocond {

ExactCond cond_exact(std::uint64_t n, const ExactLimits& limits) {
  const auto fs = frobenius_sum(n, false, limits);
  ExactCond out;
  out.n = n;
  out.m = fs.m;
  out.cond_sq = mpq_class(mpz_class(std::to_string(fs.m)) * fs.total, mpz_class(std::to_string(n)));
  out.cond_sq.canonicalize();
  return out;
}

std::uint64_t vandermonde_norm(std::uint64_t n) { return euler_phi(n); }

mpq_class height_lower_bound(std::uint64_t n, const ExactLimits& limits) {
  const auto p = cyclotomic_shared(n, limits);
  const mpz_class a = height(*p);
  mpq_class out(mpz_class(std::to_string(p->degree())) * a * a, mpz_class(std::to_string(n)));
  out.canonicalize();
  return out;
}

mpq_class weak_height_lower_bound(std::uint64_t n, const ExactLimits& limits) {
  const mpz_class a = height(*cyclotomic_shared(n, limits));
  mpq_class out(a * a, mpz_class(std::to_string(n)));
  out.canonicalize();
  return out;
}

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// round(sqrt(num / den) * 10^shift) for a possibly negative shift.
mpz_class scaled_sqrt_rounded(const mpq_class& value, long shift) {
  mpz_class num = value.get_num() * 4;
  mpz_class den = value.get_den();
  if (shift >= 0) {
    num *= pow10(2 * static_cast<unsigned long>(shift));
  } else {
    den *= pow10(2 * static_cast<unsigned long>(-shift));
  }
  // floor(sqrt(floor(y))) == floor(sqrt(y)), so this is floor(2 sqrt(x) 10^shift).
  mpz_class q = num / den;
  mpz_class twice;
  mpz_sqrt(twice.get_mpz_t(), q.get_mpz_t());
  return (twice + 1) / 2;
}

long decimal_exponent_estimate(const mpq_class& value) {
  // log10 sqrt(x) ~ (bits(num) - bits(den)) * log10(2) / 2; corrected below.
  const auto bn = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const auto bd = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  return static_cast<long>((bn - bd) * 0.30102999566398120 / 2.0);
}

}  // namespace

std::string sqrt_decimal(const mpq_class& value, unsigned digits) {
  if (digits == 0) throw InvalidArgument("sqrt_decimal: digits must be >= 1");
  if (sgn(value) < 0) throw InvalidArgument("sqrt_decimal: negative value");
  if (sgn(value) == 0) {
    return digits == 1 ? std::string("0") : "0." + std::string(digits - 1, '0');
  }

  // Find e with 10^(digits-1) <= round(sqrt(x) * 10^(digits-1-e)) < 10^digits.
  const mpz_class lo = pow10(digits - 1);
  const mpz_class hi = pow10(digits);
  long e = decimal_exponent_estimate(value);
  mpz_class mant;
  for (int guard = 0; guard < 64; ++guard) {
    mant = scaled_sqrt_rounded(value, static_cast<long>(digits) - 1 - e);
    if (mant >= hi) {
      ++e;
    } else if (mant < lo) {
      --e;
    } else {
      break;
    }
  }

  std::string s = mant.get_str();
  if (e >= 0 && e < static_cast<long>(digits)) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len == s.size()) return s;
    return s.substr(0, int_len) + "." + s.substr(int_len);
  }
  std::string out = s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + buf;
}

std::string cond_decimal(const ExactCond& c, unsigned digits) { return sqrt_decimal(c.cond_sq, digits); }

}  // namespace cyclocond
