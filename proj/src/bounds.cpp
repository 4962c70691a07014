/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, cyclocond contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <mpfr.h>

#include <cstdio>
#include <memory>
#include <string>

#include "cyclocond/cond.hpp"

namespace cyclocond {

namespace {

// RAII wrapper around mpfr_t at a fixed precision.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Rendered {
  std::string mantissa;
  mpfr_exp_t exponent = 0;
  bool operator==(const Rendered&) const = default;
};

Rendered render(const Mpfr& x, unsigned digits) {
  Rendered r;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &r.exponent, 10, digits, x.get(), MPFR_RNDN),
                                           mpfr_free_str);
  r.mantissa = s.get();
  return r;
}

// Lower and upper enclosures of exp(exp(log 2 * log n / log log n)).
void enclose(std::uint64_t n, mpfr_prec_t prec, Mpfr& lo, Mpfr& hi) {
  Mpfr ln2_lo(prec), ln2_hi(prec), l_lo(prec), l_hi(prec), ll_lo(prec), ll_hi(prec), t(prec);
  mpfr_const_log2(ln2_lo.get(), MPFR_RNDD);
  mpfr_const_log2(ln2_hi.get(), MPFR_RNDU);
  mpfr_set_ui(t.get(), n, MPFR_RNDN);  // exact for n < 2^prec
  mpfr_log(l_lo.get(), t.get(), MPFR_RNDD);
  mpfr_log(l_hi.get(), t.get(), MPFR_RNDU);
  mpfr_log(ll_lo.get(), l_lo.get(), MPFR_RNDD);
  mpfr_log(ll_hi.get(), l_hi.get(), MPFR_RNDU);

  // All quantities are positive for n >= 3.
  mpfr_mul(lo.get(), ln2_lo.get(), l_lo.get(), MPFR_RNDD);
  mpfr_div(lo.get(), lo.get(), ll_hi.get(), MPFR_RNDD);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);

  mpfr_mul(hi.get(), ln2_hi.get(), l_hi.get(), MPFR_RNDU);
  mpfr_div(hi.get(), hi.get(), ll_lo.get(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
}

}  // namespace

std::string vaughan_bound(std::uint64_t n, unsigned digits) {
  if (n < 3) throw InvalidArgument("vaughan_bound: requires n >= 3 (log log n must be positive)");
  if (digits == 0) throw InvalidArgument("vaughan_bound: digits must be >= 1");

  for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(4 * digits + 128); prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
    Mpfr lo(prec), hi(prec);
    enclose(n, prec, lo, hi);
    if (!mpfr_number_p(lo.get()) || !mpfr_number_p(hi.get())) {
      throw ResourceExhausted("vaughan_bound: value outside the floating exponent range");
    }
    const auto rlo = render(lo, digits);
    // Rounding is monotone, so when both ends agree the exact value renders the same.
    if (rlo != render(hi, digits)) continue;

    std::string out = rlo.mantissa.substr(0, 1);
    if (rlo.mantissa.size() > 1) out += "." + rlo.mantissa.substr(1);
    const long e = static_cast<long>(rlo.exponent) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + buf;
  }
  throw ResourceExhausted("vaughan_bound: precision cap reached");
}

}  // namespace cyclocond
