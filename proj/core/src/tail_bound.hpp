#pragma once

#include <chieuler/bigfloat.hpp>
#include <chieuler/rational.hpp>

#include <cmath>

namespace chieuler::detail {

// Upper bound on sum_{m > M} m^a q^{-m} for a >= 0, q > 1, using
//   term_{m+1}/term_m <= ((M+2)/(M+1))^a / q =: r  for m >= M+1,
// so the tail is at most (M+1)^a q^{-(M+1)} / (1 - r) when r < 1.
// Every operation is rounded in the direction that enlarges the bound.
// Returns +inf when r >= 1.
inline Real geometric_tail_bound(unsigned long M, const Rational& a, const Rational& q) {
  const mpfr_prec_t prec = 96;
  Real a_up(prec), ln_m1(prec), ln_ratio(prec), ln_q_down(prec), t(prec), r(prec), term(prec),
      one_minus_r(prec), out(prec);
  mpfr_set_q(a_up.get(), a.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_t q_down;
  mpfr_init2(q_down, prec);
  mpfr_set_q(q_down, q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_log(ln_q_down.get(), q_down, MPFR_RNDD);
  mpfr_clear(q_down);

  // ln r = a ln((M+2)/(M+1)) - ln q
  mpfr_set_ui(t.get(), M + 2, MPFR_RNDU);
  mpfr_div_ui(t.get(), t.get(), M + 1, MPFR_RNDU);
  mpfr_log(ln_ratio.get(), t.get(), MPFR_RNDU);
  mpfr_mul(ln_ratio.get(), ln_ratio.get(), a_up.get(), MPFR_RNDU);
  mpfr_sub(ln_ratio.get(), ln_ratio.get(), ln_q_down.get(), MPFR_RNDU);
  mpfr_exp(r.get(), ln_ratio.get(), MPFR_RNDU);
  if (mpfr_cmp_ui(r.get(), 1) >= 0) {
    mpfr_set_inf(out.get(), 1);
    return out;
  }
  mpfr_ui_sub(one_minus_r.get(), 1, r.get(), MPFR_RNDD);

  // term = exp(a ln(M+1) - (M+1) ln q)
  mpfr_set_ui(t.get(), M + 1, MPFR_RNDU);
  mpfr_log(ln_m1.get(), t.get(), MPFR_RNDU);
  mpfr_mul(ln_m1.get(), ln_m1.get(), a_up.get(), MPFR_RNDU);
  mpfr_mul_ui(t.get(), ln_q_down.get(), M + 1, MPFR_RNDD);
  mpfr_sub(ln_m1.get(), ln_m1.get(), t.get(), MPFR_RNDU);
  mpfr_exp(term.get(), ln_m1.get(), MPFR_RNDU);

  mpfr_div(out.get(), term.get(), one_minus_r.get(), MPFR_RNDU);
  return out;
}

// Rough log2 of sum_{m>=1} m^a q^{-m} over the first M terms; only used to
// size guard bits, so an overestimate is harmless.
inline long log2_series_magnitude(double a, double q, unsigned long M) {
  const double lq = std::log(q);
  double peak = 0.0;
  if (a > 0) {
    const double m_star = std::max(1.0, a / lq);
    peak = (a * std::log(m_star) - m_star * lq) / std::log(2.0);
  }
  return static_cast<long>(std::ceil(std::max(0.0, peak) + std::log2(static_cast<double>(M) + 2.0))) + 2;
}

}  // namespace chieuler::detail
