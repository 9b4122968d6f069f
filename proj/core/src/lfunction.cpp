#include <chieuler/chi_eulerian.hpp>
#include <chieuler/error.hpp>
#include <chieuler/lfunction.hpp>

#include "tail_bound.hpp"

#include <cmath>
#include <vector>

namespace chieuler {

LValue l_eulerian(const Rational& s_re, const Rational& s_im, const DirichletCharacter& chi, const Rational& q,
                  long bits) {
  if (q <= Rational(1)) throw Error(ErrorKind::ConvergenceDomain, "L_E needs q > 1");
  if (bits < 64) throw Error(ErrorKind::InvalidArgument, "bits must be >= 64");
  LValue out;
  out.s_re = s_re;
  out.s_im = s_im;
  out.q = q;
  out.bits = bits;

  // |m^{-s}| = m^{-Re s} <= m^a with a = max(0, -Re s).
  const Rational a = s_re.sign() < 0 ? -s_re : Rational(0);
  const Rational one_plus_q = Rational(1) + q;
  // |q (1+q)^{1-s}| = q (1+q)^{1 - Re s}
  const Real prefactor_abs = Real(q, 96) * pow(Real(one_plus_q, 96), Real(Rational(1) - s_re, 96));
  const Real target = Real::exp2(4 - bits, 64);

  unsigned long M = 32;
  Real tail = detail::geometric_tail_bound(M, a, q) * prefactor_abs;
  while (!(tail < target)) {
    if (M > (1UL << 26)) throw Error(ErrorKind::ConvergenceDomain, "series converges too slowly");
    M *= 2;
    tail = detail::geometric_tail_bound(M, a, q) * prefactor_abs;
  }
  out.terms = M;
  out.tail_bound = tail;

  const long pre_bits = std::max(0L, prefactor_abs.exponent2() + 1);
  const long guard = 32 + pre_bits + detail::log2_series_magnitude(a.to_double(), q.to_double(), M);
  const auto w = static_cast<mpfr_prec_t>(bits + guard);

  const unsigned long d = chi.modulus();
  std::vector<Complex> emb;
  for (unsigned long l = 0; l < d; ++l) emb.push_back(cyc_embed(char_eval(chi, static_cast<long>(l)), w));

  // Non-positive integer s has exact integer powers m^{-s}.
  const bool integer_point = s_im.is_zero() && s_re.is_integer() && s_re.sign() <= 0;
  const unsigned long int_exp = integer_point ? (-s_re).numerator().get_ui() : 0;
  const Complex minus_s(Real(-s_re, w), Real(-s_im, w));

  Complex sum(w);
  const Real q_inv(q.inverse(), w);
  Real geo(1, w);
  for (unsigned long m = 1; m <= M; ++m) {
    geo *= q_inv;
    const Complex& c = emb[m % d];
    if (c.re.is_zero() && c.im.is_zero()) continue;
    Complex term(w);
    if (integer_point) {
      Integer mn;
      mpz_ui_pow_ui(mn.get_mpz_t(), m, int_exp);
      term = c * (geo * Real(Rational(mn), w));
    } else {
      term = c * pow(Real(static_cast<long>(m), w), minus_s) * geo;
    }
    if (m % 2 == 1) term = -term;
    sum += term;
  }
  const Complex one_minus_s(Real(Rational(1) - s_re, w), Real(-s_im, w));
  const Complex prefactor = pow(Real(one_plus_q, w), one_minus_s) * Real(q, w);
  out.value = prefactor * sum;
  out.rounding_bound = Real::exp2(8 - bits, 64);
  return out;
}

InterpolationReport verify_interpolation(unsigned n, const DirichletCharacter& chi, const Rational& q, long bits) {
  InterpolationReport rep;
  rep.n = n;
  rep.l_value = l_eulerian(Rational(-static_cast<long>(n)), Rational(0), chi, q, bits);
  CycElem exact = chi_eulerian(n, chi, q);
  if (n % 2 == 1) exact = -exact;
  const long mag = std::max(0L, static_cast<long>(std::ceil(
                                    std::log2(std::abs(cyc_embed(exact, 64).re.to_double()) + 2.0))));
  rep.expected = cyc_embed(exact, bits + 32 + mag);
  rep.error = abs(rep.l_value.value - rep.expected);
  rep.bound = rep.l_value.tail_bound + rep.l_value.rounding_bound;
  rep.passed = rep.error <= rep.bound;
  return rep;
}

QuadratureResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           const Real& tolerance) {
  const mpfr_prec_t w = a.precision();
  const Real half = (b - a) / Real(2, w);
  const Real half_pi = Real::pi(w) / Real(2, w);
  const Real one(1, w), two(2, w);
  const Real negligible = tolerance * Real::exp2(-20, 64);

  // Contribution of the abscissa pair at +-t (or the centre when t = 0).
  auto pair = [&](const Real& t) {
    const Real u = half_pi * sinh(t);
    const Real e2u = exp(u * two);
    const Real delta = two / (e2u + one);  // 1 - tanh u
    const Real ch = cosh(u);
    const Real weight = half * half_pi * cosh(t) / (ch * ch);
    const Real offset = half * delta;
    if (t.is_zero()) return weight * f(a + half);
    return weight * (f(a + offset) + f(b - offset));
  };
  auto sweep = [&](const Real& h, bool odd_only) {
    Real acc(w);
    const long step = odd_only ? 2 : 1;
    for (long j = odd_only ? 1 : 0;; j += step) {
      const Real t = h * Real(j, w);
      if (t.to_double() > 12.0) break;
      const Real c = pair(t);
      acc += c;
      if (j > 0 && abs(c) < negligible && t.to_double() > 1.0) break;
    }
    return acc;
  };

  QuadratureResult res;
  Real h(1, w);
  Real sum = sweep(h, false);
  Real estimate = h * sum;
  res.value = estimate;
  res.error_estimate = abs(estimate);
  for (int level = 1; level <= 16; ++level) {
    h = h / two;
    sum += sweep(h, true);
    const Real next = h * sum;
    res.error_estimate = abs(next - estimate);
    res.value = next;
    res.levels = level;
    estimate = next;
    if (level >= 3 && res.error_estimate < tolerance) break;
  }
  return res;
}

MellinReport mellin_term_check(const Rational& s, unsigned long m, const Rational& q, long bits) {
  if (s.sign() <= 0) throw Error(ErrorKind::DomainError, "Mellin check needs real s > 0");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  if (q <= Rational(-1)) throw Error(ErrorKind::DomainError, "Mellin check needs q > -1");
  if (bits < 32) throw Error(ErrorKind::InvalidArgument, "bits must be >= 32");
  MellinReport rep;
  rep.s = s;
  rep.m = m;
  rep.q = q;
  rep.bits = bits;

  const Rational rate = Rational(static_cast<long>(m)) * (Rational(1) + q);
  const auto w = static_cast<mpfr_prec_t>(bits + 64);
  const Real sr(s, w), ar(rate, w);

  // Tail int_T^inf t^{s-1} e^{-at} dt <= c T^{s-1} e^{-aT} / a, with c = 1
  // for s <= 1 and c = 2 once T >= 2(s-1)/a.
  const double sd = s.to_double(), ad = rate.to_double();
  double T = std::max(1.0, sd > 1 ? 2 * (sd - 1) / ad : 0.0);
  auto log2_tail = [&](double t) {
    return (std::max(sd - 1, 0.0) * std::log(t) - ad * t - std::log(ad) + std::log(2.0)) / std::log(2.0);
  };
  while (log2_tail(T) > -static_cast<double>(bits) - 8) T *= 1.25;
  rep.cutoff = Real(Rational(static_cast<long>(std::ceil(T))), w);

  rep.tolerance = Real::exp2(-bits / 2, w);
  const Real s_minus_1 = sr - Real(1, w);
  auto integrand = [&](const Real& t) { return exp(s_minus_1 * log(t) - ar * t); };
  const QuadratureResult quad =
      tanh_sinh(integrand, Real(0, w), rep.cutoff, rep.tolerance * Real::exp2(-8, 64));
  rep.quadrature = quad.value / gamma(sr);
  rep.closed_form = pow(ar, -sr);
  rep.error = abs(rep.quadrature - rep.closed_form);
  rep.passed = rep.error <= rep.tolerance;
  return rep;
}

}  // namespace chieuler
