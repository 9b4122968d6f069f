#include <chieuler/chi_eulerian.hpp>
#include <chieuler/error.hpp>

#include "tail_bound.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chieuler {

std::string_view to_string(Variant v) { return v == Variant::printed ? "printed" : "corrected"; }

Variant parse_variant(std::string_view text) {
  if (text == "printed") return Variant::printed;
  if (text == "corrected") return Variant::corrected;
  throw Error(ErrorKind::ParseError, "variant must be 'printed' or 'corrected'");
}

namespace {

void require_regular_q(const Rational& q, unsigned long d, ErrorKind kind) {
  if (q.is_zero()) throw Error(kind, "q = 0 is a pole");
  if (q == Rational(-1)) throw Error(kind, "q = -1 is a pole");
  if (q.pow(static_cast<long>(d)) == Rational(-1)) throw Error(kind, "q^d = -1 is a pole");
}

std::vector<CycElem> character_values(const DirichletCharacter& chi) {
  std::vector<CycElem> v;
  for (unsigned long l = 0; l < chi.modulus(); ++l) v.push_back(char_eval(chi, static_cast<long>(l)));
  return v;
}

}  // namespace

std::vector<CycElem> chi_eulerian_table(unsigned n, const DirichletCharacter& chi, const Rational& q) {
  const unsigned long d = chi.modulus();
  require_regular_q(q, d, ErrorKind::PoleQ);
  const auto field = chi.value_field();
  const Rational one_plus_q = Rational(1) + q;
  const auto values = character_values(chi);

  // Numerator: sum_l w_l e^{b_l t} with w_l = [2]_q (-1)^l q^{d-l+1} chi(l), b_l = -l(1+q).
  std::vector<CycElem> weight;
  std::vector<Rational> base;
  for (unsigned long l = 0; l < d; ++l) {
    if (values[l].is_zero()) continue;
    Rational w = one_plus_q * q.pow(static_cast<long>(d) - static_cast<long>(l) + 1);
    if (l % 2 == 1) w = -w;
    weight.push_back(values[l] * w);
    base.push_back(-Rational(static_cast<long>(l)) * one_plus_q);
  }

  // Denominator e^{-d(1+q)t} + q^d.
  const Rational den_rate = -Rational(static_cast<long>(d)) * one_plus_q;
  std::vector<Rational> den(n + 1);
  {
    Rational p(1);
    for (unsigned j = 0; j <= n; ++j) {
      den[j] = p;
      p *= den_rate;
    }
    den[0] += q.pow(static_cast<long>(d));
  }
  const Rational den0_inv = den[0].inverse();

  std::vector<Rational> base_power(base.size(), Rational(1));
  std::vector<CycElem> table;
  table.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    CycElem acc = CycElem::rational(0, field);
    for (std::size_t i = 0; i < weight.size(); ++i) {
      acc += weight[i] * base_power[i];
      base_power[i] *= base[i];
    }
    for (unsigned k = 0; k < j; ++k) acc -= table[k] * (Rational(binomial(j, k)) * den[j - k]);
    table.push_back(acc * den0_inv);
  }
  return table;
}

CycElem chi_eulerian(unsigned n, const DirichletCharacter& chi, const Rational& q) {
  return chi_eulerian_table(n, chi, q).back();
}

CycElem chi_eulerian_geometric(unsigned n, const DirichletCharacter& chi, const Rational& q) {
  const unsigned long d = chi.modulus();
  require_regular_q(q, d, ErrorKind::PoleQ);
  const Rational x = q.inverse();
  const Rational y = -x.pow(static_cast<long>(d));
  const Rational inv_one_minus_y = (Rational(1) - y).inverse();

  // S_i(y) = sum_{j>=0} j^i y^j as exact rational functions of y.
  std::vector<Rational> S(n + 1);
  S[0] = inv_one_minus_y;
  for (unsigned i = 1; i <= n; ++i) {
    Rational acc(0);
    for (unsigned r = 0; r < i; ++r) {
      Rational term = Rational(binomial(i, r)) * (r == 0 ? S[0] - Rational(1) : S[r]);
      acc += ((i - r + 1) % 2 == 0) ? term : -term;
    }
    S[i] = acc * inv_one_minus_y;
  }

  // sum_{m>=0} (-1)^m chi(m) m^n x^m, split as m = l + j d.
  const auto values = character_values(chi);
  CycElem total = CycElem::rational(0, chi.value_field());
  const Rational dd(static_cast<long>(d));
  for (unsigned long l = 0; l < d; ++l) {
    if (values[l].is_zero()) continue;
    Rational inner(0);
    const Rational ll(static_cast<long>(l));
    for (unsigned i = 0; i <= n; ++i) {
      Rational lp = (n - i == 0) ? Rational(1) : ll.pow(static_cast<long>(n - i));
      inner += Rational(binomial(n, i)) * lp * dd.pow(static_cast<long>(i)) * S[i];
    }
    Rational scale = x.pow(static_cast<long>(l)) * inner;
    if (l % 2 == 1) scale = -scale;
    total += values[l] * scale;
  }
  const Rational one_plus_q = Rational(1) + q;
  return total * (q * one_plus_q * (-one_plus_q).pow(static_cast<long>(n)));
}

SeriesCheckReport chi_eulerian_series_check(unsigned n, const DirichletCharacter& chi, const Rational& q,
                                            long bits) {
  if (q <= Rational(1)) throw Error(ErrorKind::ConvergenceDomain, "series needs q > 1");
  if (bits < 64) throw Error(ErrorKind::InvalidArgument, "bits must be >= 64");
  SeriesCheckReport rep;
  rep.n = n;
  rep.q = q;
  rep.bits = bits;

  const Rational one_plus_q = Rational(1) + q;
  CycElem lhs_exact = chi_eulerian(n, chi, q) / (q * one_plus_q.pow(static_cast<long>(n) + 1));
  if (n % 2 == 1) lhs_exact = -lhs_exact;

  const Rational a(static_cast<long>(n));
  const Real target = Real::exp2(4 - bits, 64);
  unsigned long M = 32;
  Real tail = detail::geometric_tail_bound(M, a, q);
  while (!(tail < target)) {
    if (M > (1UL << 26)) throw Error(ErrorKind::ConvergenceDomain, "series converges too slowly");
    M *= 2;
    tail = detail::geometric_tail_bound(M, a, q);
  }
  rep.terms = M;
  rep.tail_bound = tail;

  const long guard = 32 + detail::log2_series_magnitude(static_cast<double>(n), q.to_double(), M);
  const mpfr_prec_t w = static_cast<mpfr_prec_t>(bits + guard);
  rep.lhs = cyc_embed(lhs_exact, bits + guard);

  const unsigned long d = chi.modulus();
  std::vector<Complex> emb;
  for (unsigned long l = 0; l < d; ++l) emb.push_back(cyc_embed(char_eval(chi, static_cast<long>(l)), w));

  Complex sum(w);
  if (n == 0) {
    CycElem chi0 = char_eval(chi, 0);
    rep.m0_term_nonzero = !chi0.is_zero();
    sum = sum + emb[0];
  }
  const Real q_inv = Real(q.inverse(), w);
  Real geo(1, w);
  for (unsigned long m = 1; m <= M; ++m) {
    geo *= q_inv;
    const Complex& c = emb[m % d];
    if (c.re.is_zero() && c.im.is_zero()) continue;
    Integer mn;
    mpz_ui_pow_ui(mn.get_mpz_t(), m, n);
    Real scale = geo * Real(Rational(mn), w);
    if (m % 2 == 1) scale = -scale;
    sum += c * scale;
  }
  rep.rhs = sum;
  rep.error = abs(rep.lhs - rep.rhs);
  rep.rounding_bound = Real::exp2(8 - bits, 64);
  rep.passed = rep.error <= rep.tail_bound + rep.rounding_bound;
  return rep;
}

std::vector<Rational> weight_zero_euler_table(unsigned n, const Rational& q, const Rational& x) {
  if (q == Rational(-1)) throw Error(ErrorKind::PoleAtMinusOne, "q = -1 is a pole");
  const Rational two_q = Rational(1) + q;
  const Rational inv = two_q.inverse();
  std::vector<Rational> e;
  e.reserve(n + 1);
  Rational xp(1);
  for (unsigned j = 0; j <= n; ++j) {
    Rational acc = two_q * xp;
    Rational conv(0);
    for (unsigned k = 0; k < j; ++k) conv += Rational(binomial(j, k)) * e[k];
    acc -= q * conv;
    e.push_back(acc * inv);
    xp *= x;
  }
  return e;
}

Rational weight_zero_euler(unsigned n, const Rational& q, const Rational& x) {
  return weight_zero_euler_table(n, q, x).back();
}

Rational weight_zero_genocchi(unsigned n_plus_1, const Rational& q, const Rational& x) {
  if (n_plus_1 < 1) throw Error(ErrorKind::InvalidArgument, "Genocchi index must be >= 1");
  return Rational(static_cast<long>(n_plus_1)) * weight_zero_euler(n_plus_1 - 1, q, x);
}

std::vector<Rational> q_samples(std::size_t count, const std::vector<Rational>& seed) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  auto admit = [&](const Rational& q) {
    if (out.size() >= count) return;
    if (q.is_zero() || q == Rational(-1)) return;
    if (seen.insert(q).second) out.push_back(q);
  };
  for (const auto& q : seed) admit(q);
  for (long a = 2; out.size() < count; ++a) {
    for (long b = 1; b < a && out.size() < count; ++b) {
      if (std::gcd(a, b) == 1) admit(Rational(a) / Rational(b));
    }
  }
  return out;
}

std::size_t distribution_sample_bound(unsigned n, unsigned long d) {
  return 4 * (static_cast<std::size_t>(n) + 1) * (d + 1);
}

DistributionReport verify_distribution(unsigned n, const DirichletCharacter& chi,
                                       const std::vector<Rational>& samples, Variant variant) {
  const unsigned long d = chi.modulus();
  DistributionReport rep;
  rep.n = n;
  rep.variant = variant;
  rep.required_samples = distribution_sample_bound(n, d);
  const auto values = character_values(chi);
  const auto field = chi.value_field();
  const long dl = static_cast<long>(d);

  std::set<Rational> distinct;
  rep.identity_holds = true;
  rep.ratio_is_q2 = true;
  rep.forms_agree = true;
  for (const auto& q : samples) {
    require_regular_q(q, d, ErrorKind::DegenerateSample);
    distinct.insert(q);
    DistributionSample s;
    s.q = q;
    const Rational one_plus_q = Rational(1) + q;

    CycElem printed = chi_eulerian(n, chi, q) * one_plus_q.pow(-static_cast<long>(n));
    if (n % 2 == 1) printed = -printed;
    s.lhs_printed = printed;
    s.lhs_corrected = printed * q.pow(-2);

    const Rational Qd = q.pow(-dl);
    const Rational bracket_d = q_number(dl, -q.inverse());
    const Rational scale = Rational(dl).pow(static_cast<long>(n)) / bracket_d;
    CycElem euler = CycElem::rational(0, field);
    CycElem genocchi = CycElem::rational(0, field);
    for (unsigned long a = 0; a < d; ++a) {
      if (values[a].is_zero()) continue;
      const Rational x = Rational(static_cast<long>(a)) / Rational(dl);
      Rational w = q.pow(-static_cast<long>(a));
      if (a % 2 == 1) w = -w;
      euler += values[a] * (w * weight_zero_euler(n, Qd, x));
      genocchi += values[a] * (w * weight_zero_genocchi(n + 1, Qd, x));
    }
    s.rhs = euler * scale;
    s.rhs_genocchi = genocchi * (scale / Rational(static_cast<long>(n) + 1));

    if (!s.rhs.is_zero()) {
      s.has_ratio = true;
      s.ratio = s.lhs_printed / s.rhs;
    }
    s.printed_is_q2_rhs = s.lhs_printed == s.rhs * q.pow(2);
    s.corrected_holds = s.lhs_corrected == s.rhs;
    s.printed_holds = s.lhs_printed == s.rhs;
    s.forms_agree = s.rhs == s.rhs_genocchi;

    const bool holds = variant == Variant::corrected ? s.corrected_holds : s.printed_holds;
    rep.identity_holds = rep.identity_holds && holds;
    rep.ratio_is_q2 = rep.ratio_is_q2 && s.printed_is_q2_rhs;
    rep.forms_agree = rep.forms_agree && s.forms_agree;
    rep.samples.push_back(std::move(s));
  }
  rep.sufficient_samples = distinct.size() >= rep.required_samples;
  return rep;
}

}  // namespace chieuler
