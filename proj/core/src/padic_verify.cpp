#include <chieuler/error.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/padic_verify.hpp>

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace chieuler {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, m);
    e >>= 1U;
    if (e > 0) b = mulmod(b, b, m);
  }
  return r;
}

bool is_power_of(unsigned long d, u64 p) {
  while (d > 1 && d % p == 0) d /= p;
  return d == 1;
}

// The integrand with every value pre-reduced mod p^k.
class EmbeddedIntegrand {
 public:
  EmbeddedIntegrand(const IntegrandSpec& f, u64 p, unsigned k) : mod_(ipow(p, k)), shift_(f.shift) {
    std::visit(
        [&](const auto& kind) {
          using T = std::decay_t<decltype(kind)>;
          n_ = kind.n;
          if constexpr (std::is_same_v<T, ChiMonomial>) {
            const unsigned long d = kind.chi.modulus();
            if (d != 1 && (d % p != 0 || !is_power_of(d, p))) {
              throw Error(ErrorKind::ModulusPrimeMismatch,
                          "character modulus " + std::to_string(d) + " is not a power of p = " + std::to_string(p));
            }
            for (unsigned long a = 0; a < d; ++a) {
              chi_.push_back(embed(char_eval(kind.chi, static_cast<long>(a)), p, k).residue());
            }
          } else if constexpr (std::is_same_v<T, ShiftedMonomial>) {
            offset_ = PadicResidue::from_rational(kind.x0, p, k).residue();
          }
        },
        f.kind);
  }

  u64 operator()(u64 x) const {
    const u64 arg = x + shift_;
    u64 base = (arg % mod_ + offset_) % mod_;
    u64 v = powmod(base, n_, mod_);
    if (!chi_.empty()) v = mulmod(v, chi_[arg % chi_.size()], mod_);
    return v;
  }

 private:
  u64 mod_;
  u64 shift_;
  u64 offset_ = 0;
  unsigned n_ = 0;
  std::vector<u64> chi_;
};

struct RiemannSums {
  u64 weighted;    // sum_{x<count} Q^x f(x)
  u64 normalizer;  // sum_{x<count} Q^x = [count]_Q
};

RiemannSums riemann_sums(const EmbeddedIntegrand& f, u64 Q, u64 count, u64 mod, u64 start = 0) {
  u64 s = 0, norm = 0, qp = powmod(Q, start, mod);
  for (u64 x = start; x < count; ++x) {
    s += mulmod(qp, f(x), mod);
    if (s >= mod) s -= mod;
    norm += qp;
    if (norm >= mod) norm -= mod;
    qp = mulmod(qp, Q, mod);
  }
  return {s, norm};
}

u64 level_count(u64 p, unsigned N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "level N must be >= 1");
  u64 c = 1;
  for (unsigned i = 0; i < N; ++i) {
    if (c > (u64{1} << 34) / p) throw Error(ErrorKind::InvalidArgument, "p^N too large for a direct sum");
    c *= p;
  }
  return c;
}

PadicResidue integral_at(const EmbeddedIntegrand& f, u64 p, unsigned k, const PadicResidue& Q, unsigned N) {
  auto sums = riemann_sums(f, Q.residue(), level_count(p, N), Q.modulus());
  PadicResidue norm(p, k, sums.normalizer);
  if (!norm.is_unit()) {
    throw Error(ErrorKind::NonUnitNormalizer, "[p^N]_Q = " + norm.to_string() + " is not a p-adic unit");
  }
  return PadicResidue(p, k, sums.weighted) / norm;
}

}  // namespace

std::string IntegrandSpec::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& kind) {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          os << "x^" << kind.n;
        } else if constexpr (std::is_same_v<T, ChiMonomial>) {
          os << "chi" << kind.chi.exponents_string() << "mod" << kind.chi.modulus() << "(x)x^" << kind.n;
        } else {
          os << "(" << kind.x0.to_string() << "+x)^" << kind.n;
        }
      },
      kind);
  if (shift != 0) os << "@+" << shift;
  return os.str();
}

Rational Measure::parameter(const Rational& q) const {
  switch (kind) {
    case MeasureKind::q: return q;
    case MeasureKind::neg_q: return -q;
    case MeasureKind::neg_q_inv: return -q.inverse();
    case MeasureKind::neg_q_inv_pow: return -q.pow(-static_cast<long>(power));
  }
  return q;
}

std::string Measure::describe() const {
  switch (kind) {
    case MeasureKind::q: return "q";
    case MeasureKind::neg_q: return "-q";
    case MeasureKind::neg_q_inv: return "-q^-1";
    case MeasureKind::neg_q_inv_pow: return "-q^-" + std::to_string(power);
  }
  return "?";
}

PadicResidue root_of_unity(unsigned long m, u64 p, unsigned k) {
  if (m == 1) return PadicResidue(p, k, 1);
  if (m == 2) return -PadicResidue(p, k, 1);
  if ((p - 1) % m != 0) {
    throw Error(ErrorKind::CharacterOrderUnsupported,
                "zeta_" + std::to_string(m) + " does not embed in Z_" + std::to_string(p));
  }
  // Smallest primitive root mod p.
  u64 g = 2;
  for (;; ++g) {
    bool primitive = true;
    u64 phi = p - 1;
    for (u64 f = 2; f * f <= phi && primitive; ++f) {
      if (phi % f != 0) continue;
      if (powmod(g, (p - 1) / f, p) == 1) primitive = false;
      while (phi % f == 0) phi /= f;
    }
    if (primitive && phi > 1 && powmod(g, (p - 1) / phi, p) == 1) primitive = false;
    if (primitive) break;
  }
  PadicResidue w(p, k, powmod(g, (p - 1) / m, p));
  // Teichmuller iteration w <- w^p gains one digit per step.
  for (unsigned i = 0; i < k; ++i) w = w.pow(p);
  return w;
}

PadicResidue embed(const CycElem& e, u64 p, unsigned k) {
  if (e.is_rational()) return PadicResidue::from_rational(e.rational_part(), p, k);
  const PadicResidue w = root_of_unity(e.order(), p, k);
  PadicResidue acc(p, k, 0), wp(p, k, 1);
  for (const auto& c : e.coefficients()) {
    if (!c.is_zero()) acc += PadicResidue::from_rational(c, p, k) * wp;
    wp *= w;
  }
  return acc;
}

void require_q_congruence(const Rational& q, u64 p) {
  Integer den = q.denominator();
  Integer diff = q.numerator() - den;
  const bool den_ok = !mpz_divisible_ui_p(den.get_mpz_t(), p);
  if (!den_ok || !mpz_divisible_ui_p(diff.get_mpz_t(), p)) {
    throw Error(ErrorKind::BadCongruence, "q = " + q.to_string() + " is not 1 mod " + std::to_string(p));
  }
}

CycElem evaluate(const IntegrandSpec& f, unsigned long x) {
  const Rational arg(static_cast<long>(x + f.shift));
  return std::visit(
      [&](const auto& kind) -> CycElem {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          return CycElem::rational(arg.pow(kind.n));
        } else if constexpr (std::is_same_v<T, ChiMonomial>) {
          return char_eval(kind.chi, static_cast<long>(x + f.shift)) * arg.pow(kind.n);
        } else {
          return CycElem::rational((kind.x0 + arg).pow(kind.n));
        }
      },
      f.kind);
}

PadicResidue truncated_integral(const IntegrandSpec& f, u64 p, const Rational& q, const Measure& measure,
                                unsigned N, unsigned k) {
  require_q_congruence(q, p);
  const EmbeddedIntegrand emb(f, p, k);
  const PadicResidue Q = PadicResidue::from_rational(measure.parameter(q), p, k);
  return integral_at(emb, p, k, Q, N);
}

IntegralEquationReport verify_integral_equation(int equation, const IntegrandSpec& f, unsigned long n, u64 p,
                                                const Rational& q, unsigned k,
                                                const std::vector<unsigned>& levels) {
  if (equation < 4 || equation > 8) {
    throw Error(ErrorKind::InvalidArgument, "integral equation must be one of 4..8");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "shift n must be >= 1");
  if (equation == 5 && n % 2 == 0) throw Error(ErrorKind::ParityMismatch, "equation 5 needs odd n");
  if (equation == 6 && n % 2 == 1) throw Error(ErrorKind::ParityMismatch, "equation 6 needs even n");
  if ((equation == 7 || equation == 8) && n != 1) {
    throw Error(ErrorKind::ParityMismatch, "equations 7 and 8 use n = 1");
  }
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "no truncation levels given");
  require_q_congruence(q, p);

  IntegralEquationReport rep;
  rep.equation = equation;
  rep.shift = n;
  rep.p = p;
  rep.k = k;
  rep.q = q;

  const Measure measure{equation == 8 ? MeasureKind::neg_q_inv : MeasureKind::neg_q, 1};
  const PadicResidue Q = PadicResidue::from_rational(measure.parameter(q), p, k);
  const PadicResidue qr = PadicResidue::from_rational(q, p, k);
  const PadicResidue two_q = PadicResidue::from_rational(Rational(1) + q, p, k);
  const PadicResidue one(p, k, 1);
  const EmbeddedIntegrand base(f, p, k);
  const EmbeddedIntegrand moved(f.shifted(n), p, k);

  // Right-hand sides do not depend on N.
  PadicResidue rhs(p, k, 0);
  if (equation == 7 || equation == 8) {
    rhs = two_q * embed(evaluate(f, 0), p, k);
  } else {
    PadicResidue ql = one;
    for (unsigned long l = 0; l < n; ++l) {
      const bool negative = equation == 4 ? ((n - 1 - l) % 2 == 1) : (l % 2 == 1);
      PadicResidue term = ql * embed(evaluate(f, l), p, k);
      rhs += negative ? -term : term;
      ql *= qr;
    }
    rhs *= two_q;
  }

  const PadicResidue qn = qr.pow(n);
  for (unsigned N : levels) {
    const PadicResidue If = integral_at(base, p, k, Q, N);
    const PadicResidue Ifn = integral_at(moved, p, k, Q, N);
    PadicResidue lhs(p, k, 0);
    switch (equation) {
      case 4: lhs = qn * Ifn + ((n - 1) % 2 == 0 ? If : -If); break;
      case 5: lhs = qn * Ifn + If; break;
      case 6: lhs = If - qn * Ifn; break;
      case 7: lhs = qr * Ifn + If; break;
      case 8: lhs = Ifn + qr * If; break;
      default: break;
    }
    rep.levels.push_back({N, lhs, rhs, (lhs - rhs).valuation()});
  }
  rep.monotone = std::is_sorted(rep.levels.begin(), rep.levels.end(),
                                [](const LevelResidual& a, const LevelResidual& b) { return a.valuation < b.valuation; });
  rep.passed = rep.monotone && rep.levels.back().valuation >= k;
  return rep;
}

WittReport verify_witt(unsigned n, u64 p, const Rational& q, unsigned k, unsigned N) {
  WittReport rep;
  rep.n = n;
  rep.p = p;
  rep.k = k;
  rep.N = N;
  rep.q = q;
  rep.integral = truncated_integral(IntegrandSpec{Monomial{n}, 0}, p, q, Measure{MeasureKind::neg_q_inv, 1}, N, k);
  Rational closed = witt_value(n, q) * (Rational(1) + q).pow(-static_cast<long>(n));
  if (n % 2 == 1) closed = -closed;
  rep.closed_form = closed;
  rep.closed_form_residue = PadicResidue::from_rational(closed, p, k);
  rep.passed = rep.integral == rep.closed_form_residue;
  return rep;
}

WittChiReport verify_witt_chi(unsigned n, const DirichletCharacter& chi, u64 p, const Rational& q, unsigned k,
                              unsigned N, Variant variant) {
  const unsigned long d = chi.modulus();
  if (d != 1 && d % p != 0) {
    throw Error(ErrorKind::ModulusPrimeMismatch, "p must divide the character modulus");
  }
  WittChiReport rep;
  rep.n = n;
  rep.p = p;
  rep.k = k;
  rep.N = N;
  rep.q = q;
  rep.variant = variant;
  rep.integral = truncated_integral(IntegrandSpec{ChiMonomial{chi, n}, 0}, p, q,
                                    Measure{MeasureKind::neg_q_inv, 1}, N, k);
  CycElem printed = chi_eulerian(n, chi, q) * (Rational(1) + q).pow(-static_cast<long>(n));
  if (n % 2 == 1) printed = -printed;
  rep.printed_form = printed;
  rep.corrected_form = printed * q.pow(-2);
  rep.printed_residue = embed(rep.printed_form, p, k);
  rep.corrected_residue = embed(rep.corrected_form, p, k);
  rep.printed_valuation = (rep.integral - rep.printed_residue).valuation();
  rep.corrected_valuation = (rep.integral - rep.corrected_residue).valuation();
  rep.printed_passes = rep.printed_valuation >= k;
  rep.corrected_passes = rep.corrected_valuation >= k;
  rep.passed = variant == Variant::corrected ? rep.corrected_passes : rep.printed_passes;
  return rep;
}

std::string_view to_string(Corollary4Verdict v) {
  switch (v) {
    case Corollary4Verdict::corrected: return "2*S_A";
    case Corollary4Verdict::printed: return "2*q^2*S_A";
    case Corollary4Verdict::indistinguishable: return "indistinguishable";
    case Corollary4Verdict::neither: return "neither";
  }
  return "?";
}

Corollary4Report corollary4_probe(unsigned n, const DirichletCharacter& chi, u64 p, const Rational& q, unsigned k,
                                  const std::vector<unsigned>& levels) {
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "no truncation levels given");
  const unsigned long d = chi.modulus();
  if (d != 1 && d % p != 0) {
    throw Error(ErrorKind::ModulusPrimeMismatch, "p must divide the character modulus");
  }
  require_q_congruence(q, p);
  Corollary4Report rep;
  rep.n = n;
  rep.p = p;
  rep.k = k;
  rep.q = q;
  const Rational one_plus_q = Rational(1) + q;
  CycElem s_a = chi_eulerian(n, chi, q) / (q * one_plus_q.pow(static_cast<long>(n) + 1));
  if (n % 2 == 1) s_a = -s_a;
  rep.s_a = s_a;
  const PadicResidue s_emb = embed(s_a, p, k);
  const PadicResidue two(p, k, 2);
  rep.candidate_corrected = two * s_emb;
  rep.candidate_printed = two * PadicResidue::from_rational(q * q, p, k) * s_emb;

  const EmbeddedIntegrand f(IntegrandSpec{ChiMonomial{chi, n}, 0}, p, k);
  const PadicResidue Q = PadicResidue::from_rational(-q.inverse(), p, k);
  for (unsigned N : levels) {
    auto sums = riemann_sums(f, Q.residue(), level_count(p, N), Q.modulus(), 1);
    Corollary4Level lvl{N, PadicResidue(p, k, sums.weighted), false, false};
    lvl.matches_corrected = lvl.sum == rep.candidate_corrected;
    lvl.matches_printed = lvl.sum == rep.candidate_printed;
    rep.levels.push_back(lvl);
  }
  const auto& last = rep.levels.back();
  rep.converged = rep.levels.size() >= 2 && rep.levels[rep.levels.size() - 2].sum == last.sum;
  if (last.matches_corrected && last.matches_printed) rep.verdict = Corollary4Verdict::indistinguishable;
  else if (last.matches_corrected) rep.verdict = Corollary4Verdict::corrected;
  else if (last.matches_printed) rep.verdict = Corollary4Verdict::printed;
  else rep.verdict = Corollary4Verdict::neither;
  return rep;
}

}  // namespace chieuler
