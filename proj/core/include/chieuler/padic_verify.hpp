#pragma once

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/characters.hpp>
#include <chieuler/padic.hpp>
#include <chieuler/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chieuler {

struct Monomial {
  unsigned n = 0;
};
struct ChiMonomial {
  DirichletCharacter chi;
  unsigned n = 0;
};
struct ShiftedMonomial {
  Rational x0;
  unsigned n = 0;
};

/// f(x + shift) for f one of x^n, chi(x) x^n, (x0 + x)^n.
struct IntegrandSpec {
  std::variant<Monomial, ChiMonomial, ShiftedMonomial> kind;
  unsigned long shift = 0;

  IntegrandSpec shifted(unsigned long by) const {
    IntegrandSpec s = *this;
    s.shift += by;
    return s;
  }
  std::string describe() const;
};

/// Measure parameter Q of the Riemann sum (1/[p^N]_Q) sum_{x<p^N} Q^x f(x).
enum class MeasureKind { q, neg_q, neg_q_inv, neg_q_inv_pow };

struct Measure {
  MeasureKind kind = MeasureKind::neg_q_inv;
  unsigned long power = 1;  // d for neg_q_inv_pow: Q = -q^{-d}

  Rational parameter(const Rational& q) const;
  std::string describe() const;
};

/// Embeds zeta_m into Z/p^k as the Teichmuller lift of an element of order m
/// mod p. Only m | p - 1 is supported (CharacterOrderUnsupported otherwise).
PadicResidue root_of_unity(unsigned long m, std::uint64_t p, unsigned k);
/// Ring map Z_(p)[zeta_m] -> Z/p^k sending zeta_m to root_of_unity(m, p, k).
PadicResidue embed(const CycElem& e, std::uint64_t p, unsigned k);

/// Throws BadCongruence unless q = 1 mod p (|q-1|_p < 1).
void require_q_congruence(const Rational& q, std::uint64_t p);

/// f(x) evaluated exactly at a non-negative integer.
CycElem evaluate(const IntegrandSpec& f, unsigned long x);

/// (1/[p^N]_Q) sum_{x<p^N} Q^x f(x) mod p^k.
/// Errors: BadCongruence, NonUnitNormalizer, ModulusPrimeMismatch (chi's
/// modulus must be a power of p so chi is p-adically continuous),
/// CharacterOrderUnsupported.
PadicResidue truncated_integral(const IntegrandSpec& f, std::uint64_t p, const Rational& q,
                                const Measure& measure, unsigned N, unsigned k);

struct LevelResidual {
  unsigned N = 0;
  PadicResidue lhs;
  PadicResidue rhs;
  unsigned valuation = 0;  // v_p(lhs - rhs), capped at k
};

struct IntegralEquationReport {
  int equation = 0;
  unsigned long shift = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  Rational q;
  std::vector<LevelResidual> levels;
  bool monotone = false;
  bool passed = false;
};

/// Both sides of one of the fermionic integral equations, at each level N.
/// eq 4: q^n I(f_n) + (-1)^{n-1} I(f) = [2]_q sum_{l<n} (-1)^{n-1-l} q^l f(l)
/// eq 5 (n odd): q^n I(f_n) + I(f) = [2]_q sum_{l<n} (-1)^l q^l f(l)
/// eq 6 (n even): I(f) - q^n I(f_n) = [2]_q sum_{l<n} (-1)^l q^l f(l)
/// eq 7: q I(f_1) + I(f) = [2]_q f(0)
/// eq 8: I'(f_1) + q I'(f) = [2]_q f(0)
/// with I under Q = -q and I' under Q = -q^{-1}.
IntegralEquationReport verify_integral_equation(int equation, const IntegrandSpec& f,
                                                unsigned long n, std::uint64_t p,
                                                const Rational& q, unsigned k,
                                                const std::vector<unsigned>& levels);

struct WittReport {
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned N = 0;
  Rational q;
  PadicResidue integral;
  Rational closed_form;  // (-1)^n (1+q)^{-n} A_n(-q)
  PadicResidue closed_form_residue;
  bool passed = false;
};

WittReport verify_witt(unsigned n, std::uint64_t p, const Rational& q, unsigned k, unsigned N);

struct WittChiReport {
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned N = 0;
  Rational q;
  Variant variant = Variant::corrected;
  PadicResidue integral;
  CycElem printed_form;    // (-1)^n (1+q)^{-n} A_{n,chi}(-q)
  CycElem corrected_form;  // q^{-2} printed_form
  PadicResidue printed_residue;
  PadicResidue corrected_residue;
  unsigned printed_valuation = 0;    // v_p(integral - printed)
  unsigned corrected_valuation = 0;  // v_p(integral - corrected)
  bool printed_passes = false;
  bool corrected_passes = false;
  bool passed = false;  // for the selected variant
};

WittChiReport verify_witt_chi(unsigned n, const DirichletCharacter& chi, std::uint64_t p,
                              const Rational& q, unsigned k, unsigned N, Variant variant);

enum class Corollary4Verdict { corrected, printed, indistinguishable, neither };
std::string_view to_string(Corollary4Verdict v);

struct Corollary4Level {
  unsigned N = 0;
  PadicResidue sum;
  bool matches_corrected = false;
  bool matches_printed = false;
};

struct Corollary4Report {
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  Rational q;
  CycElem s_a;  // (-1)^n A_{n,chi}(-q) / (q (1+q)^{n+1})
  PadicResidue candidate_corrected;  // 2 S_A
  PadicResidue candidate_printed;    // 2 q^2 S_A
  std::vector<Corollary4Level> levels;
  bool converged = false;
  Corollary4Verdict verdict = Corollary4Verdict::neither;
};

/// Unnormalized sums U_N = sum_{x=1}^{p^N-1} (-1)^x chi(x) x^n q^{-x} mod p^k,
/// compared against the two candidate limits 2 S_A and 2 q^2 S_A.
Corollary4Report corollary4_probe(unsigned n, const DirichletCharacter& chi, std::uint64_t p,
                                  const Rational& q, unsigned k,
                                  const std::vector<unsigned>& levels);

}  // namespace chieuler
