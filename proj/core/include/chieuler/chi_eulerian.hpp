#pragma once

#include <chieuler/bigfloat.hpp>
#include <chieuler/characters.hpp>
#include <chieuler/cyclotomic.hpp>
#include <chieuler/rational.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace chieuler {

/// Which normalization of the integral-facing identities is asserted.
/// `printed` uses A_{n,chi} as defined; `corrected` multiplies the A-side
/// by q^{-2}, matching the kernel exponent d-l-1 obtained by re-deriving
/// the shifted fermionic equation.
enum class Variant { printed, corrected };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct ChiEulerianValue {
  unsigned n = 0;
  Rational q;
  CycElem value;
};

/// A_{0,chi}(-q) .. A_{n,chi}(-q) from the generating function
///   [2]_q sum_{l<d} (-1)^l q^{d-l+1} chi(l) e^{-l(1+q)t} / (e^{-d(1+q)t} + q^d),
/// by clearing the denominator and matching t^n/n! coefficients.
/// Throws PoleQ for q in {0, -1} (the only rational poles for odd d).
std::vector<CycElem> chi_eulerian_table(unsigned n, const DirichletCharacter& chi, const Rational& q);
CycElem chi_eulerian(unsigned n, const DirichletCharacter& chi, const Rational& q);

/// Independent closed form of the same quantity: the expansion
///   q [2]_q sum_{m>=0} (-1)^m chi(m) q^{-m} e^{-m(1+q)t}
/// summed exactly, using the antiperiodicity (-1)^{m+d} chi(m+d) = -(-1)^m chi(m)
/// and the rational functions sum_j j^i y^j.
CycElem chi_eulerian_geometric(unsigned n, const DirichletCharacter& chi, const Rational& q);

struct SeriesCheckReport {
  unsigned n = 0;
  Rational q;
  long bits = 0;
  std::size_t terms = 0;          // M: partial sum over 0 <= m <= M
  bool m0_term_nonzero = false;   // only for n = 0 with modulus 1
  Complex lhs;                    // (-1)^n A_{n,chi}(-q) / (q (1+q)^{n+1})
  Complex rhs;                    // sum (-1)^m chi(m) m^n q^{-m}
  Real error;
  Real tail_bound;
  Real rounding_bound;
  bool passed = false;
};

/// Numeric check of the Taylor-coefficient identity
///   (-1)^n A_{n,chi}(-q) / (q(1+q)^{n+1}) = sum_{m} (-1)^m chi(m) m^n q^{-m}.
/// Requires q > 1 (ConvergenceDomain) and bits >= 64.
SeriesCheckReport chi_eulerian_series_check(unsigned n, const DirichletCharacter& chi,
                                            const Rational& q, long bits);

/// Weight-zero q-Euler polynomials: E_0..E_n at x, via
///   q sum_{k<=n} C(n,k) E_k(x) + E_n(x) = [2]_q x^n.
std::vector<Rational> weight_zero_euler_table(unsigned n, const Rational& q, const Rational& x);
Rational weight_zero_euler(unsigned n, const Rational& q, const Rational& x);
/// G_{n+1,q}(x) = (n+1) E_{n,q}(x).
Rational weight_zero_genocchi(unsigned n_plus_1, const Rational& q, const Rational& x);

/// The sequence of admissible rational sample points used to establish
/// rational-function identities in q: all rationals a/b > 1 in lowest terms,
/// ordered by numerator then denominator (2, 3, 3/2, 4, 4/3, 5, 5/2, ...).
/// `seed` values come first (duplicates and excluded values dropped).
std::vector<Rational> q_samples(std::size_t count, const std::vector<Rational>& seed = {});

/// Minimum sample count 4(n+1)(d+1).
std::size_t distribution_sample_bound(unsigned n, unsigned long d);

struct DistributionSample {
  Rational q;
  CycElem lhs_printed;    // (-1)^n (1+q)^{-n} A_{n,chi}(-q)
  CycElem lhs_corrected;  // q^{-2} lhs_printed
  CycElem rhs;            // Euler form
  CycElem rhs_genocchi;   // Genocchi form
  bool has_ratio = false;
  CycElem ratio;          // lhs_printed / rhs when rhs != 0
  bool printed_is_q2_rhs = false;
  bool corrected_holds = false;
  bool printed_holds = false;
  bool forms_agree = false;
};

struct DistributionReport {
  unsigned n = 0;
  Variant variant = Variant::corrected;
  std::size_t required_samples = 0;
  std::vector<DistributionSample> samples;
  bool identity_holds = false;   // for the chosen variant, every sample
  bool ratio_is_q2 = false;      // printed = q^2 * rhs on every sample
  bool forms_agree = false;      // Euler and Genocchi forms identical
  bool sufficient_samples = false;
  bool passed() const { return identity_holds && forms_agree && sufficient_samples; }
};

/// Distribution identity in both normalizations. Throws DegenerateSample
/// for q in {0, -1}.
DistributionReport verify_distribution(unsigned n, const DirichletCharacter& chi,
                                       const std::vector<Rational>& q_samples, Variant variant);

}  // namespace chieuler
