#pragma once

#include <chieuler/bigfloat.hpp>
#include <chieuler/poly.hpp>
#include <chieuler/rational.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace chieuler {

/// Phi_m, via x^m - 1 divided by Phi_d for every proper divisor d of m.
PolyQ cyclotomic_polynomial(unsigned long m);

unsigned long euler_phi(unsigned long m);

/// Q(zeta_m) presented as Q[x]/(Phi_m). Shared between elements.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> make(unsigned long m);

  unsigned long order() const { return order_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  const PolyQ& modulus() const { return modulus_; }

  /// raw mod Phi_m as a dense vector of exactly degree() coefficients.
  std::vector<Rational> reduce(const PolyQ& raw) const;

 private:
  explicit CyclotomicField(unsigned long m);
  unsigned long order_;
  PolyQ modulus_;
};

/// Element of Q(zeta_m). Operations between elements of different fields
/// lift both operands to Q(zeta_lcm); equality is exact field equality.
class CycElem {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycElem();
  CycElem(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);
  /// A rational embedded in Q(zeta_m).
  static CycElem rational(const Rational& r, std::shared_ptr<const CyclotomicField> field);
  static CycElem rational(const Rational& r);
  /// zeta_m^e (e taken mod m).
  static CycElem zeta_power(std::shared_ptr<const CyclotomicField> field, long e);

  unsigned long order() const { return field_->order(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element lies in Q (only the constant coefficient is set).
  bool is_rational() const;
  /// Constant coefficient; meaningful as the value when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  /// The same element viewed inside Q(zeta_L); requires order() | L.
  CycElem lift(unsigned long L) const;
  CycElem inverse() const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  CycElem conj() const;

  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator*=(const Rational& r);
  CycElem& operator/=(const Rational& r);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rational& r) { return a *= r; }
  friend CycElem operator*(const Rational& r, CycElem a) { return a *= r; }
  friend CycElem operator/(CycElem a, const Rational& r) { return a /= r; }
  friend CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }
  friend CycElem operator-(const CycElem& a);
  friend bool operator==(const CycElem& a, const CycElem& b);

  /// Lossless form "[(c0),(c1),...]@zetaM", e.g. "[(-4/1)]@zeta2".
  std::string to_string() const;
  static CycElem parse(std::string_view text);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// Reduce a raw polynomial in zeta into Q(zeta_m).
CycElem cyc_reduce(const PolyQ& raw, unsigned long m);

/// Numeric value at zeta = e^{2 pi i/m}; absolute error below 2^{1-bits}
/// in each component.
Complex cyc_embed(const CycElem& e, long bits);

}  // namespace chieuler
