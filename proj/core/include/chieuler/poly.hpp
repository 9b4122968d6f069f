#pragma once

#include <chieuler/rational.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chieuler {

/// Dense univariate polynomial over Q; index = degree. The zero polynomial
/// has no coefficients, otherwise the leading coefficient is nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, std::size_t degree);
  /// x^m - 1
  static PolyQ x_pow_minus_one(std::size_t m);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator-(const PolyQ& a);
  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

  PolyQ pow(unsigned e) const;
  /// p(x) -> p(x^k)
  PolyQ inflate(std::size_t k) const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct PolyXgcd {
  PolyQ g, s, t;
};
PolyXgcd xgcd(const PolyQ& a, const PolyQ& b);

}  // namespace chieuler
